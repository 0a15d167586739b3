#pragma once

#include <cstdint>

#include "qtvsim/types.hpp"

namespace qtvsim {

// Deterministic counter-based stream. The k-th output is
//   mix(key + k * GAMMA)
// where mix is the splitmix64 finalizer, GAMMA is the 64-bit golden ratio,
// and key = mix(seed ^ mix(stream_id ^ GAMMA)). Two streams with different
// (seed, stream_id) pairs are decorrelated by the mixing; substreams come
// from split(), which derives a child key from the parent key. Sequences
// are stable for a given build of this library; they are not a portable
// specification across implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  // Raw 64-bit word, advances the counter.
  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double next_uniform();

  // Standard normal via Box-Muller; u1 is mapped into (0, 1] so the
  // logarithm never sees zero. Pairs are cached, so consecutive calls
  // consume uniforms two at a time.
  double next_gaussian();

  // Child stream keyed by (parent key, substream id); its counter starts
  // fresh, so parent and child sequences never alias.
  RandomStream split(std::uint64_t substream_id) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
  double cached_gaussian_;
  bool has_cached_gaussian_;
};

// Normalized random state: entries are independent complex Gaussians,
// then the vector is scaled to unit norm. dim >= 1.
ComplexVector gaussian_state(int dim, RandomStream& stream);

// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
// diagonal's phases folded back into Q so the distribution is exactly
// Haar rather than QR-convention biased. dim >= 1.
ComplexMatrix haar_unitary(int dim, RandomStream& stream);

}  // namespace qtvsim
