#include "qtvsim/random.hpp"

#include <cmath>

#include "qtvsim/errors.hpp"

namespace qtvsim {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer (Stafford variant 13).
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_(mix64(seed ^ mix64(stream_id ^ kGamma))),
      counter_(0),
      cached_gaussian_(0.0),
      has_cached_gaussian_(false) {}

std::uint64_t RandomStream::next_u64() {
  counter_ += 1;
  return mix64(key_ + counter_ * kGamma);
}

double RandomStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_gaussian() {
  if (has_cached_gaussian_) {
    has_cached_gaussian_ = false;
    return cached_gaussian_;
  }
  double u1 = 1.0 - next_uniform();  // (0, 1], keeps log finite
  double u2 = next_uniform();
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * kPi * u2;
  cached_gaussian_ = radius * std::sin(angle);
  has_cached_gaussian_ = true;
  return radius * std::cos(angle);
}

RandomStream RandomStream::split(std::uint64_t substream_id) const {
  return RandomStream(key_, substream_id);
}

ComplexVector gaussian_state(int dim, RandomStream& stream) {
  if (dim < 1) {
    throw InvalidDimensionError("gaussian_state: dim must be >= 1, got " +
                                std::to_string(dim));
  }
  ComplexVector v(dim);
  double norm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) {
      v(i) = Complex(stream.next_gaussian(), stream.next_gaussian());
    }
    norm = v.norm();
  } while (norm < 1e-300);  // astronomically unlikely, but keeps 1/norm finite
  return v / norm;
}

ComplexMatrix haar_unitary(int dim, RandomStream& stream) {
  if (dim < 1) {
    throw InvalidDimensionError("haar_unitary: dim must be >= 1, got " +
                                std::to_string(dim));
  }
  ComplexMatrix ginibre(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      ginibre(i, j) = Complex(stream.next_gaussian(), stream.next_gaussian());
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
  ComplexMatrix q = qr.householderQ();
  ComplexVector diag = qr.matrixQR().diagonal();
  for (int j = 0; j < dim; ++j) {
    double mag = std::abs(diag(j));
    Complex phase = mag > 0.0 ? diag(j) / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

}  // namespace qtvsim
