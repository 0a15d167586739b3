#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qtvsim/quantum_state.hpp"
#include "qtvsim/random.hpp"
#include "qtvsim/types.hpp"

namespace qtvsim {

enum class StateSource {
  random_bipartite,   // fresh Gaussian bipartite state every step
  blue_superposition  // deterministic category superposition, rotated once per run
};

struct EvolutionConfig {
  double eta = 0.7;           // reinforcement rate, > 0
  double lambda_decay = 0.7;  // decay rate, in [0, 1]
  int steps = 500;            // T >= 0 update steps
  int n = 10;                 // system dimension
  int d = 1;                  // ancilla dimension
  std::uint64_t seed = 0;
  StateSource state_source = StateSource::random_bipartite;
  int snapshot_stride = 25;   // keep H every this many steps
};

// One row per update step. Row t describes H after update t+1 together
// with the state that drove that update; labels run 0..T-1.
struct TraceRecord {
  int step;
  double two_norm;
  double spectral_radius;
  double qtv_real;  // Re <psi| H |psi> against the post-update H
  double qtv_abs;
  double purity;    // of the update density matrix
  double qee;
  double coherence;
  double trace_h;
};

// What the evolution consumes each step: the density matrix whose
// entrywise modulus is reinforced into H, and an n-dim pure state whose
// expectation is recorded as the step's QTV.
struct StateSample {
  DensityMatrix update;
  ComplexVector psi;
};

using StateProvider = std::function<StateSample(int step)>;

struct Snapshot {
  int step;
  RealMatrix h;
};

struct EvolutionResult {
  std::vector<TraceRecord> records;
  std::vector<Snapshot> snapshots;  // strided at snapshot_stride, in step order
  Snapshot best;                    // first row attaining the maximum two-norm
  Snapshot final;                   // after the last step
};

// Uniform start: mask / trace(mask). The mask must be binary with at
// least one diagonal entry set, so the trace is exactly 1 up to roundoff.
RealMatrix init_hamiltonian(const RealMatrix& mask);

// Normalized Gaussian state on the n*d joint space.
ComplexVector bipartite_state(int n, int d, RandomStream& stream);

// Reduced state of the n-dim subsystem: rho(i,i') = sum_j c(i,j) conj(c(i',j))
// where psi is flattened row-major as (i * d + j). psi must be normalized.
ComplexMatrix partial_trace_A(const ComplexVector& psi, int n, int d);

// U (psi_b tensor phi_a): both factors normalized, U unitary of matching
// dimension. With d = 1 the result never gains entanglement.
ComplexVector entangle(const ComplexVector& psi_b, const ComplexVector& phi_a,
                       const ComplexMatrix& u);

// One update: (1 - lambda_decay) * h + eta * (|update| entrywise, masked).
// Entries stay nonnegative and masked-out entries stay exactly zero.
RealMatrix step(const RealMatrix& h, const RealMatrix& mask,
                const DensityMatrix& update, double eta, double lambda_decay);

// Full run from the uniform start. With steps = 0 the result holds a
// single record describing the start matrix, with the state-dependent
// fields set to 0.
EvolutionResult evolve(const EvolutionConfig& config, const RealMatrix& mask,
                       const StateProvider& provider);

// Convex combination (1 - s) a + s b for s in [0, 1]; shapes must match.
ComplexMatrix interpolate(const ComplexMatrix& a, const ComplexMatrix& b, double s);

// Provider drawing a fresh bipartite Gaussian state each step. The update
// is its reduced n-dim state; psi is the state itself when d = 1 and the
// dominant eigenvector of the reduced state when d > 1.
StateProvider random_bipartite_provider(int n, int d, RandomStream stream);

}  // namespace qtvsim
