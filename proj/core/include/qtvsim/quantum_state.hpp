#pragma once

#include "qtvsim/types.hpp"

namespace qtvsim {

// Weighted superposition of orthonormal components with per-component
// phase energies. Weights are strictly positive and sum to 1 (within
// 1e-12); basis columns are orthonormal within 1e-10. Validated on
// construction, immutable afterwards.
struct SuperpositionState {
  SuperpositionState(RealVector weights_in, RealVector energies_in,
                     ComplexMatrix basis_in);

  int components() const { return static_cast<int>(weights.size()); }
  int dim() const { return static_cast<int>(basis.rows()); }

  RealVector weights;
  RealVector energies;
  ComplexMatrix basis;  // dim x components, one column per component
};

// psi(t) = sum_k sqrt(w_k) exp(-i E_k t) basis_k. Unit norm because the
// basis is orthonormal and the weights sum to 1.
ComplexVector evaluate_state(const SuperpositionState& state, double t);

// Validated density matrix: Hermitian within 1e-10, trace 1 within
// 1e-10, eigenvalues >= -1e-10. The cached spectrum is clipped into
// [0, 1] (roundoff stragglers just outside are pulled back) and sorted
// descending.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& rho);

  // Pure-state projector psi psi^dagger; psi must be normalized within 1e-10.
  static DensityMatrix from_state(const ComplexVector& psi);

  const ComplexMatrix& matrix() const { return matrix_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
  RealVector eigenvalues_;
};

// Projector onto psi(t); always pure (purity 1 up to roundoff).
DensityMatrix density_matrix(const SuperpositionState& state, double t);

// tr(rho^2) = sum of squared eigenvalues; 1 exactly when pure, 1/dim for
// the maximally mixed state.
double purity(const DensityMatrix& rho);

// von Neumann entropy -sum lambda ln lambda in nats; eigenvalues below
// 1e-12 contribute nothing (the 0 ln 0 limit).
double entanglement_entropy(const DensityMatrix& rho);

// l1 coherence: sum of |entries| off the diagonal. Defined for any
// square matrix, so it can be read off unvalidated intermediates too.
double coherence(const ComplexMatrix& m);

struct TorusPoint {
  double x;
  double y;
  double z;
};

// Embedding of a two-component superposition's phase flow on a torus
// with major radius 1 and minor radius 2 sqrt(lambda0 lambda1):
//   theta = e0 t, phi = e1 t,
//   x = (1 + r cos theta) cos phi, y = (1 + r cos theta) sin phi,
//   z = r sin theta.
// Weights must be nonnegative and sum to 1 within 1e-12.
TorusPoint torus_point(double lambda0, double lambda1, double e0, double e1,
                       double t);

}  // namespace qtvsim
