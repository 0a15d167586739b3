#pragma once

#include "qtvsim/types.hpp"

namespace qtvsim {

// Expectation <psi| H |psi>. psi must be normalized within 1e-10 and
// match H's dimension. Complex in general; real up to roundoff when H
// is Hermitian.
Complex qtv(const ComplexVector& psi, const ComplexMatrix& hamiltonian);

// Spectral form sum_k |E_k| w_k for weights on the simplex (nonnegative,
// sum 1 within 1e-12). Never exceeds max_k |E_k|.
double qtv_spectral(const RealVector& energies, const RealVector& weights);

// Rank-1 projector onto (cos a, sin a): eigenvalues 1 and 0 for any a.
// a is an angle in [0, pi/2].
ComplexMatrix rank1_operator(double alpha);

struct AlignmentResult {
  double t_star;   // earliest strictly positive maximizer; 0 if the phases never move
  double qtv_max;  // value at the maximum
};

// Closed-form maximum of <psi(t)| H(alpha) |psi(t)> over t for the
// two-component state with weights (1 - lambda1, lambda1) and phase
// energies (e0, e1) on the standard basis:
//   qtv_max = (cos a sqrt(1 - lambda1) + sin a sqrt(lambda1))^2
// attained at t* = 2 pi / (e1 - e0), or t* = 0 when e0 == e1.
// Requires lambda1 in [0, 1] and alpha in [0, pi/2].
AlignmentResult best_alignment(double alpha, double lambda1, double e0, double e1);

// Phase-blind benchmark: (1 - lambda1) H(0,0) + lambda1 H(1,1), real
// parts only. H must be 2x2; off-diagonals are deliberately ignored.
double classical_expectation(const ComplexMatrix& hamiltonian, double lambda1);

}  // namespace qtvsim
