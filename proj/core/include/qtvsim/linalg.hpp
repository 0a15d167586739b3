#pragma once

#include "qtvsim/types.hpp"

namespace qtvsim {

// max_ij |M(i,j) - conj(M(j,i))|; zero for exactly Hermitian input.
double hermiticity_residual(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);

// Every entry has |imag| <= tol and real part >= -tol.
bool is_nonnegative_real(const ComplexMatrix& m, double tol = 1e-10);

struct EigenDecomposition {
  RealVector values;      // descending
  ComplexMatrix vectors;  // column k pairs with values(k), orthonormal
};

// Hermitian eigendecomposition, eigenvalues sorted descending. Rejects
// non-Hermitian input (residual > 1e-10) naming the worst entry.
EigenDecomposition eig_hermitian(const ComplexMatrix& m);

struct OperatorNorms {
  double spectral_radius;  // max |eigenvalue|
  double two_norm;         // largest singular value
};

// Both norms of a general square complex matrix. The spectral radius
// comes from a dense eigensolve for dim <= 64 and from power iteration
// on the squared-magnitude dynamics above that.
OperatorNorms operator_norms(const ComplexMatrix& m);

// Strong connectivity of the directed support graph of an entrywise
// nonnegative real matrix (edge i -> j when m(i,j) > 0). Rejects
// negative or non-real entries.
bool is_irreducible(const ComplexMatrix& m, double tol = 1e-12);

struct DominantEigenpair {
  double value;
  RealVector vector;  // unit norm
  bool degenerate;    // another eigenvalue matches |value| within tol
};

// Power iteration for the dominant eigenpair of an entrywise nonnegative
// real matrix, started from the normalized all-ones vector. Converged
// when |M v - value v| <= tol * |value| holds entrywise; throws
// ConvergenceError (carrying the last residual) after max_iters.
// The degeneracy flag is computed from a full eigensolve when dim <= 64
// and is false above that.
DominantEigenpair dominant_eigenpair(const RealMatrix& m, int max_iters = 10000,
                                     double tol = 1e-12);

}  // namespace qtvsim
