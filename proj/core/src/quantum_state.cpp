#include "qtvsim/quantum_state.hpp"

#include <cmath>
#include <string>

#include "qtvsim/errors.hpp"
#include "qtvsim/linalg.hpp"

namespace qtvsim {

SuperpositionState::SuperpositionState(RealVector weights_in, RealVector energies_in,
                                       ComplexMatrix basis_in)
    : weights(std::move(weights_in)),
      energies(std::move(energies_in)),
      basis(std::move(basis_in)) {
  const int k = static_cast<int>(weights.size());
  if (k < 1) {
    throw InvalidDimensionError("SuperpositionState: needs at least one component");
  }
  if (energies.size() != k || basis.cols() != k) {
    throw InvalidShapeError(
        "SuperpositionState: weights, energies and basis columns must agree, got " +
        std::to_string(weights.size()) + "/" + std::to_string(energies.size()) + "/" +
        std::to_string(basis.cols()));
  }
  if (basis.rows() < k) {
    throw InvalidShapeError("SuperpositionState: " + std::to_string(k) +
                            " orthonormal columns cannot fit in dimension " +
                            std::to_string(basis.rows()));
  }
  for (int i = 0; i < k; ++i) {
    if (!(weights(i) > 0.0)) {
      throw ContractViolationError("SuperpositionState: weight " + std::to_string(i) +
                                   " must be strictly positive, got " +
                                   std::to_string(weights(i)));
    }
  }
  if (std::abs(weights.sum() - 1.0) > 1e-12) {
    throw ContractViolationError("SuperpositionState: weights sum to " +
                                 std::to_string(weights.sum()) + ", expected 1");
  }
  ComplexMatrix gram = basis.adjoint() * basis;
  gram -= ComplexMatrix::Identity(k, k);
  double residual = gram.cwiseAbs().maxCoeff();
  if (residual > 1e-10) {
    throw ContractViolationError(
        "SuperpositionState: basis columns are not orthonormal, residual " +
        std::to_string(residual));
  }
}

ComplexVector evaluate_state(const SuperpositionState& state, double t) {
  const int k = state.components();
  ComplexVector amplitudes(k);
  for (int i = 0; i < k; ++i) {
    double phase = -state.energies(i) * t;
    amplitudes(i) = std::sqrt(state.weights(i)) *
                    Complex(std::cos(phase), std::sin(phase));
  }
  return state.basis * amplitudes;
}

DensityMatrix::DensityMatrix(const ComplexMatrix& rho) : matrix_(rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw InvalidShapeError("DensityMatrix: expected a nonempty square matrix, got " +
                            std::to_string(rho.rows()) + "x" +
                            std::to_string(rho.cols()));
  }
  double herm = hermiticity_residual(rho);
  if (herm > 1e-10) {
    throw ContractViolationError("DensityMatrix: not Hermitian, residual " +
                                 std::to_string(herm));
  }
  double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > 1e-10) {
    throw ContractViolationError("DensityMatrix: trace is " + std::to_string(trace) +
                                 ", expected 1");
  }
  EigenDecomposition eig = eig_hermitian(rho);
  double lowest = eig.values.minCoeff();
  if (lowest < -1e-10) {
    throw ContractViolationError("DensityMatrix: negative eigenvalue " +
                                 std::to_string(lowest));
  }
  eigenvalues_ = eig.values.cwiseMax(0.0).cwiseMin(1.0);
}

DensityMatrix DensityMatrix::from_state(const ComplexVector& psi) {
  if (psi.size() == 0) {
    throw InvalidDimensionError("DensityMatrix::from_state: empty state");
  }
  double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw ContractViolationError("DensityMatrix::from_state: state norm is " +
                                 std::to_string(norm) + ", expected 1");
  }
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix density_matrix(const SuperpositionState& state, double t) {
  return DensityMatrix::from_state(evaluate_state(state, t));
}

double purity(const DensityMatrix& rho) {
  return rho.eigenvalues().squaredNorm();
}

double entanglement_entropy(const DensityMatrix& rho) {
  double entropy = 0.0;
  for (int i = 0; i < rho.eigenvalues().size(); ++i) {
    double lambda = rho.eigenvalues()(i);
    if (lambda >= 1e-12) entropy -= lambda * std::log(lambda);
  }
  return entropy;
}

double coherence(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidShapeError("coherence: expected a nonempty square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  double total = 0.0;
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      if (i != j) total += std::abs(m(i, j));
    }
  }
  return total;
}

TorusPoint torus_point(double lambda0, double lambda1, double e0, double e1,
                       double t) {
  if (lambda0 < 0.0 || lambda1 < 0.0) {
    throw ContractViolationError("torus_point: weights must be nonnegative, got " +
                                 std::to_string(lambda0) + ", " +
                                 std::to_string(lambda1));
  }
  if (std::abs(lambda0 + lambda1 - 1.0) > 1e-12) {
    throw ContractViolationError("torus_point: weights sum to " +
                                 std::to_string(lambda0 + lambda1) + ", expected 1");
  }
  double r = 2.0 * std::sqrt(lambda0 * lambda1);
  double theta = e0 * t;
  double phi = e1 * t;
  TorusPoint p;
  p.x = (1.0 + r * std::cos(theta)) * std::cos(phi);
  p.y = (1.0 + r * std::cos(theta)) * std::sin(phi);
  p.z = r * std::sin(theta);
  return p;
}

}  // namespace qtvsim
