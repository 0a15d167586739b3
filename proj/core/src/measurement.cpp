#include "qtvsim/measurement.hpp"

#include <cmath>
#include <string>

#include "qtvsim/errors.hpp"

namespace qtvsim {

Complex qtv(const ComplexVector& psi, const ComplexMatrix& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw InvalidShapeError("qtv: Hamiltonian must be square, got " +
                            std::to_string(hamiltonian.rows()) + "x" +
                            std::to_string(hamiltonian.cols()));
  }
  if (psi.size() != hamiltonian.rows()) {
    throw InvalidShapeError("qtv: state dimension " + std::to_string(psi.size()) +
                            " does not match Hamiltonian dimension " +
                            std::to_string(hamiltonian.rows()));
  }
  double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw ContractViolationError("qtv: state norm is " + std::to_string(norm) +
                                 ", expected 1");
  }
  return (psi.adjoint() * hamiltonian * psi)(0, 0);
}

double qtv_spectral(const RealVector& energies, const RealVector& weights) {
  if (energies.size() != weights.size() || energies.size() == 0) {
    throw InvalidShapeError("qtv_spectral: energies and weights must be nonempty and "
                            "equal length, got " +
                            std::to_string(energies.size()) + " and " +
                            std::to_string(weights.size()));
  }
  for (int i = 0; i < weights.size(); ++i) {
    if (weights(i) < 0.0) {
      throw ContractViolationError("qtv_spectral: weight " + std::to_string(i) +
                                   " is negative");
    }
  }
  if (std::abs(weights.sum() - 1.0) > 1e-12) {
    throw ContractViolationError("qtv_spectral: weights sum to " +
                                 std::to_string(weights.sum()) + ", expected 1");
  }
  return energies.cwiseAbs().dot(weights);
}

ComplexMatrix rank1_operator(double alpha) {
  if (alpha < -1e-12 || alpha > kPi / 2.0 + 1e-12) {
    throw ContractViolationError("rank1_operator: alpha must lie in [0, pi/2], got " +
                                 std::to_string(alpha));
  }
  double c = std::cos(alpha);
  double s = std::sin(alpha);
  ComplexMatrix h(2, 2);
  h << c * c, c * s, c * s, s * s;
  return h;
}

AlignmentResult best_alignment(double alpha, double lambda1, double e0, double e1) {
  if (lambda1 < 0.0 || lambda1 > 1.0) {
    throw ContractViolationError("best_alignment: lambda1 must lie in [0, 1], got " +
                                 std::to_string(lambda1));
  }
  if (alpha < -1e-12 || alpha > kPi / 2.0 + 1e-12) {
    throw ContractViolationError("best_alignment: alpha must lie in [0, pi/2], got " +
                                 std::to_string(alpha));
  }
  AlignmentResult out;
  out.t_star = e0 == e1 ? 0.0 : 2.0 * kPi / (e1 - e0);
  double aligned = std::cos(alpha) * std::sqrt(1.0 - lambda1) +
                   std::sin(alpha) * std::sqrt(lambda1);
  out.qtv_max = aligned * aligned;
  return out;
}

double classical_expectation(const ComplexMatrix& hamiltonian, double lambda1) {
  if (hamiltonian.rows() != 2 || hamiltonian.cols() != 2) {
    throw InvalidShapeError("classical_expectation: expected a 2x2 Hamiltonian, got " +
                            std::to_string(hamiltonian.rows()) + "x" +
                            std::to_string(hamiltonian.cols()));
  }
  if (lambda1 < 0.0 || lambda1 > 1.0) {
    throw ContractViolationError(
        "classical_expectation: lambda1 must lie in [0, 1], got " +
        std::to_string(lambda1));
  }
  return (1.0 - lambda1) * hamiltonian(0, 0).real() +
         lambda1 * hamiltonian(1, 1).real();
}

}  // namespace qtvsim
