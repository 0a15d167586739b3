#include "qtvsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "qtvsim/errors.hpp"

namespace qtvsim {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidShapeError(std::string(who) + ": expected a nonempty square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_square(const RealMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidShapeError(std::string(who) + ": expected a nonempty square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// Support graph reachability from vertex 0, following edges of g (or of
// its transpose when transposed is set).
bool reaches_all(const RealMatrix& g, bool transposed) {
  const int n = static_cast<int>(g.rows());
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      double w = transposed ? g(v, u) : g(u, v);
      if (w > 0.0 && !seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

// Geometric-mean growth rate of power iterates; used for the spectral
// radius only when the matrix is too large for a dense eigensolve.
double power_spectral_radius(const ComplexMatrix& m) {
  const int n = static_cast<int>(m.rows());
  ComplexVector v = ComplexVector::Ones(n) / std::sqrt(static_cast<double>(n));
  const int burn_in = 200;
  const int window = 400;
  double log_sum = 0.0;
  for (int k = 0; k < burn_in + window; ++k) {
    ComplexVector w = m * v;
    double growth = w.norm();
    if (growth == 0.0) return 0.0;
    v = w / growth;
    if (k >= burn_in) log_sum += std::log(growth);
  }
  return std::exp(log_sum / window);
}

}  // namespace

double hermiticity_residual(const ComplexMatrix& m) {
  require_square(m, "hermiticity_residual");
  double worst = 0.0;
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return hermiticity_residual(m) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  require_square(m, "is_unitary");
  ComplexMatrix gram = m.adjoint() * m;
  gram -= ComplexMatrix::Identity(m.rows(), m.cols());
  return gram.cwiseAbs().maxCoeff() <= tol;
}

bool is_nonnegative_real(const ComplexMatrix& m, double tol) {
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      if (std::abs(m(i, j).imag()) > tol) return false;
      if (m(i, j).real() < -tol) return false;
    }
  }
  return true;
}

EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
  require_square(m, "eig_hermitian");
  double worst = 0.0;
  int worst_i = 0, worst_j = 0;
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      double r = std::abs(m(i, j) - std::conj(m(j, i)));
      if (r > worst) {
        worst = r;
        worst_i = i;
        worst_j = j;
      }
    }
  }
  if (worst > 1e-10) {
    throw ContractViolationError(
        "eig_hermitian: input is not Hermitian, entry (" + std::to_string(worst_i) +
        "," + std::to_string(worst_j) + ") differs from its transpose conjugate by " +
        std::to_string(worst));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eig_hermitian: eigensolver failed to converge", 0.0);
  }
  const int n = static_cast<int>(m.rows());
  EigenDecomposition out;
  out.values = RealVector(n);
  out.vectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {  // Eigen sorts ascending; flip to descending
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

OperatorNorms operator_norms(const ComplexMatrix& m) {
  require_square(m, "operator_norms");
  OperatorNorms out;
  if (m.rows() <= 64) {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("operator_norms: eigensolver failed to converge", 0.0);
    }
    out.spectral_radius = solver.eigenvalues().cwiseAbs().maxCoeff();
  } else {
    out.spectral_radius = power_spectral_radius(m);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  out.two_norm = svd.singularValues()(0);
  return out;
}

bool is_irreducible(const ComplexMatrix& m, double tol) {
  require_square(m, "is_irreducible");
  RealMatrix support(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      if (std::abs(m(i, j).imag()) > tol) {
        throw ContractViolationError("is_irreducible: entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") has nonzero imaginary part");
      }
      double re = m(i, j).real();
      if (re < -tol) {
        throw ContractViolationError("is_irreducible: entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") is negative");
      }
      support(i, j) = re > tol ? 1.0 : 0.0;
    }
  }
  return reaches_all(support, false) && reaches_all(support, true);
}

DominantEigenpair dominant_eigenpair(const RealMatrix& m, int max_iters, double tol) {
  require_square(m, "dominant_eigenpair");
  if (max_iters < 1) {
    throw ContractViolationError("dominant_eigenpair: max_iters must be >= 1");
  }
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      if (m(i, j) < 0.0) {
        throw ContractViolationError("dominant_eigenpair: entry (" + std::to_string(i) +
                                     "," + std::to_string(j) + ") is negative");
      }
    }
  }
  const int n = static_cast<int>(m.rows());
  RealVector v = RealVector::Ones(n) / std::sqrt(static_cast<double>(n));
  double residual = 0.0;
  for (int iter = 0; iter < max_iters; ++iter) {
    RealVector w = m * v;
    double value = v.dot(w);
    residual = (w - value * v).cwiseAbs().maxCoeff();
    if (residual <= tol * std::abs(value)) {
      DominantEigenpair out;
      out.value = value;
      out.vector = v;
      out.degenerate = false;
      if (n <= 64 && n >= 2) {
        Eigen::ComplexEigenSolver<ComplexMatrix> solver(m.cast<Complex>(),
                                                        /*computeEigenvectors=*/false);
        if (solver.info() == Eigen::Success) {
          RealVector mags = solver.eigenvalues().cwiseAbs();
          std::sort(mags.data(), mags.data() + n, std::greater<double>());
          double gap = mags(0) - mags(1);
          out.degenerate = gap <= std::max(tol, 1e-12) * std::max(1.0, mags(0));
        }
      }
      return out;
    }
    double growth = w.norm();
    v = w / growth;  // growth > 0 here: w = 0 implies residual = 0 above
  }
  throw ConvergenceError("dominant_eigenpair: no convergence after " +
                             std::to_string(max_iters) + " iterations, last residual " +
                             std::to_string(residual),
                         residual);
}

}  // namespace qtvsim
