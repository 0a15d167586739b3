#include "qtvsim/evolution.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qtvsim/errors.hpp"
#include "qtvsim/linalg.hpp"

namespace qtvsim {

namespace {

void validate_mask(const RealMatrix& mask) {
  if (mask.rows() != mask.cols() || mask.rows() == 0) {
    throw InvalidMaskError("mask must be a nonempty square matrix, got " +
                           std::to_string(mask.rows()) + "x" +
                           std::to_string(mask.cols()));
  }
  for (int j = 0; j < mask.cols(); ++j) {
    for (int i = 0; i < mask.rows(); ++i) {
      double v = mask(i, j);
      if (v != 0.0 && v != 1.0) {
        throw InvalidMaskError("mask entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") is " + std::to_string(v) +
                               ", expected 0 or 1");
      }
    }
  }
  if (mask.trace() <= 0.0) {
    throw InvalidMaskError("mask has an all-zero diagonal; the uniform start would "
                           "have trace 0");
  }
}

TraceRecord make_record(int step_index, const RealMatrix& h, const StateSample* sample) {
  TraceRecord rec;
  rec.step = step_index;
  OperatorNorms norms = operator_norms(h.cast<Complex>());
  rec.two_norm = norms.two_norm;
  rec.spectral_radius = norms.spectral_radius;
  if (sample != nullptr) {
    Complex q = (sample->psi.adjoint() * h.cast<Complex>() * sample->psi)(0, 0);
    rec.qtv_real = q.real();
    rec.qtv_abs = std::abs(q);
    rec.purity = purity(sample->update);
    rec.qee = entanglement_entropy(sample->update);
    rec.coherence = coherence(sample->update.matrix());
  } else {
    rec.qtv_real = 0.0;
    rec.qtv_abs = 0.0;
    rec.purity = 0.0;
    rec.qee = 0.0;
    rec.coherence = 0.0;
  }
  rec.trace_h = h.trace();
  return rec;
}

}  // namespace

RealMatrix init_hamiltonian(const RealMatrix& mask) {
  validate_mask(mask);
  return mask / mask.trace();
}

ComplexVector bipartite_state(int n, int d, RandomStream& stream) {
  if (n < 1 || d < 1) {
    throw InvalidDimensionError("bipartite_state: dimensions must be >= 1, got n=" +
                                std::to_string(n) + ", d=" + std::to_string(d));
  }
  return gaussian_state(n * d, stream);
}

ComplexMatrix partial_trace_A(const ComplexVector& psi, int n, int d) {
  if (n < 1 || d < 1) {
    throw InvalidDimensionError("partial_trace_A: dimensions must be >= 1, got n=" +
                                std::to_string(n) + ", d=" + std::to_string(d));
  }
  if (psi.size() != static_cast<Eigen::Index>(n) * d) {
    throw InvalidShapeError("partial_trace_A: state has dimension " +
                            std::to_string(psi.size()) + ", expected n*d = " +
                            std::to_string(n * d));
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw ContractViolationError("partial_trace_A: state norm is " +
                                 std::to_string(psi.norm()) + ", expected 1");
  }
  using RowMajorMatrix =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajorMatrix> coeffs(psi.data(), n, d);
  return coeffs * coeffs.adjoint();
}

ComplexVector entangle(const ComplexVector& psi_b, const ComplexVector& phi_a,
                       const ComplexMatrix& u) {
  const Eigen::Index n = psi_b.size();
  const Eigen::Index d = phi_a.size();
  if (n == 0 || d == 0) {
    throw InvalidDimensionError("entangle: states must be nonempty");
  }
  if (u.rows() != u.cols() || u.rows() != n * d) {
    throw InvalidShapeError("entangle: unitary is " + std::to_string(u.rows()) + "x" +
                            std::to_string(u.cols()) + ", expected " +
                            std::to_string(n * d) + " square");
  }
  if (std::abs(psi_b.norm() - 1.0) > 1e-10 || std::abs(phi_a.norm() - 1.0) > 1e-10) {
    throw ContractViolationError("entangle: both factor states must be normalized");
  }
  if (!is_unitary(u)) {
    throw ContractViolationError("entangle: matrix is not unitary within 1e-10");
  }
  ComplexVector joint(n * d);
  for (Eigen::Index i = 0; i < n; ++i) {
    joint.segment(i * d, d) = psi_b(i) * phi_a;
  }
  return u * joint;
}

RealMatrix step(const RealMatrix& h, const RealMatrix& mask,
                const DensityMatrix& update, double eta, double lambda_decay) {
  if (h.rows() != h.cols() || h.rows() != mask.rows() || mask.rows() != mask.cols() ||
      update.dim() != h.rows()) {
    throw InvalidShapeError("step: h, mask and update must be square with equal "
                            "dimensions");
  }
  if (!(eta >= 0.0)) {
    throw ContractViolationError("step: eta must be nonnegative, got " +
                                 std::to_string(eta));
  }
  if (!(lambda_decay >= 0.0 && lambda_decay <= 1.0)) {
    throw ContractViolationError("step: lambda_decay must lie in [0, 1], got " +
                                 std::to_string(lambda_decay));
  }
  RealMatrix reinforced =
      update.matrix().cwiseAbs().cwiseProduct(mask);  // modulus first, then mask
  return (1.0 - lambda_decay) * h + eta * reinforced;
}

EvolutionResult evolve(const EvolutionConfig& config, const RealMatrix& mask,
                       const StateProvider& provider) {
  if (!(config.eta > 0.0)) {
    throw InvalidConfigError("evolve: eta must be > 0, got " +
                             std::to_string(config.eta));
  }
  if (!(config.lambda_decay >= 0.0 && config.lambda_decay <= 1.0)) {
    throw InvalidConfigError("evolve: lambda_decay must lie in [0, 1], got " +
                             std::to_string(config.lambda_decay));
  }
  if (config.steps < 0) {
    throw InvalidConfigError("evolve: steps must be >= 0, got " +
                             std::to_string(config.steps));
  }
  if (config.n < 1 || config.d < 1) {
    throw InvalidConfigError("evolve: n and d must be >= 1");
  }
  if (config.snapshot_stride < 1) {
    throw InvalidConfigError("evolve: snapshot_stride must be >= 1, got " +
                             std::to_string(config.snapshot_stride));
  }
  validate_mask(mask);
  if (mask.rows() != config.n) {
    throw InvalidConfigError("evolve: mask is " + std::to_string(mask.rows()) + "x" +
                             std::to_string(mask.cols()) + " but config.n is " +
                             std::to_string(config.n));
  }

  RealMatrix h = init_hamiltonian(mask);
  EvolutionResult out;

  if (config.steps == 0) {
    out.records.push_back(make_record(0, h, nullptr));
    out.snapshots.push_back({0, h});
    out.best = {0, h};
    out.final = {0, h};
    return out;
  }

  out.records.reserve(config.steps);
  double best_norm = -1.0;
  for (int t = 0; t < config.steps; ++t) {
    StateSample sample = provider(t);
    if (sample.update.dim() != config.n) {
      throw InvalidShapeError("evolve: provider returned an update of dimension " +
                              std::to_string(sample.update.dim()) + ", expected " +
                              std::to_string(config.n));
    }
    if (sample.psi.size() != config.n) {
      throw InvalidShapeError("evolve: provider returned a state of dimension " +
                              std::to_string(sample.psi.size()) + ", expected " +
                              std::to_string(config.n));
    }
    h = step(h, mask, sample.update, config.eta, config.lambda_decay);
    TraceRecord rec = make_record(t, h, &sample);
    out.records.push_back(rec);
    if (t % config.snapshot_stride == 0) {
      out.snapshots.push_back({t, h});
    }
    if (rec.two_norm > best_norm) {
      best_norm = rec.two_norm;
      out.best = {t, h};
    }
  }
  out.final = {config.steps - 1, h};
  return out;
}

ComplexMatrix interpolate(const ComplexMatrix& a, const ComplexMatrix& b, double s) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidShapeError("interpolate: shapes differ, " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (!(s >= 0.0 && s <= 1.0)) {
    throw ContractViolationError("interpolate: s must lie in [0, 1], got " +
                                 std::to_string(s));
  }
  return (1.0 - s) * a + s * b;
}

StateProvider random_bipartite_provider(int n, int d, RandomStream stream) {
  if (n < 1 || d < 1) {
    throw InvalidDimensionError("random_bipartite_provider: dimensions must be >= 1");
  }
  return [n, d, stream](int) mutable -> StateSample {
    ComplexVector joint = bipartite_state(n, d, stream);
    DensityMatrix reduced(partial_trace_A(joint, n, d));
    ComplexVector psi;
    if (d == 1) {
      psi = joint;
    } else {
      // the component most likely to survive measurement stands in for
      // the mixed reduced state
      EigenDecomposition eig = eig_hermitian(reduced.matrix());
      psi = eig.vectors.col(0);
    }
    return StateSample{std::move(reduced), std::move(psi)};
  };
}

}  // namespace qtvsim
