#include "qtvsim/killweb.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qtvsim/errors.hpp"

namespace qtvsim {

namespace {

void validate_layout(const CategoryLayout& layout) {
  if (layout.starts[0] != 0) {
    throw ContractViolationError("CategoryLayout: ranges must start at index 0");
  }
  for (int c = 0; c < 4; ++c) {
    if (layout.counts[c] < 1) {
      throw ContractViolationError("CategoryLayout: category " + std::to_string(c) +
                                   " is empty");
    }
    if (c > 0 && layout.starts[c] != layout.starts[c - 1] + layout.counts[c - 1]) {
      throw ContractViolationError("CategoryLayout: ranges must be contiguous");
    }
  }
}

void validate_category_params(const RealVector& weights, const RealVector& energies) {
  if (weights.size() != 4 || energies.size() != 4) {
    throw InvalidShapeError("blue_state: expected 4 weights and 4 energies, got " +
                            std::to_string(weights.size()) + " and " +
                            std::to_string(energies.size()));
  }
  for (int c = 0; c < 4; ++c) {
    if (weights(c) < 0.0) {
      throw ContractViolationError("blue_state: weight " + std::to_string(c) +
                                   " is negative");
    }
  }
  if (std::abs(weights.sum() - 1.0) > 1e-12) {
    throw ContractViolationError("blue_state: weights sum to " +
                                 std::to_string(weights.sum()) + ", expected 1");
  }
}

}  // namespace

CategoryLayout CategoryLayout::standard() {
  return CategoryLayout{{0, 1, 3, 6}, {1, 2, 3, 4}};
}

RealMatrix killweb_mask() {
  RealMatrix mask = RealMatrix::Zero(10, 10);
  // each row lists what the node depends on, itself included
  const int deps[10][5] = {
      {0, -1, -1, -1, -1},  // C2
      {0, 1, -1, -1, -1},   // sensor 1 <- C2
      {0, 2, -1, -1, -1},   // sensor 2 <- C2
      {1, 2, 3, -1, -1},    // platform 1 <- sensors
      {1, 2, 4, -1, -1},    // platform 2 <- sensors
      {1, 2, 5, -1, -1},    // platform 3 <- sensors
      {3, 4, 5, 6, -1},     // weapon 1 <- platforms
      {3, 4, 5, 7, -1},     // weapon 2 <- platforms
      {3, 4, 5, 8, -1},     // weapon 3 <- platforms
      {3, 4, 5, 9, -1},     // weapon 4 <- platforms
  };
  for (int i = 0; i < 10; ++i) {
    for (int k = 0; k < 5 && deps[i][k] >= 0; ++k) {
      mask(i, deps[i][k]) = 1.0;
    }
  }
  return mask;
}

std::array<ComplexVector, 4> category_basis(const CategoryLayout& layout) {
  validate_layout(layout);
  std::array<ComplexVector, 4> basis;
  const int dim = layout.dim();
  for (int c = 0; c < 4; ++c) {
    basis[c] = ComplexVector::Zero(dim);
    double amp = 1.0 / std::sqrt(static_cast<double>(layout.counts[c]));
    for (int k = 0; k < layout.counts[c]; ++k) {
      basis[c](layout.starts[c] + k) = amp;
    }
  }
  return basis;
}

ComplexVector blue_state(const RealVector& weights, const RealVector& energies,
                         double t, const CategoryLayout& layout) {
  validate_category_params(weights, energies);
  std::array<ComplexVector, 4> basis = category_basis(layout);
  ComplexVector psi = ComplexVector::Zero(layout.dim());
  for (int c = 0; c < 4; ++c) {
    double phase = -energies(c) * t;
    psi += std::sqrt(weights(c)) * Complex(std::cos(phase), std::sin(phase)) *
           basis[c];
  }
  return psi;
}

RealMatrix reference_final_h() {
  RealMatrix h(10, 10);
  h << 0.05, 0, 0, 0, 0, 0, 0, 0, 0, 0,
       0.06, 0.08, 0, 0, 0, 0, 0, 0, 0, 0,
       0.03, 0, 0.02, 0, 0, 0, 0, 0, 0, 0,
       0, 0.19, 0.10, 0.45, 0, 0, 0, 0, 0, 0,
       0, 0.06, 0.03, 0, 0.08, 0, 0, 0, 0, 0,
       0, 0.05, 0.02, 0, 0, 0.03, 0, 0, 0, 0,
       0, 0, 0, 0.13, 0.05, 0.04, 0.04, 0, 0, 0,
       0, 0, 0, 0.19, 0.07, 0.05, 0, 0.08, 0, 0,
       0, 0, 0, 0.17, 0.06, 0.04, 0, 0, 0.07, 0,
       0, 0, 0, 0.19, 0.06, 0.04, 0, 0, 0, 0.08;
  return h;
}

StateProvider blue_superposition_provider(const RealVector& weights,
                                          const RealVector& energies, int d,
                                          RandomStream stream,
                                          const CategoryLayout& layout) {
  validate_layout(layout);
  validate_category_params(weights, energies);
  if (d < 1) {
    throw InvalidDimensionError("blue_superposition_provider: d must be >= 1");
  }
  const int n = layout.dim();
  ComplexVector phi_a = gaussian_state(d, stream);
  ComplexMatrix rotation = haar_unitary(n * d, stream);
  return [weights, energies, d, n, layout, phi_a, rotation](int t) -> StateSample {
    ComplexVector bare = blue_state(weights, energies, static_cast<double>(t), layout);
    ComplexVector joint = entangle(bare, phi_a, rotation);
    DensityMatrix update(partial_trace_A(joint, n, d));
    ComplexVector psi = d == 1 ? joint : bare;
    return StateSample{std::move(update), std::move(psi)};
  };
}

namespace {

ScenarioResult run_with_provider(const EvolutionConfig& config,
                                 const StateProvider& provider) {
  ScenarioResult out{evolve(config, killweb_mask(), provider), 0.0, 0, 0.0};
  out.peak_step = out.evolution.best.step;
  out.peak_two_norm = out.evolution.records[out.peak_step].two_norm;
  out.final_two_norm = out.evolution.records.back().two_norm;
  return out;
}

void require_killweb_dim(const EvolutionConfig& config) {
  if (config.n != 10) {
    throw InvalidConfigError("run_killweb: the kill-web has 10 nodes, got n = " +
                             std::to_string(config.n));
  }
}

}  // namespace

ScenarioResult run_killweb(const EvolutionConfig& config) {
  require_killweb_dim(config);
  if (config.state_source == StateSource::blue_superposition) {
    RealVector w = RealVector::Constant(4, 0.25);
    RealVector e(4);
    e << 0.0, 1.0, 2.0, 3.0;
    return run_killweb(config, w, e);
  }
  StateProvider provider =
      random_bipartite_provider(config.n, config.d, RandomStream(config.seed, 0));
  return run_with_provider(config, provider);
}

ScenarioResult run_killweb(const EvolutionConfig& config, const RealVector& weights,
                           const RealVector& energies) {
  require_killweb_dim(config);
  StateProvider provider = blue_superposition_provider(
      weights, energies, config.d, RandomStream(config.seed, 0),
      CategoryLayout::standard());
  return run_with_provider(config, provider);
}

ScenarioObjective killweb_peak_objective(const EvolutionConfig& config) {
  EvolutionConfig fixed = config;
  fixed.state_source = StateSource::blue_superposition;
  return [fixed](const RealVector& w, const RealVector& e) {
    return run_killweb(fixed, w, e).peak_two_norm;
  };
}

}  // namespace qtvsim
