#pragma once

#include <array>

#include "qtvsim/evolution.hpp"
#include "qtvsim/qig.hpp"
#include "qtvsim/types.hpp"

namespace qtvsim {

// Contiguous index ranges for the four asset categories: command and
// control, sensors, platforms, weapons. The standard layout is one C2
// node, two sensors, three platforms, four weapons in dimension 10.
struct CategoryLayout {
  std::array<int, 4> starts;
  std::array<int, 4> counts;

  static CategoryLayout standard();
  int dim() const { return starts[3] + counts[3]; }
};

// Fixed 10x10 binary dependency mask of the kill-web: unit diagonal,
// sensors feed on C2, platforms on sensors, weapons on platforms, plus
// self-loops. Lower triangular and reducible by construction.
RealMatrix killweb_mask();

// Uniform unit vectors over each category's indices; orthonormal because
// the ranges are disjoint.
std::array<ComplexVector, 4> category_basis(const CategoryLayout& layout);

// Category superposition sum_c sqrt(w_c) exp(-i E_c t) |cat_c>. Weights
// are nonnegative and sum to 1 within 1e-12 (zeros allowed, so pure
// category states are expressible); four weights, four energies.
ComplexVector blue_state(const RealVector& weights, const RealVector& energies,
                         double t, const CategoryLayout& layout);

// Published end state of the reference run: trace 0.98, spectral radius
// 0.45, support inside killweb_mask().
RealMatrix reference_final_h();

// Provider for the deterministic category superposition. A fixed ancilla
// state and a fixed Haar rotation are drawn once per run from the stream
// and applied at every step, so the drive depends on the seed and is not
// axis-aligned; with d = 1 the rotation is a change of frame only. The
// recorded psi is the rotated state when d = 1 and the bare category
// superposition when d > 1.
StateProvider blue_superposition_provider(const RealVector& weights,
                                          const RealVector& energies, int d,
                                          RandomStream stream,
                                          const CategoryLayout& layout);

struct ScenarioResult {
  EvolutionResult evolution;
  double peak_two_norm;
  int peak_step;
  double final_two_norm;
};

// Full scenario on the kill-web mask; config.n must be 10. The state
// source follows config.state_source, with uniform weights and energies
// 0,1,2,3 when the blue superposition is selected.
ScenarioResult run_killweb(const EvolutionConfig& config);

// Blue-superposition scenario with explicit weights and energies
// (config.state_source is ignored).
ScenarioResult run_killweb(const EvolutionConfig& config, const RealVector& weights,
                           const RealVector& energies);

// Objective for optimize_superposition: peak two-norm of the blue
// scenario at fixed config (same seed every evaluation).
ScenarioObjective killweb_peak_objective(const EvolutionConfig& config);

}  // namespace qtvsim
