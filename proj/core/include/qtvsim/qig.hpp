#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qtvsim/types.hpp"

namespace qtvsim {

// A point on the probability simplex: entries nonnegative, sum 1 within
// 1e-12. Validated on construction.
struct Allocation {
  explicit Allocation(RealVector values_in);

  int size() const { return static_cast<int>(values.size()); }

  RealVector values;
};

// Component l of the allocation; range-checked.
double agent_value(const Allocation& allocation, int l);

// allocation with component l set to g and the others rescaled
// proportionally to keep the simplex sum. When the others sum to zero
// there is no proportion to follow, so the remainder is spread uniformly
// and the redistributed flag is set.
struct Reallocation {
  Allocation allocation;
  bool redistributed;
};
Reallocation move_weight(const Allocation& allocation, int l, double g);

using AllocationObjective = std::function<double(const Allocation&)>;

// Best response of agent l over a uniform grid of grid_points candidate
// values in [0, 1] for its own component, others rescaled. The incumbent
// allocation is always a candidate and wins ties, so a fixed point stays
// fixed.
struct BestResponse {
  Allocation allocation;
  double value;        // objective at the returned allocation
  bool redistributed;  // the returned allocation came from the uniform fallback
};
BestResponse best_response(int l, const Allocation& allocation,
                           const AllocationObjective& objective, int grid_points);

// True when no agent can improve its own objective by more than epsilon
// with a grid best response; one objective per agent.
bool nash_check(const Allocation& allocation,
                const std::vector<AllocationObjective>& objectives, double epsilon,
                int grid_points);

struct SearchConfig {
  int grid_points = 9;       // candidates per coordinate sweep
  int restarts = 3;          // independent random starts
  int max_rounds = 8;        // full coordinate sweeps per restart
  double tolerance = 1e-6;   // improvement below this ends a restart
  std::uint64_t seed = 0;
  double energy_min = 0.0;   // bounds for free energy coordinates
  double energy_max = 10.0;
};

struct SearchResult {
  RealVector weights;  // on the simplex
  RealVector energies; // first entry pinned to 0
  double value;        // scenario value at the incumbent
  bool converged;      // every restart settled before max_rounds ran out
  std::vector<double> incumbent_history;  // best value after each evaluation
};

using ScenarioObjective =
    std::function<double(const RealVector& weights, const RealVector& energies)>;

// Seeded random-restart coordinate ascent over (weights, energies).
// Weight coordinates sweep the simplex grid via move_weight; energy
// coordinates sweep [energy_min, energy_max] uniformly, with energies(0)
// pinned to 0 as the reference phase. Deterministic for a given config.
SearchResult optimize_superposition(const ScenarioObjective& scenario, int num_weights,
                                    int num_energies, const SearchConfig& config);

}  // namespace qtvsim
