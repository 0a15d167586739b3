#include "qtvsim/qig.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qtvsim/errors.hpp"
#include "qtvsim/random.hpp"

namespace qtvsim {

Allocation::Allocation(RealVector values_in) : values(std::move(values_in)) {
  if (values.size() < 1) {
    throw InvalidDimensionError("Allocation: needs at least one component");
  }
  for (int i = 0; i < values.size(); ++i) {
    if (values(i) < 0.0) {
      throw ContractViolationError("Allocation: component " + std::to_string(i) +
                                   " is negative: " + std::to_string(values(i)));
    }
  }
  if (std::abs(values.sum() - 1.0) > 1e-12) {
    throw ContractViolationError("Allocation: components sum to " +
                                 std::to_string(values.sum()) + ", expected 1");
  }
}

double agent_value(const Allocation& allocation, int l) {
  if (l < 0 || l >= allocation.size()) {
    throw InvalidIndexError("agent_value: index " + std::to_string(l) +
                            " out of range for " + std::to_string(allocation.size()) +
                            " components");
  }
  return allocation.values(l);
}

Reallocation move_weight(const Allocation& allocation, int l, double g) {
  if (l < 0 || l >= allocation.size()) {
    throw InvalidIndexError("move_weight: index " + std::to_string(l) +
                            " out of range for " + std::to_string(allocation.size()) +
                            " components");
  }
  if (!(g >= 0.0 && g <= 1.0)) {
    throw ContractViolationError("move_weight: target weight must lie in [0, 1], got " +
                                 std::to_string(g));
  }
  const int k = allocation.size();
  if (k == 1) {
    if (std::abs(g - 1.0) > 1e-12) {
      throw ContractViolationError(
          "move_weight: a single component must keep weight 1");
    }
    return {allocation, false};
  }
  double others = allocation.values.sum() - allocation.values(l);
  RealVector out(k);
  bool redistributed = false;
  if (others > 0.0) {
    double scale = (1.0 - g) / others;
    for (int i = 0; i < k; ++i) out(i) = allocation.values(i) * scale;
  } else {
    // nothing to scale proportionally; spread the remainder evenly
    redistributed = true;
    out.setConstant((1.0 - g) / (k - 1));
  }
  out(l) = g;
  out /= out.sum();  // pin the simplex sum against roundoff
  return {Allocation(out), redistributed};
}

BestResponse best_response(int l, const Allocation& allocation,
                           const AllocationObjective& objective, int grid_points) {
  if (grid_points < 2) {
    throw ContractViolationError("best_response: grid_points must be >= 2, got " +
                                 std::to_string(grid_points));
  }
  if (l < 0 || l >= allocation.size()) {
    throw InvalidIndexError("best_response: index " + std::to_string(l) +
                            " out of range");
  }
  BestResponse best{allocation, objective(allocation), false};
  if (allocation.size() == 1) {
    return best;  // the simplex is a point
  }
  for (int i = 0; i < grid_points; ++i) {
    double g = static_cast<double>(i) / (grid_points - 1);
    Reallocation candidate = move_weight(allocation, l, g);
    double value = objective(candidate.allocation);
    if (value > best.value) {  // strict, so the incumbent wins ties
      best.allocation = candidate.allocation;
      best.value = value;
      best.redistributed = candidate.redistributed;
    }
  }
  return best;
}

bool nash_check(const Allocation& allocation,
                const std::vector<AllocationObjective>& objectives, double epsilon,
                int grid_points) {
  if (static_cast<int>(objectives.size()) != allocation.size()) {
    throw InvalidShapeError("nash_check: " + std::to_string(objectives.size()) +
                            " objectives for " + std::to_string(allocation.size()) +
                            " components");
  }
  if (epsilon < 0.0) {
    throw ContractViolationError("nash_check: epsilon must be nonnegative");
  }
  for (int l = 0; l < allocation.size(); ++l) {
    double current = objectives[l](allocation);
    BestResponse br = best_response(l, allocation, objectives[l], grid_points);
    if (br.value - current > epsilon) return false;
  }
  return true;
}

namespace {

struct Incumbent {
  double value = -std::numeric_limits<double>::infinity();
  RealVector weights;
  RealVector energies;
};

}  // namespace

SearchResult optimize_superposition(const ScenarioObjective& scenario, int num_weights,
                                    int num_energies, const SearchConfig& config) {
  if (num_weights < 1 || num_energies < 1) {
    throw InvalidConfigError("optimize_superposition: component counts must be >= 1");
  }
  if (config.grid_points < 2) {
    throw InvalidConfigError("optimize_superposition: grid_points must be >= 2");
  }
  if (config.restarts < 1) {
    throw InvalidConfigError("optimize_superposition: restarts must be >= 1");
  }
  if (config.max_rounds < 1) {
    throw InvalidConfigError("optimize_superposition: max_rounds must be >= 1");
  }
  if (config.tolerance < 0.0) {
    throw InvalidConfigError("optimize_superposition: tolerance must be >= 0");
  }
  if (!(config.energy_min <= config.energy_max)) {
    throw InvalidConfigError("optimize_superposition: energy bounds are inverted");
  }

  RandomStream stream(config.seed, /*stream_id=*/1);
  Incumbent best;
  std::vector<double> history;

  auto evaluate = [&](const RealVector& w, const RealVector& e) {
    double value = scenario(w, e);
    if (value > best.value) {
      best.value = value;
      best.weights = w;
      best.energies = e;
    }
    history.push_back(best.value);
    return value;
  };

  auto energy_grid_point = [&](int i) {
    return config.energy_min + (config.energy_max - config.energy_min) *
                                   static_cast<double>(i) / (config.grid_points - 1);
  };

  bool all_converged = true;
  for (int restart = 0; restart < config.restarts; ++restart) {
    RealVector w(num_weights);
    for (int i = 0; i < num_weights; ++i) {
      w(i) = -std::log(1.0 - stream.next_uniform());  // exponential, so Dirichlet(1)
    }
    w /= w.sum();
    RealVector e(num_energies);
    e(0) = 0.0;  // reference phase
    for (int i = 1; i < num_energies; ++i) {
      e(i) = config.energy_min +
             (config.energy_max - config.energy_min) * stream.next_uniform();
    }

    double current = evaluate(w, e);
    bool settled = false;
    for (int round = 0; round < config.max_rounds; ++round) {
      double round_start = current;
      if (num_weights > 1) {
        for (int l = 0; l < num_weights; ++l) {
          Allocation alloc(w);
          double best_axis = current;
          RealVector best_w = w;
          for (int i = 0; i < config.grid_points; ++i) {
            double g = static_cast<double>(i) / (config.grid_points - 1);
            Reallocation candidate = move_weight(alloc, l, g);
            double value = evaluate(candidate.allocation.values, e);
            if (value > best_axis) {
              best_axis = value;
              best_w = candidate.allocation.values;
            }
          }
          w = best_w;
          current = best_axis;
        }
      }
      for (int k = 1; k < num_energies; ++k) {
        double best_axis = current;
        double best_e = e(k);
        for (int i = 0; i < config.grid_points; ++i) {
          RealVector trial = e;
          trial(k) = energy_grid_point(i);
          double value = evaluate(w, trial);
          if (value > best_axis) {
            best_axis = value;
            best_e = trial(k);
          }
        }
        e(k) = best_e;
        current = best_axis;
      }
      if (current - round_start <= config.tolerance) {
        settled = true;
        break;
      }
    }
    if (!settled) all_converged = false;
  }

  SearchResult out;
  out.weights = best.weights;
  out.energies = best.energies;
  out.value = best.value;
  out.converged = all_converged;
  out.incumbent_history = std::move(history);
  return out;
}

}  // namespace qtvsim
