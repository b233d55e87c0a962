#pragma once

#include <cstdint>
#include <string>

#include "nsmax/matroid.hpp"
#include "nsmax/set_function.hpp"
#include "nsmax/visibility.hpp"

namespace nsmax {

// Seeded generators for the certification harness and experiments. Every
// function here is deterministic in (parameters, seed).

// Monotone nondecreasing, normalized, generally non-submodular: a positive
// mixture of coverage, max-of-modular (XOS), concave-of-modular, and
// power-of-modular parts, with the recipe chosen by the seed.
struct RandomFunction {
  SetFunction f;
  std::string kind;
};
RandomFunction random_monotone_function(int ground_size, std::uint64_t seed);

// Monotone submodular with strictly positive marginal gains (coverage plus a
// small modular floor); the f1 side of difference compositions.
SetFunction random_submodular_function(int ground_size, std::uint64_t seed);

// A pair (f1, f2) of monotone submodular functions whose difference f1 - f2
// is monotone: f2 is a random submodular function rescaled so that its
// marginal gains stay below 90% of f1's everywhere. Requires ground_size <= 12
// (the rescaling scans all pairs).
struct DsPair {
  SetFunction minuend;
  SetFunction subtrahend;
};
DsPair random_ds_pair(int ground_size, std::uint64_t seed);

// Uniform or partition matroid with rank in [1, max_rank].
struct RandomMatroid {
  Matroid m;
  std::string kind;
};
RandomMatroid random_matroid(int ground_size, std::uint64_t seed, int max_rank = 8);

struct RandomInstance {
  SetFunction f;
  Matroid m;
  std::string function_kind;
  std::string matroid_kind;
};
RandomInstance random_instance(int ground_size, std::uint64_t seed, int max_rank = 8);

// Small random broadcast scenarios with a deep warmup (the curvature-bound
// preconditions hold by construction) and daily piecewise-constant rates.
// The defaults mirror the synthetic protocol: feed competition varies over
// two orders of magnitude while broadcasters post rarely.
struct ScenarioGenParams {
  int n_broadcasters = 3;
  int n_feeds = 3;
  int budget = 1;
  int top_k = 5;
  double period = 24.0;      // days, one piece per day
  double mu_low = 0.01, mu_high = 0.1;
  double gamma_low = 0.4, gamma_high = 50.0;
  double t_start = 24.0, t_end = 32.0;
};
BroadcastScenario random_scenario(std::uint64_t seed, const ScenarioGenParams& params = {});

// Four broadcasters with one-window bursts, four feeds with matching quiet
// windows, budget 1 each: the matching instance where time-aware selection
// beats static competition ranking.
BroadcastScenario toy_scenario();

}  // namespace nsmax
