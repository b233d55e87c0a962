#include "nsmax/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "nsmax/seeding.hpp"

namespace nsmax {

namespace {

std::vector<double> random_weights(int n, std::mt19937_64& rng, double low, double high) {
  std::uniform_real_distribution<double> dist(low, high);
  std::vector<double> w(n);
  for (double& v : w) v = dist(rng);
  return w;
}

SetFunction make_coverage(int n, std::mt19937_64& rng) {
  int universe = 2 * n;
  std::uniform_int_distribution<int> item(0, universe - 1);
  std::uniform_int_distribution<int> cover_size(1, 3);
  std::vector<std::vector<int>> covers(n);
  for (auto& c : covers) {
    int k = cover_size(rng);
    for (int i = 0; i < k; ++i) c.push_back(item(rng));
  }
  return coverage_function(n, std::move(covers), random_weights(universe, rng, 0.5, 2.0));
}

SetFunction make_xos(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_clauses_dist(2, 4);
  int n_clauses = n_clauses_dist(rng);
  std::vector<std::vector<double>> clauses;
  std::bernoulli_distribution keep(0.7);
  for (int k = 0; k < n_clauses; ++k) {
    std::vector<double> w = random_weights(n, rng, 0.0, 2.0);
    for (double& v : w) {
      if (!keep(rng)) v = 0.0;
    }
    clauses.push_back(std::move(w));
  }
  return SetFunction(n, [clauses](const Subset& s) {
    double best = 0.0;
    for (const auto& w : clauses) {
      double total = 0.0;
      for (int v : s.elements()) total += w[v];
      best = std::max(best, total);
    }
    return best;
  });
}

SetFunction make_concave_of_modular(int n, std::mt19937_64& rng) {
  std::vector<double> w = random_weights(n, rng, 0.2, 2.0);
  return SetFunction(n, [w](const Subset& s) {
    double total = 0.0;
    for (int v : s.elements()) total += w[v];
    return std::sqrt(total);
  });
}

SetFunction make_power_of_modular(int n, std::mt19937_64& rng) {
  std::vector<double> w = random_weights(n, rng, 0.2, 1.0);
  std::uniform_real_distribution<double> exponent(1.2, 1.8);
  double p = exponent(rng);
  return SetFunction(n, [w, p](const Subset& s) {
    double total = 0.0;
    for (int v : s.elements()) total += w[v];
    return std::pow(total, p);
  });
}

SetFunction make_mixture(int n, std::mt19937_64& rng) {
  SetFunction xos = make_xos(n, rng);
  SetFunction power = make_power_of_modular(n, rng);
  std::vector<double> w = random_weights(n, rng, 0.0, 1.0);
  std::uniform_real_distribution<double> mix(0.2, 0.8);
  double a = mix(rng);
  return SetFunction(n, [xos, power, w, a](const Subset& s) {
    double modular = 0.0;
    for (int v : s.elements()) modular += w[v];
    return a * xos.value(s) + (1.0 - a) * power.value(s) + 0.3 * modular;
  });
}

}  // namespace

RandomFunction random_monotone_function(int ground_size, std::uint64_t seed) {
  std::mt19937_64 rng = make_rng(seed);
  std::uniform_int_distribution<int> recipe(0, 4);
  switch (recipe(rng)) {
    case 0: return {make_coverage(ground_size, rng), "coverage"};
    case 1: return {make_xos(ground_size, rng), "xos"};
    case 2: return {make_concave_of_modular(ground_size, rng), "concave_modular"};
    case 3: return {make_power_of_modular(ground_size, rng), "power_modular"};
    default: return {make_mixture(ground_size, rng), "mixture"};
  }
}

SetFunction random_submodular_function(int ground_size, std::uint64_t seed) {
  std::mt19937_64 rng = make_rng(seed);
  SetFunction cover = make_coverage(ground_size, rng);
  std::vector<double> floor_w = random_weights(ground_size, rng, 0.1, 0.5);
  return SetFunction(ground_size, [cover, floor_w](const Subset& s) {
    double modular = 0.0;
    for (int v : s.elements()) modular += floor_w[v];
    return cover.value(s) + modular;
  });
}

DsPair random_ds_pair(int ground_size, std::uint64_t seed) {
  SetFunction f1 = random_submodular_function(ground_size, derive_seed(seed, "ds-minuend", 0));
  SetFunction raw = random_submodular_function(ground_size, derive_seed(seed, "ds-subtrahend", 0));
  std::vector<double> t1 = dense_value_table(f1);
  std::vector<double> t2 = dense_value_table(raw);
  double scale = 0.9;
  std::uint64_t full = (std::uint64_t{1} << ground_size) - 1;
  for (std::uint64_t s = 0; s <= full; ++s) {
    for (int v = 0; v < ground_size; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (s & bit) continue;
      double g1 = t1[s | bit] - t1[s];
      double g2 = t2[s | bit] - t2[s];
      if (g2 > kZeroGainTol) scale = std::min(scale, 0.9 * g1 / g2);
    }
  }
  SetFunction f2(ground_size,
                 [raw, scale](const Subset& s) { return scale * raw.value(s); });
  return DsPair{std::move(f1), std::move(f2)};
}

RandomMatroid random_matroid(int ground_size, std::uint64_t seed, int max_rank) {
  std::mt19937_64 rng = make_rng(seed);
  std::bernoulli_distribution pick_uniform(0.5);
  if (pick_uniform(rng)) {
    std::uniform_int_distribution<int> k_dist(1, std::min(ground_size, max_rank));
    return {Matroid::uniform(ground_size, k_dist(rng)), "uniform"};
  }
  std::uniform_int_distribution<int> n_blocks_dist(2, std::max(2, std::min(4, ground_size)));
  int n_blocks = n_blocks_dist(rng);
  std::uniform_int_distribution<int> block_dist(0, n_blocks - 1);
  std::vector<int> block_of(ground_size);
  for (int v = 0; v < ground_size; ++v) block_of[v] = block_dist(rng);
  std::uniform_int_distribution<int> cap_dist(1, 2);
  std::vector<int> capacities(n_blocks);
  for (int& c : capacities) c = cap_dist(rng);
  Matroid m = Matroid::partition(std::move(block_of), std::move(capacities));
  // Respect the brute-force cap by shrinking capacities until rank <= max_rank.
  while (m.rank() > max_rank) {
    std::vector<int> caps = m.partition_capacities();
    auto it = std::max_element(caps.begin(), caps.end());
    *it -= 1;
    m = Matroid::partition(m.partition_blocks(), std::move(caps));
  }
  return {std::move(m), "partition"};
}

RandomInstance random_instance(int ground_size, std::uint64_t seed, int max_rank) {
  RandomFunction f = random_monotone_function(ground_size, derive_seed(seed, "function", 0));
  RandomMatroid m = random_matroid(ground_size, derive_seed(seed, "matroid", 0), max_rank);
  return {std::move(f.f), std::move(m.m), std::move(f.kind), std::move(m.kind)};
}

BroadcastScenario random_scenario(std::uint64_t seed, const ScenarioGenParams& params) {
  std::mt19937_64 rng = make_rng(seed);
  int pieces = std::max(1, static_cast<int>(params.period));
  auto random_profile = [&](double low, double high) {
    std::uniform_real_distribution<double> dist(low, high);
    std::vector<double> breakpoints(pieces), values(pieces);
    for (int i = 0; i < pieces; ++i) {
      breakpoints[i] = i * params.period / pieces;
      values[i] = dist(rng);
    }
    return IntensityProfile(params.period, std::move(breakpoints), std::move(values));
  };

  BroadcastScenario sc;
  for (int i = 0; i < params.n_broadcasters; ++i) {
    sc.broadcaster_profiles.push_back(random_profile(params.mu_low, params.mu_high));
  }
  for (int j = 0; j < params.n_feeds; ++j) {
    sc.feed_profiles.push_back(random_profile(params.gamma_low, params.gamma_high));
  }
  for (int i = 0; i < params.n_broadcasters; ++i) {
    for (int j = 0; j < params.n_feeds; ++j) sc.candidate_edges.emplace_back(i, j);
  }
  sc.budgets.assign(params.n_broadcasters, params.budget);
  sc.top_k = params.top_k;
  sc.t_start = params.t_start;
  sc.t_end = params.t_end;
  sc.validate();
  return sc;
}

BroadcastScenario toy_scenario() {
  // Four 6-day windows per 24-day period. Broadcaster i is active in window i;
  // feed j is quiet in window j. Budgets of one force a matching.
  const int n = 4;
  const double period = 24.0;
  const double window = 6.0;
  auto windowed = [&](int active, double active_rate, double idle_rate) {
    std::vector<double> breakpoints = {0.0, window, 2 * window, 3 * window};
    std::vector<double> values(4, idle_rate);
    values[active] = active_rate;
    return IntensityProfile(period, std::move(breakpoints), std::move(values));
  };

  BroadcastScenario sc;
  for (int i = 0; i < n; ++i) sc.broadcaster_profiles.push_back(windowed(i, 2.0, 0.02));
  for (int j = 0; j < n; ++j) {
    // Slightly different busy rates keep the static competition ranking strict.
    sc.feed_profiles.push_back(windowed(j, 0.5, 8.0 + 0.2 * j));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sc.candidate_edges.emplace_back(i, j);
  }
  sc.budgets.assign(n, 1);
  sc.top_k = 10;
  sc.t_start = 24.0;
  sc.t_end = 48.0;
  sc.validate();
  return sc;
}

}  // namespace nsmax
