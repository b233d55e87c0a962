#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nsmax/visibility.hpp"

namespace nsmax {

inline constexpr int kBackgroundSource = -1;

struct FeedEvent {
  double time = 0.0;
  int source = kBackgroundSource;  // broadcaster id, or kBackgroundSource
};

// One sampled realization of every feed's arrival process on [0, t_end]:
// background arrivals plus the posts of broadcasters linked by the selected
// edges. Each broadcaster's posting process is sampled once and shared by all
// feeds it is linked to.
struct Realization {
  std::vector<std::vector<FeedEvent>> feeds;  // per feed, sorted by (time, source, index)
};

// Exact sampling: per constant-rate piece, a Poisson count with mean
// rate x length and uniform placement within the piece. Deterministic given
// (seed, scenario, edges); per-process substreams are derived from the seed,
// so the result does not depend on iteration order.
Realization simulate_realization(const BroadcastScenario& scenario, const Subset& edges,
                                 std::uint64_t seed);

std::vector<Realization> simulate_realizations(const BroadcastScenario& scenario,
                                               const Subset& edges, int count,
                                               std::uint64_t master_seed, int jobs = 1);

struct EmpiricalVisibility {
  double total = 0.0;                          // U-hat
  std::vector<double> per_feed;                // per-feed time-in-top-K sums / n
  std::map<std::pair<int, int>, double> per_edge;  // attributed by source broadcaster
  int realizations = 0;
};

// Replays each feed's inverse-chronological ranking over [t0, tf] and
// averages the time broadcaster posts spend in the top K positions.
EmpiricalVisibility empirical_visibility(const std::vector<Realization>& logs, int top_k,
                                         double t0, double tf);

VisibilityReport empirical_visibility_report(const EmpiricalVisibility& estimate);

// CSV with columns realization,feed,time,source (source is a broadcaster id
// or the literal "background").
std::string event_logs_to_csv(const std::vector<Realization>& logs);

}  // namespace nsmax
