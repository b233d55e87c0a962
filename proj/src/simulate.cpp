#include "nsmax/simulate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "nsmax/csv.hpp"
#include "nsmax/parallel.hpp"
#include "nsmax/seeding.hpp"

namespace nsmax {

namespace {

// Exact inhomogeneous-Poisson sample on [0, end): per piece, Poisson count
// with mean rate x length, uniform placement.
std::vector<double> sample_profile(const IntensityProfile& profile, double end,
                                   std::mt19937_64& rng) {
  std::vector<double> times;
  auto sample_piece = [&](double a, double b, double rate) {
    if (rate <= 0.0 || b <= a) return;
    std::poisson_distribution<int> count_dist(rate * (b - a));
    std::uniform_real_distribution<double> place(a, b);
    int count = count_dist(rng);
    for (int c = 0; c < count; ++c) times.push_back(place(rng));
  };
  if (profile.values().size() == 1) {
    sample_piece(0.0, end, profile.values()[0]);
  } else {
    for (double base = 0.0; base < end; base += profile.period()) {
      const auto& bp = profile.breakpoints();
      for (std::size_t i = 0; i < bp.size(); ++i) {
        double a = base + bp[i];
        double b = base + (i + 1 < bp.size() ? bp[i + 1] : profile.period());
        if (a >= end) break;
        sample_piece(a, std::min(b, end), profile.values()[i]);
      }
    }
  }
  std::sort(times.begin(), times.end());
  return times;
}

}  // namespace

Realization simulate_realization(const BroadcastScenario& scenario, const Subset& edges,
                                 std::uint64_t seed) {
  if (edges.universe_size() != scenario.num_edges()) {
    throw std::invalid_argument("simulate_realization: edge subset universe mismatch");
  }
  // Every broadcaster process is sampled regardless of the selected edges so
  // that the substreams, and hence the shared events, depend only on the seed.
  std::vector<std::vector<double>> broadcaster_events(scenario.num_broadcasters());
  for (int i = 0; i < scenario.num_broadcasters(); ++i) {
    std::mt19937_64 rng = make_rng(derive_seed(seed, "broadcaster", i));
    broadcaster_events[i] = sample_profile(scenario.broadcaster_profiles[i], scenario.t_end, rng);
  }

  Realization out;
  out.feeds.resize(scenario.num_feeds());
  for (int j = 0; j < scenario.num_feeds(); ++j) {
    std::mt19937_64 rng = make_rng(derive_seed(seed, "feed", j));
    for (double t : sample_profile(scenario.feed_profiles[j], scenario.t_end, rng)) {
      out.feeds[j].push_back({t, kBackgroundSource});
    }
  }
  for (int e : edges.elements()) {
    auto [i, j] = scenario.candidate_edges[e];
    for (double t : broadcaster_events[i]) out.feeds[j].push_back({t, i});
  }
  for (auto& feed : out.feeds) {
    std::stable_sort(feed.begin(), feed.end(), [](const FeedEvent& a, const FeedEvent& b) {
      if (a.time != b.time) return a.time < b.time;
      return a.source < b.source;
    });
  }
  return out;
}

std::vector<Realization> simulate_realizations(const BroadcastScenario& scenario,
                                               const Subset& edges, int count,
                                               std::uint64_t master_seed, int jobs) {
  std::vector<Realization> out(count);
  parallel_for(count, jobs, [&](std::size_t ell) {
    out[ell] = simulate_realization(scenario, edges, derive_seed(master_seed, "realization", ell));
  });
  return out;
}

EmpiricalVisibility empirical_visibility(const std::vector<Realization>& logs, int top_k,
                                         double t0, double tf) {
  if (logs.empty()) throw std::invalid_argument("empirical_visibility: need at least one realization");
  if (!(t0 < tf)) throw std::invalid_argument("empirical_visibility: empty horizon");
  std::size_t n_feeds = logs.front().feeds.size();

  EmpiricalVisibility est;
  est.realizations = static_cast<int>(logs.size());
  est.per_feed.assign(n_feeds, 0.0);

  for (const Realization& realization : logs) {
    for (std::size_t j = 0; j < n_feeds; ++j) {
      const auto& events = realization.feeds[j];
      // Between consecutive arrivals the feed is static; the m-th segment has
      // events[m], events[m-1], ... at positions 1, 2, ...
      for (std::size_t m = 0; m < events.size(); ++m) {
        double seg_start = std::max(events[m].time, t0);
        double seg_end = std::min(m + 1 < events.size() ? events[m + 1].time : tf, tf);
        if (seg_end <= seg_start) continue;
        double len = seg_end - seg_start;
        for (int pos = 0; pos < top_k && pos <= static_cast<int>(m); ++pos) {
          int source = events[m - pos].source;
          if (source == kBackgroundSource) continue;
          est.per_feed[j] += len;
          est.per_edge[{source, static_cast<int>(j)}] += len;
        }
      }
    }
  }

  double scale = 1.0 / est.realizations;
  for (double& v : est.per_feed) {
    v *= scale;
    est.total += v;
  }
  for (auto& [key, v] : est.per_edge) v *= scale;
  return est;
}

VisibilityReport empirical_visibility_report(const EmpiricalVisibility& estimate) {
  VisibilityReport report;
  report.method = "empirical";
  report.total = estimate.total;
  report.per_feed = estimate.per_feed;
  report.per_edge = estimate.per_edge;
  report.realizations = estimate.realizations;
  return report;
}

std::string event_logs_to_csv(const std::vector<Realization>& logs) {
  CsvWriter csv({"realization", "feed", "time", "source"});
  for (std::size_t ell = 0; ell < logs.size(); ++ell) {
    for (std::size_t j = 0; j < logs[ell].feeds.size(); ++j) {
      for (const FeedEvent& e : logs[ell].feeds[j]) {
        csv.add_row({std::to_string(ell), std::to_string(j), fmt_double(e.time),
                     e.source == kBackgroundSource ? "background" : std::to_string(e.source)});
      }
    }
  }
  return csv.str();
}

}  // namespace nsmax
