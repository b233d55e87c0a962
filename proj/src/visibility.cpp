#include "nsmax/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "nsmax/csv.hpp"
#include "nsmax/poisson_tail.hpp"
#include "nsmax/quadrature.hpp"
#include "nsmax/seeding.hpp"

namespace nsmax {

void BroadcastScenario::validate() const {
  if (broadcaster_profiles.empty()) throw std::invalid_argument("scenario: no broadcasters");
  if (feed_profiles.empty()) throw std::invalid_argument("scenario: no feeds");
  if (candidate_edges.empty()) throw std::invalid_argument("scenario: no candidate edges");
  if (static_cast<int>(budgets.size()) != num_broadcasters()) {
    throw std::invalid_argument("scenario: one budget per broadcaster required");
  }
  for (int c : budgets) {
    if (c < 0) throw std::invalid_argument("scenario: negative budget");
  }
  if (top_k < 1) throw std::invalid_argument("scenario: K must be >= 1");
  if (!(t_start >= 0.0 && t_start < t_end)) {
    throw std::invalid_argument("scenario: need 0 <= t_start < t_end");
  }
  std::vector<std::pair<int, int>> seen;
  for (auto [i, j] : candidate_edges) {
    if (i < 0 || i >= num_broadcasters()) throw std::invalid_argument("scenario: bad broadcaster id");
    if (j < 0 || j >= num_feeds()) throw std::invalid_argument("scenario: bad feed id");
    seen.emplace_back(i, j);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("scenario: duplicate candidate edge");
  }
}

Subset BroadcastScenario::edges_into_feed(int feed) const {
  Subset s(num_edges());
  for (int e = 0; e < num_edges(); ++e) {
    if (candidate_edges[e].second == feed) s.insert(e);
  }
  return s;
}

// ---- Grid forms -------------------------------------------------------------

double position_probability_grid(const RateGrid& grid, int k, double t) {
  if (k < 1) throw std::domain_error("position_probability: k must be >= 1");
  if (!(t >= 0.0)) throw std::domain_error("position_probability: t must be >= 0");
  double c_t = grid.cumulative_at(t);
  double total = 0.0;
  for (int p = 0; p < grid.pieces(); ++p) {
    double a = grid.knots[p];
    if (a >= t) break;
    double b = std::min(grid.knots[p + 1], t);
    double c = grid.total_rate(p);
    if (c <= 0.0 || grid.mu[p] <= 0.0) continue;
    double j_hi = c_t - grid.cumulative_at(a);
    double j_lo = c_t - grid.cumulative_at(b);
    total += grid.mu[p] / c * (regularized_gamma_q(k, j_lo) - regularized_gamma_q(k, j_hi));
  }
  return total;
}

namespace {

// Shared piece walk for both expected-top-K forms: accumulates
// sum over pieces of weight(p)/c(p) * (G(J at piece start) - G(J at piece end)).
template <typename Weight>
double integral_of_q_against(const RateGrid& grid, int top_k, double t, Weight weight) {
  double c_t = grid.cumulative_at(t);
  double total = 0.0;
  for (int p = 0; p < grid.pieces(); ++p) {
    double a = grid.knots[p];
    if (a >= t) break;
    double b = std::min(grid.knots[p + 1], t);
    double c = grid.total_rate(p);
    double w = weight(p);
    if (c <= 0.0 || w <= 0.0) continue;
    double j_hi = c_t - grid.cumulative_at(a);
    double j_lo = c_t - grid.cumulative_at(b);
    total += w / c * (gamma_antiderivative(top_k, j_hi) - gamma_antiderivative(top_k, j_lo));
  }
  return total;
}

void check_expected_args(int top_k, double t) {
  if (top_k < 1) throw std::domain_error("expected_top_k: K must be >= 1");
  if (!(t >= 0.0)) throw std::domain_error("expected_top_k: t must be >= 0");
}

}  // namespace

double expected_top_k_grid(const RateGrid& grid, int top_k, double t) {
  check_expected_args(top_k, t);
  if (t == 0.0) return 0.0;
  double gamma_integral =
      integral_of_q_against(grid, top_k, t, [&grid](int p) { return grid.gamma[p]; });
  return top_k + gamma_antiderivative(top_k, grid.cumulative_at(t)) - gamma_integral;
}

double expected_top_k_grid_direct(const RateGrid& grid, int top_k, double t) {
  check_expected_args(top_k, t);
  if (t == 0.0) return 0.0;
  return integral_of_q_against(grid, top_k, t, [&grid](int p) { return grid.mu[p]; });
}

// ---- Single-pair wrappers ----------------------------------------------------

namespace {

RateGrid pair_grid(const IntensityProfile& mu, const IntensityProfile& gamma, double end) {
  return build_rate_grid({&mu}, gamma, std::max(end, 0.0));
}

}  // namespace

double position_probability(const IntensityProfile& mu, const IntensityProfile& gamma, int k,
                            double t) {
  if (t <= 0.0) {
    if (t < 0.0) throw std::domain_error("position_probability: t must be >= 0");
    return 0.0;
  }
  return position_probability_grid(pair_grid(mu, gamma, t), k, t);
}

double position_probability_quadrature(const IntensityProfile& mu, const IntensityProfile& gamma,
                                       int k, double t, double abs_tol) {
  if (k < 1) throw std::domain_error("position_probability: k must be >= 1");
  if (t <= 0.0) {
    if (t < 0.0) throw std::domain_error("position_probability: t must be >= 0");
    return 0.0;
  }
  RateGrid grid = pair_grid(mu, gamma, t);
  auto integrand = [&](double tau) {
    double j = grid.cumulative_at(t) - grid.cumulative_at(tau);
    double mu_tau = mu.value_at(tau);
    if (j <= 0.0) return k == 1 ? mu_tau : 0.0;
    double log_pmf = (k - 1) * std::log(j) - j - std::lgamma(k);
    return std::exp(log_pmf) * mu_tau;
  };
  double total = 0.0;
  for (int p = 0; p < grid.pieces(); ++p) {
    double a = grid.knots[p];
    if (a >= t) break;
    double b = std::min(grid.knots[p + 1], t);
    total += adaptive_simpson(integrand, a, b, abs_tol * (b - a) / t);
  }
  return total;
}

double expected_top_k(const IntensityProfile& mu, const IntensityProfile& gamma, int top_k,
                      double t) {
  check_expected_args(top_k, t);
  if (t == 0.0) return 0.0;
  return expected_top_k_grid(pair_grid(mu, gamma, t), top_k, t);
}

double expected_top_k_direct(const IntensityProfile& mu, const IntensityProfile& gamma, int top_k,
                             double t) {
  check_expected_args(top_k, t);
  if (t == 0.0) return 0.0;
  return expected_top_k_grid_direct(pair_grid(mu, gamma, t), top_k, t);
}

double expected_top_k_quadrature(const IntensityProfile& mu, const IntensityProfile& gamma,
                                 int top_k, double t, double abs_tol) {
  check_expected_args(top_k, t);
  double total = 0.0;
  for (int k = 1; k <= top_k; ++k) {
    total += position_probability_quadrature(mu, gamma, k, t, abs_tol / top_k);
  }
  return total;
}

// ---- Scenario-level objective --------------------------------------------------

namespace {

RateGrid feed_grid(const BroadcastScenario& scenario, const Subset& edges, int feed) {
  std::vector<const IntensityProfile*> mus;
  for (int e : edges.elements()) {
    const auto& [i, j] = scenario.candidate_edges[e];
    if (j == feed) mus.push_back(&scenario.broadcaster_profiles[i]);
  }
  return build_rate_grid(mus, scenario.feed_profiles[feed], scenario.t_end);
}

bool feed_has_edges(const BroadcastScenario& scenario, const Subset& edges, int feed) {
  for (int e : edges.elements()) {
    if (scenario.candidate_edges[e].second == feed) return true;
  }
  return false;
}

double integrate_expected_top_k(const BroadcastScenario& scenario, const RateGrid& grid) {
  double t0 = scenario.t_start, tf = scenario.t_end;
  double tol_total = 1e-6 * scenario.top_k * (tf - t0);
  auto e_r = [&](double t) { return expected_top_k_grid(grid, scenario.top_k, t); };
  // Split the outer integral at rate knots; E[r(t)] is smooth in between.
  std::vector<double> cuts = {t0};
  for (double k : grid.knots) {
    if (k > t0 && k < tf) cuts.push_back(k);
  }
  cuts.push_back(tf);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double seg_tol = tol_total * (cuts[i + 1] - cuts[i]) / (tf - t0);
    total += adaptive_simpson(e_r, cuts[i], cuts[i + 1], seg_tol);
  }
  return total;
}

}  // namespace

double visibility_edge(const BroadcastScenario& scenario, const Subset& edges, int feed) {
  if (feed < 0 || feed >= scenario.num_feeds()) {
    throw std::invalid_argument("visibility_edge: feed id out of range");
  }
  if (edges.universe_size() != scenario.num_edges()) {
    throw std::invalid_argument("visibility_edge: edge subset universe mismatch");
  }
  if (!feed_has_edges(scenario, edges, feed)) return 0.0;
  return integrate_expected_top_k(scenario, feed_grid(scenario, edges, feed));
}

double visibility_edge_quadrature(const BroadcastScenario& scenario, const Subset& edges, int feed,
                                  double rel_tol) {
  if (!feed_has_edges(scenario, edges, feed)) return 0.0;
  RateGrid grid = feed_grid(scenario, edges, feed);
  int top_k = scenario.top_k;
  auto e_r = [&](double t) {
    double total = 0.0;
    for (int k = 1; k <= top_k; ++k) total += position_probability_grid(grid, k, t);
    return total;
  };
  double scale = top_k * (scenario.t_end - scenario.t_start);
  return adaptive_simpson(e_r, scenario.t_start, scenario.t_end, rel_tol * scale);
}

VisibilityObjective visibility_objective(const BroadcastScenario& scenario) {
  scenario.validate();
  int n_edges = scenario.num_edges();

  std::vector<Subset> feed_masks;
  feed_masks.reserve(scenario.num_feeds());
  for (int j = 0; j < scenario.num_feeds(); ++j) feed_masks.push_back(scenario.edges_into_feed(j));

  // Feeds do not interact, so F decomposes; cache each feed's term keyed by
  // the projected subset.
  auto cache = std::make_shared<std::vector<std::unordered_map<Subset, double, SubsetHash>>>(
      scenario.num_feeds());
  auto oracle = [scenario, feed_masks, cache](const Subset& s) {
    double total = 0.0;
    for (int j = 0; j < scenario.num_feeds(); ++j) {
      Subset proj = s.set_intersection(feed_masks[j]);
      auto& feed_cache = (*cache)[j];
      auto it = feed_cache.find(proj);
      if (it == feed_cache.end()) {
        it = feed_cache.emplace(proj, visibility_edge(scenario, proj, j)).first;
      }
      total += it->second;
    }
    return total;
  };

  std::vector<int> block_of(n_edges);
  for (int e = 0; e < n_edges; ++e) block_of[e] = scenario.candidate_edges[e].first;
  return VisibilityObjective{SetFunction(n_edges, std::move(oracle), true),
                             Matroid::partition(std::move(block_of), scenario.budgets)};
}

// ---- Curvature bounds -----------------------------------------------------------

namespace {

const double kFourE74 = 4.0 * std::exp(1.75);

double zeta_denominator(double zeta) {
  if (!(zeta > kFourE74)) {
    throw std::domain_error(
        "curvature bound: zeta must exceed 4 e^{7/4} ~ 23.018; the warmup condition "
        "int_0^{t0} gamma_j >= K-1 + zeta sqrt(K-1) does not hold strongly enough");
  }
  return 1.0 - kFourE74 / zeta;  // zeta = +inf gives 1
}

}  // namespace

double curvature_bound_weak(double xi, double zeta, int top_k) {
  if (!(xi >= 1.0)) throw std::domain_error("curvature_bound_weak: xi must be >= 1");
  if (top_k < 1) throw std::domain_error("curvature_bound_weak: K must be >= 1");
  double denom = zeta_denominator(zeta);
  double inner = 6.154 * std::exp(2.0) / denom * xi * std::sqrt(double(top_k)) + 1.0;
  return 1.0 - 1.0 / (xi * inner);
}

double curvature_bound_strong(double xi, double zeta, double rho) {
  if (!(xi >= 1.0)) throw std::domain_error("curvature_bound_strong: xi must be >= 1");
  if (!(rho > 0.0)) throw std::domain_error("curvature_bound_strong: rho must be > 0");
  double denom = zeta_denominator(zeta);
  double damp = std::min(rho, 1.0) * std::exp(-1.0 / (rho * rho));  // rho = +inf gives 1
  double inner = 2.0 * std::exp(1.75) / (denom * damp) * xi + 1.0;
  return 1.0 - 1.0 / (xi * inner);
}

ScenarioConstants xi_zeta_rho_estimates(const BroadcastScenario& scenario) {
  scenario.validate();
  double t0 = scenario.t_start, tf = scenario.t_end;
  int top_k = scenario.top_k;
  const double inf = std::numeric_limits<double>::infinity();

  ScenarioConstants out;
  out.xi = 1.0;
  out.zeta = inf;
  out.rho = inf;

  double c1 = 0.0;  // max sup over all intensities
  double c2 = inf;  // min inf over feed intensities
  int max_in_degree = 0;

  for (int j = 0; j < scenario.num_feeds(); ++j) {
    const IntensityProfile& gamma = scenario.feed_profiles[j];
    double gamma_inf = gamma.inf(t0, tf);
    double gamma_sup = gamma.sup(t0, tf);
    if (!(gamma_inf > 0.0)) {
      throw std::domain_error("xi_zeta_rho_estimates: feed " + std::to_string(j) +
                              " has inf gamma = 0 over the window; xi undefined");
    }
    double mu_sup_sum = 0.0;
    int in_degree = 0;
    for (auto [i, jj] : scenario.candidate_edges) {
      if (jj != j) continue;
      mu_sup_sum += scenario.broadcaster_profiles[i].sup(t0, tf);
      ++in_degree;
    }
    out.xi = std::max(out.xi, (gamma_sup + mu_sup_sum) / gamma_inf);
    c1 = std::max(c1, gamma_sup);
    c2 = std::min(c2, gamma_inf);
    max_in_degree = std::max(max_in_degree, in_degree);

    double warmup_mass = gamma.integrate(0.0, t0);
    double zeta_j =
        top_k == 1 ? inf : (warmup_mass - (top_k - 1)) / std::sqrt(double(top_k - 1));
    out.zeta_per_feed.push_back(zeta_j);
    out.zeta = std::min(out.zeta, zeta_j);
  }

  for (auto [i, j] : scenario.candidate_edges) {
    c1 = std::max(c1, scenario.broadcaster_profiles[i].sup(t0, tf));
    if (top_k == 1) continue;
    // inf over t of gamma_j(t) / (mu_i(t) sqrt(K-1)), piecewise on the merged grid
    RateGrid grid = build_rate_grid({&scenario.broadcaster_profiles[i]},
                                    scenario.feed_profiles[j], tf);
    for (int p = 0; p < grid.pieces(); ++p) {
      if (grid.knots[p + 1] <= t0) continue;
      if (grid.mu[p] <= 0.0) continue;
      out.rho = std::min(out.rho, grid.gamma[p] / (grid.mu[p] * std::sqrt(double(top_k - 1))));
    }
  }

  out.xi_paper_bound = c1 / c2 * (1.0 + max_in_degree);
  return out;
}

// ---- Baselines --------------------------------------------------------------------

std::string baseline_name(BaselineMethod method) {
  switch (method) {
    case BaselineMethod::kRandom: return "random";
    case BaselineMethod::kCompetitionPrioritized: return "CP";
    case BaselineMethod::kUserRatePrioritized: return "UP";
    case BaselineMethod::kCombined: return "CUP";
  }
  return "unknown";
}

Subset select_baseline(const BroadcastScenario& scenario, BaselineMethod method,
                       std::uint64_t seed) {
  scenario.validate();
  int n = scenario.num_edges();
  double t0 = scenario.t_start, tf = scenario.t_end;

  std::vector<double> score(n, 0.0);
  switch (method) {
    case BaselineMethod::kRandom: {
      std::mt19937_64 rng = make_rng(seed);
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (int pos = 0; pos < n; ++pos) score[order[pos]] = pos;
      break;
    }
    case BaselineMethod::kCompetitionPrioritized:
      for (int e = 0; e < n; ++e) {
        score[e] = scenario.feed_profiles[scenario.candidate_edges[e].second].integrate(t0, tf);
      }
      break;
    case BaselineMethod::kUserRatePrioritized:
      for (int e = 0; e < n; ++e) {
        score[e] = -scenario.broadcaster_profiles[scenario.candidate_edges[e].first].integrate(t0, tf);
      }
      break;
    case BaselineMethod::kCombined:
      for (int e = 0; e < n; ++e) {
        double feed_mass =
            scenario.feed_profiles[scenario.candidate_edges[e].second].integrate(t0, tf);
        double user_mass =
            scenario.broadcaster_profiles[scenario.candidate_edges[e].first].integrate(t0, tf);
        score[e] = feed_mass > 0.0 ? -user_mass / feed_mass
                                   : -std::numeric_limits<double>::infinity();
      }
      break;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&score](int a, int b) {
    if (score[a] != score[b]) return score[a] < score[b];
    return a < b;
  });

  Subset chosen(n);
  std::vector<int> used(scenario.num_broadcasters(), 0);
  for (int e : order) {
    int broadcaster = scenario.candidate_edges[e].first;
    if (used[broadcaster] < scenario.budgets[broadcaster]) {
      ++used[broadcaster];
      chosen.insert(e);
    }
  }
  return chosen;
}

// ---- Reports ------------------------------------------------------------------------

VisibilityReport analytic_visibility_report(const BroadcastScenario& scenario,
                                            const Subset& edges) {
  VisibilityReport report;
  report.method = "analytic";
  for (int j = 0; j < scenario.num_feeds(); ++j) {
    double u = visibility_edge(scenario, edges, j);
    report.per_feed.push_back(u);
    report.total += u;
  }
  for (int e : edges.elements()) {
    auto [i, j] = scenario.candidate_edges[e];
    Subset single(scenario.num_edges());
    single.insert(e);
    report.per_edge[{i, j}] = visibility_edge(scenario, single, j);
  }
  return report;
}

std::string edge_set_hash(const Subset& edges) {
  std::uint64_t h = 1469598103934665603ull;
  for (int e : edges.elements()) {
    h ^= static_cast<std::uint64_t>(e) + 1;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void append_visibility_report_rows(CsvWriter& csv, const VisibilityReport& report,
                                   const std::string& set_hash) {
  for (std::size_t j = 0; j < report.per_feed.size(); ++j) {
    csv.add_row({std::to_string(j), set_hash, report.method, fmt_double(report.per_feed[j]),
                 std::to_string(report.realizations)});
  }
}

std::string visibility_report_to_csv(const VisibilityReport& report, const std::string& set_hash) {
  CsvWriter csv({"feed", "edge_set_hash", "method", "value", "n"});
  append_visibility_report_rows(csv, report, set_hash);
  return csv.str();
}

}  // namespace nsmax
