#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nsmax/intensity.hpp"
#include "nsmax/matroid.hpp"
#include "nsmax/set_function.hpp"
#include "nsmax/subset.hpp"

namespace nsmax {

// Broadcasters posting into follower feeds through candidate links, with a
// per-broadcaster budget, feed depth K and observation window [t_start,
// t_end]. Candidate edge e = candidate_edges[e] = (broadcaster, feed); the
// edge index is the ground-set element id everywhere.
struct BroadcastScenario {
  std::vector<IntensityProfile> broadcaster_profiles;
  std::vector<IntensityProfile> feed_profiles;
  std::vector<std::pair<int, int>> candidate_edges;
  std::vector<int> budgets;  // per broadcaster
  int top_k = 1;
  double t_start = 0.0;
  double t_end = 1.0;

  int num_broadcasters() const { return static_cast<int>(broadcaster_profiles.size()); }
  int num_feeds() const { return static_cast<int>(feed_profiles.size()); }
  int num_edges() const { return static_cast<int>(candidate_edges.size()); }

  void validate() const;

  // Edge indices pointing into the given feed, as a ground-set subset.
  Subset edges_into_feed(int feed) const;
};

// ---- Single-pair analytics -------------------------------------------------

// g_k(t): probability that a post from a broadcaster with rate mu sits at
// position k of a feed with background rate gamma at time t. Closed form:
// on each constant-rate piece the integrand is a Poisson density in the
// remaining mass J, which integrates to a difference of regularized gamma
// tails.
double position_probability(const IntensityProfile& mu, const IntensityProfile& gamma, int k,
                            double t);

// Same quantity by adaptive quadrature of the defining integral; the slow
// reference route used to validate the closed form.
double position_probability_quadrature(const IntensityProfile& mu, const IntensityProfile& gamma,
                                       int k, double t, double abs_tol = 1e-10);

// E[r(t)] = sum_{k<=K} g_k(t), evaluated as K + G(J(mu+gamma,0,t)) minus the
// closed-form integral of Q(K, J) against gamma (the feed-rate form).
double expected_top_k(const IntensityProfile& mu, const IntensityProfile& gamma, int top_k,
                      double t);

// The pre-simplification form, integrating Q(K, J) against mu instead; equal
// to expected_top_k up to floating-point noise and exercised as a cross-check.
double expected_top_k_direct(const IntensityProfile& mu, const IntensityProfile& gamma, int top_k,
                             double t);

double expected_top_k_quadrature(const IntensityProfile& mu, const IntensityProfile& gamma,
                                 int top_k, double t, double abs_tol = 1e-10);

// ---- Grid forms (summed broadcaster rates) ---------------------------------

double position_probability_grid(const RateGrid& grid, int k, double t);
double expected_top_k_grid(const RateGrid& grid, int top_k, double t);
double expected_top_k_grid_direct(const RateGrid& grid, int top_k, double t);

// ---- Scenario-level objective ----------------------------------------------

// U(E_B, j): expected time-integrated top-K count for feed `feed` given the
// selected edge subset, integrating E[r(t)] over [t_start, t_end] with
// adaptive Simpson between rate knots (tolerance 1e-6 * K * window).
double visibility_edge(const BroadcastScenario& scenario, const Subset& edges, int feed);

// Reference route for visibility_edge built on the raw g_k definition.
double visibility_edge_quadrature(const BroadcastScenario& scenario, const Subset& edges, int feed,
                                  double rel_tol = 1e-7);

struct VisibilityObjective {
  SetFunction objective;  // F(E_B) = sum_j U(E_B, j), F(empty) = 0
  Matroid constraint;     // partition matroid: per-broadcaster budgets
};

// The average top-K visibility as a set function over candidate edges, paired
// with its partition matroid. Evaluations cache per-feed results keyed by the
// projected edge subset, since feeds do not interact.
VisibilityObjective visibility_objective(const BroadcastScenario& scenario);

// ---- Curvature-bound calculators and scenario constants ---------------------

// alpha* = 1 - 1/(xi (6.154 e^2 / (1 - 4 e^{7/4}/zeta) xi sqrt(K) + 1)).
// Requires xi >= 1, K >= 1 and zeta > 4 e^{7/4} (otherwise the warmup
// condition int_0^{t0} gamma >= K-1 + zeta sqrt(K-1) cannot deliver a
// positive denominator).
double curvature_bound_weak(double xi, double zeta, int top_k);

// K-independent variant under the per-broadcaster rate condition
// mu_i(t) <= gamma_j(t) / (rho sqrt(K-1)):
// alpha* = 1 - 1/(xi (2 e^{7/4} / ((1 - 4 e^{7/4}/zeta) min(rho,1)
// e^{-1/rho^2}) xi + 1)).
double curvature_bound_strong(double xi, double zeta, double rho);

struct ScenarioConstants {
  double xi = 1.0;    // worst case over feeds of (sup gamma + sum of candidate sup mu) / inf gamma
  double zeta = 0.0;  // min over feeds of (int_0^{t0} gamma - (K-1)) / sqrt(K-1); +inf for K = 1
  double rho = 0.0;   // min over candidate edges of inf_t gamma_j / (mu_i sqrt(K-1)); +inf for K = 1
  double xi_paper_bound = 0.0;  // (c1/c2) (1 + max feed in-degree), the coarse a-priori bound
  std::vector<double> zeta_per_feed;
};

// Per-scenario constants feeding the curvature bounds. Throws when some feed
// background rate has inf 0 over the window (xi undefined).
ScenarioConstants xi_zeta_rho_estimates(const BroadcastScenario& scenario);

// ---- Baselines ---------------------------------------------------------------

// Static-score heuristics filling each broadcaster's budget greedily:
// random - seeded shuffle; competition-prioritized (CP) - ascending
// int_{t0}^{tf} gamma_j; user-rate-prioritized (UP) - descending
// int_{t0}^{tf} mu_i; combined (CUP) - descending ratio of the two. Ties
// break on the edge id. The CP/UP/CUP ranking rules are this library's
// reconstructions; only their names come from the experimental protocol.
enum class BaselineMethod { kRandom, kCompetitionPrioritized, kUserRatePrioritized, kCombined };

std::string baseline_name(BaselineMethod method);

Subset select_baseline(const BroadcastScenario& scenario, BaselineMethod method,
                       std::uint64_t seed);

// ---- Reports ------------------------------------------------------------------

struct VisibilityReport {
  std::string method;  // "analytic" | "quadrature" | "empirical"
  double total = 0.0;
  std::vector<double> per_feed;
  // Single-edge visibilities U({(i,j)}, j) for analytic reports; estimated
  // per-broadcaster time-in-top-K for empirical ones.
  std::map<std::pair<int, int>, double> per_edge;
  int realizations = 0;
};

VisibilityReport analytic_visibility_report(const BroadcastScenario& scenario,
                                            const Subset& edges);

// Stable hash of an edge subset, printed as hex in CSV output.
std::string edge_set_hash(const Subset& edges);

// CSV with columns feed,edge_set_hash,method,value,n (one row per feed).
std::string visibility_report_to_csv(const VisibilityReport& report, const std::string& set_hash);
void append_visibility_report_rows(class CsvWriter& csv, const VisibilityReport& report,
                                   const std::string& set_hash);

}  // namespace nsmax
