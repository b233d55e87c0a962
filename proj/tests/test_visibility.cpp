#include "nsmax/visibility.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "nsmax/certify.hpp"
#include "nsmax/greedy.hpp"
#include "nsmax/intensity.hpp"
#include "nsmax/random_instances.hpp"

namespace nsmax {
namespace {

BroadcastScenario six_edge_scenario(std::uint64_t seed) {
  ScenarioGenParams params;
  params.n_broadcasters = 2;
  params.n_feeds = 3;
  params.budget = 1;
  return random_scenario(seed, params);
}

TEST(PositionProbability, ZeroAtTimeZero) {
  EXPECT_DOUBLE_EQ(
      position_probability(IntensityProfile::constant(1.0), IntensityProfile::constant(2.0), 1, 0.0),
      0.0);
}

TEST(PositionProbability, TopPositionClosedFormConstantRates) {
  const double mu = 0.3, gamma = 0.7;
  for (double t : {0.5, 2.0, 10.0}) {
    double expected = mu / (mu + gamma) * (1.0 - std::exp(-(mu + gamma) * t));
    EXPECT_NEAR(position_probability(IntensityProfile::constant(mu),
                                     IntensityProfile::constant(gamma), 1, t),
                expected, 1e-12);
  }
}

TEST(PositionProbability, ProbabilitiesWithinUnitInterval) {
  IntensityProfile mu(4.0, {0.0, 1.0, 2.5}, {0.4, 0.05, 1.2});
  IntensityProfile gamma(3.0, {0.0, 1.5}, {2.0, 0.7});
  for (int k : {1, 2, 3, 7}) {
    for (double t : {0.3, 1.0, 2.7, 6.0, 12.0}) {
      double g = position_probability(mu, gamma, k, t);
      EXPECT_GE(g, -1e-12);
      EXPECT_LE(g, 1.0 + 1e-12);
    }
  }
}

TEST(PositionProbability, PositionsSumToBroadcasterMass) {
  // Every broadcaster post occupies exactly one position, so the g_k sum over
  // all k recovers the expected number of posts.
  IntensityProfile mu(2.0, {0.0, 1.0}, {0.5, 0.2});
  IntensityProfile gamma = IntensityProfile::constant(1.5);
  double t = 4.0;
  double target = cumulative_intensity(mu, 0.0, t);
  double total = 0.0;
  double tail = 1.0;
  for (int k = 1; k <= 200 && tail > 1e-10; ++k) {
    double g = position_probability(mu, gamma, k, t);
    total += g;
    tail = g;
  }
  EXPECT_NEAR(total, target, 1e-8);
}

TEST(PositionProbability, QuadratureAgreesWithClosedForm) {
  IntensityProfile mu(4.0, {0.0, 1.0, 2.5}, {0.4, 0.05, 1.2});
  IntensityProfile gamma(3.0, {0.0, 1.5}, {2.0, 0.7});
  for (int k : {1, 2, 5}) {
    for (double t : {0.7, 3.3, 8.0}) {
      double closed = position_probability(mu, gamma, k, t);
      double quad = position_probability_quadrature(mu, gamma, k, t, 1e-11);
      EXPECT_NEAR(quad, closed, 1e-8) << "k=" << k << " t=" << t;
    }
  }
}

TEST(ExpectedTopK, ZeroCases) {
  IntensityProfile gamma = IntensityProfile::constant(1.0);
  EXPECT_DOUBLE_EQ(expected_top_k(IntensityProfile::constant(0.5), gamma, 3, 0.0), 0.0);
  EXPECT_NEAR(expected_top_k(IntensityProfile::constant(0.0), gamma, 3, 5.0), 0.0, 1e-12);
}

TEST(ExpectedTopK, MatchesPositionProbabilitySum) {
  IntensityProfile mu(4.0, {0.0, 1.0, 2.5}, {0.4, 0.05, 1.2});
  IntensityProfile gamma(3.0, {0.0, 1.5}, {2.0, 0.7});
  for (int top_k : {1, 4, 9}) {
    for (double t : {0.5, 2.0, 7.5, 15.0}) {
      double by_sum = 0.0;
      for (int k = 1; k <= top_k; ++k) by_sum += position_probability(mu, gamma, k, t);
      double direct = expected_top_k(mu, gamma, top_k, t);
      EXPECT_NEAR(direct, by_sum, 1e-8) << "K=" << top_k << " t=" << t;
    }
  }
}

TEST(ExpectedTopK, FeedFormEqualsBroadcasterForm) {
  IntensityProfile mu(4.0, {0.0, 2.0}, {0.3, 0.9});
  IntensityProfile gamma(5.0, {0.0, 1.0, 3.0}, {2.0, 0.5, 1.1});
  for (int top_k : {1, 5}) {
    for (double t : {1.0, 4.0, 11.0}) {
      EXPECT_NEAR(expected_top_k(mu, gamma, top_k, t),
                  expected_top_k_direct(mu, gamma, top_k, t), 1e-8);
    }
  }
}

TEST(ExpectedTopK, BoundedByKAndByBroadcasterMass) {
  IntensityProfile mu = IntensityProfile::constant(0.8);
  IntensityProfile gamma = IntensityProfile::constant(0.6);
  for (int top_k : {1, 3, 6}) {
    for (double t : {0.2, 1.0, 5.0, 40.0}) {
      double value = expected_top_k(mu, gamma, top_k, t);
      EXPECT_LE(value, top_k + 1e-9);
      EXPECT_LE(value, cumulative_intensity(mu, 0.0, t) + 1e-9);
    }
  }
}

TEST(ExpectedTopK, SteadyStateConstantRates) {
  const double mu = 0.1, gamma = 1.0;
  const int top_k = 5;
  // Deep horizon: the feed has cycled many times over.
  double t = 50.0 * top_k / (mu + gamma) + 100.0;
  double value = expected_top_k(IntensityProfile::constant(mu), IntensityProfile::constant(gamma),
                                top_k, t);
  EXPECT_NEAR(value / (top_k * mu / (mu + gamma)), 1.0, 1e-4);
}

TEST(ExpectedTopK, FrozenRegressionValue) {
  double value = expected_top_k(IntensityProfile::constant(0.1), IntensityProfile::constant(1.0),
                                5, 30.0);
  EXPECT_NEAR(value, 0.45454545451870285, 1e-10);
}

TEST(VisibilityEdge, NoEdgesIntoFeedGivesZero) {
  BroadcastScenario sc = six_edge_scenario(42);
  Subset none(sc.num_edges());
  EXPECT_DOUBLE_EQ(visibility_edge(sc, none, 0), 0.0);
}

TEST(VisibilityEdge, SteadyStateSingleEdge) {
  BroadcastScenario sc;
  sc.broadcaster_profiles = {IntensityProfile::constant(0.1)};
  sc.feed_profiles = {IntensityProfile::constant(1.0)};
  sc.candidate_edges = {{0, 0}};
  sc.budgets = {1};
  sc.top_k = 5;
  sc.t_start = 400.0;
  sc.t_end = 410.0;
  double u = visibility_edge(sc, Subset::full(1), 0);
  double steady = (sc.t_end - sc.t_start) * sc.top_k * 0.1 / 1.1;
  EXPECT_NEAR(u / steady, 1.0, 1e-2);
}

TEST(VisibilityEdge, MonotoneInAddedEdges) {
  BroadcastScenario sc = six_edge_scenario(7);
  int feed = sc.candidate_edges[0].second;
  Subset single(sc.num_edges());
  single.insert(0);
  double u_single = visibility_edge(sc, single, feed);
  // Add the other broadcaster's edge into the same feed.
  Subset both = single;
  for (int e = 1; e < sc.num_edges(); ++e) {
    if (sc.candidate_edges[e].second == feed) both.insert(e);
  }
  double u_both = visibility_edge(sc, both, feed);
  EXPECT_GT(u_both, u_single);
}

TEST(VisibilityEdge, ClosedFormMatchesRawDefinitionQuadrature) {
  BroadcastScenario sc;
  sc.broadcaster_profiles = {IntensityProfile(2.0, {0.0, 1.0}, {0.4, 0.1}),
                             IntensityProfile::constant(0.2)};
  sc.feed_profiles = {IntensityProfile(3.0, {0.0, 1.5}, {1.2, 0.8})};
  sc.candidate_edges = {{0, 0}, {1, 0}};
  sc.budgets = {1, 1};
  sc.top_k = 3;
  sc.t_start = 2.0;
  sc.t_end = 5.0;
  Subset all = Subset::full(2);
  double closed = visibility_edge(sc, all, 0);
  double quad = visibility_edge_quadrature(sc, all, 0, 1e-9);
  EXPECT_NEAR(std::abs(closed - quad) / closed, 0.0, 1e-6);
}

TEST(VisibilityObjective, NormalizedAndMonotone) {
  BroadcastScenario sc = six_edge_scenario(3);
  VisibilityObjective obj = visibility_objective(sc);
  EXPECT_DOUBLE_EQ(obj.objective.value(Subset(sc.num_edges())), 0.0);
  EXPECT_TRUE(check_monotone(obj.objective, 1e-9));
  EXPECT_EQ(obj.constraint.kind(), Matroid::Kind::kPartition);
}

TEST(VisibilityObjective, BruteForcedCurvatureBelowTheoremBounds) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    BroadcastScenario sc = six_edge_scenario(seed);
    VisibilityObjective obj = visibility_objective(sc);
    double alpha = generalized_curvature_bruteforce(obj.objective, 1e-9).alpha;
    ScenarioConstants constants = xi_zeta_rho_estimates(sc);
    double bound = curvature_bound_weak(constants.xi, constants.zeta, sc.top_k);
    if (constants.rho > 0.0) {
      bound = std::min(bound, curvature_bound_strong(constants.xi, constants.zeta, constants.rho));
    }
    EXPECT_LE(alpha, bound + 1e-9) << "seed " << seed;
  }
}

TEST(ScenarioConstants, FrozenSingleEdgeExample) {
  BroadcastScenario sc;
  sc.broadcaster_profiles = {IntensityProfile::constant(0.1)};
  sc.feed_profiles = {IntensityProfile::constant(1.0)};
  sc.candidate_edges = {{0, 0}};
  sc.budgets = {1};
  sc.top_k = 10;
  sc.t_start = 100.0;
  sc.t_end = 110.0;
  ScenarioConstants c = xi_zeta_rho_estimates(sc);
  EXPECT_NEAR(c.xi, 1.1, 1e-12);
  EXPECT_NEAR(c.rho, 10.0 / 3.0, 1e-12);
  EXPECT_NEAR(c.zeta, (100.0 - 9.0) / 3.0, 1e-12);
}

TEST(ScenarioConstants, ColdStartViolatesWarmupCondition) {
  BroadcastScenario sc;
  sc.broadcaster_profiles = {IntensityProfile::constant(0.1)};
  sc.feed_profiles = {IntensityProfile::constant(1.0)};
  sc.candidate_edges = {{0, 0}};
  sc.budgets = {1};
  sc.top_k = 10;
  sc.t_start = 0.0;
  sc.t_end = 10.0;
  // t_start = 0 leaves no warmup mass; the per-feed margin is -sqrt(K-1).
  ScenarioConstants c = xi_zeta_rho_estimates(sc);
  EXPECT_NEAR(c.zeta, -3.0, 1e-12);
  EXPECT_THROW(curvature_bound_weak(c.xi, c.zeta, sc.top_k), std::domain_error);
}

TEST(ScenarioConstants, ScaleInvarianceOfXiAndRho) {
  BroadcastScenario sc = six_edge_scenario(11);
  ScenarioConstants base = xi_zeta_rho_estimates(sc);
  BroadcastScenario scaled = sc;
  auto scale_profile = [](const IntensityProfile& p, double c) {
    std::vector<double> values = p.values();
    for (double& v : values) v *= c;
    return IntensityProfile(p.period(), p.breakpoints(), std::move(values));
  };
  for (auto& p : scaled.broadcaster_profiles) p = scale_profile(p, 2.5);
  for (auto& p : scaled.feed_profiles) p = scale_profile(p, 2.5);
  ScenarioConstants after = xi_zeta_rho_estimates(scaled);
  EXPECT_NEAR(after.xi, base.xi, 1e-9);
  EXPECT_NEAR(after.rho, base.rho, 1e-9);
}

TEST(ScenarioConstants, KEqualOneGivesInfiniteMargins) {
  BroadcastScenario sc = six_edge_scenario(5);
  sc.top_k = 1;
  ScenarioConstants c = xi_zeta_rho_estimates(sc);
  EXPECT_TRUE(std::isinf(c.zeta));
  EXPECT_TRUE(std::isinf(c.rho));
}

TEST(ScenarioConstants, ZeroBackgroundRateRejected) {
  BroadcastScenario sc;
  sc.broadcaster_profiles = {IntensityProfile::constant(0.1)};
  sc.feed_profiles = {IntensityProfile::constant(0.0)};
  sc.candidate_edges = {{0, 0}};
  sc.budgets = {1};
  sc.top_k = 2;
  sc.t_start = 1.0;
  sc.t_end = 2.0;
  EXPECT_THROW(xi_zeta_rho_estimates(sc), std::domain_error);
}

TEST(CurvatureBoundWeak, FrozenValues) {
  double inf = std::numeric_limits<double>::infinity();
  EXPECT_NEAR(curvature_bound_weak(1.0, inf, 1), 0.9784817827096401, 1e-12);
  EXPECT_NEAR(curvature_bound_weak(2.0, 50.0, 10), 0.9990635665091434, 1e-12);
}

TEST(CurvatureBoundWeak, MonotoneInXiAndK) {
  double previous = 0.0;
  for (double xi : {1.0, 1.5, 2.0, 4.0}) {
    double value = curvature_bound_weak(xi, 60.0, 5);
    EXPECT_GT(value, previous);
    previous = value;
  }
  previous = 0.0;
  for (int top_k : {1, 2, 5, 20}) {
    double value = curvature_bound_weak(1.5, 60.0, top_k);
    EXPECT_GT(value, previous);
    previous = value;
  }
}

TEST(CurvatureBoundWeak, SmallZetaRejected) {
  EXPECT_THROW(curvature_bound_weak(1.0, 20.0, 5), std::domain_error);
}

TEST(CurvatureBoundStrong, FrozenValueAndLimits) {
  EXPECT_NEAR(curvature_bound_strong(2.0, 50.0, 1.0), 0.9957246836982261, 1e-12);
  // rho >= 1 regime: K-independent and strictly below 1.
  double value = curvature_bound_strong(2.0, 50.0, 3.0);
  EXPECT_LT(value, 1.0);
  // rho -> 0 drives the bound to 1.
  EXPECT_GT(curvature_bound_strong(2.0, 50.0, 0.05), 1.0 - 1e-9);
  EXPECT_THROW(curvature_bound_strong(2.0, 50.0, 0.0), std::domain_error);
}

TEST(SelectBaseline, ZeroBudgetsSelectNothing) {
  BroadcastScenario sc = six_edge_scenario(13);
  sc.budgets.assign(sc.num_broadcasters(), 0);
  for (BaselineMethod method :
       {BaselineMethod::kRandom, BaselineMethod::kCompetitionPrioritized,
        BaselineMethod::kUserRatePrioritized, BaselineMethod::kCombined}) {
    EXPECT_TRUE(select_baseline(sc, method, 1).is_empty());
  }
}

TEST(SelectBaseline, RespectsBudgetsAndIsSeedStable) {
  BroadcastScenario sc = six_edge_scenario(17);
  for (BaselineMethod method :
       {BaselineMethod::kRandom, BaselineMethod::kCompetitionPrioritized,
        BaselineMethod::kUserRatePrioritized, BaselineMethod::kCombined}) {
    Subset a = select_baseline(sc, method, 5);
    Subset b = select_baseline(sc, method, 5);
    EXPECT_EQ(a, b);
    std::vector<int> used(sc.num_broadcasters(), 0);
    for (int e : a.elements()) used[sc.candidate_edges[e].first]++;
    for (int i = 0; i < sc.num_broadcasters(); ++i) EXPECT_LE(used[i], sc.budgets[i]);
  }
}

TEST(ToyScenario, GreedyBeatsCompetitionRanking) {
  BroadcastScenario sc = toy_scenario();
  VisibilityObjective obj = visibility_objective(sc);
  GreedyTrace trace = greedy_maximize(obj.objective, obj.constraint);
  Subset cp = select_baseline(sc, BaselineMethod::kCompetitionPrioritized, 0);
  EXPECT_GE(trace.final_value, obj.objective.value(cp));
  // The time-aware selection matches each broadcaster to its quiet-window feed.
  Subset greedy_edges = trace.selected_subset(sc.num_edges());
  for (int e : greedy_edges.elements()) {
    auto [i, j] = sc.candidate_edges[e];
    EXPECT_EQ(i, j);
  }
}

TEST(VisibilityReportCsv, PerFeedRows) {
  BroadcastScenario sc = six_edge_scenario(19);
  Subset edges(sc.num_edges());
  edges.insert(0);
  VisibilityReport report = analytic_visibility_report(sc, edges);
  std::string csv = visibility_report_to_csv(report, edge_set_hash(edges));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "feed,edge_set_hash,method,value,n");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + sc.num_feeds());
  EXPECT_NE(csv.find("analytic"), std::string::npos);
}

TEST(EdgeSetHash, StableAndDiscriminating) {
  Subset a = Subset::of(6, {0, 3});
  Subset b = Subset::of(6, {0, 4});
  EXPECT_EQ(edge_set_hash(a), edge_set_hash(a));
  EXPECT_NE(edge_set_hash(a), edge_set_hash(b));
}

}  // namespace
}  // namespace nsmax
