#include <cmath>

#include <gtest/gtest.h>

#include "nsmax/csv.hpp"
#include "nsmax/parallel.hpp"
#include "nsmax/random_instances.hpp"
#include "nsmax/scenario_io.hpp"
#include "nsmax/seeding.hpp"

namespace nsmax {
namespace {

TEST(ScenarioJson, RoundTrip) {
  BroadcastScenario original = toy_scenario();
  BroadcastScenario restored = scenario_from_json(scenario_to_json(original));
  EXPECT_EQ(restored.num_broadcasters(), original.num_broadcasters());
  EXPECT_EQ(restored.candidate_edges, original.candidate_edges);
  EXPECT_EQ(restored.budgets, original.budgets);
  EXPECT_EQ(restored.top_k, original.top_k);
  EXPECT_DOUBLE_EQ(restored.t_start, original.t_start);
  EXPECT_DOUBLE_EQ(restored.t_end, original.t_end);
  for (int i = 0; i < original.num_broadcasters(); ++i) {
    EXPECT_EQ(restored.broadcaster_profiles[i].values(), original.broadcaster_profiles[i].values());
  }
}

TEST(ScenarioJson, SparseIdsAreRemappedInOrder) {
  nlohmann::json doc = {
      {"broadcasters",
       {{{"id", 10}, {"profile", {{"period", 1.0}, {"breakpoints", {0.0}}, {"values", {0.5}}}}},
        {{"id", 3}, {"profile", {{"period", 1.0}, {"breakpoints", {0.0}}, {"values", {0.7}}}}}}},
      {"feeds",
       {{{"id", 2}, {"profile", {{"period", 1.0}, {"breakpoints", {0.0}}, {"values", {1.5}}}}}}},
      {"candidate_edges", {{10, 2}, {3, 2}}},
      {"budgets", {{"10", 1}, {"3", 2}}},
      {"K", 4},
      {"t0", 1.0},
      {"tf", 3.0}};
  BroadcastScenario sc = scenario_from_json(doc);
  EXPECT_EQ(sc.num_broadcasters(), 2);
  // id 3 sorts before id 10, so it becomes index 0 with budget 2.
  EXPECT_DOUBLE_EQ(sc.broadcaster_profiles[0].values()[0], 0.7);
  EXPECT_EQ(sc.budgets, (std::vector<int>{2, 1}));
  EXPECT_EQ(sc.candidate_edges, (std::vector<std::pair<int, int>>{{1, 0}, {0, 0}}));
}

TEST(ScenarioJson, MissingFileErrorCarriesPath) {
  try {
    load_scenario("/nonexistent/dir/scenario.json");
    FAIL() << "expected an error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/scenario.json"), std::string::npos);
  }
}

TEST(MatroidJson, RoundTripAllKinds) {
  std::vector<Matroid> matroids = {
      Matroid::uniform(5, 2),
      Matroid::partition({0, 0, 1, 2}, {1, 1, 1}),
      Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 3}}),
  };
  for (const Matroid& m : matroids) {
    Matroid restored = matroid_from_json(matroid_to_json(m));
    EXPECT_EQ(restored.kind(), m.kind());
    EXPECT_EQ(restored.ground_size(), m.ground_size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.ground_size()); ++mask) {
      Subset s = Subset::from_mask(m.ground_size(), mask);
      EXPECT_EQ(restored.is_independent(s), m.is_independent(s));
    }
  }
  EXPECT_THROW(matroid_from_json({{"kind", "linear"}}), std::invalid_argument);
}

TEST(CsvWriter, EscapesSpecialCharacters) {
  CsvWriter csv({"a", "b"});
  csv.add_row({"plain", "with,comma"});
  csv.add_row({"with\"quote", "with\nnewline"});
  EXPECT_EQ(csv.str(), "a,b\nplain,\"with,comma\"\n\"with\"\"quote\",\"with\nnewline\"\n");
}

TEST(FmtDouble, DeterministicPlainFormat) {
  EXPECT_EQ(fmt_double(0.5), "0.5");
  EXPECT_EQ(fmt_double(-3.0), "-3");
  EXPECT_EQ(fmt_double(1.0 / 3.0), "0.333333333333");
}

TEST(Seeding, DerivedSeedsAreStableAndDistinct) {
  std::uint64_t a = derive_seed(42, "component", 0);
  EXPECT_EQ(a, derive_seed(42, "component", 0));
  EXPECT_NE(a, derive_seed(42, "component", 1));
  EXPECT_NE(a, derive_seed(42, "other", 0));
  EXPECT_NE(a, derive_seed(43, "component", 0));
}

TEST(ParallelFor, ResultsIndependentOfWorkerCount) {
  auto compute = [](int jobs) {
    std::vector<double> out(200);
    parallel_for(out.size(), jobs, [&out](std::size_t i) {
      std::mt19937_64 rng = make_rng(derive_seed(7, "pf", i));
      std::uniform_real_distribution<double> dist(0.0, 1.0);
      out[i] = dist(rng) + double(i);
    });
    return out;
  };
  EXPECT_EQ(compute(1), compute(4));
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(8, 4,
                            [](std::size_t i) {
                              if (i == 5) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(RandomInstances, GeneratorsAreSeedDeterministic) {
  RandomInstance a = random_instance(7, 123);
  RandomInstance b = random_instance(7, 123);
  EXPECT_EQ(a.function_kind, b.function_kind);
  EXPECT_EQ(a.matroid_kind, b.matroid_kind);
  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    Subset s = Subset::from_mask(7, mask);
    EXPECT_EQ(a.f.value(s), b.f.value(s));
    EXPECT_EQ(a.m.is_independent(s), b.m.is_independent(s));
  }
}

TEST(RandomInstances, FunctionsAreMonotoneNormalized) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomFunction rf = random_monotone_function(7, derive_seed(55, "mono", seed));
    EXPECT_DOUBLE_EQ(rf.f.value(Subset(7)), 0.0);
    EXPECT_TRUE(check_monotone(rf.f)) << rf.kind << " seed " << seed;
  }
}

TEST(RandomInstances, MatroidRankCapRespected) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomMatroid rm = random_matroid(10, derive_seed(56, "cap", seed));
    EXPECT_LE(rm.m.rank(), 8);
    EXPECT_GE(rm.m.rank(), 1);
  }
}

TEST(RandomScenario, SatisfiesCurvatureBoundPreconditions) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    BroadcastScenario sc = random_scenario(seed);
    ScenarioConstants c = xi_zeta_rho_estimates(sc);
    EXPECT_GT(c.zeta, 4.0 * std::exp(1.75));
    EXPECT_GT(c.rho, 0.0);
    EXPECT_GE(c.xi, 1.0);
    EXPECT_GE(c.xi_paper_bound, 1.0);
  }
}

}  // namespace
}  // namespace nsmax
