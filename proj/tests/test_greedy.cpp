#include "nsmax/greedy.hpp"

#include <gtest/gtest.h>

#include "nsmax/bounds.hpp"
#include "nsmax/certify.hpp"
#include "nsmax/random_instances.hpp"
#include "nsmax/seeding.hpp"

namespace nsmax {
namespace {

TEST(Greedy, ModularUniformPicksTopWeights) {
  SetFunction f = modular_function({5.0, 3.0, 1.0});
  GreedyTrace trace = greedy_maximize(f, Matroid::uniform(3, 2));
  EXPECT_EQ(trace.selected, (std::vector<int>{0, 1}));
  EXPECT_DOUBLE_EQ(trace.final_value, 8.0);
  EXPECT_FALSE(trace.negative_gain_warning);
}

TEST(Greedy, FourCycleSpanningTree) {
  // Edges of a 4-cycle with weights 4, 3, 2, 1: greedy keeps the three
  // heaviest, and the lightest closes the cycle.
  Matroid m = Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  SetFunction f = modular_function({4.0, 3.0, 2.0, 1.0});
  GreedyTrace trace = greedy_maximize(f, m);
  EXPECT_EQ(trace.selected, (std::vector<int>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(trace.final_value, 9.0);
  EXPECT_EQ(trace.considered.size(), 4u);  // the cycle edge is considered, not selected
}

TEST(Greedy, SelectionIsIndependentAndMaximal) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomInstance inst = random_instance(8, derive_seed(3, "maximal", seed));
    GreedyTrace trace = greedy_maximize(inst.f, inst.m);
    Subset selected = trace.selected_subset(8);
    EXPECT_TRUE(inst.m.is_independent(selected));
    EXPECT_EQ(trace.considered.size(), 8u);
    // Maximal among considered elements: nothing else fits.
    for (int v = 0; v < 8; ++v) {
      if (!selected.contains(v)) {
        EXPECT_FALSE(inst.m.is_independent(selected.with(v)));
      }
    }
  }
}

TEST(Greedy, SelectionCountEqualsRankForStrictlyPositiveGains) {
  SetFunction f = modular_function({2.0, 1.5, 1.0, 0.5, 0.25});
  Matroid m = Matroid::partition({0, 0, 1, 1, 1}, {1, 2});
  GreedyTrace trace = greedy_maximize(f, m);
  EXPECT_EQ(static_cast<int>(trace.selected.size()), m.rank());
}

TEST(Greedy, ValueMeetsCurvatureBoundTimesOpt) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomInstance inst = random_instance(8, derive_seed(5, "curvbound", seed));
    double alpha = generalized_curvature_bruteforce(inst.f).alpha;
    OptResult opt = brute_force_opt(inst.f, inst.m);
    GreedyTrace trace = greedy_maximize(inst.f, inst.m);
    double factor = alpha < 1.0 ? bound_curvature(alpha) : 0.0;
    EXPECT_GE(trace.final_value, factor * opt.value - 1e-9)
        << inst.function_kind << "/" << inst.matroid_kind << " seed " << seed;
  }
}

TEST(Greedy, ArgmaxSequenceInvariantUnderPositiveScaling) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    RandomFunction rf = random_monotone_function(7, derive_seed(9, "scale", seed));
    Matroid m = random_matroid(7, derive_seed(9, "scale-m", seed)).m;
    SetFunction scaled(7, [f = rf.f](const Subset& s) { return 3.5 * f.value(s); });
    GreedyTrace a = greedy_maximize(rf.f, m);
    GreedyTrace b = greedy_maximize(scaled, m);
    EXPECT_EQ(a.selected, b.selected);
    EXPECT_EQ(a.considered, b.considered);
  }
}

TEST(Greedy, NegativeGainWarningOnDecreasingFunction) {
  SetFunction f(3, [](const Subset& s) { return -double(s.size()); });
  GreedyTrace trace = greedy_maximize(f, Matroid::uniform(3, 2));
  EXPECT_TRUE(trace.negative_gain_warning);
  EXPECT_EQ(trace.considered.size(), 3u);  // literal loop still considers everything
}

TEST(BruteForceOpt, ModularUniformTopK) {
  SetFunction f = modular_function({1.0, 7.0, 3.0, 5.0});
  OptResult opt = brute_force_opt(f, Matroid::uniform(4, 2));
  EXPECT_DOUBLE_EQ(opt.value, 12.0);
  EXPECT_EQ(opt.argmax, Subset::of(4, {1, 3}));
}

TEST(BruteForceOpt, ConstantFunctionPicksEmptySet) {
  SetFunction f(4, [](const Subset&) { return 2.0; });
  OptResult opt = brute_force_opt(f, Matroid::uniform(4, 2));
  EXPECT_DOUBLE_EQ(opt.value, 0.0);  // normalized
  EXPECT_TRUE(opt.argmax.is_empty());
}

TEST(BruteForceOpt, MatchesFullSubsetScan) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    RandomInstance inst = random_instance(10, derive_seed(13, "fullscan", seed));
    OptResult opt = brute_force_opt(inst.f, inst.m);
    double best = 0.0;
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      Subset s = Subset::from_mask(10, mask);
      if (inst.m.is_independent(s)) best = std::max(best, inst.f.value(s));
    }
    EXPECT_DOUBLE_EQ(opt.value, best) << "seed " << seed;
  }
}

TEST(BruteForceOpt, TiesResolveToLexicographicallySmallest) {
  SetFunction f(3, [](const Subset& s) { return s.is_empty() ? 0.0 : 1.0; });
  OptResult opt = brute_force_opt(f, Matroid::uniform(3, 2));
  EXPECT_EQ(opt.argmax, Subset::of(3, {0}));
}

TEST(BruteForceOpt, SizeCaps) {
  SetFunction big(21, [](const Subset& s) { return double(s.size()); });
  EXPECT_THROW(brute_force_opt(big, Matroid::uniform(21, 2)), std::invalid_argument);
  SetFunction f(10, [](const Subset& s) { return double(s.size()); });
  EXPECT_THROW(brute_force_opt(f, Matroid::uniform(10, 9)), std::invalid_argument);
}

TEST(GreedyTrace, CsvSerialization) {
  SetFunction f = modular_function({4.0, 3.0, 2.0, 1.0});
  Matroid m = Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  std::string csv = trace_to_csv(greedy_maximize(f, m));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "step,element,considered_only,gain,cumulative_value");
  // 4 considered elements -> 4 data rows.
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_NE(csv.find("3,3,1,1,9"), std::string::npos);  // the cycle edge row
}

}  // namespace
}  // namespace nsmax
