#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsmax/matroid.hpp"
#include "nsmax/set_function.hpp"

namespace nsmax {

struct GreedyStep {
  int element = -1;
  double gain = 0.0;    // marginal gain at the time of consideration
  bool selected = false;
  double cumulative_value = 0.0;  // F(selected so far), after this step
};

struct GreedyTrace {
  std::vector<int> selected;        // in selection order
  std::vector<int> considered;      // in consideration order; selected is a subsequence
  std::vector<double> gains;        // argmax gain per selection
  std::vector<GreedyStep> steps;    // full consideration log
  double final_value = 0.0;
  std::uint64_t oracle_calls = 0;
  // Set when the best available gain went strictly negative at some step;
  // a nondecreasing objective should never trigger it. The run continues
  // regardless, since the greedy loop literally considers every element.
  bool negative_gain_warning = false;

  Subset selected_subset(int ground_size) const;
};

// Standard greedy under a matroid constraint: repeatedly take the unconsidered
// element of maximum marginal gain (ties to the smallest id), mark it
// considered, and select it only if independence is preserved; stops once all
// elements are considered. The selected set is maximal independent among the
// considered elements.
GreedyTrace greedy_maximize(const SetFunction& f, const Matroid& m);

// CSV with columns step,element,considered_only,gain,cumulative_value.
std::string trace_to_csv(const GreedyTrace& trace);

struct OptResult {
  Subset argmax;
  double value = 0.0;
  std::uint64_t independent_sets_enumerated = 0;
};

// Exact optimum of f over the independent sets of m, by DFS over
// independent-set extensions (heredity prunes the search). Ties resolve to the
// lexicographically smallest element list. Requires ground size <= 20 and
// rank <= 8.
OptResult brute_force_opt(const SetFunction& f, const Matroid& m);

}  // namespace nsmax
