#include "nsmax/greedy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nsmax/csv.hpp"

namespace nsmax {

Subset GreedyTrace::selected_subset(int ground_size) const {
  Subset s(ground_size);
  for (int v : selected) s.insert(v);
  return s;
}

GreedyTrace greedy_maximize(const SetFunction& f, const Matroid& m) {
  if (f.ground_size() != m.ground_size()) {
    throw std::invalid_argument("greedy_maximize: function and matroid ground sets differ");
  }
  int n = f.ground_size();
  std::uint64_t calls_before = f.eval_count();

  GreedyTrace trace;
  Subset selected(n);
  std::vector<bool> considered(n, false);
  int considered_count = 0;
  double current_value = 0.0;

  while (considered_count < n) {
    // Gains are taken against the fixed current selection, so one scan per
    // outer iteration gives the whole consideration order for this step.
    std::vector<std::pair<double, int>> candidates;
    candidates.reserve(n - considered_count);
    for (int v = 0; v < n; ++v) {
      if (!considered[v]) candidates.emplace_back(f.marginal(v, selected), v);
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    if (!candidates.empty() && candidates.front().first < 0.0) {
      trace.negative_gain_warning = true;
    }

    bool selected_one = false;
    for (const auto& [gain, v] : candidates) {
      considered[v] = true;
      ++considered_count;
      trace.considered.push_back(v);
      Subset attempt = selected.with(v);
      if (m.is_independent(attempt)) {
        selected = attempt;
        current_value = f.value(selected);
        trace.selected.push_back(v);
        trace.gains.push_back(gain);
        trace.steps.push_back({v, gain, true, current_value});
        selected_one = true;
        break;
      }
      trace.steps.push_back({v, gain, false, current_value});
    }
    if (!selected_one) break;  // every remaining element was considered
  }

  trace.final_value = current_value;
  trace.oracle_calls = f.eval_count() - calls_before;
  return trace;
}

std::string trace_to_csv(const GreedyTrace& trace) {
  CsvWriter csv({"step", "element", "considered_only", "gain", "cumulative_value"});
  int step = 0;
  for (const GreedyStep& s : trace.steps) {
    csv.add_row({std::to_string(step++), std::to_string(s.element),
                 s.selected ? "0" : "1", fmt_double(s.gain), fmt_double(s.cumulative_value)});
  }
  return csv.str();
}

namespace {

void opt_dfs(const SetFunction& f, const Matroid& m, Subset& current, int next, OptResult& best) {
  int n = f.ground_size();
  for (int v = next; v < n; ++v) {
    current.insert(v);
    if (m.is_independent(current)) {
      ++best.independent_sets_enumerated;
      double value = f.value(current);
      if (value > best.value) {
        best.value = value;
        best.argmax = current;
      }
      opt_dfs(f, m, current, v + 1, best);
    }
    current.erase(v);
  }
}

}  // namespace

OptResult brute_force_opt(const SetFunction& f, const Matroid& m) {
  if (f.ground_size() != m.ground_size()) {
    throw std::invalid_argument("brute_force_opt: function and matroid ground sets differ");
  }
  int n = f.ground_size();
  if (n > 20) throw std::invalid_argument("brute_force_opt: ground set too large (n > 20)");
  if (m.rank() > 8) throw std::invalid_argument("brute_force_opt: matroid rank too large (> 8)");

  OptResult best;
  best.argmax = Subset(n);
  best.value = f.value(best.argmax);  // 0 by normalization
  best.independent_sets_enumerated = 1;
  Subset current(n);
  opt_dfs(f, m, current, 0, best);
  return best;
}

}  // namespace nsmax
