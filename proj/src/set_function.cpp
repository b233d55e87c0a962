#include "nsmax/set_function.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace nsmax {

SetFunction::SetFunction(int ground_size, Oracle oracle, bool memoize)
    : n_(ground_size), state_(std::make_shared<State>()) {
  if (ground_size < 1) throw std::invalid_argument("SetFunction: ground size must be >= 1");
  if (!oracle) throw std::invalid_argument("SetFunction: null oracle");
  state_->oracle = std::move(oracle);
  state_->memoize = memoize;
  Subset empty(n_);
  state_->offset = state_->oracle(empty);
  state_->eval_count = 1;
  if (memoize) state_->memo.emplace(empty, 0.0);
}

double SetFunction::value(const Subset& s) const {
  if (s.universe_size() != n_) throw std::invalid_argument("SetFunction: subset universe mismatch");
  State& st = *state_;
  if (st.memoize) {
    auto it = st.memo.find(s);
    if (it != st.memo.end()) return it->second;
  }
  ++st.eval_count;
  double v = st.oracle(s) - st.offset;
  if (st.memoize) st.memo.emplace(s, v);
  return v;
}

double SetFunction::marginal(const Subset& omega, const Subset& s) const {
  return value(s.set_union(omega)) - value(s);
}

double SetFunction::marginal(int v, const Subset& s) const {
  if (s.contains(v)) return 0.0;
  return value(s.with(v)) - value(s);
}

std::vector<double> dense_value_table(const SetFunction& f) {
  int n = f.ground_size();
  if (n > 24) throw std::invalid_argument("dense_value_table: ground set too large (n > 24)");
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = f.value(Subset::from_mask(n, mask));
  }
  return table;
}

bool check_monotone(const SetFunction& f, double tol) {
  int n = f.ground_size();
  if (n > 20) {
    throw std::invalid_argument("check_monotone: ground set too large for exhaustive check (n > 20)");
  }
  std::vector<double> table = dense_value_table(f);
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 0; s <= full; ++s) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (s & bit) continue;
      if (table[s | bit] - table[s] < -tol) return false;
    }
  }
  return true;
}

bool is_submodular(const SetFunction& f, double tol) {
  int n = f.ground_size();
  if (n > 12) {
    throw std::invalid_argument("is_submodular: ground set too large for exhaustive check (n > 12)");
  }
  std::vector<double> table = dense_value_table(f);
  for (int v = 0; v < n; ++v) {
    std::uint64_t bit = std::uint64_t{1} << v;
    std::uint64_t comp = ((std::uint64_t{1} << n) - 1) & ~bit;
    // Iterate b over subsets of V \ {v}, then a over subsets of b.
    std::uint64_t b = comp;
    while (true) {
      double gain_b = table[b | bit] - table[b];
      for (std::uint64_t a = b;; a = (a - 1) & b) {
        if (table[a | bit] - table[a] < gain_b - tol) return false;
        if (a == 0) break;
      }
      if (b == 0) break;
      b = (b - 1) & comp;
    }
  }
  return true;
}

SetFunction modular_function(std::vector<double> weights, bool memoize) {
  int n = static_cast<int>(weights.size());
  return SetFunction(
      n,
      [w = std::move(weights)](const Subset& s) {
        double total = 0.0;
        for (int v : s.elements()) total += w[v];
        return total;
      },
      memoize);
}

SetFunction coverage_function(int ground_size, std::vector<std::vector<int>> covers,
                              std::vector<double> universe_weights, bool memoize) {
  if (static_cast<int>(covers.size()) != ground_size) {
    throw std::invalid_argument("coverage_function: one cover list per element required");
  }
  for (const auto& cover : covers) {
    for (int item : cover) {
      if (item < 0 || item >= static_cast<int>(universe_weights.size())) {
        throw std::invalid_argument("coverage_function: covered item out of range");
      }
    }
  }
  return SetFunction(
      ground_size,
      [covers = std::move(covers), weights = std::move(universe_weights)](const Subset& s) {
        std::vector<bool> covered(weights.size(), false);
        for (int v : s.elements()) {
          for (int item : covers[v]) covered[item] = true;
        }
        double total = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
          if (covered[i]) total += weights[i];
        }
        return total;
      },
      memoize);
}

}  // namespace nsmax
