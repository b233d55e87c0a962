#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "nsmax/subset.hpp"

namespace nsmax {

// Marginal gains at or below this magnitude are treated as zero; ratio
// denominators at or below it are excluded from extremal scans.
inline constexpr double kZeroGainTol = 1e-12;

// A value oracle over subsets of {0, ..., n-1}, normalized so that the empty
// set evaluates to exactly 0 (non-normalized oracles are shifted by -F(empty)
// at construction). Oracles must be deterministic; memoization relies on it.
class SetFunction {
 public:
  using Oracle = std::function<double(const Subset&)>;

  SetFunction(int ground_size, Oracle oracle, bool memoize = true);

  int ground_size() const { return n_; }

  // F(s) - F(empty). Counts an oracle call unless the subset is memoized.
  double value(const Subset& s) const;

  // rho_omega(s) = F(s | omega) - F(s).
  double marginal(const Subset& omega, const Subset& s) const;

  // Singleton form rho_v(s).
  double marginal(int v, const Subset& s) const;

  std::uint64_t eval_count() const { return state_->eval_count; }
  bool memoize_enabled() const { return state_->memoize; }

 private:
  struct State {
    Oracle oracle;
    bool memoize = true;
    double offset = 0.0;
    std::unordered_map<Subset, double, SubsetHash> memo;
    std::uint64_t eval_count = 0;
  };

  int n_ = 0;
  std::shared_ptr<State> state_;
};

// Dense table of f over all 2^n subsets, indexed by bit mask. Requires
// n <= 24. Brute-force scans work off this table so that an exhaustive pass
// costs at most 2^n oracle calls.
std::vector<double> dense_value_table(const SetFunction& f);

// Exhaustive monotonicity check: rho_v(s) >= -tol for every v and s.
// Requires ground size <= 20.
bool check_monotone(const SetFunction& f, double tol = kZeroGainTol);

// Exhaustive diminishing-returns check: rho_v(a) >= rho_v(b) - tol for all
// v and a subseteq b. Requires ground size <= 12.
bool is_submodular(const SetFunction& f, double tol = 1e-9);

// Convenience constructors used throughout tests and experiment harnesses.
SetFunction modular_function(std::vector<double> weights, bool memoize = true);
SetFunction coverage_function(int ground_size, std::vector<std::vector<int>> covers,
                              std::vector<double> universe_weights, bool memoize = true);

}  // namespace nsmax
