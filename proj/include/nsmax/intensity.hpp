#pragma once

#include <vector>

namespace nsmax {

// Periodic piecewise-constant rate function: `values[i]` events per day on
// [breakpoints[i], breakpoints[i+1]) within one period, extended periodically.
// breakpoints[0] must be 0 and breakpoints must be strictly ascending in
// [0, period).
class IntensityProfile {
 public:
  IntensityProfile(double period, std::vector<double> breakpoints, std::vector<double> values);

  static IntensityProfile constant(double rate);

  double period() const { return period_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }

  double value_at(double t) const;

  // Exact integral over [a, b], a <= b.
  double integrate(double a, double b) const;

  // Exact sup / inf over the window [a, b] (a < b; degenerate windows take
  // the pointwise value).
  double sup(double a, double b) const;
  double inf(double a, double b) const;

 private:
  double wrap(double t) const;

  double period_;
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<double> prefix_;  // integral from 0 to breakpoints_[i]
  double period_total_;
};

// J(lambda, tau, t) = integral of lambda over [tau, t]; requires tau <= t.
double cumulative_intensity(const IntensityProfile& lambda, double tau, double t);

// A non-periodic step-function view of summed profiles on [0, end]: knots
// t_0 = 0 < ... < t_m = end with per-piece broadcaster (mu) and feed (gamma)
// rates. This is the grid all closed-form visibility computations run on.
struct RateGrid {
  std::vector<double> knots;   // size m+1
  std::vector<double> mu;      // size m
  std::vector<double> gamma;   // size m

  int pieces() const { return static_cast<int>(mu.size()); }
  double total_rate(int piece) const { return mu[piece] + gamma[piece]; }

  // Integral of mu + gamma over [0, knots[i]].
  const std::vector<double>& cumulative() const { return cumulative_; }
  void finalize();  // recomputes the cumulative sums

  // Integral of mu + gamma over [0, t], t in [0, end].
  double cumulative_at(double t) const;

 private:
  std::vector<double> cumulative_;
};

RateGrid build_rate_grid(const std::vector<const IntensityProfile*>& mu_profiles,
                         const IntensityProfile& gamma_profile, double end);

}  // namespace nsmax
