#include "nsmax/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace nsmax {

IntensityProfile::IntensityProfile(double period, std::vector<double> breakpoints,
                                   std::vector<double> values)
    : period_(period), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (!(period_ > 0.0)) throw std::invalid_argument("IntensityProfile: period must be positive");
  if (breakpoints_.empty() || breakpoints_.size() != values_.size()) {
    throw std::invalid_argument("IntensityProfile: breakpoints and values must be non-empty and aligned");
  }
  if (breakpoints_.front() != 0.0) {
    throw std::invalid_argument("IntensityProfile: first breakpoint must be 0");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw std::invalid_argument("IntensityProfile: breakpoints must be strictly ascending");
    }
  }
  if (breakpoints_.back() >= period_) {
    throw std::invalid_argument("IntensityProfile: breakpoints must lie in [0, period)");
  }
  for (double v : values_) {
    if (!(v >= 0.0)) throw std::invalid_argument("IntensityProfile: rates must be nonnegative");
  }
  prefix_.resize(breakpoints_.size() + 1, 0.0);
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    double piece_end = (i + 1 < breakpoints_.size()) ? breakpoints_[i + 1] : period_;
    prefix_[i + 1] = prefix_[i] + values_[i] * (piece_end - breakpoints_[i]);
  }
  period_total_ = prefix_.back();
}

IntensityProfile IntensityProfile::constant(double rate) {
  return IntensityProfile(1.0, {0.0}, {rate});
}

double IntensityProfile::wrap(double t) const {
  double w = std::fmod(t, period_);
  if (w < 0.0) w += period_;
  return w;
}

double IntensityProfile::value_at(double t) const {
  double w = wrap(t);
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), w);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double IntensityProfile::integrate(double a, double b) const {
  if (a > b) throw std::invalid_argument("IntensityProfile::integrate: a > b");
  auto antiderivative = [this](double t) {
    double cycles = std::floor(t / period_);
    double w = t - cycles * period_;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), w);
    std::size_t piece = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return cycles * period_total_ + prefix_[piece] + values_[piece] * (w - breakpoints_[piece]);
  };
  return antiderivative(b) - antiderivative(a);
}

double IntensityProfile::sup(double a, double b) const {
  if (a > b) throw std::invalid_argument("IntensityProfile::sup: a > b");
  if (b - a >= period_) return *std::max_element(values_.begin(), values_.end());
  double best = value_at(a);
  double wa = wrap(a);
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    // Piece i is visited iff its start enters the window (a, b].
    double offset = breakpoints_[i] - wa;
    if (offset <= 0.0) offset += period_;
    if (a + offset <= b) best = std::max(best, values_[i]);
  }
  return best;
}

double IntensityProfile::inf(double a, double b) const {
  if (a > b) throw std::invalid_argument("IntensityProfile::inf: a > b");
  if (b - a >= period_) return *std::min_element(values_.begin(), values_.end());
  double best = value_at(a);
  double wa = wrap(a);
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    double offset = breakpoints_[i] - wa;
    if (offset <= 0.0) offset += period_;
    if (a + offset <= b) best = std::min(best, values_[i]);
  }
  return best;
}

double cumulative_intensity(const IntensityProfile& lambda, double tau, double t) {
  if (tau > t) throw std::invalid_argument("cumulative_intensity: tau > t");
  return lambda.integrate(tau, t);
}

void RateGrid::finalize() {
  cumulative_.assign(knots.size(), 0.0);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    cumulative_[i + 1] = cumulative_[i] + (mu[i] + gamma[i]) * (knots[i + 1] - knots[i]);
  }
}

double RateGrid::cumulative_at(double t) const {
  auto it = std::upper_bound(knots.begin(), knots.end(), t);
  std::size_t piece = std::min<std::size_t>(static_cast<std::size_t>(it - knots.begin()),
                                            knots.size() - 1);
  if (piece == 0) return 0.0;
  --piece;
  return cumulative_[piece] + (mu[piece] + gamma[piece]) * (t - knots[piece]);
}

RateGrid build_rate_grid(const std::vector<const IntensityProfile*>& mu_profiles,
                         const IntensityProfile& gamma_profile, double end) {
  if (!(end >= 0.0)) throw std::invalid_argument("build_rate_grid: negative end time");
  std::set<double> knot_set = {0.0, end};
  auto add_profile_knots = [&](const IntensityProfile& p) {
    if (p.values().size() == 1) return;  // constant, no interior knots needed
    for (double base = 0.0; base < end; base += p.period()) {
      for (double b : p.breakpoints()) {
        double t = base + b;
        if (t > 0.0 && t < end) knot_set.insert(t);
      }
    }
  };
  for (const IntensityProfile* p : mu_profiles) add_profile_knots(*p);
  add_profile_knots(gamma_profile);

  RateGrid grid;
  grid.knots.assign(knot_set.begin(), knot_set.end());
  std::size_t pieces = grid.knots.size() - 1;
  grid.mu.resize(pieces);
  grid.gamma.resize(pieces);
  for (std::size_t i = 0; i < pieces; ++i) {
    double mid = 0.5 * (grid.knots[i] + grid.knots[i + 1]);
    double mu_total = 0.0;
    for (const IntensityProfile* p : mu_profiles) mu_total += p->value_at(mid);
    grid.mu[i] = mu_total;
    grid.gamma[i] = gamma_profile.value_at(mid);
  }
  grid.finalize();
  return grid;
}

}  // namespace nsmax
