#include "nsmax/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace nsmax {

namespace {

void check_gamma_rank(double gamma, int rank, const char* op) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::domain_error(std::string(op) + ": gamma must be in (0, 1]");
  }
  if (rank < 3) {
    throw std::domain_error(std::string(op) +
                            ": rank must be >= 3; matroids of rank <= 2 are "
                            "brute-forceable (use brute_force_opt)");
  }
}

}  // namespace

double bound_weak(double gamma, int rank) {
  check_gamma_rank(gamma, rank, "bound_weak");
  return 0.4 * gamma * gamma / (std::sqrt(gamma * rank) + 1.0);
}

double bound_curvature(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::domain_error("bound_curvature: alpha must be in [0, 1)");
  }
  return 1.0 / (1.0 + 1.0 / (1.0 - alpha));
}

Lemma1Constants lemma1_constants(double gamma, int rank) {
  check_gamma_rank(gamma, rank, "lemma1_constants");
  double alpha_star = 1.0 / (gamma * gamma / (2.0 * (std::sqrt(gamma * rank) + 1.0)) + 1.0);
  double theta =
      std::sqrt((1.0 / gamma) * (std::log(1.0 / alpha_star) - 1.0 + alpha_star) /
                (rank * alpha_star));
  return {alpha_star, theta};
}

RegimeReport asymptotic_regime(double gamma, int rank, double threshold) {
  if (!(gamma > 0.0 && gamma <= 1.0) || rank < 1) {
    throw std::domain_error("asymptotic_regime: need gamma in (0, 1] and rank >= 1");
  }
  RegimeReport report;
  report.product = gamma * rank;
  if (report.product < threshold) {
    report.regime = AsymptoticRegime::kSmallProduct;
    report.form = "gamma*r small: Omega(gamma^2)";
  } else {
    report.regime = AsymptoticRegime::kLargeProduct;
    report.form = "gamma*r large: Omega(gamma*sqrt(gamma)/sqrt(r))";
  }
  return report;
}

double ratio_bound_rsc(double strong_concavity, double smoothness) {
  if (!(strong_concavity > 0.0) || !(smoothness >= strong_concavity)) {
    throw std::domain_error("ratio_bound_rsc: need 0 < r <= R");
  }
  return strong_concavity / smoothness;
}

BoundReport make_bound_report(double gamma, double alpha, int rank) {
  BoundReport report;
  report.gamma = gamma;
  report.alpha = alpha;
  report.rank = rank;
  report.factor_curv = alpha < 1.0 ? bound_curvature(alpha) : 0.0;
  if (rank >= 3 && gamma > 0.0) {
    report.factor_weak = bound_weak(gamma, rank);
    Lemma1Constants c = lemma1_constants(gamma, rank);
    report.alpha_star = c.alpha_star;
    report.theta = c.theta;
  }
  return report;
}

}  // namespace nsmax
