#pragma once

#include <optional>
#include <string>

namespace nsmax {

// Approximation factor 0.4 * gamma^2 / (sqrt(gamma * r) + 1) for the standard
// greedy under a rank-r matroid. Requires 0 < gamma <= 1 and r >= 3; ranks
// 1 and 2 are brute-forceable, so r < 3 is rejected with a pointer to
// brute_force_opt.
double bound_weak(double gamma, int rank);

// Rank-independent approximation factor 1 / (1 + 1/(1 - alpha)).
// Requires 0 <= alpha < 1.
double bound_curvature(double alpha);

struct Lemma1Constants {
  double alpha_star = 0.0;  // 1 / (gamma^2 / (2(sqrt(gamma r)+1)) + 1)
  double theta = 0.0;       // sqrt((1/gamma) (log(1/a*) - 1 + a*) / (r a*))
};

// Constants of the geometric-decay recursion K_{t+1} <= (1 - theta) K_t that
// drives the weak-ratio guarantee. Requires 0 < gamma <= 1 and r >= 3.
Lemma1Constants lemma1_constants(double gamma, int rank);

enum class AsymptoticRegime { kSmallProduct, kLargeProduct };

struct RegimeReport {
  AsymptoticRegime regime = AsymptoticRegime::kSmallProduct;
  double product = 0.0;     // gamma * r
  std::string form;         // asymptotic form of the guarantee
};

// Classifies gamma * r against a threshold (boundary counts as large):
// small products give a Omega(gamma^2) guarantee, large ones
// Omega(gamma sqrt(gamma) / sqrt(r)). Informational only.
RegimeReport asymptotic_regime(double gamma, int rank, double threshold = 2.0);

// Submodularity-ratio lower bound r/R for objectives induced by a concave
// function with strong-concavity r and smoothness R, 0 < r <= R.
double ratio_bound_rsc(double strong_concavity, double smoothness);

struct BoundReport {
  double gamma = 1.0;
  double alpha = 0.0;
  int rank = 0;
  std::optional<double> factor_weak;   // present when rank >= 3
  double factor_curv = 0.0;
  std::optional<double> alpha_star;    // present when rank >= 3
  std::optional<double> theta;
};

BoundReport make_bound_report(double gamma, double alpha, int rank);

}  // namespace nsmax
