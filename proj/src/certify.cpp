#include "nsmax/certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace nsmax {

namespace {

constexpr int kMaxBruteForceGround = 12;

void check_brute_force_size(const SetFunction& f, const char* op) {
  if (f.ground_size() > kMaxBruteForceGround) {
    throw std::invalid_argument(std::string(op) + ": ground set too large for brute force (n > " +
                                std::to_string(kMaxBruteForceGround) + ")");
  }
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

RatioCertificate submodularity_ratio_bruteforce(const SetFunction& f, double tol) {
  check_brute_force_size(f, "submodularity_ratio_bruteforce");
  int n = f.ground_size();
  std::vector<double> table = dense_value_table(f);
  std::uint64_t full = (std::uint64_t{1} << n) - 1;

  RatioCertificate cert;
  bool found = false;
  double best = 1.0;
  std::uint64_t best_omega = 0, best_base = 0;

  // The ratio for (Omega, S) only depends on (Omega \ S, S), so scanning
  // disjoint pairs covers every pair of subsets.
  for (std::uint64_t s = 0; s <= full; ++s) {
    std::uint64_t comp = full & ~s;
    for (std::uint64_t omega = comp; omega != 0; omega = (omega - 1) & comp) {
      double den = table[s | omega] - table[s];
      if (den <= tol) continue;
      double num = 0.0;
      for (std::uint64_t rest = omega; rest != 0; rest &= rest - 1) {
        std::uint64_t bit = rest & ~(rest - 1);
        num += table[s | bit] - table[s];
      }
      if (num < -tol) cert.monotone = false;
      double ratio = num / den;
      if (!found || ratio < best) {
        found = true;
        best = ratio;
        best_omega = omega;
        best_base = s;
      }
    }
  }

  cert.gamma = found ? clamp01(best) : 1.0;
  if (found) {
    cert.witness_gamma = GammaWitness{Subset::from_mask(n, best_omega),
                                      Subset::from_mask(n, best_base), best};
  }
  return cert;
}

RatioCertificate generalized_curvature_bruteforce(const SetFunction& f, double tol) {
  check_brute_force_size(f, "generalized_curvature_bruteforce");
  int n = f.ground_size();
  std::vector<double> table = dense_value_table(f);
  std::uint64_t full = (std::uint64_t{1} << n) - 1;

  RatioCertificate cert;
  bool found = false;
  double best = 1.0;
  int best_v = -1;
  std::uint64_t best_a = 0, best_b = 0;

  for (int v = 0; v < n; ++v) {
    std::uint64_t bit = std::uint64_t{1} << v;
    std::uint64_t comp = full & ~bit;
    std::uint64_t b = comp;
    while (true) {
      double den = table[b | bit] - table[b];
      if (den > tol) {
        for (std::uint64_t a = b;; a = (a - 1) & b) {
          double num = table[a | bit] - table[a];
          if (num < -tol) cert.monotone = false;
          double ratio = num / den;
          if (!found || ratio < best) {
            found = true;
            best = ratio;
            best_v = v;
            best_a = a;
            best_b = b;
          }
          if (a == 0) break;
        }
      }
      if (b == 0) break;
      b = (b - 1) & comp;
    }
  }

  cert.alpha = found ? clamp01(1.0 - best) : 0.0;
  if (found) {
    cert.witness_alpha = AlphaWitness{best_v, Subset::from_mask(n, best_a),
                                      Subset::from_mask(n, best_b), best};
  }
  return cert;
}

NonMonotoneCompositionError::NonMonotoneCompositionError(Subset base, int element)
    : std::runtime_error("ds_compose: difference is non-monotone at S=" + base.to_string() +
                         ", v=" + std::to_string(element)),
      base_(std::move(base)),
      element_(element) {}

DsComposition ds_compose(const SetFunction& f1, const SetFunction& f2, double tol) {
  if (f1.ground_size() != f2.ground_size()) {
    throw std::invalid_argument("ds_compose: mismatched ground sets");
  }
  check_brute_force_size(f1, "ds_compose");
  int n = f1.ground_size();
  std::vector<double> t1 = dense_value_table(f1);
  std::vector<double> t2 = dense_value_table(f2);
  std::uint64_t full = (std::uint64_t{1} << n) - 1;

  double alpha_star = 0.0;
  for (std::uint64_t s = 0; s <= full; ++s) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (s & bit) continue;
      double g1 = t1[s | bit] - t1[s];
      double g2 = t2[s | bit] - t2[s];
      if (g2 > g1 + tol) throw NonMonotoneCompositionError(Subset::from_mask(n, s), v);
      if (g1 > tol) alpha_star = std::max(alpha_star, g2 / g1);
    }
  }

  SetFunction g(
      n, [t1 = std::move(t1), t2 = std::move(t2), n](const Subset& s) {
        return t1[s.mask()] - t2[s.mask()];
      },
      true);
  return DsComposition{std::move(g), std::min(1.0, alpha_star)};
}

CounterexamplePair eps_approx_counterexample(double eps, double delta) {
  if (eps < 0.0 || eps > 0.5) throw std::invalid_argument("eps_approx_counterexample: need 0 <= eps <= 1/2");
  if (delta < 0.0 || delta > eps) {
    throw std::invalid_argument("eps_approx_counterexample: need 0 <= delta <= eps");
  }
  auto by_cardinality = [](std::array<double, 4> vals) {
    return [vals](const Subset& s) { return vals[s.size()]; };
  };
  SetFunction g(3, by_cardinality({0.0, 1.0 - eps, 1.0, 1.0 + eps}));
  SetFunction f_delta(3, by_cardinality({0.0, 1.0 - eps, 1.0 - eps + delta, 1.0 + eps}));
  return CounterexamplePair{std::move(g), std::move(f_delta)};
}

}  // namespace nsmax
