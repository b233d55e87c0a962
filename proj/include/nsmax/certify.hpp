#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "nsmax/set_function.hpp"
#include "nsmax/subset.hpp"

namespace nsmax {

struct GammaWitness {
  Subset omega;  // disjoint increment whose singleton gains sum to the numerator
  Subset base;   // context set S
  double ratio = 1.0;
};

struct AlphaWitness {
  int element = -1;
  Subset small;  // A
  Subset large;  // B, with A subseteq B and element outside B
  double ratio = 1.0;  // rho_v(A) / rho_v(B), so alpha = 1 - ratio
};

// Brute-force certificate for the submodularity ratio gamma and/or the
// generalized curvature alpha, with the extremal witnesses.
struct RatioCertificate {
  double gamma = 1.0;
  double alpha = 0.0;
  std::optional<GammaWitness> witness_gamma;
  std::optional<AlphaWitness> witness_alpha;
  bool monotone = true;
};

// gamma = min over (Omega, S) with rho_Omega(S) > tol of
// sum_{v in Omega \ S} rho_v(S) / rho_Omega(S), clamped to [0, 1]; 1 if no
// pair qualifies. A negative numerator (non-monotone input) clears the
// monotone flag and clamps gamma at 0. Requires ground size <= 12.
RatioCertificate submodularity_ratio_bruteforce(const SetFunction& f, double tol = kZeroGainTol);

// 1 - alpha = min over (v, A subseteq B subseteq V\{v}) with rho_v(B) > tol of
// rho_v(A) / rho_v(B), clamped to [0, 1]; alpha = 0 if no triple qualifies.
// Requires ground size <= 12.
RatioCertificate generalized_curvature_bruteforce(const SetFunction& f, double tol = kZeroGainTol);

class NonMonotoneCompositionError : public std::runtime_error {
 public:
  NonMonotoneCompositionError(Subset base, int element);
  const Subset& base() const { return base_; }
  int element() const { return element_; }

 private:
  Subset base_;
  int element_;
};

struct DsComposition {
  SetFunction difference;  // G = f1 - f2, normalized
  double alpha_star = 0.0;  // max over rho^{f1}_v(S) > tol of rho^{f2}_v(S)/rho^{f1}_v(S)
};

// Difference-of-submodular construction. Throws NonMonotoneCompositionError
// with the violating (S, v) whenever some rho^{f2}_v(S) > rho^{f1}_v(S) + tol,
// i.e. whenever G would be non-monotone (alpha_star would exceed 1).
// Requires ground size <= 12 for the certification scan.
DsComposition ds_compose(const SetFunction& f1, const SetFunction& f2, double tol = kZeroGainTol);

// The two cardinality-valued functions of the epsilon-approximate-submodularity
// counterexample on a 3-element ground set: g is submodular with values
// (0, 1-eps, 1, 1+eps) by cardinality and f_delta = (0, 1-eps, 1-eps+delta,
// 1+eps) is sandwiched by (1 +- eps) g while its curvature approaches 1 as
// delta -> 0. Requires 0 <= eps <= 1/2 and 0 <= delta <= eps.
struct CounterexamplePair {
  SetFunction g;
  SetFunction f_delta;
};
CounterexamplePair eps_approx_counterexample(double eps, double delta);

}  // namespace nsmax
