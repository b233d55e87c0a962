#pragma once

namespace nsmax {

// Q(k, x) = e^{-x} sum_{i<k} x^i / i!, the probability that a Poisson(x)
// count is below k (the regularized upper incomplete gamma at integer k).
// Evaluated in log space, stable for x up to at least 1e4. Requires k >= 1,
// x >= 0.
double regularized_gamma_q(int k, double x);

// G(x) = -sum_{i<k} (k - i) x^i e^{-x} / i!, the antiderivative of Q(k, .):
// G(0) = -k, G' = Q(k, .), G -> 0 as x -> infinity.
double gamma_antiderivative(int k, double x);

}  // namespace nsmax
