#include "nsmax/poisson_tail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nsmax {

namespace {

void check_domain(int k, double x, const char* op) {
  if (k < 1) throw std::domain_error(std::string(op) + ": k must be >= 1");
  if (!(x >= 0.0)) throw std::domain_error(std::string(op) + ": x must be >= 0");
}

// log-sum-exp of log_weight[i] + i*log(x) - x - lgamma(i+1) over i < k, where
// log_weight is supplied per term. Anchoring at the largest exponent keeps the
// sum finite even when e^{-x} alone would underflow.
template <typename LogWeight>
double weighted_poisson_sum(int k, double x, LogWeight log_weight) {
  if (x == 0.0) return std::exp(log_weight(0));
  double log_x = std::log(x);
  double max_exponent = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < k; ++i) {
    double e = log_weight(i) + i * log_x - x - std::lgamma(i + 1.0);
    if (e > max_exponent) max_exponent = e;
  }
  if (max_exponent == -std::numeric_limits<double>::infinity()) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    double e = log_weight(i) + i * log_x - x - std::lgamma(i + 1.0);
    sum += std::exp(e - max_exponent);
  }
  return sum * std::exp(max_exponent);
}

}  // namespace

double regularized_gamma_q(int k, double x) {
  check_domain(k, x, "regularized_gamma_q");
  double q = weighted_poisson_sum(k, x, [](int) { return 0.0; });
  return std::min(1.0, q);
}

double gamma_antiderivative(int k, double x) {
  check_domain(k, x, "gamma_antiderivative");
  double s = weighted_poisson_sum(k, x, [k](int i) { return std::log(double(k - i)); });
  return -s;
}

}  // namespace nsmax
