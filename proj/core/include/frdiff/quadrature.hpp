#pragma once

#include <cstddef>
#include <functional>
#include <vector>

// Small quadrature/summation toolbox shared by the evaluation routes.

namespace frdiff::quad {

// Neumaier-compensated accumulator. Also tracks sum of |terms| so callers
// can bound the cancellation error of ill-conditioned alternating sums.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }
  double abs_sum() const { return abs_sum_; }
  std::size_t count() const { return n_; }
  // First-order bound on the accumulated floating-point error.
  double error_bound() const;

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_sum_ = 0.0;
  std::size_t n_ = 0;
};

struct QuadResult {
  double value = 0.0;
  double err = 0.0;  // absolute error estimate
};

// Gauss-Legendre rule on [a, b]; nodes computed once per order and cached.
double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int order);

// Tanh-sinh (double-exponential) quadrature on a finite interval with level
// doubling until |I_l - I_{l-1}| <= tol or max_level is reached.
QuadResult tanh_sinh(const std::function<double(double)>& f, double a,
                     double b, double tol, int max_level = 9);

// Recursive adaptive Simpson (used by the brute-force oracles).
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 28);

// Wynn epsilon algorithm over a stream of partial sums. push() returns the
// current best extrapolation (highest stable even column).
class EpsilonTable {
 public:
  double push(double partial_sum);
  double best() const { return best_; }
  // |change of the extrapolate on the last push|; crude convergence signal.
  double last_delta() const { return last_delta_; }

 private:
  std::vector<double> diag_;  // rolling anti-diagonal of the epsilon table
  double best_ = 0.0;
  double last_delta_ = 0.0;
};

}  // namespace frdiff::quad
