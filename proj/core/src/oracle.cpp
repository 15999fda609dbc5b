#include "frdiff/oracle.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "frdiff/errors.hpp"
#include "frdiff/quadrature.hpp"

namespace frdiff::oracle {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

// ---------------------------------------------------------------------------
// Fixed Talbot contour (Abate & Valko): s(th) = r th (cot th + i), r = 2N/5t,
//   f(t) ~= (r/N) [ e^{rt} F(r)/2 + sum_k Re( e^{t s(th_k)} F(s(th_k))
//                                             (1 + i sigma(th_k)) ) ].
double invert_laplace(const LaplaceTransform& fhat, double t, int nodes,
                      double* err_out) {
  if (!(t > 0.0)) throw domain_error("invert_laplace: t must be > 0");
  if (nodes < 8) nodes = 8;

  auto talbot = [&](int n) -> double {
    double r = 2.0 * n / (5.0 * t);
    quad::CompensatedSum s;
    s.add(0.5 * std::exp(r * t) * fhat(std::complex<double>(r, 0.0)).real());
    for (int k = 1; k < n; ++k) {
      double th = k * kPi / n;
      double cot = std::cos(th) / std::sin(th);
      std::complex<double> sk(r * th * cot, r * th);
      double sigma = th + (th * cot - 1.0) * cot;
      std::complex<double> term =
          std::exp(t * sk) * fhat(sk) * std::complex<double>(1.0, sigma);
      s.add(term.real());
    }
    return s.value() * r / t / n * t;  // (r/n) * sum
  };

  double prev = talbot(nodes);
  double best = prev;
  double err = std::numeric_limits<double>::infinity();
  for (int n = 2 * nodes; n <= 32 * nodes; n *= 2) {
    best = talbot(n);
    err = std::fabs(best - prev);
    double scale = std::max(1.0, std::fabs(best));
    if (err <= 1e-11 * scale) {
      if (err_out) *err_out = err;
      return best;
    }
    prev = best;
  }
  if (err_out) *err_out = err;
  if (err > 1e-8 * std::max(1.0, std::fabs(best)))
    throw convergence_error(
        "invert_laplace: node-doubling did not converge (err=" +
        std::to_string(err) + ")");
  return best;
}

// ---------------------------------------------------------------------------
// Brute-force inverse cosine transform.

namespace {

// Iterated averaging (Euler transformation) of a sequence of partial sums.
double euler_average(const std::vector<double>& partial, double* delta_out) {
  std::vector<double> row = partial;
  double prev_diag = row.back();
  double diag = prev_diag;
  while (row.size() > 1) {
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
    prev_diag = diag;
    diag = row.back();
  }
  if (delta_out) *delta_out = std::fabs(diag - prev_diag);
  return diag;
}

}  // namespace

double inverse_cosine(const std::function<double(double)>& symbol, double x,
                      double tol, double* err_out) {
  x = std::fabs(x);
  if (!(tol > 0.0)) throw domain_error("inverse_cosine: tol must be > 0");
  auto f = [&](double k) { return std::cos(k * x) * symbol(k); };

  // Establish the scale on which the symbol lives.
  double s0 = std::fabs(symbol(0.0)) + std::fabs(symbol(1.0));
  if (s0 == 0.0) s0 = 1.0;

  const double first_zero =
      (x > 0.0) ? 0.5 * kPi / x : std::numeric_limits<double>::infinity();

  // Monotone path: no cosine zero inside the numerically relevant range.
  // Dyadic panels out to where the integrand is negligible, then a fitted
  // power tail.
  double k_hi = 1.0;
  while (k_hi < 1e7 && std::fabs(symbol(k_hi)) > 1e-18 * s0) k_hi *= 2.0;
  if (first_zero >= k_hi) {
    quad::CompensatedSum total;
    double lo = 0.0, hi = std::min(1.0, k_hi);
    double last_panel = 0.0, prev_panel = 0.0;
    double last_lo = 0.0;
    while (lo < k_hi) {
      double panel = quad::adaptive_simpson(f, lo, hi, tol * 1e-3);
      total.add(panel);
      prev_panel = last_panel;
      last_panel = panel;
      last_lo = lo;
      lo = hi;
      hi = std::min(2.0 * hi, k_hi);
      if (hi <= lo) break;
    }
    // power-law tail: dyadic panels of k^{-p} shrink by 2^{1-p}
    double tail = 0.0;
    if (std::fabs(symbol(k_hi)) > 1e-16 * s0 && prev_panel != 0.0 &&
        last_lo > 0.0) {
      double rho = last_panel / prev_panel;
      if (std::fabs(rho) >= 0.95)
        throw convergence_error(
            "inverse_cosine: symbol decays too slowly for tail extrapolation");
      if (std::fabs(rho) > 1e-3) tail = last_panel * rho / (1.0 - rho);
    }
    total.add(tail);
    if (err_out) *err_out = std::fabs(tail) * 0.1 + tol * 0.1;
    return total.value() / kPi;
  }

  // Oscillatory path: panels between consecutive zeros of cos(kx),
  // averaged partial sums for the alternating tail.
  std::vector<double> partial;
  quad::CompensatedSum run;
  // head [0, first zero); subdivide if the symbol scale is much finer
  {
    int sub = 1;
    double scale_k = 1.0;
    while (scale_k * 2.0 < first_zero && sub < 64) {
      scale_k *= 2.0;
      ++sub;
    }
    double lo = 0.0;
    for (int i = sub; i >= 1; --i) {
      double hi = first_zero / std::pow(2.0, i - 1);
      run.add(quad::adaptive_simpson(f, lo, hi, tol * 1e-3));
      lo = hi;
    }
  }
  partial.push_back(run.value());

  const int max_panels = 400;
  double best = partial.back(), best_delta = std::numeric_limits<double>::max();
  std::vector<double> mags;
  for (int j = 1; j <= max_panels; ++j) {
    double lo = (j - 0.5) * kPi / x;
    double hi = (j + 0.5) * kPi / x;
    double panel = quad::adaptive_simpson(f, lo, hi, tol * 1e-3);
    run.add(panel);
    partial.push_back(run.value());
    mags.push_back(std::fabs(panel));
    if (partial.size() >= 6) {
      double delta = 0.0;
      double acc = euler_average(partial, &delta);
      if (delta < best_delta) {
        best_delta = delta;
        best = acc;
      }
      if (delta <= 0.25 * tol && j >= 8) {
        if (err_out) *err_out = delta;
        return best / kPi;
      }
    }
  }
  // Did the panel magnitudes decay at all?
  if (mags.size() > 16) {
    double p = std::log(mags[mags.size() / 4] /
                        (mags.back() + 1e-300)) /
               std::log(double(mags.size()) / (mags.size() / 4 + 1.0));
    if (p < 0.3)
      throw convergence_error(
          "inverse_cosine: acceleration failure, tail decay slower than "
          "k^-0.3");
  }
  if (best_delta > tol)
    throw convergence_error("inverse_cosine: did not reach tolerance " +
                            std::to_string(tol));
  if (err_out) *err_out = best_delta;
  return best / kPi;
}

// ---------------------------------------------------------------------------

double ml_series(double alpha, double beta, double z, double target) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw domain_error("ml_series: orders must be positive");
  if (std::fabs(z) > 30.0)
    throw overflow_error("ml_series: |z| > 30 exceeds the certified range");
  if (!(target > 0.0)) throw domain_error("ml_series: bad target");

  quad::CompensatedSum s;
  double log_az = (z == 0.0) ? -std::numeric_limits<double>::infinity()
                             : std::log(std::fabs(z));
  double omitted = 0.0;
  bool done = false;
  for (int n = 0; n < 4000; ++n) {
    double lt = n * log_az - std::lgamma(alpha * n + beta);
    if (lt > 700.0)
      throw overflow_error("ml_series: term overflow, cancellation fatal");
    double mag = std::exp(lt);
    double term = (z < 0.0 && n % 2 == 1) ? -mag : mag;
    s.add(term);
    // stop once terms are both past their peak and tiny
    if (n > 2 && mag < 0.1 * target &&
        alpha * n + beta > std::fabs(z)) {  // crude peak bound
      omitted = mag;
      done = true;
      break;
    }
    if (z == 0.0) {
      done = true;
      break;
    }
  }
  if (!done) throw convergence_error("ml_series: term cap reached");
  double certified = s.error_bound() + 2.0 * omitted +
                     std::numeric_limits<double>::epsilon() * s.abs_sum();
  if (certified > target)
    throw overflow_error(
        "ml_series: certified error " + std::to_string(certified) +
        " exceeds target (cancellation/overflow regime)");
  return s.value();
}

}  // namespace frdiff::oracle
