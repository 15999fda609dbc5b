#include "frdiff/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "frdiff/errors.hpp"

namespace frdiff::quad {

void CompensatedSum::add(double x) {
  // Neumaier variant of Kahan summation
  double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
  abs_sum_ += std::fabs(x);
  ++n_;
}

double CompensatedSum::error_bound() const {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double ne = static_cast<double>(n_) * eps;
  return eps * std::fabs(value()) + ne * ne * abs_sum_;
}

// ---------------------------------------------------------------------------

namespace {

struct Rule {
  std::vector<double> x;  // nodes on [0, 1] upper half (symmetric rule)
  std::vector<double> w;
};

// Legendre nodes by Newton iteration on P_n (standard construction).
Rule make_gauss_rule(int n) {
  Rule r;
  int half = (n + 1) / 2;
  r.x.resize(half);
  r.w.resize(half);
  for (int i = 0; i < half; ++i) {
    double xg = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * xg * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (xg * p0 - p1) / (xg * xg - 1.0);
      double dx = p0 / pp;
      xg -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    r.x[i] = xg;
    r.w[i] = 2.0 / ((1.0 - xg * xg) * pp * pp);
  }
  return r;
}

const Rule& gauss_rule(int n) {
  static std::map<int, Rule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_rule(n)).first;
  return it->second;
}

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int order) {
  const Rule& r = gauss_rule(order);
  double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  CompensatedSum s;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    s.add(r.w[i] * f(c + hw * r.x[i]));
    if (r.x[i] > 1e-14)  // mirror node; x = 0 (odd order) counted once
      s.add(r.w[i] * f(c - hw * r.x[i]));
  }
  return s.value() * hw;
}

QuadResult tanh_sinh(const std::function<double(double)>& f, double a,
                     double b, double tol, int max_level) {
  // t = (b+a)/2 + (b-a)/2 * tanh((pi/2) sinh(w)), trapezoid in w with level
  // doubling; nodes whose weight has underflowed are skipped.
  const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  constexpr double kPiHalf = 1.57079632679489661923;
  auto eval_level = [&](double h, bool odd_only, CompensatedSum& s) {
    int jmax = static_cast<int>(std::ceil(4.0 / h));
    for (int j = odd_only ? 1 : 0; j <= jmax; j += odd_only ? 2 : 1) {
      for (int sign = (j == 0 ? 0 : -1); sign <= 1; sign += 2) {
        double w = (j == 0) ? 0.0 : sign * j * h;
        double sh = kPiHalf * std::sinh(w);
        double ch = std::cosh(w);
        double sech = 1.0 / std::cosh(sh);
        double weight = kPiHalf * ch * sech * sech;
        if (weight < 1e-300) continue;
        double t = c + hw * std::tanh(sh);
        s.add(weight * f(t));
        if (j == 0) break;
      }
    }
  };
  double h = 0.5;
  CompensatedSum acc;
  eval_level(h, false, acc);
  double prev = acc.value() * h * hw;
  QuadResult out{prev, std::numeric_limits<double>::infinity()};
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    eval_level(h, true, acc);
    double cur = acc.value() * h * hw;
    out.err = std::fabs(cur - prev);
    out.value = cur;
    if (level >= 3 && out.err <= tol) break;
    prev = cur;
  }
  return out;
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a,
                    double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth) {
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double EpsilonTable::push(double s) {
  // Wynn's recurrence over the rolling anti-diagonal.
  std::vector<double> next(diag_.size() + 1);
  next[0] = s;
  double prev_lower = 0.0;  // epsilon_{-1} = 0
  for (std::size_t k = 1; k < next.size(); ++k) {
    double denom = next[k - 1] - diag_[k - 1];
    if (std::fabs(denom) < 1e-300) {
      next[k] = std::numeric_limits<double>::max();  // poison odd entry
    } else {
      next[k] = prev_lower + 1.0 / denom;
    }
    prev_lower = diag_[k - 1];
  }
  diag_ = std::move(next);
  // deepest finite even-column entry on the new diagonal
  double candidate = s;
  for (std::size_t k = (diag_.size() - 1) - ((diag_.size() - 1) % 2);;
       k -= 2) {
    if (std::isfinite(diag_[k]) &&
        std::fabs(diag_[k]) < std::numeric_limits<double>::max()) {
      candidate = diag_[k];
      break;
    }
    if (k < 2) break;
  }
  last_delta_ = std::fabs(candidate - best_);
  best_ = candidate;
  return best_;
}

}  // namespace frdiff::quad
