#pragma once

#include <complex>

// Scalar special-function building blocks: real gamma / reciprocal gamma,
// complex log-gamma, and the two-parameter Mittag-Leffler function
// E_{a,b}(z) = sum_n z^n / Gamma(a n + b) on the non-positive real axis.

namespace frdiff::special {

// sin(pi*x) / cos(pi*x) with exact argument reduction; accurate for large |x|
// where sin(M_PI*x) has already lost digits.
double sin_pi(double x);
double cos_pi(double x);

// Gamma(x) for real x. Throws pole_error at non-positive integers and
// overflow_error for x > 171.624 (where Gamma exceeds the double range).
// Relative error a few ulp on |x| <= 170.
double gamma(double x);

// 1/Gamma(x). Entire; returns exactly 0 at non-positive integers.
double reciprocal_gamma(double x);

// Principal-branch log Gamma(z) for complex z (Lanczos plus reflection).
// The imaginary part is only meaningful modulo 2*pi (callers exponentiate).
std::complex<double> log_gamma(std::complex<double> z);

// log(sin(pi z)) without overflow for large |Im z|; imaginary part mod 2*pi.
std::complex<double> log_sin_pi(std::complex<double> z);

struct MLQuery {
  double alpha;  // order, in (0, 2]
  double beta;   // order, in (0, 3]
  double z;      // argument, z <= 0
  void validate() const;  // throws domain_error
};

// E_{alpha,beta}(z) for z <= 0 with absolute error <= 1e-10.
//
// Internally selects between the defining series (|z| <= 1), quadrature of
// the Hankel representation 1/Gamma(s) = (1/2pi i) Int e^w w^{-s} dw along a
// parabolic contour (mid range), and the algebraic asymptotic series plus
// the exact oscillatory-exponential residue terms (large |z|, certified by
// optimal truncation).
double mittag_leffler(const MLQuery& q);
double mittag_leffler(double alpha, double beta, double z);

}  // namespace frdiff::special
