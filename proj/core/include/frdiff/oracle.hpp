#pragma once

#include <complex>
#include <functional>

// Brute-force verification routes. Deliberately slow, independently coded,
// and certified: these generate the reference values the closed-form routes
// are tested against.

namespace frdiff::oracle {

using LaplaceTransform =
    std::function<std::complex<double>(std::complex<double>)>;

// Bromwich integral by the fixed Talbot contour (Abate & Valko), certified
// by node doubling. `nodes` is the starting node count. Throws
// convergence_error when doubling does not settle to ~1e-10.
double invert_laplace(const LaplaceTransform& fhat, double t, int nodes = 36,
                      double* err_out = nullptr);

// (1/pi) Int_0^inf cos(k x) symbol(k) dk for an even, bounded, algebraically
// decaying symbol: zero-partitioned adaptive-Simpson panels with iterated
// averaging (Euler transformation) of the alternating partial sums.
// Throws convergence_error when the tail decays slower than ~k^{-0.3}.
double inverse_cosine(const std::function<double(double)>& symbol, double x,
                      double tol, double* err_out = nullptr);

// Defining Mittag-Leffler series with compensated summation and a certified
// error bound (rounding + truncation). Requires |z| <= 30; throws
// overflow_error when the bound cannot reach `target`.
double ml_series(double alpha, double beta, double z, double target = 1e-12);

}  // namespace frdiff::oracle
