#pragma once

#include "frdiff/solver.hpp"

// Fractional-order moments <|x|^delta> of the delta-initial-data solution:
// the closed gamma-ratio form, its delta -> 0 and (delta, alpha) -> (2, 2)
// limits, and the direct quadrature counterpart with tail correction.

namespace frdiff::moments {

struct MomentQuery {
  double delta;  // moment order, -1 < delta < alpha (any delta at alpha = 2)
  double alpha;
  double beta;
  double eta;
  double t;
  void validate() const;
};

// (2/alpha) eta^{d/a} t^{beta(d/a) + beta - 1}
//   * Gamma(-d/a) Gamma(1+d) Gamma(1+d/a)
//   / [Gamma(-d/2) Gamma(beta + beta d/a) Gamma(1+d/2)],
// assembled from gamma() of the numerator entries and reciprocal_gamma() of
// the denominator entries so the -d/a vs -d/2 pole pair cancels stably.
// Throws pole_error at delta = 0 (use limit_zero) and at gamma poles.
double closed_form(const MomentQuery& q);

// delta -> 0 limit: t^{beta-1}/Gamma(beta). (alpha, eta enter the query for
// interface symmetry only; the limit does not depend on them.)
double limit_zero(double alpha, double beta, double eta, double t);

// (delta, alpha) = (2, 2) limit: 2 eta t^{2 beta - 1} / Gamma(2 beta).
double msd_classical(double beta, double eta, double t);

// Int |x|^delta N dx over the field's grid plus an algebraic tail
// correction from a single-power fit over the outermost decade. Requires a
// symmetric field and delta < alpha (any delta at alpha = 2, where the tail
// decays faster than any power). Throws numerical_error when the outer
// decade is not in the asymptotic regime.
double quadrature(const solver::SolutionField& field, double delta);

}  // namespace frdiff::moments
