#pragma once

#include <complex>
#include <vector>

// Fox H-function machinery for the parameter shapes used by the solver:
// Mellin-Barnes quadrature along vertical contours, the argument-scaling
// property, and the ascending/descending residue series of the Green's
// function similarity kernel.

namespace frdiff::hfox {

struct ParamPair {
  double a;  // shift a_j (resp. b_j)
  double A;  // positive scale A_j (resp. B_j)
};

// H^{m,n}_{p,q}[z | (a_p,A_p); (b_q,B_q)] identified by its orders and
// parameter lists. p and q are implied by the list lengths.
struct HFunctionSpec {
  int m = 0;
  int n = 0;
  std::vector<ParamPair> upper;  // (a_j, A_j), j = 1..p
  std::vector<ParamPair> lower;  // (b_j, B_j), j = 1..q

  int p() const { return static_cast<int>(upper.size()); }
  int q() const { return static_cast<int>(lower.size()); }

  // Checks 0 <= n <= p, 1 <= m <= q, positive scales, and the
  // non-coincidence condition A_i(b_j + k) != B_j(a_i - l - 1) over
  // k, l = 0..40. Throws domain_error.
  void validate() const;

  // Largest pole of the Gamma(b_j + B_j xi) family (left set) and smallest
  // pole of the Gamma(1 - a_j - A_j xi) family (right set). A vertical
  // contour must pass between them.
  double left_pole_max() const;
  double right_pole_min() const;  // +inf when n = 0
};

struct ContourChoice {
  enum class Kind { vertical, left_loop, right_loop };
  Kind kind = Kind::vertical;
  double abscissa = 0.0;    // gamma of the line Re(xi) = gamma
  double half_width = 0.0;  // |Im xi| truncation; 0 = automatic
  int max_level = 9;        // tanh-sinh refinement cap

  static ContourChoice vertical(double abscissa, double half_width = 0.0);
  // Abscissa placed inside the pole-free gap, biased to keep z^{-gamma}
  // moderate.
  static ContourChoice automatic(const HFunctionSpec& spec, double z);
};

// Ratio of gamma products Theta(xi); empty products are 1.
// Throws pole_error when xi sits on a pole of a numerator factor.
std::complex<double> theta(const HFunctionSpec& spec, std::complex<double> xi);

struct Evaluation {
  double value = 0.0;
  double err = 0.0;  // absolute error estimate
};

// (1/2pi i) Int Theta(xi) z^{-xi} dxi along the chosen vertical contour,
// z > 0, by tanh-sinh quadrature of the truncated line. Loop contours are
// not evaluated numerically (their content is the residue series below);
// passing one throws domain_error.
Evaluation evaluate(const HFunctionSpec& spec, double z,
                    const ContourChoice& contour);
Evaluation evaluate(const HFunctionSpec& spec, double z);

// All A_j, B_j divided by d: evaluate(spec, x^d) = (1/d) evaluate(scaled, x).
HFunctionSpec scale_argument(const HFunctionSpec& spec, double d);

// Removes upper/lower parameter pairs that cancel inside Theta (an upper
// pair in the denominator group equal to a lower pair in the numerator
// group, or vice versa). Returns the reduced spec.
HFunctionSpec cancel_matched_pairs(const HFunctionSpec& spec);

// --- instances used by the solver -----------------------------------------

// H-function form of E_{alpha,beta}(-z): H^{1,1}_{1,2}.
HFunctionSpec ml_kernel_spec(double alpha, double beta);

// Similarity kernel K(u) of the delta-initial-data solution: H^{2,1}_{3,3}
// at argument u = |x| / (eta t^beta)^{1/alpha}. The solution itself is
// N(x,t) = t^{beta-1} / (alpha |x|) * K(u).
HFunctionSpec green_kernel_spec(double alpha, double beta);

// beta -> 1 reduction of the kernel (stable-law case): H^{1,1}_{2,2}.
HFunctionSpec stable_kernel_spec(double alpha);

// --- residue series of the similarity kernel ------------------------------
//
// Both series are residue sums of the Mellin-Barnes integrand
//   G(s) = sin(pi s/2) Gamma(1-s) / [ sin(pi s/alpha) Gamma(beta - beta s/alpha) ]
// taken directly from the contour representation of the kernel. Coincident
// or nearly coincident poles (rational alpha) are integrated exactly over a
// small circle enclosing the cluster, so no parameter choice is refused.

// Ascending series in u (residues to the right of the contour). Converges
// for every u when beta < alpha; otherwise asymptotic for small u with a
// certified truncation floor. Throws convergence_error when neither holds
// at the requested point.
Evaluation similarity_series_small(double alpha, double beta, double u,
                                   int max_terms = 400);

// Descending series in v = eta t^beta / |x|^alpha = u^{-alpha} (residues to
// the left). Converges for v < 1 when alpha < beta; otherwise asymptotic
// with a certified floor. Throws convergence_error when the last term is
// not decreasing (v too large for asymptotic validity).
Evaluation similarity_series_large(double alpha, double beta, double v,
                                   int max_terms = 400);

}  // namespace frdiff::hfox
