#pragma once

#include <complex>
#include <string>
#include <vector>

// Green's functions and the full spectral solver of the space-time
// fractional diffusion problem
//   D_t^beta N = eta D_x^alpha N + phi,  -|k|^alpha spatial symbol,
// with Riemann-Liouville initial data of orders beta-1 (f) and beta-2 (g).

namespace frdiff::solver {

struct GreensQuery {
  double alpha;  // space order, (0, 2]
  double beta;   // time order, (0, 2]
  double eta;    // diffusion coefficient, > 0
  double x;      // position
  double t;      // time, > 0
  void validate() const;
  // similarity variable u = |x| / (eta t^beta)^{1/alpha}
  double similarity() const;
};

enum class Method { cosine_quadrature, mellin_barnes, series, spectral };
std::string method_name(Method m);

struct GreenValue {
  double value = 0.0;
  double err = 0.0;
  Method method = Method::series;
};

// Initial-data propagator: t^{beta-1}/pi Int_0^inf cos(kx) E_{b,b}(-eta
// k^alpha t^beta) dk, by zero-partitioned Gauss panels with Wynn-epsilon
// acceleration of the alternating partial sums. beta in (0, 2].
double green_initial(const GreensQuery& q, double* err_out = nullptr);

// Source propagator: same integral without the t^{beta-1} factor.
double green_source(const GreensQuery& q, double* err_out = nullptr);

// Delta-initial-data solution (0 < beta <= 1), route-dispatched between the
// residue series, Mellin-Barnes quadrature, and the cosine route; reports
// which route produced the value.
GreenValue green_delta(const GreensQuery& q);
GreenValue green_delta(const GreensQuery& q, Method force);

// Cosine transform of the H-function kernel: the same quantity as
// green_source but with the integrand evaluated through the Mellin-Barnes
// route instead of the Mittag-Leffler form.
double green_delta_cosine_hfun(const GreensQuery& q, double* err_out = nullptr);

struct Model {
  double alpha;
  double beta;
  double eta;
};

// One Fourier mode of the solution at time t:
//   N^(k,t) = f^ t^{beta-1} E_{beta,beta}(-eta|k|^alpha t^beta)
//           + g^ t^{beta-2} E_{beta,beta-1}(-eta|k|^alpha t^beta),
// the g^ term only for beta > 1.
std::complex<double> mode_evolution(double k, double t, const Model& model,
                                    std::complex<double> f_mode,
                                    std::complex<double> g_mode = 0.0);

struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  std::size_t count = 0;  // power of two
  double step() const { return (x_max - x_min) / static_cast<double>(count); }
  double node(std::size_t j) const { return x_min + step() * static_cast<double>(j); }
};

struct Scenario {
  Model model{};
  Grid grid{};
  std::vector<double> f;  // order beta-1 initial data on the grid
  std::vector<double> g;  // order beta-2 initial data; only for beta > 1
  // Source samples phi(x_j, tau_i): phi_samples[i][j] at time phi_times[i].
  std::vector<double> phi_times;
  std::vector<std::vector<double>> phi_samples;
  double t_end = 0.0;

  void validate() const;  // grid/boundary-decay/shape checks
  bool has_source() const;
};

struct SolutionField {
  Grid grid{};
  Model model{};
  double t = 0.0;
  std::vector<double> values;
  Method method = Method::spectral;
  double err_estimate = 0.0;
};

// Full solution on the grid: forward transform of f and g, per-mode
// evolution, the ksi^{beta-1}-weighted source convolution by
// product-integration quadrature, inverse transform.
SolutionField solve_scenario(const Scenario& s);

// Discrete realization of the continuous transform pair used above
// (exposed for the wiring tests): forward[m] = h sum_j f_j e^{i k_m x_j}.
std::vector<std::complex<double>> forward_modes(const Grid& grid,
                                                const std::vector<double>& f);
double mode_wavenumber(const Grid& grid, std::size_t m);

}  // namespace frdiff::solver
