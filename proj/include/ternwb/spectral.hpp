#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "ternwb/cyclotomic.hpp"

namespace ternwb::spectral {

using exactfield::Cyclo12;
using exactfield::Rat;
using MatLD = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// One summand coeff * x^xpow * D^dpow of a numeric operator.
struct NumericOpTerm {
  double coeff;
  int xpow;
  int dpow;
};

std::vector<NumericOpTerm> sextic_op();    // -D^6 + x^6  (= p^6 + x^6)
std::vector<NumericOpTerm> harmonic_op();  // -D^2 + x^2  (= p^2 + x^2)

// M x M matrix of the operator in the oscillator number basis, assembled at
// size M + max degree so every retained entry is exact, then truncated.
// Rejects M < 8 and operators that are not formally self-adjoint.
MatLD build_matrix(const std::vector<NumericOpTerm>& op, int M);

struct Spectrum {
  int M = 0;
  std::vector<double> eigenvalues;      // ascending, M entries
  std::vector<double> error_estimates;  // |lambda_M - lambda_2M| per index
  int converged_count(double rel_tol = 1e-8) const;
};

// Diagonalizes at M and 2M (long double) and reports the shift as the error
// estimate of each level.
Spectrum operator_spectrum(const std::vector<NumericOpTerm>& op, int M);
Spectrum sextic_spectrum(int M);
Spectrum harmonic_spectrum(int M);

// Centered finite-difference weights for the d-th derivative on grid offsets
// -half..half, from the exact moment system sum_s w_s s^p = p! [p = d].
std::vector<Rat> stencil_weights(int deriv, int half_width);

struct FdResult {
  std::vector<double> eigenvalues;  // ascending
  double boundary_mass = 0.0;       // worst tail mass among the low vectors
  bool resolution_warning = false;  // boundary_mass > 1e-10
};

// Dirichlet discretization of -D^6 + x^6 (or -D^2 + x^2) on [-L, L] with
// 13-point stencils (sixth derivative at order 8, second at order 12),
// diagonalized in long double.  Requires L >= 6 and h <= 0.05.
FdResult fd_oracle_sextic(double L, double h, int count);
FdResult fd_oracle_harmonic(double L, double h, int count);

// Same discretization with a 9-point, order-4 sixth-derivative stencil.
// Used for the step-halving convergence-order measurement: at admissible
// step sizes the order-8 stencil's truncation error already sits below the
// eigensolver noise floor, so only the low-order variant has a measurable
// decay rate.
FdResult fd_oracle_sextic_low_order(double L, double h, int count);

// Power-series eigenfunction of 2i f''' = x^3 f (the K = -1 eigen-ODE of
// 2i D^3 - x^3 - 1): coefficients live on degrees b + 6m and are exact.
struct SeriesSolution {
  int branch = 0;
  int terms = 0;                // retained nonzero coefficients
  std::vector<Cyclo12> coeffs;  // dense in degree, 0..b+6(terms-1)
};

SeriesSolution series_solution(int branch, int terms);

// Max |2i f''' - x^3 f| over 64 sample points in [-1, 1].
double series_ode_residual(const SeriesSolution& sol);

// Same residual routed through the full operator (2iD^3 - x^3 - 1)f + f,
// computed as an exact polynomial first; also certifies that every
// coefficient below the truncation boundary cancels exactly.
struct EigenResidual {
  bool low_degrees_vanish = false;
  double max_abs = 0.0;
};
EigenResidual khat_eigen_residual(const SeriesSolution& sol);

// Partial sum of the two-lower-parameter hypergeometric series.  With
// standard_convention the term carries 1/((p)_k (q)_k k!), without it the
// k! is omitted (the variant convention printed alongside the series).
std::complex<double> hypergeom_eval(double p, double q, std::complex<double> xi,
                                    int terms, bool standard_convention);

struct HypergeomMatch {
  int branch = 0;
  Rat p_derived, q_derived;    // from the recurrence denominators
  Rat p_printed, q_printed;    // the tabulated parameter pair
  bool printed_matches = false;     // derived == printed
  bool minus_sign_matches = false;  // argument -i x^6/432 reproduces coeffs
  bool plus_sign_matches = false;   // argument +i x^6/432 does
  double printed_residual = 0.0;    // first coefficient gap under printed params
};

HypergeomMatch match_series(const SeriesSolution& sol);

// Action of the sextic orbit: 2 sqrt(mk) Int_{-xmax}^{xmax} (6E^3/k^3 - x^6)^(1/6) dx
// with xmax = 6^(1/6) sqrt(E/k), by tanh-sinh quadrature.
double action_integral(double E, double m, double k);

// 4 * 6^(1/3) * sqrt(mk) * Gamma(7/6)^2 / Gamma(4/3) * E / k.
double gamma_closed_form(double E, double m, double k);

// Quadrature of the harmonic orbit action (equals 2 pi E / omega).
double harmonic_action(double E, double m, double k);

// Gamma(4/3) / (4 * 6^(1/3) * Gamma(7/6)^2).
double en_coefficient();

struct QuantizationResult {
  int n;
  double E_n;
  double action;
  std::string convention;
};

// paper_nh: E_n = coeff * n * hbar * omega, n = 1..n_max.
// standard_2pi_half: E_n = coeff * 2 pi hbar (n + 1/2) * omega, n = 0..n_max.
std::vector<QuantizationResult> energy_levels(int n_max, const std::string& convention,
                                              double m, double k, double hbar);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

// Least squares of ln(lambda_n) against ln(n) for n in [n_lo, n_hi].
SlopeFit loglog_slope(const std::vector<double>& lam, int n_lo, int n_hi);

// Least squares of lambda_n^(1/3) against (n + 1/2) for n in [0, n_hi].
SlopeFit affine_cbrt_fit(const std::vector<double>& lam, int n_hi);

}  // namespace ternwb::spectral
