#include "ternwb/spectral.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace ternwb::spectral {

namespace {

long double to_ld(const Rat& r) {
  const long double num = boost::multiprecision::numerator(r).convert_to<long double>();
  const long double den = boost::multiprecision::denominator(r).convert_to<long double>();
  return num / den;
}

MatLD ladder_x(int n) {
  MatLD x = MatLD::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) {
    const long double v = sqrtl((k + 1) / 2.0L);
    x(k, k + 1) = v;
    x(k + 1, k) = v;
  }
  return x;
}

MatLD ladder_d(int n) {
  MatLD d = MatLD::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) {
    const long double v = sqrtl((k + 1) / 2.0L);
    d(k, k + 1) = v;
    d(k + 1, k) = -v;
  }
  return d;
}

double fact_double(int n) {
  double r = 1.0;
  for (int t = 2; t <= n; ++t) r *= t;
  return r;
}

double binom_double(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int t = 1; t <= k; ++t) r = r * (n - t + 1) / t;
  return r;
}

// Normal-ordered map of the operator, used for the self-adjointness gate.
std::map<std::pair<int, int>, double> normal_map(const std::vector<NumericOpTerm>& op) {
  std::map<std::pair<int, int>, double> m;
  for (const auto& t : op) m[{t.xpow, t.dpow}] += t.coeff;
  return m;
}

bool formally_self_adjoint(const std::vector<NumericOpTerm>& op) {
  std::map<std::pair<int, int>, double> adj;
  double scale = 0.0;
  for (const auto& t : op) {
    scale = std::max(scale, std::abs(t.coeff));
    const double sign = (t.dpow % 2 == 1) ? -1.0 : 1.0;
    for (int k = 0; k <= std::min(t.dpow, t.xpow); ++k) {
      const double w = fact_double(k) * binom_double(t.dpow, k) * binom_double(t.xpow, k);
      adj[{t.xpow - k, t.dpow - k}] += sign * t.coeff * w;
    }
  }
  auto orig = normal_map(op);
  for (const auto& [key, v] : adj) {
    if (std::abs(v - orig[key]) > 1e-12 * std::max(1.0, scale)) return false;
  }
  for (const auto& [key, v] : orig) {
    if (std::abs(v - adj[key]) > 1e-12 * std::max(1.0, scale)) return false;
  }
  return true;
}

Eigen::Matrix<long double, Eigen::Dynamic, 1> eigenvalues_ld(const MatLD& a,
                                                             bool with_vectors,
                                                             MatLD* vectors) {
  Eigen::SelfAdjointEigenSolver<MatLD> es;
  es.compute(a, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver did not converge");
  }
  if (with_vectors && vectors != nullptr) *vectors = es.eigenvectors();
  return es.eigenvalues();
}

}  // namespace

std::vector<NumericOpTerm> sextic_op() {
  return {{-1.0, 0, 6}, {1.0, 6, 0}};
}

std::vector<NumericOpTerm> harmonic_op() {
  return {{-1.0, 0, 2}, {1.0, 2, 0}};
}

MatLD build_matrix(const std::vector<NumericOpTerm>& op, int M) {
  if (M < 8) throw std::invalid_argument("basis size must be at least 8");
  if (!formally_self_adjoint(op)) {
    throw std::invalid_argument("operator is not formally self-adjoint");
  }
  int pad = 0;
  for (const auto& t : op) pad = std::max(pad, t.xpow + t.dpow);
  const int n = M + pad;
  const MatLD x = ladder_x(n);
  const MatLD d = ladder_d(n);
  std::map<int, MatLD> xp, dp;
  xp[0] = MatLD::Identity(n, n);
  dp[0] = MatLD::Identity(n, n);
  auto power_of = [](std::map<int, MatLD>& cache, const MatLD& base, int e) -> const MatLD& {
    int have = cache.rbegin()->first;
    while (have < e) {
      cache.emplace(have + 1, MatLD(cache.at(have) * base));
      ++have;
    }
    return cache.at(e);
  };
  MatLD full = MatLD::Zero(n, n);
  for (const auto& t : op) {
    full += static_cast<long double>(t.coeff) *
            (power_of(xp, x, t.xpow) * power_of(dp, d, t.dpow));
  }
  MatLD trunc = full.topLeftCorner(M, M);
  return ((trunc + trunc.transpose()) / 2.0L).eval();
}

int Spectrum::converged_count(double rel_tol) const {
  int count = 0;
  for (std::size_t i = 0; i < eigenvalues.size() && i < error_estimates.size(); ++i) {
    if (error_estimates[i] <= rel_tol * std::max(1.0, std::abs(eigenvalues[i]))) {
      ++count;
    } else {
      break;  // report the contiguous converged prefix
    }
  }
  return count;
}

Spectrum operator_spectrum(const std::vector<NumericOpTerm>& op, int M) {
  const auto ev_m = eigenvalues_ld(build_matrix(op, M), false, nullptr);
  const auto ev_2m = eigenvalues_ld(build_matrix(op, 2 * M), false, nullptr);
  Spectrum s;
  s.M = M;
  s.eigenvalues.reserve(M);
  s.error_estimates.reserve(M);
  for (int i = 0; i < M; ++i) {
    s.eigenvalues.push_back(static_cast<double>(ev_m(i)));
    s.error_estimates.push_back(static_cast<double>(fabsl(ev_m(i) - ev_2m(i))));
  }
  return s;
}

Spectrum sextic_spectrum(int M) {
  if (M < 64) throw std::invalid_argument("spectrum requires M >= 64");
  return operator_spectrum(sextic_op(), M);
}

Spectrum harmonic_spectrum(int M) {
  if (M < 64) throw std::invalid_argument("spectrum requires M >= 64");
  return operator_spectrum(harmonic_op(), M);
}

std::vector<Rat> stencil_weights(int deriv, int half_width) {
  const int npts = 2 * half_width + 1;
  if (deriv >= npts) throw std::invalid_argument("stencil too narrow for derivative");
  // Moment system sum_s w_s s^p = p! delta_{p,deriv}, p = 0..npts-1.
  std::vector<std::vector<Rat>> m(npts, std::vector<Rat>(npts + 1));
  for (int p = 0; p < npts; ++p) {
    for (int s = -half_width; s <= half_width; ++s) {
      Rat v = 1;
      for (int t = 0; t < p; ++t) v *= Rat(s);
      m[p][s + half_width] = v;
    }
  }
  Rat fact = 1;
  for (int t = 2; t <= deriv; ++t) fact *= Rat(t);
  m[deriv][npts] = fact;
  for (int piv = 0; piv < npts; ++piv) {
    int row = piv;
    while (row < npts && m[row][piv] == 0) ++row;
    if (row == npts) throw std::runtime_error("singular stencil system");
    std::swap(m[piv], m[row]);
    const Rat d = m[piv][piv];
    for (int c = piv; c <= npts; ++c) m[piv][c] /= d;
    for (int r = 0; r < npts; ++r) {
      if (r == piv || m[r][piv] == 0) continue;
      const Rat f = m[r][piv];
      for (int c = piv; c <= npts; ++c) m[r][c] -= f * m[piv][c];
    }
  }
  std::vector<Rat> w(npts);
  for (int i = 0; i < npts; ++i) w[i] = m[i][npts];
  return w;
}

namespace {

FdResult fd_oracle(int deriv, int potential_pow, double L, double h, int count,
                   int half = 6) {
  if (L < 6.0) throw std::invalid_argument("finite-difference box needs L >= 6");
  if (h > 0.05) throw std::invalid_argument("finite-difference step needs h <= 0.05");
  const auto w = stencil_weights(deriv, half);
  const long double hp = powl(static_cast<long double>(h), deriv);
  std::vector<long double> wl(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) wl[i] = to_ld(w[i]) / hp;

  const int segments = static_cast<int>(llround(2.0 * L / h));
  const int n = segments - 1;
  MatLD a = MatLD::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const long double xi = -static_cast<long double>(L) + (i + 1) * static_cast<long double>(h);
    for (int s = -half; s <= half; ++s) {
      const int j = i + s;
      if (j >= 0 && j < n) a(i, j) += -wl[s + half];  // -D^deriv part
    }
    a(i, i) += powl(xi, potential_pow);
  }
  a = ((a + a.transpose()) / 2.0L).eval();

  MatLD vectors;
  const auto ev = eigenvalues_ld(a, true, &vectors);
  FdResult r;
  const int keep = std::min(count, n);
  r.eigenvalues.reserve(keep);
  for (int i = 0; i < keep; ++i) r.eigenvalues.push_back(static_cast<double>(ev(i)));
  long double worst = 0.0L;
  for (int i = 0; i < keep; ++i) {
    long double mass = 0.0L;
    for (int t = 0; t < half; ++t) {
      mass += vectors(t, i) * vectors(t, i);
      mass += vectors(n - 1 - t, i) * vectors(n - 1 - t, i);
    }
    worst = std::max(worst, mass);
  }
  r.boundary_mass = static_cast<double>(worst);
  r.resolution_warning = r.boundary_mass > 1e-10;
  return r;
}

}  // namespace

FdResult fd_oracle_sextic(double L, double h, int count) {
  return fd_oracle(6, 6, L, h, count);
}

FdResult fd_oracle_sextic_low_order(double L, double h, int count) {
  return fd_oracle(6, 6, L, h, count, 4);
}

FdResult fd_oracle_harmonic(double L, double h, int count) {
  return fd_oracle(2, 2, L, h, count);
}

SeriesSolution series_solution(int branch, int terms) {
  if (branch < 0 || branch > 2) throw std::invalid_argument("branch must be 0, 1 or 2");
  if (terms < 1) throw std::invalid_argument("need at least one term");
  SeriesSolution sol;
  sol.branch = branch;
  sol.terms = terms;
  sol.coeffs.assign(branch + 6 * (terms - 1) + 1, Cyclo12::zero());
  sol.coeffs[branch] = Cyclo12::one();
  const Cyclo12 two_i = Rat(2) * Cyclo12::i_unit();
  for (int m = 1; m < terms; ++m) {
    const int deg = branch + 6 * m;
    const Rat prod = Rat(deg - 2) * Rat(deg - 1) * Rat(deg);
    sol.coeffs[deg] = sol.coeffs[deg - 6] / (prod * two_i);
  }
  return sol;
}

namespace {

std::complex<double> eval_poly(const std::vector<Cyclo12>& c, std::complex<double> x) {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

std::vector<Cyclo12> third_derivative(const std::vector<Cyclo12>& c) {
  std::vector<Cyclo12> r;
  if (c.size() > 3) {
    r.reserve(c.size() - 3);
    for (std::size_t d = 3; d < c.size(); ++d) {
      r.push_back(Rat(static_cast<long long>(d) * (d - 1) * (d - 2)) * c[d]);
    }
  }
  return r;
}

}  // namespace

double series_ode_residual(const SeriesSolution& sol) {
  const auto f3 = third_derivative(sol.coeffs);
  const std::complex<double> two_i(0.0, 2.0);
  double worst = 0.0;
  for (int t = 0; t < 64; ++t) {
    const std::complex<double> x(-1.0 + 2.0 * t / 63.0, 0.0);
    const std::complex<double> r =
        two_i * eval_poly(f3, x) - x * x * x * eval_poly(sol.coeffs, x);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

EigenResidual khat_eigen_residual(const SeriesSolution& sol) {
  const auto& c = sol.coeffs;
  const Cyclo12 two_i = Rat(2) * Cyclo12::i_unit();
  // g = (2i D^3 - x^3 - 1) f - (-1) f, assembled exactly.
  std::vector<Cyclo12> g(c.size() + 3, Cyclo12::zero());
  for (std::size_t d = 3; d < c.size(); ++d) {
    g[d - 3] += two_i * (Rat(static_cast<long long>(d) * (d - 1) * (d - 2)) * c[d]);
  }
  for (std::size_t d = 0; d < c.size(); ++d) {
    g[d + 3] -= c[d];  // -x^3 f
    g[d] -= c[d];      // -1 * f
    g[d] += c[d];      // - K f with K = -1
  }
  const std::size_t top = c.size() - 1 + 3;
  EigenResidual res;
  res.low_degrees_vanish = true;
  for (std::size_t d = 0; d < top; ++d) {
    if (!g[d].is_zero()) {
      res.low_degrees_vanish = false;
      break;
    }
  }
  double worst = 0.0;
  for (int t = 0; t < 64; ++t) {
    const std::complex<double> x(-1.0 + 2.0 * t / 63.0, 0.0);
    worst = std::max(worst, std::abs(eval_poly(g, x)));
  }
  res.max_abs = worst;
  return res;
}

std::complex<double> hypergeom_eval(double p, double q, std::complex<double> xi,
                                    int terms, bool standard_convention) {
  for (double v : {p, q}) {
    if (v <= 0.0 && std::abs(v - std::round(v)) < 1e-9) {
      throw std::invalid_argument("hypergeometric parameter at a pole");
    }
  }
  if (terms < 1) throw std::invalid_argument("need at least one term");
  std::complex<double> sum(0.0, 0.0), term(1.0, 0.0);
  for (int k = 0; k < terms; ++k) {
    sum += term;
    std::complex<double> ratio = xi / ((p + k) * (q + k));
    if (standard_convention) ratio /= (k + 1.0);
    term *= ratio;
  }
  return sum;
}

namespace {

// Pochhammer product (p)_m over the rationals.
Rat pochhammer(const Rat& p, int m) {
  Rat r = 1;
  for (int t = 0; t < m; ++t) r *= p + Rat(t);
  return r;
}

bool coefficients_match(const SeriesSolution& sol, const Rat& p, const Rat& q,
                        int sign, double* first_gap) {
  // Hypergeometric x^b F([]; p, q; sign*i*x^6/432) under the standard
  // convention: coefficient of x^(b+6m) is (sign*i)^m / (432^m (p)_m (q)_m m!).
  const Cyclo12 unit = (sign >= 0 ? Cyclo12::i_unit() : -Cyclo12::i_unit());
  bool ok = true;
  const int upto = std::min(sol.terms, 11);
  for (int m = 0; m < upto; ++m) {
    Rat denom = pochhammer(p, m) * pochhammer(q, m);
    for (int t = 1; t <= m; ++t) denom *= Rat(t);      // m!
    for (int t = 0; t < m; ++t) denom *= Rat(432);     // 432^m
    const Cyclo12 expected = Rat(1) / denom * unit.pow(m);
    const Cyclo12 actual = sol.coeffs[sol.branch + 6 * m];
    if (!(expected == actual)) {
      if (first_gap != nullptr && *first_gap == 0.0) {
        *first_gap = std::abs(expected.to_complex() - actual.to_complex());
      }
      ok = false;
    }
  }
  return ok;
}

}  // namespace

HypergeomMatch match_series(const SeriesSolution& sol) {
  HypergeomMatch m;
  m.branch = sol.branch;
  // Recurrence denominator (6m+b-2)(6m+b-1)(6m+b) = 216 (m+r1)(m+r2)(m+r3)
  // with roots r = (b-2)/6, (b-1)/6, b/6; the zero root supplies the m! of
  // the standard convention and the other two give p, q.
  std::vector<Rat> roots = {Rat(sol.branch - 2, 6), Rat(sol.branch - 1, 6),
                            Rat(sol.branch, 6)};
  std::vector<Rat> nonzero;
  for (const auto& r : roots) {
    if (r != 0) nonzero.push_back(r);
  }
  if (nonzero.size() != 2) throw std::logic_error("unexpected root pattern");
  std::sort(nonzero.begin(), nonzero.end());
  m.p_derived = Rat(1) + nonzero[0];
  m.q_derived = Rat(1) + nonzero[1];
  switch (sol.branch) {
    case 0: m.p_printed = Rat(2, 3); m.q_printed = Rat(5, 6); break;
    case 1: m.p_printed = Rat(5, 6); m.q_printed = Rat(7, 6); break;
    default: m.p_printed = Rat(7, 3); m.q_printed = Rat(4, 3); break;
  }
  m.printed_matches = (m.p_derived == m.p_printed && m.q_derived == m.q_printed);
  m.minus_sign_matches = coefficients_match(sol, m.p_derived, m.q_derived, -1, nullptr);
  m.plus_sign_matches = coefficients_match(sol, m.p_derived, m.q_derived, +1, nullptr);
  if (!m.printed_matches) {
    double gap = 0.0;
    coefficients_match(sol, m.p_printed, m.q_printed, -1, &gap);
    m.printed_residual = gap;
  }
  return m;
}

double action_integral(double E, double m, double k) {
  if (E <= 0.0 || m <= 0.0 || k <= 0.0) {
    throw std::invalid_argument("action integral needs positive E, m, k");
  }
  const double xmax = std::pow(6.0, 1.0 / 6.0) * std::sqrt(E / k);
  const double c = 6.0 * E * E * E / (k * k * k);
  boost::math::quadrature::tanh_sinh<double> integrator;
  const auto f = [&](double x) {
    const double v = c - std::pow(x, 6);
    return std::pow(std::max(v, 0.0), 1.0 / 6.0);
  };
  const double integral = integrator.integrate(f, -xmax, xmax, 1e-12);
  return 2.0 * std::sqrt(m * k) * integral;
}

double gamma_closed_form(double E, double m, double k) {
  if (E <= 0.0 || m <= 0.0 || k <= 0.0) {
    throw std::invalid_argument("closed form needs positive E, m, k");
  }
  const double g76 = std::tgamma(7.0 / 6.0);
  const double g43 = std::tgamma(4.0 / 3.0);
  return 4.0 * std::cbrt(6.0) * std::sqrt(m * k) * g76 * g76 / g43 * E / k;
}

double harmonic_action(double E, double m, double k) {
  if (E <= 0.0 || m <= 0.0 || k <= 0.0) {
    throw std::invalid_argument("harmonic action needs positive E, m, k");
  }
  const double xmax = std::sqrt(2.0 * E / k);
  boost::math::quadrature::tanh_sinh<double> integrator;
  const auto f = [&](double x) {
    const double v = 2.0 * m * (E - 0.5 * k * x * x);
    return std::sqrt(std::max(v, 0.0));
  };
  return 2.0 * integrator.integrate(f, -xmax, xmax, 1e-12);
}

double en_coefficient() {
  const double g76 = std::tgamma(7.0 / 6.0);
  const double g43 = std::tgamma(4.0 / 3.0);
  return g43 / (4.0 * std::cbrt(6.0) * g76 * g76);
}

std::vector<QuantizationResult> energy_levels(int n_max, const std::string& convention,
                                              double m, double k, double hbar) {
  if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
  if (m <= 0.0 || k <= 0.0 || hbar <= 0.0) {
    throw std::invalid_argument("physical parameters must be positive");
  }
  const double omega = std::sqrt(k / m);
  const double coeff = en_coefficient();
  std::vector<QuantizationResult> out;
  if (convention == "paper_nh") {
    for (int n = 1; n <= n_max; ++n) {
      const double e = coeff * n * hbar * omega;
      out.push_back({n, e, gamma_closed_form(e, m, k), convention});
    }
  } else if (convention == "standard_2pi_half") {
    const double two_pi = 2.0 * std::acos(-1.0);
    for (int n = 0; n <= n_max; ++n) {
      const double e = coeff * two_pi * hbar * (n + 0.5) * omega;
      out.push_back({n, e, gamma_closed_form(e, m, k), convention});
    }
  } else {
    throw std::invalid_argument("unknown quantization convention: " + convention);
  }
  return out;
}

namespace {

SlopeFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  SlopeFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double pred = fit.slope * xs[i] + fit.intercept;
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - mean) * (ys[i] - mean);
  }
  fit.r2 = (ss_tot > 0) ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace

SlopeFit loglog_slope(const std::vector<double>& lam, int n_lo, int n_hi) {
  if (n_lo < 1 || n_hi >= static_cast<int>(lam.size()) || n_lo >= n_hi) {
    throw std::invalid_argument("bad slope-fit window");
  }
  std::vector<double> xs, ys;
  for (int n = n_lo; n <= n_hi; ++n) {
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(lam[n]));
  }
  return least_squares(xs, ys);
}

SlopeFit affine_cbrt_fit(const std::vector<double>& lam, int n_hi) {
  if (n_hi >= static_cast<int>(lam.size())) {
    throw std::invalid_argument("bad affine-fit window");
  }
  std::vector<double> xs, ys;
  for (int n = 0; n <= n_hi; ++n) {
    xs.push_back(n + 0.5);
    ys.push_back(std::cbrt(lam[n]));
  }
  return least_squares(xs, ys);
}

}  // namespace ternwb::spectral
