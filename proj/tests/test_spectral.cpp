#include <doctest.h>

#include <cmath>
#include <complex>

#include "ternwb/spectral.hpp"

using namespace ternwb::spectral;
using ternwb::exactfield::Rat;

TEST_CASE("harmonic operator is diagonal in its own basis") {
  Spectrum sp = harmonic_spectrum(64);
  for (int n = 0; n < 32; ++n)
    CHECK(std::abs(sp.eigenvalues[n] - (2.0 * n + 1.0)) < 1e-10);
  CHECK(sp.converged_count(1e-8) >= 32);
}

TEST_CASE("matrix builder rejects tiny sizes") {
  CHECK_THROWS(build_matrix(sextic_op(), 4));
}

TEST_CASE("stencil weights solve the moment equations exactly") {
  auto check_moments = [](int deriv, int hw) {
    std::vector<Rat> w = stencil_weights(deriv, hw);
    REQUIRE(static_cast<int>(w.size()) == 2 * hw + 1);
    Rat fact(1);
    for (int k = 2; k <= deriv; ++k) fact *= k;
    for (int p = 0; p <= 2 * hw; ++p) {
      Rat sum(0);
      for (int s = -hw; s <= hw; ++s) {
        Rat sp(1);
        for (int q = 0; q < p; ++q) sp *= s;
        sum += w[static_cast<size_t>(s + hw)] * sp;
      }
      CHECK(sum == (p == deriv ? fact : Rat(0)));
    }
  };
  check_moments(2, 1);
  check_moments(2, 6);
  check_moments(6, 6);
}

TEST_CASE("minimal second-derivative stencil is the classic 1 -2 1") {
  std::vector<Rat> w = stencil_weights(2, 1);
  CHECK(w[0] == Rat(1));
  CHECK(w[1] == Rat(-2));
  CHECK(w[2] == Rat(1));
}

TEST_CASE("sextic eigenvalues match the frozen low levels") {
  Spectrum sp = sextic_spectrum(128);
  const double frozen[6] = {2.9530453962581533, 21.81268704875998,
                            79.79115300888412,  202.85550993673215,
                            416.76589126985596, 747.5271836745414};
  for (int n = 0; n < 6; ++n)
    CHECK(std::abs(sp.eigenvalues[n] / frozen[n] - 1.0) < 1e-7);
}

TEST_CASE("grid oracle agrees with the basis computation at coarse resolution") {
  FdResult fd = fd_oracle_sextic(7.0, 0.05, 4);
  Spectrum sp = sextic_spectrum(128);
  for (int n = 0; n < 4; ++n)
    CHECK(std::abs(fd.eigenvalues[n] / sp.eigenvalues[n] - 1.0) < 1e-5);
  CHECK_FALSE(fd.resolution_warning);
  FdResult hfd = fd_oracle_harmonic(7.0, 0.05, 4);
  for (int n = 0; n < 4; ++n)
    CHECK(std::abs(hfd.eigenvalues[n] - (2.0 * n + 1.0)) < 1e-6);
}

TEST_CASE("grid oracle rejects invalid geometry") {
  CHECK_THROWS(fd_oracle_sextic(4.0, 0.05, 4));
  CHECK_THROWS(fd_oracle_sextic(7.0, 0.2, 4));
}

TEST_CASE("series solutions satisfy their recurrence structure") {
  for (int b = 0; b < 3; ++b) {
    SeriesSolution s = series_solution(b, 12);
    CHECK(s.branch == b);
    // support only on degrees b + 6m
    for (size_t deg = 0; deg < s.coeffs.size(); ++deg) {
      if ((static_cast<int>(deg) % 6) != b % 6 || static_cast<int>(deg) < b)
        CHECK(s.coeffs[deg].is_zero());
    }
    CHECK(series_ode_residual(s) < 1e-10);
    EigenResidual er = khat_eigen_residual(s);
    CHECK(er.low_degrees_vanish);
  }
}

TEST_CASE("branch 0 sixth coefficient is -i/240") {
  SeriesSolution s = series_solution(0, 4);
  CHECK(s.coeffs[0] == ternwb::exactfield::Cyclo12::one());
  CHECK(s.coeffs[6] ==
        Rat(-1, 240) * ternwb::exactfield::Cyclo12::i_unit());
}

TEST_CASE("hypergeometric conventions differ by k factorial") {
  std::complex<double> xi(0.3, -0.1);
  std::complex<double> std_val = hypergeom_eval(0.75, 1.25, xi, 20, true);
  std::complex<double> var_val = hypergeom_eval(0.75, 1.25, xi, 20, false);
  CHECK(std::abs(std_val - var_val) > 1e-6);
  // first-order terms: xi/(p q k!) vs xi/(p q)
  std::complex<double> first_std = xi / (0.75 * 1.25);
  CHECK(std::abs((std_val - 1.0 - first_std)) < std::abs(xi) * std::abs(xi));
}

TEST_CASE("parameter matching: derived pairs and printed pairs") {
  SeriesSolution s0 = series_solution(0, 24);
  HypergeomMatch m0 = match_series(s0);
  CHECK(m0.p_derived == Rat(2, 3));
  CHECK(m0.q_derived == Rat(5, 6));
  CHECK(m0.printed_matches);
  CHECK(m0.minus_sign_matches);
  CHECK_FALSE(m0.plus_sign_matches);

  HypergeomMatch m1 = match_series(series_solution(1, 24));
  CHECK(m1.p_derived == Rat(5, 6));
  CHECK(m1.q_derived == Rat(7, 6));
  CHECK(m1.printed_matches);

  HypergeomMatch m2 = match_series(series_solution(2, 24));
  CHECK(m2.p_derived == Rat(7, 6));
  CHECK(m2.q_derived == Rat(4, 3));
  CHECK(m2.p_printed == Rat(7, 3));
  CHECK(m2.q_printed == Rat(4, 3));
  CHECK_FALSE(m2.printed_matches);
  CHECK(m2.printed_residual > 1e-4);
  CHECK(m2.printed_residual < 1e-3);
}

TEST_CASE("action quadrature equals the closed form") {
  for (double E : {0.1, 1.0, 10.0, 100.0}) {
    double a = action_integral(E, 1.0, 1.0);
    double g = gamma_closed_form(E, 1.0, 1.0);
    CHECK(std::abs(a / g - 1.0) < 1e-8);
  }
  CHECK(std::abs(action_integral(1.0, 1.0, 1.0) - 7.005440706685347) < 1e-7);
  // linearity in E
  double a1 = action_integral(1.0, 2.0, 1.5);
  double a5 = action_integral(5.0, 2.0, 1.5);
  CHECK(std::abs(a5 / (5.0 * a1) - 1.0) < 1e-8);
}

TEST_CASE("harmonic action reproduces the orbit area") {
  const double pi = std::acos(-1.0);
  for (double E : {0.5, 2.0, 20.0}) {
    double omega = std::sqrt(1.7 / 0.9);
    CHECK(std::abs(harmonic_action(E, 0.9, 1.7) / (2.0 * pi * E / omega) - 1.0) <
          1e-10);
  }
}

TEST_CASE("level coefficient against the Gamma evaluation") {
  CHECK(std::abs(en_coefficient() - 0.1427461942609395213) < 1e-13);
}

TEST_CASE("energy level tables") {
  auto nh = energy_levels(5, "paper_nh", 1.0, 1.0, 1.0);
  REQUIRE(nh.size() == 5);
  CHECK(nh[0].n == 1);
  CHECK(std::abs(nh[2].E_n / (3.0 * nh[0].E_n) - 1.0) < 1e-12);
  auto std_rows = energy_levels(5, "standard_2pi_half", 1.0, 1.0, 1.0);
  REQUIRE(std_rows.size() == 6);
  CHECK(std_rows[0].n == 0);
  CHECK(std_rows[0].E_n > 0.0);
  CHECK_THROWS(energy_levels(5, "unknown", 1.0, 1.0, 1.0));
}

TEST_CASE("growth fits on a synthetic cubic sequence") {
  std::vector<double> lam;
  for (int n = 0; n <= 80; ++n) {
    double e = 1.63 * (n + 0.5);
    lam.push_back(e * e * e);
  }
  SlopeFit s = loglog_slope(lam, 20, 60);
  // the n + 1/2 offset biases the pure power-law fit slightly below 3
  CHECK(std::abs(s.slope - 3.0) < 0.05);
  SlopeFit a = affine_cbrt_fit(lam, 60);
  CHECK(a.r2 > 0.999999);
  CHECK(std::abs(a.slope - 1.63) < 1e-9);
}
