#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ternwb/cyclotomic.hpp"

namespace ternwb::weylops {

using exactfield::Cyclo12;
using exactfield::Rat;

// Element of Q(zeta12)[lambda, s]: a polynomial in the formal deformation
// parameter lambda and the square root s of the quantization constant.
// Keys are (lambda degree, s degree).
struct ParamScalar {
  std::map<std::pair<int, int>, Cyclo12> terms;

  static ParamScalar zero() { return {}; }
  static ParamScalar from_cyclo(const Cyclo12& c);
  static ParamScalar from_rat(const Rat& r) { return from_cyclo(Cyclo12::from_rat(r)); }
  static ParamScalar lambda();  // the formal parameter
  static ParamScalar s();       // s, with s^2 the quantization constant

  bool is_zero() const { return terms.empty(); }
  bool lambda_free() const;
  void add_term(int lam_deg, int s_deg, const Cyclo12& c);

  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator-(const ParamScalar& a);
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.terms == b.terms;
  }
};

// Complex conjugate; lambda must have been eliminated first (s is real).
ParamScalar conj(const ParamScalar& a);

// lambda^p -> value^p * s^(s_exp * p) applied coefficient-wise.
ParamScalar substitute_lambda(const ParamScalar& a, const Cyclo12& value, int s_exp);

std::string to_string(const ParamScalar& a);

// Normal-ordered element of the Weyl algebra over ParamScalar: keys are
// (m, n) standing for x^m D^n with all x factors to the left.
struct OperatorPoly {
  std::map<std::pair<int, int>, ParamScalar> terms;

  static OperatorPoly zero() { return {}; }
  static OperatorPoly identity();
  static OperatorPoly x_op();
  static OperatorPoly d_op();

  bool is_zero() const { return terms.empty(); }
  void add_term(int m, int n, const ParamScalar& c);

  friend OperatorPoly operator+(const OperatorPoly& a, const OperatorPoly& b);
  friend OperatorPoly operator-(const OperatorPoly& a, const OperatorPoly& b);
  friend OperatorPoly operator-(const OperatorPoly& a);
  friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
  friend OperatorPoly operator*(const ParamScalar& s, const OperatorPoly& a);
  friend OperatorPoly operator*(const Cyclo12& s, const OperatorPoly& a);
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
    return a.terms == b.terms;
  }
};

OperatorPoly pow(const OperatorPoly& a, int e);
OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b);
OperatorPoly ternary_j_commutator(const OperatorPoly& a, const OperatorPoly& b,
                                  const OperatorPoly& c);

// Formal adjoint with x self-adjoint and D skew-adjoint; every coefficient
// must be lambda-free (take adjoints only after specializing lambda).
OperatorPoly adjoint(const OperatorPoly& a);

OperatorPoly substitute_lambda(const OperatorPoly& a, const Cyclo12& value, int s_exp);

std::string to_string(const OperatorPoly& a);

// The three first-order generators lambda*D + (j-power)*x + (j-power)*1.
OperatorPoly build_c(int a);

// (1/sqrt3) * c_a with lambda specialized to -i*s.
OperatorPoly build_c_normalized(int a);

// Cubic combination of the c's that collapses to 2*lambda^3*D^3 - x^3 - 1.
OperatorPoly build_khat();
OperatorPoly khat_closed_form();

// p(x) * exp(-x^2/2); coeffs[k] multiplies x^k.
struct GaussPoly {
  std::vector<Cyclo12> coeffs;

  static GaussPoly vacuum() { return {{Cyclo12::one()}}; }
  bool is_zero() const;
  void trim();

  friend bool operator==(const GaussPoly& a, const GaussPoly& b);
};

// Applies a parameter-free operator: x multiplies, D maps p to p' - x*p.
GaussPoly apply(const OperatorPoly& op, const GaussPoly& g);

}  // namespace ternwb::weylops
