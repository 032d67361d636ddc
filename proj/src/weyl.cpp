#include "ternwb/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace ternwb::weylops {

namespace {

Rat binomial(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  Rat r(1);
  for (int t = 1; t <= k; ++t) r = r * Rat(n - t + 1) / Rat(t);
  return r;
}

Rat factorial(int n) {
  Rat r(1);
  for (int t = 2; t <= n; ++t) r *= Rat(t);
  return r;
}

ParamScalar scale(const ParamScalar& a, const Cyclo12& c) {
  ParamScalar r;
  for (const auto& [k, v] : a.terms) r.add_term(k.first, k.second, c * v);
  return r;
}

}  // namespace

ParamScalar ParamScalar::from_cyclo(const Cyclo12& c) {
  ParamScalar r;
  r.add_term(0, 0, c);
  return r;
}

ParamScalar ParamScalar::lambda() {
  ParamScalar r;
  r.add_term(1, 0, Cyclo12::one());
  return r;
}

ParamScalar ParamScalar::s() {
  ParamScalar r;
  r.add_term(0, 1, Cyclo12::one());
  return r;
}

bool ParamScalar::lambda_free() const {
  for (const auto& [k, v] : terms) {
    if (k.first != 0) return false;
  }
  return true;
}

void ParamScalar::add_term(int lam_deg, int s_deg, const Cyclo12& c) {
  if (c == Cyclo12::zero()) return;
  auto key = std::make_pair(lam_deg, s_deg);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second == Cyclo12::zero()) terms.erase(it);
  }
}

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar r = a;
  for (const auto& [k, v] : b.terms) r.add_term(k.first, k.second, v);
  return r;
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar r = a;
  for (const auto& [k, v] : b.terms) r.add_term(k.first, k.second, -v);
  return r;
}

ParamScalar operator-(const ParamScalar& a) {
  ParamScalar r;
  for (const auto& [k, v] : a.terms) r.add_term(k.first, k.second, -v);
  return r;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar r;
  for (const auto& [ka, va] : a.terms) {
    for (const auto& [kb, vb] : b.terms) {
      r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    }
  }
  return r;
}

ParamScalar conj(const ParamScalar& a) {
  ParamScalar r;
  for (const auto& [k, v] : a.terms) {
    if (k.first != 0) {
      throw std::domain_error("conjugation requires a lambda-free scalar");
    }
    r.add_term(0, k.second, conj(v));
  }
  return r;
}

ParamScalar substitute_lambda(const ParamScalar& a, const Cyclo12& value, int s_exp) {
  ParamScalar r;
  for (const auto& [k, v] : a.terms) {
    Cyclo12 factor = value.pow(k.first);
    r.add_term(0, k.second + s_exp * k.first, factor * v);
  }
  return r;
}

std::string to_string(const ParamScalar& a) {
  if (a.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, v] : a.terms) {
    if (!first) out += " + ";
    first = false;
    out += "(" + v.to_string() + ")";
    if (k.first == 1) {
      out += " lambda";
    } else if (k.first > 1) {
      out += " lambda^" + std::to_string(k.first);
    }
    if (k.second == 1) {
      out += " s";
    } else if (k.second > 1) {
      out += " s^" + std::to_string(k.second);
    }
  }
  return out;
}

OperatorPoly OperatorPoly::identity() {
  OperatorPoly r;
  r.add_term(0, 0, ParamScalar::from_cyclo(Cyclo12::one()));
  return r;
}

OperatorPoly OperatorPoly::x_op() {
  OperatorPoly r;
  r.add_term(1, 0, ParamScalar::from_cyclo(Cyclo12::one()));
  return r;
}

OperatorPoly OperatorPoly::d_op() {
  OperatorPoly r;
  r.add_term(0, 1, ParamScalar::from_cyclo(Cyclo12::one()));
  return r;
}

void OperatorPoly::add_term(int m, int n, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(m, n);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

OperatorPoly operator+(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly r = a;
  for (const auto& [k, v] : b.terms) r.add_term(k.first, k.second, v);
  return r;
}

OperatorPoly operator-(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly r = a;
  for (const auto& [k, v] : b.terms) r.add_term(k.first, k.second, -v);
  return r;
}

OperatorPoly operator-(const OperatorPoly& a) {
  OperatorPoly r;
  for (const auto& [k, v] : a.terms) r.add_term(k.first, k.second, -v);
  return r;
}

// x^m1 D^n1 * x^m2 D^n2 via D^b x^c = sum_k k! C(b,k) C(c,k) x^(c-k) D^(b-k).
OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly r;
  for (const auto& [ka, va] : a.terms) {
    for (const auto& [kb, vb] : b.terms) {
      ParamScalar prod = va * vb;
      int n1 = ka.second, m2 = kb.first;
      int kmax = std::min(n1, m2);
      for (int k = 0; k <= kmax; ++k) {
        Rat w = factorial(k) * binomial(n1, k) * binomial(m2, k);
        r.add_term(ka.first + m2 - k, n1 + kb.second - k,
                   scale(prod, Cyclo12::from_rat(w)));
      }
    }
  }
  return r;
}

OperatorPoly operator*(const ParamScalar& s, const OperatorPoly& a) {
  OperatorPoly r;
  for (const auto& [k, v] : a.terms) r.add_term(k.first, k.second, s * v);
  return r;
}

OperatorPoly operator*(const Cyclo12& s, const OperatorPoly& a) {
  return ParamScalar::from_cyclo(s) * a;
}

OperatorPoly pow(const OperatorPoly& a, int e) {
  OperatorPoly r = OperatorPoly::identity();
  for (int t = 0; t < e; ++t) r = r * a;
  return r;
}

OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b) {
  return a * b - b * a;
}

OperatorPoly ternary_j_commutator(const OperatorPoly& a, const OperatorPoly& b,
                                  const OperatorPoly& c) {
  const Cyclo12 j = Cyclo12::j_unit();
  const Cyclo12 j2 = Cyclo12::j2_unit();
  return a * b * c + j * (b * c * a) + j2 * (c * a * b);
}

OperatorPoly adjoint(const OperatorPoly& a) {
  OperatorPoly r;
  for (const auto& [k, v] : a.terms) {
    int m = k.first, n = k.second;
    ParamScalar c = conj(v);
    if (n % 2 == 1) c = -c;
    // (x^m D^n)^dagger = (-1)^n D^n x^m, then reorder.
    for (int t = 0; t <= std::min(n, m); ++t) {
      Rat w = factorial(t) * binomial(n, t) * binomial(m, t);
      r.add_term(m - t, n - t, scale(c, Cyclo12::from_rat(w)));
    }
  }
  return r;
}

OperatorPoly substitute_lambda(const OperatorPoly& a, const Cyclo12& value, int s_exp) {
  OperatorPoly r;
  for (const auto& [k, v] : a.terms) {
    r.add_term(k.first, k.second, substitute_lambda(v, value, s_exp));
  }
  return r;
}

std::string to_string(const OperatorPoly& a) {
  if (a.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, v] : a.terms) {
    if (!first) out += "  +  ";
    first = false;
    std::string coeff = to_string(v);
    if (v.terms.size() > 1) coeff = "[" + coeff + "]";
    out += coeff;
    if (k.first > 0) out += " x^" + std::to_string(k.first);
    if (k.second > 0) out += " D^" + std::to_string(k.second);
  }
  return out;
}

OperatorPoly build_c(int a) {
  const Cyclo12 one = Cyclo12::one();
  const Cyclo12 j = Cyclo12::j_unit();
  const Cyclo12 j2 = Cyclo12::j2_unit();
  Cyclo12 xc, uc;
  switch (a) {
    case 1: xc = j; uc = j2; break;
    case 2: xc = j2; uc = j; break;
    case 3: xc = one; uc = one; break;
    default: throw std::out_of_range("generator index must be 1, 2 or 3");
  }
  OperatorPoly r;
  r.add_term(0, 1, ParamScalar::lambda());
  r.add_term(1, 0, ParamScalar::from_cyclo(xc));
  r.add_term(0, 0, ParamScalar::from_cyclo(uc));
  return r;
}

OperatorPoly build_c_normalized(int a) {
  OperatorPoly spec = substitute_lambda(build_c(a), -Cyclo12::i_unit(), 1);
  const Cyclo12 inv_sqrt3 = Rat(1, 3) * Cyclo12::sqrt3();
  return inv_sqrt3 * spec;
}

OperatorPoly build_khat() {
  const Cyclo12 j = Cyclo12::j_unit();
  const Cyclo12 j2 = Cyclo12::j2_unit();
  const OperatorPoly c1 = build_c(1), c2 = build_c(2), c3 = build_c(3);
  const OperatorPoly a1 = c3 + c1 + c2;
  const OperatorPoly a2 = c3 + j * c1 + j2 * c2;
  const OperatorPoly a3 = c3 + j2 * c1 + j * c2;
  const OperatorPoly p1 = pow(a1, 3), p2 = pow(a2, 3), p3 = pow(a3, 3);
  const Cyclo12 w = Cyclo12::from_rat(Rat(1, 27));
  OperatorPoly first = w * (p1 + j * p2 + j2 * p3);
  OperatorPoly second = w * (p1 + j2 * p2 + j * p3);
  return first + second;
}

OperatorPoly khat_closed_form() {
  OperatorPoly r;
  ParamScalar two_l3;
  two_l3.add_term(3, 0, Cyclo12::from_int(2));
  r.add_term(0, 3, two_l3);
  r.add_term(3, 0, ParamScalar::from_cyclo(Cyclo12::from_int(-1)));
  r.add_term(0, 0, ParamScalar::from_cyclo(Cyclo12::from_int(-1)));
  return r;
}

bool GaussPoly::is_zero() const {
  for (const auto& c : coeffs) {
    if (!(c == Cyclo12::zero())) return false;
  }
  return true;
}

void GaussPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == Cyclo12::zero()) coeffs.pop_back();
}

bool operator==(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly x = a, y = b;
  x.trim();
  y.trim();
  return x.coeffs == y.coeffs;
}

GaussPoly apply(const OperatorPoly& op, const GaussPoly& g) {
  GaussPoly out;
  for (const auto& [k, v] : op.terms) {
    Cyclo12 c0;
    for (const auto& [pk, pv] : v.terms) {
      if (pk.first != 0 || pk.second != 0) {
        throw std::domain_error("apply requires a parameter-free operator");
      }
      c0 = pv;
    }
    if (c0 == Cyclo12::zero()) continue;
    std::vector<Cyclo12> p = g.coeffs;
    // D acts on p(x) e^(-x^2/2) as p -> p' - x p.
    for (int t = 0; t < k.second; ++t) {
      std::vector<Cyclo12> q(p.size() + 1, Cyclo12::zero());
      for (std::size_t d = 1; d < p.size(); ++d) {
        q[d - 1] = q[d - 1] + Rat(static_cast<long long>(d)) * p[d];
      }
      for (std::size_t d = 0; d < p.size(); ++d) q[d + 1] = q[d + 1] - p[d];
      p = std::move(q);
    }
    std::vector<Cyclo12> shifted(p.size() + k.first, Cyclo12::zero());
    for (std::size_t d = 0; d < p.size(); ++d) shifted[d + k.first] = p[d];
    if (out.coeffs.size() < shifted.size()) {
      out.coeffs.resize(shifted.size(), Cyclo12::zero());
    }
    for (std::size_t d = 0; d < shifted.size(); ++d) {
      out.coeffs[d] = out.coeffs[d] + c0 * shifted[d];
    }
  }
  out.trim();
  return out;
}

}  // namespace ternwb::weylops
