#pragma once

#include <compare>
#include <map>
#include <vector>

#include "ternwb/cyclotomic.hpp"

namespace ternwb::gradedalg {

using exactfield::Cyclo12;
using exactfield::Rat;

// Generator families.  Grades: x carries 0, theta 1, thetabar 2; a word's
// grade is the sum of its letters' grades mod 3.
enum class Family : int { x = 0, theta = 1, thetabar = 2 };

inline int family_grade(Family f) {
  switch (f) {
    case Family::x: return 0;
    case Family::theta: return 1;
    case Family::thetabar: return 2;
  }
  return 0;
}

inline const char* family_symbol(Family f) {
  switch (f) {
    case Family::x: return "x";
    case Family::theta: return "theta";
    case Family::thetabar: return "thetabar";
  }
  return "?";
}

struct GenSymbol {
  Family family;
  int index;  // 1-based

  auto operator<=>(const GenSymbol&) const = default;
};

using Word = std::vector<GenSymbol>;

inline int grade(const Word& w) {
  int g = 0;
  for (const auto& s : w) g += family_grade(s.family);
  return g % 3;
}

// Noncommutative polynomial: finite map word -> coefficient, zero terms
// pruned eagerly so equality is plain map equality.
struct NCPoly {
  std::map<Word, Cyclo12> terms;

  NCPoly() = default;

  static NCPoly unit() {
    NCPoly p;
    p.terms[Word{}] = Cyclo12::one();
    return p;
  }
  static NCPoly generator(Family f, int index) {
    NCPoly p;
    p.terms[Word{GenSymbol{f, index}}] = Cyclo12::one();
    return p;
  }
  static NCPoly monomial(Word w, Cyclo12 coeff) {
    NCPoly p;
    if (!coeff.is_zero()) p.terms[std::move(w)] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Word& w, const Cyclo12& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    for (const auto& [w, cf] : b.terms) r.add_term(w, cf);
    return r;
  }
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    for (const auto& [w, cf] : b.terms) r.add_term(w, -cf);
    return r;
  }
  friend NCPoly operator*(const Cyclo12& s, const NCPoly& a) {
    NCPoly r;
    if (s.is_zero()) return r;
    for (const auto& [w, cf] : a.terms) {
      Cyclo12 v = s * cf;
      if (!v.is_zero()) r.terms.emplace(w, std::move(v));
    }
    return r;
  }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms) {
      for (const auto& [wb, cb] : b.terms) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(w, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.terms == b.terms;
  }
};

// {X, Y, Z} = XYZ + j*YZX + j^2*ZXY, the Z3 analogue of the commutator.
inline NCPoly ternary_j_commutator(const NCPoly& x, const NCPoly& y,
                                   const NCPoly& z) {
  return x * y * z + Cyclo12::j_unit() * (y * z * x) +
         Cyclo12::j2_unit() * (z * x * y);
}

inline NCPoly commutator(const NCPoly& x, const NCPoly& y) {
  return x * y - y * x;
}

}  // namespace ternwb::gradedalg
