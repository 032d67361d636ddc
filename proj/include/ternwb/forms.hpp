#pragma once

#include <compare>
#include <map>
#include <vector>

#include "ternwb/cyclotomic.hpp"

namespace ternwb::gradedforms {

using exactfield::Cyclo12;
using exactfield::Rat;

// Commutative polynomial in x^1..x^nvars; keys are exponent vectors.
struct CoordPoly {
  int nvars = 0;
  std::map<std::vector<int>, Cyclo12> terms;

  CoordPoly() = default;
  explicit CoordPoly(int n) : nvars(n) {}

  static CoordPoly constant(int nvars, const Cyclo12& c);
  static CoordPoly variable(int nvars, int i);  // x^i, 1-based

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& mono, const Cyclo12& c);

  friend CoordPoly operator+(const CoordPoly& a, const CoordPoly& b);
  friend CoordPoly operator-(const CoordPoly& a, const CoordPoly& b);
  friend CoordPoly operator*(const CoordPoly& a, const CoordPoly& b);
  friend CoordPoly operator*(const Cyclo12& s, const CoordPoly& a);
  friend bool operator==(const CoordPoly& a, const CoordPoly& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }
};

// Exact partial derivative with respect to x^i (1-based).
CoordPoly derivative(const CoordPoly& p, int i);

// One-letter basis forms: dx^i carries grade 1, d2x^i carries grade 2.
struct BasisForm {
  enum class Kind : int { dx = 0, d2x = 1 };
  Kind kind;
  int index;  // 1-based

  auto operator<=>(const BasisForm&) const = default;
};

using FormWord = std::vector<BasisForm>;

int form_grade(const FormWord& w);

// Sum of terms (polynomial coefficient) x (word of basis forms).
struct GradedForm {
  int nvars = 0;
  std::map<FormWord, CoordPoly> terms;

  GradedForm() = default;
  explicit GradedForm(int n) : nvars(n) {}

  static GradedForm from_function(const CoordPoly& f);

  bool is_zero() const { return terms.empty(); }
  void add_term(const FormWord& w, const CoordPoly& p);

  friend GradedForm operator+(const GradedForm& a, const GradedForm& b);
  friend GradedForm operator-(const GradedForm& a, const GradedForm& b);
  friend GradedForm operator*(const GradedForm& a, const GradedForm& b);
  friend GradedForm operator*(const Cyclo12& s, const GradedForm& a);
  friend bool operator==(const GradedForm& a, const GradedForm& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }
};

// Z3-graded differential: d(x^i) = dx^i, d(dx^i) = d2x^i, d(d2x^i) = 0, with
// the j-graded Leibniz rule d(w t) = (dw) t + j^grade(w) w (dt).
GradedForm d(const GradedForm& form);

// Rewrites every term to canonical shape and drops the vanishing ones:
//   - a word with two d2x letters is zero, as is one with four dx letters;
//   - d2x moves right past dx, each swap contributing j^2;
//   - a cyclic dx-triple is replaced by its lexicographically least rotation,
//     folding one factor j per left-rotation; an all-equal triple is zero.
// Idempotent and Cyclo12-linear.
GradedForm normal_form(const GradedForm& form);

// normal_form(d(d(d(f)))) == 0.
bool d3_check(const CoordPoly& f);

}  // namespace ternwb::gradedforms
