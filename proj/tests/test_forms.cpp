#include <doctest.h>

#include "ternwb/forms.hpp"

using namespace ternwb::gradedforms;
using ternwb::exactfield::Cyclo12;
using K = BasisForm::Kind;

namespace {
GradedForm single_word(int nvars, std::initializer_list<BasisForm> w,
                       Cyclo12 c = Cyclo12::one()) {
  GradedForm f(nvars);
  f.add_term(FormWord(w), CoordPoly::constant(nvars, c));
  return f;
}
}  // namespace

TEST_CASE("polynomial arithmetic and partial derivatives") {
  CoordPoly x = CoordPoly::variable(2, 1);
  CoordPoly y = CoordPoly::variable(2, 2);
  CoordPoly p = x * x * y + y;
  CHECK(derivative(p, 1) == Cyclo12::from_int(2) * (x * y));
  CoordPoly dy = derivative(p, 2);
  CHECK(dy == x * x + CoordPoly::constant(2, Cyclo12::one()));
  CHECK(derivative(derivative(p, 1), 2) == derivative(derivative(p, 2), 1));
}

TEST_CASE("first differential of a coordinate") {
  GradedForm x1 = GradedForm::from_function(CoordPoly::variable(2, 1));
  GradedForm dx1 = d(x1);
  GradedForm expect(2);
  expect.add_term({BasisForm{K::dx, 1}}, CoordPoly::constant(2, Cyclo12::one()));
  CHECK(dx1 == expect);
}

TEST_CASE("second differential is the grade-2 generator, not zero") {
  GradedForm x1 = GradedForm::from_function(CoordPoly::variable(1, 1));
  GradedForm dd = normal_form(d(d(x1)));
  CHECK_FALSE(dd.is_zero());
  GradedForm expect(1);
  expect.add_term({BasisForm{K::d2x, 1}}, CoordPoly::constant(1, Cyclo12::one()));
  CHECK(dd == expect);
}

TEST_CASE("third differential vanishes on representative functions") {
  CoordPoly x = CoordPoly::variable(2, 1);
  CoordPoly y = CoordPoly::variable(2, 2);
  CHECK(d3_check(x));
  CHECK(d3_check(x * x * y));
  CHECK(d3_check(x * x * x * y + Cyclo12::j_unit() * (y * y)));
}

TEST_CASE("form grades add modulo 3") {
  FormWord w1 = {BasisForm{K::dx, 1}};
  FormWord w2 = {BasisForm{K::d2x, 2}};
  FormWord w3 = {BasisForm{K::dx, 1}, BasisForm{K::d2x, 2}};
  CHECK(form_grade(w1) == 1);
  CHECK(form_grade(w2) == 2);
  CHECK(form_grade(w3) == 0);
}

TEST_CASE("rewrite rules") {
  CHECK(normal_form(single_word(2, {BasisForm{K::d2x, 1}, BasisForm{K::d2x, 2}}))
            .is_zero());
  CHECK(normal_form(single_word(1, {BasisForm{K::dx, 1}, BasisForm{K::dx, 1},
                                    BasisForm{K::dx, 1}}))
            .is_zero());
  GradedForm a =
      single_word(2, {BasisForm{K::d2x, 2}, BasisForm{K::dx, 1}});
  GradedForm b = single_word(2, {BasisForm{K::dx, 1}, BasisForm{K::d2x, 2}},
                             Cyclo12::j2_unit());
  CHECK(normal_form(a) == normal_form(b));
  GradedForm t1 = single_word(2, {BasisForm{K::dx, 2}, BasisForm{K::dx, 1},
                                  BasisForm{K::dx, 1}});
  GradedForm t2 = single_word(2, {BasisForm{K::dx, 1}, BasisForm{K::dx, 1},
                                  BasisForm{K::dx, 2}},
                              Cyclo12::j_unit());
  CHECK(normal_form(t1) == normal_form(t2));
}

TEST_CASE("graded product respects the j-weighted Leibniz rule on a sample") {
  CoordPoly x = CoordPoly::variable(2, 1);
  CoordPoly y = CoordPoly::variable(2, 2);
  GradedForm om(2), th(2);
  om.add_term({BasisForm{K::dx, 1}}, x);
  th.add_term({BasisForm{K::dx, 2}}, y);
  GradedForm lhs = normal_form(d(om * th));
  GradedForm rhs =
      normal_form(d(om) * th + Cyclo12::j_unit() * (om * d(th)));
  CHECK(lhs == rhs);
}

TEST_CASE("second differential expansion on x^2 y") {
  CoordPoly x = CoordPoly::variable(2, 1);
  CoordPoly y = CoordPoly::variable(2, 2);
  CoordPoly f = x * x * y;
  GradedForm lhs = normal_form(d(d(GradedForm::from_function(f))));
  GradedForm rhs(2);
  for (int k = 1; k <= 2; ++k)
    for (int i = 1; i <= 2; ++i)
      rhs.add_term({BasisForm{K::dx, k}, BasisForm{K::dx, i}},
                   derivative(derivative(f, i), k));
  for (int i = 1; i <= 2; ++i)
    rhs.add_term({BasisForm{K::d2x, i}}, derivative(f, i));
  CHECK(lhs == normal_form(rhs));
}
