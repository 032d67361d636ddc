#include "ternwb/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace ternwb::gradedforms {

CoordPoly CoordPoly::constant(int nvars, const Cyclo12& c) {
  CoordPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

CoordPoly CoordPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::out_of_range("variable index");
  CoordPoly p(nvars);
  std::vector<int> mono(nvars, 0);
  mono[i - 1] = 1;
  p.add_term(mono, Cyclo12::one());
  return p;
}

void CoordPoly::add_term(const std::vector<int>& mono, const Cyclo12& c) {
  if (c == Cyclo12::zero()) return;
  auto it = terms.find(mono);
  if (it == terms.end()) {
    terms.emplace(mono, c);
  } else {
    it->second = it->second + c;
    if (it->second == Cyclo12::zero()) terms.erase(it);
  }
}

CoordPoly operator+(const CoordPoly& a, const CoordPoly& b) {
  CoordPoly r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c);
  return r;
}

CoordPoly operator-(const CoordPoly& a, const CoordPoly& b) {
  CoordPoly r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, -c);
  return r;
}

CoordPoly operator*(const CoordPoly& a, const CoordPoly& b) {
  CoordPoly r(a.nvars);
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      std::vector<int> m(a.nvars);
      for (int k = 0; k < a.nvars; ++k) m[k] = ma[k] + mb[k];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

CoordPoly operator*(const Cyclo12& s, const CoordPoly& a) {
  CoordPoly r(a.nvars);
  for (const auto& [m, c] : a.terms) r.add_term(m, s * c);
  return r;
}

CoordPoly derivative(const CoordPoly& p, int i) {
  CoordPoly r(p.nvars);
  for (const auto& [m, c] : p.terms) {
    if (m[i - 1] == 0) continue;
    std::vector<int> mono = m;
    --mono[i - 1];
    r.add_term(mono, Rat(m[i - 1]) * c);
  }
  return r;
}

int form_grade(const FormWord& w) {
  int g = 0;
  for (const auto& b : w) g += (b.kind == BasisForm::Kind::dx) ? 1 : 2;
  return g % 3;
}

GradedForm GradedForm::from_function(const CoordPoly& f) {
  GradedForm r(f.nvars);
  r.add_term({}, f);
  return r;
}

void GradedForm::add_term(const FormWord& w, const CoordPoly& p) {
  if (p.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, p);
  } else {
    it->second = it->second + p;
    if (it->second.is_zero()) terms.erase(it);
  }
}

GradedForm operator+(const GradedForm& a, const GradedForm& b) {
  GradedForm r = a;
  for (const auto& [w, p] : b.terms) r.add_term(w, p);
  return r;
}

GradedForm operator-(const GradedForm& a, const GradedForm& b) {
  GradedForm r = a;
  for (const auto& [w, p] : b.terms) {
    r.add_term(w, Cyclo12::from_int(-1) * p);
  }
  return r;
}

GradedForm operator*(const GradedForm& a, const GradedForm& b) {
  GradedForm r(a.nvars);
  for (const auto& [wa, pa] : a.terms) {
    for (const auto& [wb, pb] : b.terms) {
      FormWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, pa * pb);
    }
  }
  return r;
}

GradedForm operator*(const Cyclo12& s, const GradedForm& a) {
  GradedForm r(a.nvars);
  for (const auto& [w, p] : a.terms) r.add_term(w, s * p);
  return r;
}

GradedForm d(const GradedForm& form) {
  const std::array<Cyclo12, 3> jp = {Cyclo12::one(), Cyclo12::j_unit(),
                                     Cyclo12::j2_unit()};
  GradedForm r(form.nvars);
  for (const auto& [w, f] : form.terms) {
    for (int i = 1; i <= form.nvars; ++i) {
      CoordPoly g = derivative(f, i);
      if (g.is_zero()) continue;
      FormWord word;
      word.reserve(w.size() + 1);
      word.push_back({BasisForm::Kind::dx, i});
      word.insert(word.end(), w.begin(), w.end());
      r.add_term(word, g);
    }
    int prefix_grade = 0;
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (w[t].kind == BasisForm::Kind::dx) {
        FormWord word = w;
        word[t].kind = BasisForm::Kind::d2x;
        r.add_term(word, jp[prefix_grade % 3] * f);
      }
      prefix_grade += (w[t].kind == BasisForm::Kind::dx) ? 1 : 2;
    }
  }
  return r;
}

namespace {

// Reduces one word; returns false if it vanishes, otherwise fills the
// canonical word and the accumulated power of j picked up along the way.
bool canonicalize_word(const FormWord& w, FormWord* out, int* j_power) {
  std::vector<int> dx_indices;
  int d2x_index = 0;
  int d2x_count = 0;
  int swaps = 0;
  for (const auto& b : w) {
    if (b.kind == BasisForm::Kind::d2x) {
      ++d2x_count;
      d2x_index = b.index;
    } else {
      dx_indices.push_back(b.index);
      if (d2x_count > 0) ++swaps;  // this dx must move left past d2x
    }
  }
  if (d2x_count >= 2) return false;
  int jpow = (2 * swaps) % 3;

  if (dx_indices.size() >= 4) return false;
  if (dx_indices.size() == 3) {
    const auto rot = [](std::vector<int> v) {
      std::rotate(v.begin(), v.begin() + 1, v.end());
      return v;
    };
    std::vector<int> r1 = rot(dx_indices);
    if (r1 == dx_indices) return false;  // all indices equal
    std::vector<int> r2 = rot(r1);
    int t = 0;
    std::vector<int> best = dx_indices;
    if (r1 < best) {
      best = r1;
      t = 1;
    }
    if (r2 < best) {
      best = r2;
      t = 2;
    }
    dx_indices = best;
    jpow = (jpow + t) % 3;
  }

  out->clear();
  for (int idx : dx_indices) out->push_back({BasisForm::Kind::dx, idx});
  if (d2x_count == 1) out->push_back({BasisForm::Kind::d2x, d2x_index});
  *j_power = jpow;
  return true;
}

}  // namespace

GradedForm normal_form(const GradedForm& form) {
  const std::array<Cyclo12, 3> jp = {Cyclo12::one(), Cyclo12::j_unit(),
                                     Cyclo12::j2_unit()};
  GradedForm r(form.nvars);
  for (const auto& [w, p] : form.terms) {
    FormWord canon;
    int jpow = 0;
    if (!canonicalize_word(w, &canon, &jpow)) continue;
    r.add_term(canon, jp[jpow] * p);
  }
  return r;
}

bool d3_check(const CoordPoly& f) {
  GradedForm f0 = GradedForm::from_function(f);
  return normal_form(d(d(d(f0)))).is_zero();
}

}  // namespace ternwb::gradedforms
