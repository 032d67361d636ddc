#include "ternwb/relations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ternwb::gradedalg {

namespace {

using exactfield::Cyclo12;

// Sparse row over the degree-d word basis, entries sorted by column.
using SparseRow = std::vector<std::pair<int, Cyclo12>>;

SparseRow axpy(const SparseRow& a, const Cyclo12& s, const SparseRow& b) {
  // a - s*b, merged by column.
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t ia = 0, ib = 0;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
      out.push_back(a[ia++]);
    } else if (ia == a.size() || b[ib].first < a[ia].first) {
      Cyclo12 v = -(s * b[ib].second);
      if (!v.is_zero()) out.emplace_back(b[ib].first, std::move(v));
      ++ib;
    } else {
      Cyclo12 v = a[ia].second - s * b[ib].second;
      if (!v.is_zero()) out.emplace_back(a[ia].first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

// Online Gaussian elimination with first-nonzero pivot per incoming row.
// Rows are normalized to pivot coefficient 1; insertion order of equal work
// is fixed by the caller, so the resulting basis is deterministic.
class EchelonBasis {
 public:
  // Reduce r against the stored rows (leading-term elimination).
  SparseRow reduce(SparseRow r) const {
    while (!r.empty()) {
      auto it = rows_.find(r.front().first);
      if (it == rows_.end()) break;
      r = axpy(r, r.front().second, it->second);
    }
    return r;
  }

  bool add_row(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    Cyclo12 lead = r.front().second;
    if (!(lead == Cyclo12::one())) {
      Cyclo12 ilead = inv(lead);
      for (auto& [col, v] : r) v *= ilead;
    }
    int piv = r.front().first;
    rows_.emplace(piv, std::move(r));
    return true;
  }

  bool contains(SparseRow r) const { return reduce(std::move(r)).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }

  const std::map<int, SparseRow>& rows() const { return rows_; }

 private:
  std::map<int, SparseRow> rows_;  // pivot column -> row
};

Word make_word(Family f, std::initializer_list<int> idx) {
  Word w;
  for (int i : idx) w.push_back(GenSymbol{f, i});
  return w;
}

// All ordered index triples (a, b, c) in {1..N}^3, lexicographic.
template <typename Fn>
void for_each_triple(int N, Fn&& fn) {
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      for (int c = 1; c <= N; ++c) fn(a, b, c);
}

int word_index(const Word& w, int N) {
  int idx = 0;
  for (const auto& s : w) idx = idx * N + (s.index - 1);
  return idx;
}

SparseRow poly_to_row(const NCPoly& p, int N) {
  SparseRow r;
  for (const auto& [w, cf] : p.terms) r.emplace_back(word_index(w, N), cf);
  std::sort(r.begin(), r.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return r;
}

}  // namespace

const char* variant_name(RelationVariant v) {
  switch (v) {
    case RelationVariant::S: return "S";
    case RelationVariant::Sbar: return "Sbar";
    case RelationVariant::S1: return "S1";
    case RelationVariant::S0: return "S0";
    case RelationVariant::Lam0: return "Lam0";
    case RelationVariant::Lam1: return "Lam1";
    case RelationVariant::Lam: return "Lam";
    case RelationVariant::LamBar: return "LamBar";
  }
  return "?";
}

std::optional<RelationVariant> variant_from_name(const std::string& name) {
  for (RelationVariant v : all_variants)
    if (name == variant_name(v)) return v;
  return std::nullopt;
}

Family default_family(RelationVariant v) {
  switch (v) {
    case RelationVariant::S:
    case RelationVariant::Sbar:
    case RelationVariant::S1:
    case RelationVariant::S0:
      return Family::x;
    case RelationVariant::LamBar:
      return Family::thetabar;
    default:
      return Family::theta;
  }
}

std::vector<NCPoly> relation_instances(RelationVariant v, int N,
                                       std::optional<Family> family) {
  if (N < 1) throw std::invalid_argument("relation_instances: N >= 1 required");
  Family f = family.value_or(default_family(v));
  const Cyclo12 one = Cyclo12::one();
  const Cyclo12 j = Cyclo12::j_unit();
  const Cyclo12 j2 = Cyclo12::j2_unit();

  std::vector<NCPoly> rels;
  auto word3 = [&](int a, int b, int c) { return make_word(f, {a, b, c}); };

  switch (v) {
    case RelationVariant::S:
    case RelationVariant::Sbar: {
      // w + j*rot(w) + j^2*rot^2(w), with j and j^2 swapped for the bar form.
      const Cyclo12& c1 = (v == RelationVariant::S) ? j : j2;
      const Cyclo12& c2 = (v == RelationVariant::S) ? j2 : j;
      for_each_triple(N, [&](int a, int b, int c) {
        NCPoly p;
        p.add_term(word3(a, b, c), one);
        p.add_term(word3(b, c, a), c1);
        p.add_term(word3(c, a, b), c2);
        if (!p.is_zero()) rels.push_back(std::move(p));
      });
      break;
    }
    case RelationVariant::S1: {
      for_each_triple(N, [&](int a, int b, int c) {
        NCPoly p;
        p.add_term(word3(a, b, c), one);
        p.add_term(word3(b, c, a), -one);
        if (!p.is_zero()) rels.push_back(std::move(p));
      });
      break;
    }
    case RelationVariant::S0: {
      // w equals every permutation of w.
      static const int perms[5][3] = {
          {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
      for_each_triple(N, [&](int a, int b, int c) {
        int idx[3] = {a, b, c};
        for (const auto& pm : perms) {
          NCPoly p;
          p.add_term(word3(a, b, c), one);
          p.add_term(word3(idx[pm[0]], idx[pm[1]], idx[pm[2]]), -one);
          if (!p.is_zero()) rels.push_back(std::move(p));
        }
      });
      break;
    }
    case RelationVariant::Lam0: {
      // Sum over all six arrangements vanishes (with multiplicity when
      // indices repeat).
      static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                      {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
      for_each_triple(N, [&](int a, int b, int c) {
        int idx[3] = {a, b, c};
        NCPoly p;
        for (const auto& pm : perms)
          p.add_term(word3(idx[pm[0]], idx[pm[1]], idx[pm[2]]), one);
        if (!p.is_zero()) rels.push_back(std::move(p));
      });
      break;
    }
    case RelationVariant::Lam1: {
      // Cyclic sum vanishes; instantiating over all ordered triples also
      // covers the independent odd-combination relation.
      for_each_triple(N, [&](int a, int b, int c) {
        NCPoly p;
        p.add_term(word3(a, b, c), one);
        p.add_term(word3(b, c, a), one);
        p.add_term(word3(c, a, b), one);
        if (!p.is_zero()) rels.push_back(std::move(p));
      });
      break;
    }
    case RelationVariant::Lam:
    case RelationVariant::LamBar: {
      const Cyclo12& root = (v == RelationVariant::Lam) ? j : j2;
      for_each_triple(N, [&](int a, int b, int c) {
        NCPoly p;
        p.add_term(word3(a, b, c), one);
        p.add_term(word3(b, c, a), -root);
        if (!p.is_zero()) rels.push_back(std::move(p));
      });
      break;
    }
  }
  return rels;
}

DegreeSpan ideal_degree_span(RelationVariant v, int N, int d,
                             std::optional<Family> family) {
  if (d < 3 || d > 5)
    throw std::out_of_range("ideal_degree_span: degree must be in [3, 5]");
  Family f = family.value_or(default_family(v));
  auto rels = relation_instances(v, N, f);

  // Every relation, padded on the left and right by all words bringing the
  // total degree to d.  Enumeration order (pad lengths, then lexicographic
  // pad words, then relation order) is fixed for determinism.
  EchelonBasis basis;
  int extra = d - 3;
  for (int left_len = 0; left_len <= extra; ++left_len) {
    int right_len = extra - left_len;
    int n_left = 1, n_right = 1;
    for (int t = 0; t < left_len; ++t) n_left *= N;
    for (int t = 0; t < right_len; ++t) n_right *= N;
    for (int li = 0; li < n_left; ++li) {
      for (int ri = 0; ri < n_right; ++ri) {
        // Decode pad words from their lexicographic ranks.
        int prefix = li, suffix = ri;
        for (const auto& rel : rels) {
          SparseRow row;
          for (const auto& [w, cf] : rel.terms) {
            int mid = word_index(w, N);
            int full = prefix;
            for (int t = 0; t < 3; ++t) full = full * N;
            full += mid;
            for (int t = 0; t < right_len; ++t) full = full * N;
            full += suffix;
            row.emplace_back(full, cf);
          }
          std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) {
            return x.first < y.first;
          });
          basis.add_row(std::move(row));
        }
      }
    }
  }

  DegreeSpan span;
  span.degree = d;
  span.n_words = 1;
  for (int t = 0; t < d; ++t) span.n_words *= N;
  span.rank = basis.rank();
  span.rows.reserve(basis.rows().size());
  for (const auto& [piv, row] : basis.rows()) {
    std::vector<Cyclo12> dense(span.n_words, Cyclo12::zero());
    for (const auto& [col, val] : row) dense[col] = val;
    span.rows.push_back(std::move(dense));
  }
  return span;
}

int quotient_dim(RelationVariant v, int N, int d) {
  if (d < 0) throw std::out_of_range("quotient_dim: negative degree");
  if (d < 3) {
    int n = 1;
    for (int t = 0; t < d; ++t) n *= N;
    return n;
  }
  DegreeSpan span = ideal_degree_span(v, N, d);
  return span.n_words - span.rank;
}

HilbertReport hilbert_check(RelationVariant v, int N) {
  if (v != RelationVariant::Lam && v != RelationVariant::LamBar)
    throw std::invalid_argument(
        "hilbert_check: defined for the skew-symmetric variants");
  if (N < 1 || N > 4)
    throw std::out_of_range("hilbert_check: N must be in [1, 4]");
  HilbertReport rep;
  rep.variant = v;
  rep.N = N;
  for (int d = 0; d <= 4; ++d) rep.dims[d] = quotient_dim(v, N, d);
  rep.expected = {1, N, N * N, N * (N - 1) * (N + 1) / 3, 0};
  rep.ok = rep.dims == rep.expected;
  return rep;
}

bool surjection_check(RelationVariant src, RelationVariant dst, int N) {
  // Instantiate both relation patterns on the source's generator family; the
  // inclusion of ideal slices is about patterns, not generator names.
  Family f = default_family(src);
  EchelonBasis dst_basis;
  for (const auto& rel : relation_instances(dst, N, f))
    dst_basis.add_row(poly_to_row(rel, N));
  for (const auto& rel : relation_instances(src, N, f))
    if (!dst_basis.contains(poly_to_row(rel, N))) return false;
  return true;
}

int necklace_dim_s_degree3(int N) {
  int dim = 0;
  std::vector<bool> seen(N * N * N, false);
  for_each_triple(N, [&](int a, int b, int c) {
    int id = ((a - 1) * N + (b - 1)) * N + (c - 1);
    if (seen[id]) return;
    int rot1 = ((b - 1) * N + (c - 1)) * N + (a - 1);
    int rot2 = ((c - 1) * N + (a - 1)) * N + (b - 1);
    seen[id] = seen[rot1] = seen[rot2] = true;
    // A fixed point of rotation (a=b=c) keeps one dimension; an aperiodic
    // orbit of three words satisfies one relation, keeping two.
    dim += (id == rot1) ? 1 : 2;
  });
  return dim;
}

bool jacobi_check(const std::vector<Cyclo12>& f, int n) {
  if (static_cast<int>(f.size()) != n * n * n)
    throw std::invalid_argument("jacobi_check: expected n^3 entries");
  auto at = [&](int k, int i, int j) -> const Cyclo12& {
    return f[(k * n + i) * n + j];
  };
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!(at(k, i, j) == -at(k, j, i)))
          throw std::invalid_argument(
              "jacobi_check: structure constants must be antisymmetric");
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          Cyclo12 sum;
          for (int m = 0; m < n; ++m) {
            sum += at(k, i, m) * at(m, j, l);
            sum += at(k, j, m) * at(m, l, i);
            sum += at(k, l, m) * at(m, i, j);
          }
          if (!sum.is_zero()) return false;
        }
  return true;
}

}  // namespace ternwb::gradedalg
