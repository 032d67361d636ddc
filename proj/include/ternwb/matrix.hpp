#pragma once

#include <stdexcept>
#include <vector>

#include "ternwb/cyclotomic.hpp"

namespace ternwb::matrixternary {

using exactfield::Cyclo12;
using exactfield::Rat;

// Dense square matrix over Q(zeta_12); every operation is exact.
struct MatC {
  int n = 0;
  std::vector<Cyclo12> e;  // row-major

  MatC() = default;
  explicit MatC(int dim) : n(dim), e(static_cast<size_t>(dim) * dim) {}

  static MatC identity(int dim) {
    MatC m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Cyclo12::one();
    return m;
  }
  static MatC zero(int dim) { return MatC(dim); }

  Cyclo12& at(int r, int c) { return e[static_cast<size_t>(r) * n + c]; }
  const Cyclo12& at(int r, int c) const {
    return e[static_cast<size_t>(r) * n + c];
  }

  friend bool operator==(const MatC& a, const MatC& b) {
    return a.n == b.n && a.e == b.e;
  }

  friend MatC operator+(const MatC& a, const MatC& b) {
    check_dims(a, b);
    MatC r(a.n);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
  }
  friend MatC operator-(const MatC& a, const MatC& b) {
    check_dims(a, b);
    MatC r(a.n);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
  }
  friend MatC operator-(const MatC& a) {
    MatC r(a.n);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = -a.e[k];
    return r;
  }
  friend MatC operator*(const Cyclo12& s, const MatC& a) {
    MatC r(a.n);
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = s * a.e[k];
    return r;
  }
  friend MatC operator*(const MatC& a, const MatC& b) {
    check_dims(a, b);
    MatC r(a.n);
    for (int i = 0; i < a.n; ++i)
      for (int k = 0; k < a.n; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < a.n; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
      }
    return r;
  }

  bool is_zero() const {
    for (const auto& v : e)
      if (!v.is_zero()) return false;
    return true;
  }

  // True iff the matrix is c * identity for some scalar c (returned via out).
  bool is_scalar(Cyclo12* out = nullptr) const {
    const Cyclo12& d = at(0, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j && !(at(i, j) == d)) return false;
        if (i != j && !at(i, j).is_zero()) return false;
      }
    if (out) *out = d;
    return true;
  }

 private:
  static void check_dims(const MatC& a, const MatC& b) {
    if (a.n != b.n) throw std::invalid_argument("MatC: dimension mismatch");
  }
};

// Hermitian conjugate: dagger(M)[i][j] = conj(M[j][i]).
inline MatC dagger(const MatC& m) {
  MatC r(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r.at(i, j) = conj(m.at(j, i));
  return r;
}

inline Cyclo12 det(const MatC& m) {
  MatC a = m;
  Cyclo12 d = Cyclo12::one();
  for (int piv = 0; piv < a.n; ++piv) {
    int row = piv;
    while (row < a.n && a.at(row, piv).is_zero()) ++row;
    if (row == a.n) return Cyclo12::zero();
    if (row != piv) {
      for (int c = 0; c < a.n; ++c) std::swap(a.at(piv, c), a.at(row, c));
      d = -d;
    }
    d *= a.at(piv, piv);
    Cyclo12 ip = inv(a.at(piv, piv));
    for (int r = piv + 1; r < a.n; ++r) {
      if (a.at(r, piv).is_zero()) continue;
      Cyclo12 f = a.at(r, piv) * ip;
      for (int c = piv; c < a.n; ++c) a.at(r, c) -= f * a.at(piv, c);
    }
  }
  return d;
}

inline MatC inverse(const MatC& m) {
  MatC a = m;
  MatC r = MatC::identity(m.n);
  for (int piv = 0; piv < a.n; ++piv) {
    int row = piv;
    while (row < a.n && a.at(row, piv).is_zero()) ++row;
    if (row == a.n) throw std::domain_error("MatC: singular matrix");
    if (row != piv)
      for (int c = 0; c < a.n; ++c) {
        std::swap(a.at(piv, c), a.at(row, c));
        std::swap(r.at(piv, c), r.at(row, c));
      }
    Cyclo12 ip = inv(a.at(piv, piv));
    for (int c = 0; c < a.n; ++c) {
      a.at(piv, c) *= ip;
      r.at(piv, c) *= ip;
    }
    for (int rr = 0; rr < a.n; ++rr) {
      if (rr == piv || a.at(rr, piv).is_zero()) continue;
      Cyclo12 f = a.at(rr, piv);
      for (int c = 0; c < a.n; ++c) {
        a.at(rr, c) -= f * a.at(piv, c);
        r.at(rr, c) -= f * r.at(piv, c);
      }
    }
  }
  return r;
}

// ABC + BCA + CAB, the totally cyclic ternary anticommutator.
inline MatC tern_anticomm(const MatC& a, const MatC& b, const MatC& c) {
  return a * b * c + b * c * a + c * a * b;
}

// ABC + j*BCA + j^2*CAB.
inline MatC ternary_j_commutator(const MatC& a, const MatC& b, const MatC& c) {
  return a * b * c + Cyclo12::j_unit() * (b * c * a) +
         Cyclo12::j2_unit() * (c * a * b);
}

inline MatC commutator(const MatC& a, const MatC& b) {
  return a * b - b * a;
}

}  // namespace ternwb::matrixternary
