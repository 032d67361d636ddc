#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "ternwb/rational.hpp"

namespace ternwb::exactfield {

// Exact element of the 12th cyclotomic field Q(zeta), zeta a primitive 12th
// root of unity.  Stored in the power basis {1, zeta, zeta^2, zeta^3} with the
// reduction zeta^4 = zeta^2 - 1 (minimal polynomial x^4 - x^2 + 1).
//
// The two roots of unity the workbench needs live here:
//   j = zeta^2 - 1   (primitive cube root, j^3 = 1, 1 + j + j^2 = 0)
//   i = zeta^3       (i^2 = -1)
// and sqrt(3) = 2*zeta - zeta^3 is also in the field.
struct Cyclo12 {
  std::array<Rat, 4> c{};  // c[k] multiplies zeta^k

  Cyclo12() = default;
  explicit Cyclo12(const Rat& r) { c[0] = r; }
  Cyclo12(Rat a0, Rat a1, Rat a2, Rat a3)
      : c{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  static Cyclo12 zero() { return Cyclo12(); }
  static Cyclo12 one() { return Cyclo12(Rat(1)); }
  static Cyclo12 from_int(long long n) { return Cyclo12(Rat(n)); }
  static Cyclo12 from_rat(const Rat& r) { return Cyclo12(r); }
  static Cyclo12 zeta() { return Cyclo12(Rat(0), Rat(1), Rat(0), Rat(0)); }
  static Cyclo12 i_unit() { return Cyclo12(Rat(0), Rat(0), Rat(0), Rat(1)); }
  static Cyclo12 j_unit() { return Cyclo12(Rat(-1), Rat(0), Rat(1), Rat(0)); }
  static Cyclo12 j2_unit() { return Cyclo12(Rat(0), Rat(0), Rat(-1), Rat(0)); }
  static Cyclo12 sqrt3() { return Cyclo12(Rat(0), Rat(2), Rat(0), Rat(-1)); }

  bool is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
  }

  friend bool operator==(const Cyclo12& a, const Cyclo12& b) {
    return a.c == b.c;
  }
  friend bool operator!=(const Cyclo12& a, const Cyclo12& b) {
    return !(a == b);
  }
  friend bool operator<(const Cyclo12& a, const Cyclo12& b) {
    return a.c < b.c;
  }

  friend Cyclo12 operator+(const Cyclo12& a, const Cyclo12& b) {
    Cyclo12 r;
    for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
  }
  friend Cyclo12 operator-(const Cyclo12& a, const Cyclo12& b) {
    Cyclo12 r;
    for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
  }
  friend Cyclo12 operator-(const Cyclo12& a) {
    Cyclo12 r;
    for (int k = 0; k < 4; ++k) r.c[k] = -a.c[k];
    return r;
  }

  // Convolve, then fold degrees 4..6 back with
  //   zeta^4 = zeta^2 - 1,  zeta^5 = zeta^3 - zeta,  zeta^6 = -1.
  friend Cyclo12 operator*(const Cyclo12& a, const Cyclo12& b) {
    std::array<Rat, 7> p{};
    for (int m = 0; m < 4; ++m) {
      if (a.c[m] == 0) continue;
      for (int n = 0; n < 4; ++n) {
        if (b.c[n] == 0) continue;
        p[m + n] += a.c[m] * b.c[n];
      }
    }
    Cyclo12 r;
    r.c[0] = p[0] - p[4] - p[6];
    r.c[1] = p[1] - p[5];
    r.c[2] = p[2] + p[4];
    r.c[3] = p[3] + p[5];
    return r;
  }

  Cyclo12& operator+=(const Cyclo12& b) { return *this = *this + b; }
  Cyclo12& operator-=(const Cyclo12& b) { return *this = *this - b; }
  Cyclo12& operator*=(const Cyclo12& b) { return *this = *this * b; }

  friend Cyclo12 operator*(const Rat& s, const Cyclo12& a) {
    Cyclo12 r;
    for (int k = 0; k < 4; ++k) r.c[k] = s * a.c[k];
    return r;
  }

  Cyclo12 pow(int e) const {
    if (e < 0) return inv(*this).pow(-e);
    Cyclo12 acc = one(), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  // Complex conjugation is the field automorphism zeta -> zeta - zeta^3
  // (zeta^-1).  On coordinates: (a0, a1, a2, a3) -> (a0+a2, a1, -a2, -a1-a3),
  // using (zeta - zeta^3)^2 = 1 - zeta^2 and (zeta - zeta^3)^3 = -zeta^3.
  friend Cyclo12 conj(const Cyclo12& a) {
    return Cyclo12(a.c[0] + a.c[2], a.c[1], -a.c[2], -a.c[1] - a.c[3]);
  }

  bool is_real() const { return conj(*this) == *this; }

  // Field inverse via the 4x4 linear system (multiplication-by-a matrix).
  friend Cyclo12 inv(const Cyclo12& a) {
    if (a.is_zero()) throw std::domain_error("Cyclo12: division by zero");
    // Columns of M are a * zeta^k expressed in the power basis.
    std::array<std::array<Rat, 5>, 4> m{};  // augmented with e0
    Cyclo12 col = a;
    for (int k = 0; k < 4; ++k) {
      for (int r = 0; r < 4; ++r) m[r][k] = col.c[r];
      col = col * zeta();
    }
    m[0][4] = 1;
    for (int piv = 0; piv < 4; ++piv) {
      int row = piv;
      while (row < 4 && m[row][piv] == 0) ++row;
      if (row == 4) throw std::domain_error("Cyclo12: singular inverse system");
      std::swap(m[piv], m[row]);
      Rat d = m[piv][piv];
      for (int cidx = piv; cidx < 5; ++cidx) m[piv][cidx] /= d;
      for (int r = 0; r < 4; ++r) {
        if (r == piv || m[r][piv] == 0) continue;
        Rat f = m[r][piv];
        for (int cidx = piv; cidx < 5; ++cidx) m[r][cidx] -= f * m[piv][cidx];
      }
    }
    return Cyclo12(m[0][4], m[1][4], m[2][4], m[3][4]);
  }

  friend Cyclo12 operator/(const Cyclo12& a, const Cyclo12& b) {
    return a * inv(b);
  }

  // Principal embedding, zeta = exp(i*pi/6).
  std::complex<double> to_complex() const {
    const std::complex<double> z(0.8660254037844386467637231707529362,
                                 0.5);
    std::complex<double> acc(0.0, 0.0);
    for (int k = 3; k >= 0; --k) acc = acc * z + to_double(c[k]);
    return acc;
  }

  // Rational part along each member of the real-friendly basis {1, i, j, ij}:
  //   zeta^2 = j + 1,  zeta^3 = i,  zeta = -ij.
  std::array<Rat, 4> display_coords() const {
    return {c[0] + c[2], c[3], c[2], -c[1]};
  }

  std::string to_string() const {
    static const char* names[4] = {"", "i", "j", "ij"};
    auto d = display_coords();
    std::string out;
    for (int k = 0; k < 4; ++k) {
      if (d[k] == 0) continue;
      bool neg = d[k] < 0;
      Rat mag = neg ? Rat(-d[k]) : d[k];
      std::string coeff = exactfield::to_string(mag);
      std::string term;
      if (k == 0) {
        term = coeff;
      } else if (mag == 1) {
        term = names[k];
      } else {
        term = coeff + "*" + names[k];
      }
      if (out.empty()) {
        out = (neg ? "-" : "") + term;
      } else {
        out += (neg ? " - " : " + ") + term;
      }
    }
    return out.empty() ? "0" : out;
  }
};

inline Cyclo12 operator*(const Cyclo12& a, const Rat& s) { return s * a; }

}  // namespace ternwb::exactfield
