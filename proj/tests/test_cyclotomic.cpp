#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ternwb/cyclotomic.hpp"

using ternwb::exactfield::Cyclo12;
using ternwb::exactfield::Rat;
using ternwb::exactfield::rat;

namespace {
Cyclo12 rand_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  Cyclo12 z = Cyclo12::from_int(d(rng));
  for (int k = 1; k < 4; ++k)
    z += Cyclo12::from_int(d(rng)) * Cyclo12::zeta().pow(k);
  return z;
}
}  // namespace

TEST_CASE("zeta is a primitive twelfth root of unity") {
  Cyclo12 z = Cyclo12::zeta();
  CHECK(z.pow(12) == Cyclo12::one());
  CHECK(z.pow(6) == -Cyclo12::one());
  for (int k = 1; k < 12; ++k) CHECK(z.pow(k) != Cyclo12::one());
  CHECK(z.pow(4) == z.pow(2) - Cyclo12::one());
}

TEST_CASE("the distinguished constants") {
  Cyclo12 j = Cyclo12::j_unit();
  Cyclo12 j2 = Cyclo12::j2_unit();
  Cyclo12 i = Cyclo12::i_unit();
  CHECK(j == Cyclo12::zeta().pow(2) - Cyclo12::one());
  CHECK(j * j == j2);
  CHECK(j * j2 == Cyclo12::one());
  CHECK(Cyclo12::one() + j + j2 == Cyclo12::zero());
  CHECK(i * i == -Cyclo12::one());
  CHECK(Cyclo12::sqrt3() * Cyclo12::sqrt3() == Cyclo12::from_int(3));
  CHECK(j - j2 == Cyclo12::i_unit() * Cyclo12::sqrt3());
}

TEST_CASE("conjugation is the unique automorphism sending zeta to its inverse") {
  std::mt19937_64 rng(7);
  Cyclo12 z = Cyclo12::zeta();
  CHECK(conj(z) * z == Cyclo12::one());
  CHECK(conj(Cyclo12::j_unit()) == Cyclo12::j2_unit());
  CHECK(conj(Cyclo12::i_unit()) == -Cyclo12::i_unit());
  CHECK(conj(Cyclo12::sqrt3()) == Cyclo12::sqrt3());
  for (int t = 0; t < 50; ++t) {
    Cyclo12 a = rand_elem(rng), b = rand_elem(rng);
    CHECK(conj(a + b) == conj(a) + conj(b));
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(conj(a)) == a);
  }
}

TEST_CASE("inverses exist for nonzero elements") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Cyclo12 a = rand_elem(rng);
    if (a.is_zero()) continue;
    CHECK(a * inv(a) == Cyclo12::one());
  }
  CHECK_THROWS(inv(Cyclo12::zero()));
}

TEST_CASE("rational scalar multiplication and from_rat") {
  Cyclo12 half = Cyclo12::from_rat(rat(1, 2));
  CHECK(half + half == Cyclo12::one());
  CHECK(rat(2, 3) * Cyclo12::from_int(3) == Cyclo12::from_int(2));
  CHECK(Cyclo12::from_int(3) * rat(2, 3) == Cyclo12::from_int(2));
  CHECK(Rat(-1, 240) * Cyclo12::i_unit() ==
        Cyclo12::from_rat(rat(-1, 240)) * Cyclo12::i_unit());
}

TEST_CASE("numeric embedding") {
  std::complex<double> z = Cyclo12::zeta().to_complex();
  const double pi = std::acos(-1.0);
  CHECK(std::abs(z - std::polar(1.0, pi / 6.0)) < 1e-14);
  std::complex<double> j = Cyclo12::j_unit().to_complex();
  CHECK(std::abs(j - std::polar(1.0, 2.0 * pi / 3.0)) < 1e-14);
  CHECK(std::abs(Cyclo12::sqrt3().to_complex() - std::sqrt(3.0)) < 1e-14);
}

TEST_CASE("ordering is a strict total order compatible with equality") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    Cyclo12 a = rand_elem(rng), b = rand_elem(rng);
    int rels = (a < b) + (b < a) + (a == b);
    CHECK(rels == 1);
  }
}

TEST_CASE("string rendering round trip of simple values") {
  CHECK(Cyclo12::zero().to_string() == "0");
  CHECK(Cyclo12::one().is_zero() == false);
  CHECK(Cyclo12::j_unit().to_string() != Cyclo12::j2_unit().to_string());
}
