#include <doctest.h>

#include <random>

#include "ternwb/clifford.hpp"

using namespace ternwb::matrixternary;
using ternwb::exactfield::Cyclo12;

TEST_CASE("generator matrices satisfy their cyclic anticommutator table") {
  EtaReport r = eta_verify();
  CHECK(r.ok);
  CHECK(r.checked == 54);
  CHECK(r.failures.empty());
}

TEST_CASE("cyclic products of distinct generators are unit scalars") {
  QSet qs = q_matrices();
  CHECK(qs.q[0] * qs.q[1] * qs.q[2] == MatC::identity(3));
  Cyclo12 c;
  MatC m = tern_anticomm(qs.q[0], qs.q[1], qs.q[2]);
  REQUIRE(m.is_scalar(&c));
  CHECK(c == Cyclo12::from_int(3));
  CHECK(c == eta(1, 2, 3));
  MatC odd = tern_anticomm(qs.q[1], qs.q[0], qs.q[2]);
  REQUIRE(odd.is_scalar(&c));
  CHECK(c == Cyclo12::from_int(3) * Cyclo12::j2_unit());
}

TEST_CASE("the displayed table values differ from the computed ones") {
  CHECK(eta_printed(1, 1, 1) == Cyclo12::one());
  CHECK(eta_printed(1, 2, 3) == Cyclo12::j2_unit());
  CHECK(eta_printed(2, 1, 3) == Cyclo12::j_unit());
  CHECK(eta_printed(1, 1, 2).is_zero());
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        if (eta_printed(a, b, c).is_zero())
          CHECK(eta(a, b, c).is_zero());
        else
          CHECK(eta(a, b, c) != eta_printed(a, b, c));
      }
}

TEST_CASE("dotted table is the conjugate-reversed table") {
  QSet qs = q_matrices();
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        CHECK(eta_dotted(a, b, c) == conj(eta(c, b, a)));
        MatC m = tern_anticomm(qs.qdag[a - 1], qs.qdag[b - 1], qs.qdag[c - 1]);
        Cyclo12 s;
        REQUIRE(m.is_scalar(&s));
        CHECK(s == eta_dotted(a, b, c));
      }
}

TEST_CASE("skew-weighted combinations vanish") {
  SkewReport r = skew_vanish_check();
  CHECK(r.j_zero);
  CHECK(r.j2_zero);
  CHECK(r.odd_j_zero);
  CHECK(r.odd_j2_zero);
  CHECK(r.ok());
}

TEST_CASE("matrix arithmetic basics") {
  std::mt19937_64 rng(3);
  MatC a = random_small_matrix(rng, 3);
  MatC b = random_small_matrix(rng, 3);
  MatC c = random_small_matrix(rng, 3);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * MatC::identity(3) == a);
  CHECK(dagger(dagger(a)) == a);
  CHECK(dagger(a * b) == dagger(b) * dagger(a));
}

TEST_CASE("determinant and inverse over the exact field") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    MatC p = random_invertible(rng, 3);
    CHECK(det(p) != Cyclo12::zero());
    CHECK(inverse(p) * p == MatC::identity(3));
    CHECK(p * inverse(p) == MatC::identity(3));
  }
  MatC z = MatC::zero(2);
  CHECK(det(z) == Cyclo12::zero());
  CHECK_THROWS(inverse(z));
}

TEST_CASE("similarity transforms preserve the table") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 25; ++t)
    CHECK(similarity_invariance(random_invertible(rng, 3)));
}

TEST_CASE("hermitian generator cubics") {
  auto sig = pauli_matrices();
  CHECK(pauli_cubic(1, 2, 1) == Cyclo12::from_int(-2) * sig[1]);
  CHECK(pauli_cubic(2, 1, 2) == Cyclo12::from_int(-2) * sig[0]);
  CHECK(pauli_cubic(1, 2, 3).is_zero());
  CHECK(pauli_cubic(3, 1, 3) == Cyclo12::from_int(-2) * sig[0]);
}

TEST_CASE("hermitian generators are involutive and traceless") {
  auto sig = pauli_matrices();
  for (const MatC& s : sig) {
    CHECK(s * s == MatC::identity(2));
    CHECK(dagger(s) == s);
    CHECK(s.at(0, 0) + s.at(1, 1) == Cyclo12::zero());
  }
}

TEST_CASE("epsilon invariance characterizes unimodular matrices") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t)
    CHECK(epsilon_invariance_check(random_det_one(rng)));
  int seen = 0;
  while (seen < 30) {
    MatC s = random_invertible(rng, 2);
    if (det(s) == Cyclo12::one()) continue;
    ++seen;
    CHECK_FALSE(epsilon_invariance_check(s));
  }
}
