#include <doctest.h>

#include "ternwb/clifford.hpp"
#include "ternwb/relations.hpp"

using namespace ternwb::gradedalg;
using ternwb::exactfield::Cyclo12;

TEST_CASE("free-algebra dimensions below the relation degree") {
  for (int N = 1; N <= 4; ++N) {
    for (RelationVariant v : all_variants) {
      CHECK(quotient_dim(v, N, 0) == 1);
      CHECK(quotient_dim(v, N, 1) == N);
      CHECK(quotient_dim(v, N, 2) == N * N);
    }
  }
}

TEST_CASE("Grassmann-type graded dimensions") {
  for (int N = 2; N <= 4; ++N) {
    for (RelationVariant v : {RelationVariant::Lam, RelationVariant::LamBar}) {
      HilbertReport r = hilbert_check(v, N);
      CHECK(r.ok);
      CHECK(r.dims[3] == N * (N - 1) * (N + 1) / 3);
      CHECK(r.dims[4] == 0);
    }
  }
}

TEST_CASE("specific numbers: N=2 gives 1,2,4,2,0 and N=3 gives 1,3,9,8,0") {
  HilbertReport r2 = hilbert_check(RelationVariant::Lam, 2);
  CHECK(r2.dims == std::array<int, 5>{1, 2, 4, 2, 0});
  HilbertReport r3 = hilbert_check(RelationVariant::Lam, 3);
  CHECK(r3.dims == std::array<int, 5>{1, 3, 9, 8, 0});
}

TEST_CASE("cyclic-weight algebra degree-3 dimension equals the necklace count") {
  for (int N = 1; N <= 3; ++N) {
    int q = quotient_dim(RelationVariant::S, N, 3);
    CHECK(q == necklace_dim_s_degree3(N));
    CHECK(q == (2 * N * N * N + N) / 3);
  }
}

TEST_CASE("degree span bookkeeping") {
  DegreeSpan s = ideal_degree_span(RelationVariant::Lam, 2, 3);
  CHECK(s.degree == 3);
  CHECK(s.n_words == 8);
  CHECK(s.rank == 6);
  CHECK_THROWS(ideal_degree_span(RelationVariant::Lam, 2, 2));
  CHECK_THROWS(ideal_degree_span(RelationVariant::Lam, 2, 6));
}

TEST_CASE("surjection arrows hold in the stated direction only") {
  for (int N : {2, 3}) {
    CHECK(surjection_check(RelationVariant::S, RelationVariant::S1, N));
    CHECK(surjection_check(RelationVariant::S1, RelationVariant::S0, N));
    CHECK(surjection_check(RelationVariant::Sbar, RelationVariant::S1, N));
    CHECK(surjection_check(RelationVariant::Lam0, RelationVariant::Lam1, N));
    CHECK(surjection_check(RelationVariant::Lam1, RelationVariant::Lam, N));
    CHECK(surjection_check(RelationVariant::Lam1, RelationVariant::LamBar, N));
    CHECK_FALSE(surjection_check(RelationVariant::Lam, RelationVariant::Lam1, N));
    CHECK_FALSE(surjection_check(RelationVariant::S0, RelationVariant::S, N));
  }
}

TEST_CASE("variant names round trip") {
  for (RelationVariant v : all_variants) {
    auto back = variant_from_name(variant_name(v));
    REQUIRE(back.has_value());
    CHECK(*back == v);
  }
  CHECK_FALSE(variant_from_name("nope").has_value());
}

TEST_CASE("jacobi check accepts su(2) and rejects a perturbation") {
  auto f = ternwb::matrixternary::pauli_structure_constants();
  CHECK(jacobi_check(f, 3));
  // an antisymmetric perturbation off the epsilon support: [e1,e2] gains an
  // e1 component, which no 3-generator epsilon-diagonal algebra tolerates
  f[(0 * 3 + 0) * 3 + 1] += Cyclo12::one();
  f[(0 * 3 + 1) * 3 + 0] -= Cyclo12::one();
  CHECK_FALSE(jacobi_check(f, 3));
  f[0] += Cyclo12::one();  // now break antisymmetry outright
  CHECK_THROWS(jacobi_check(f, 3));
}
