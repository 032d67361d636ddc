#include "ternwb/suites.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <future>
#include <initializer_list>
#include <map>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "ternwb/clifford.hpp"
#include "ternwb/forms.hpp"
#include "ternwb/relations.hpp"
#include "ternwb/weyl.hpp"

namespace ternwb::cli {

namespace ga = ternwb::gradedalg;
namespace mt = ternwb::matrixternary;
namespace gf = ternwb::gradedforms;
namespace wo = ternwb::weylops;
namespace spc = ternwb::spectral;
using exactfield::Cyclo12;
using exactfield::Rat;

namespace {

CheckRecord make(std::string suite, std::string id, std::string ref, bool ok,
                 std::string lhs, std::string rhs,
                 std::optional<double> residual = {}) {
  return CheckRecord{std::move(suite), std::move(id),  std::move(ref),
                     ok ? "pass" : "fail", std::move(lhs), std::move(rhs),
                     residual};
}

CheckRecord disc(std::string suite, std::string id, std::string ref,
                 std::string lhs, std::string rhs,
                 std::optional<double> residual = {}) {
  return CheckRecord{std::move(suite), std::move(id), std::move(ref),
                     "discrepancy_documented", std::move(lhs), std::move(rhs),
                     residual};
}

int eps3(int i, int j, int k) {  // Levi-Civita, 1-based indices
  if (i == j || j == k || i == k) return 0;
  if ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) ||
      (i == 3 && j == 1 && k == 2))
    return 1;
  return -1;
}

Cyclo12 random_cyclo(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  Cyclo12 z = Cyclo12::from_int(d(rng));
  for (int k = 1; k < 4; ++k)
    z += Cyclo12::from_int(d(rng)) * Cyclo12::zeta().pow(k);
  return z;
}

Cyclo12 random_cyclo_nonzero(std::mt19937_64& rng) {
  for (;;) {
    Cyclo12 z = random_cyclo(rng);
    if (!z.is_zero()) return z;
  }
}

std::string dims_str(const std::array<int, 5>& d) {
  std::string s = "(";
  for (int k = 0; k < 5; ++k) {
    if (k) s += ",";
    s += std::to_string(d[k]);
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// algebra
// ---------------------------------------------------------------------------

std::vector<CheckRecord> suite_algebra(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string S = "algebra";
  std::mt19937_64 rng(cfg.seed ^ 0xa16ebau);

  {  // field axioms on random triples
    bool ok = true;
    for (int t = 0; t < 100 && ok; ++t) {
      Cyclo12 a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
      ok = ok && ((a + b) + c == a + (b + c));
      ok = ok && ((a * b) * c == a * (b * c));
      ok = ok && (a * (b + c) == a * b + a * c);
      ok = ok && (a * b == b * a);
      Cyclo12 nz = random_cyclo_nonzero(rng);
      ok = ok && (nz * inv(nz) == Cyclo12::one());
    }
    out.push_back(make(S, "alg-field-axioms", "cyclotomic-field", ok,
                       "100 random triples: associativity, distributivity, "
                       "commutativity, inverse of nonzero",
                       "all field identities hold exactly"));
  }
  {  // conjugation is an automorphism
    bool ok = conj(Cyclo12::zeta()) * Cyclo12::zeta() == Cyclo12::one();
    ok = ok && conj(Cyclo12::j_unit()) == Cyclo12::j2_unit();
    ok = ok && conj(Cyclo12::i_unit()) == -Cyclo12::i_unit();
    for (int t = 0; t < 100 && ok; ++t) {
      Cyclo12 a = random_cyclo(rng), b = random_cyclo(rng);
      ok = ok && (conj(a * b) == conj(a) * conj(b));
      ok = ok && (conj(a + b) == conj(a) + conj(b));
      ok = ok && (conj(conj(a)) == a);
    }
    out.push_back(make(S, "alg-field-conj", "cyclotomic-field", ok,
                       "conj is a ring automorphism; conj(zeta) = zeta^-1, "
                       "conj(j) = j^2, conj(i) = -i",
                       "verified on 100 random pairs"));
  }
  {  // numeric embedding is a homomorphism
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      Cyclo12 a = random_cyclo(rng), b = random_cyclo(rng);
      worst = std::max(worst,
                       std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()));
      worst = std::max(worst,
                       std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())));
      worst = std::max(worst, std::abs(conj(a).to_complex() - std::conj(a.to_complex())));
    }
    out.push_back(make(S, "alg-field-embedding", "cyclotomic-field",
                       worst <= 1e-12,
                       "complex embedding respects +, *, conj on 100 random pairs",
                       "max deviation <= 1e-12", worst));
  }
  {  // word grade is additive mod 3
    bool ok = true;
    std::uniform_int_distribution<int> fam(0, 2), len(0, 4), idx(1, 3);
    for (int t = 0; t < 50 && ok; ++t) {
      ga::Word v, w;
      int lv = len(rng), lw = len(rng);
      for (int k = 0; k < lv; ++k)
        v.push_back({static_cast<ga::Family>(fam(rng)), idx(rng)});
      for (int k = 0; k < lw; ++k)
        w.push_back({static_cast<ga::Family>(fam(rng)), idx(rng)});
      ga::Word vw = v;
      vw.insert(vw.end(), w.begin(), w.end());
      ok = ok && (ga::grade(vw) == (ga::grade(v) + ga::grade(w)) % 3);
    }
    out.push_back(make(S, "alg-grade-additivity", "z3-grading", ok,
                       "grade(vw) = grade(v) + grade(w) mod 3 on 50 random word pairs",
                       "Z3 grading is additive"));
  }

  auto random_ncpoly = [&rng](int nterms) {
    std::uniform_int_distribution<int> fam(0, 2), len(0, 3), idx(1, 2);
    ga::NCPoly p;
    for (int t = 0; t < nterms; ++t) {
      ga::Word w;
      int l = len(rng);
      for (int k = 0; k < l; ++k)
        w.push_back({static_cast<ga::Family>(fam(rng)), idx(rng)});
      p.add_term(w, random_cyclo(rng));
    }
    return p;
  };

  {  // cyclic covariance of the ternary bracket
    bool ok = true;
    for (int t = 0; t < 30 && ok; ++t) {
      ga::NCPoly x = random_ncpoly(3), y = random_ncpoly(3), z = random_ncpoly(3);
      ga::NCPoly b = ga::ternary_j_commutator(x, y, z);
      ok = ok && (b == Cyclo12::j_unit() * ga::ternary_j_commutator(y, z, x));
      ok = ok && (b == Cyclo12::j2_unit() * ga::ternary_j_commutator(z, x, y));
    }
    out.push_back(make(S, "alg-tern-bracket-cyclic", "ternary-bracket", ok,
                       "{X,Y,Z} = j{Y,Z,X} = j^2{Z,X,Y} on 30 random triples",
                       "bracket is j-covariant under cyclic rotation"));
  }
  {  // unit slot reduces the bracket to the commutator
    bool ok = true;
    for (int t = 0; t < 30 && ok; ++t) {
      ga::NCPoly x = random_ncpoly(3), y = random_ncpoly(3);
      ok = ok && (ga::ternary_j_commutator(x, ga::NCPoly::unit(), y) ==
                  ga::commutator(x, y));
    }
    out.push_back(make(S, "alg-tern-bracket-unit", "unit-bracket", ok,
                       "{X,1,Y} = [X,Y] on 30 random pairs",
                       "1 + j + j^2 = 0 collapses the middle slot"));
  }

  // Hilbert dimensions for the Grassmann-type variants
  for (int N : cfg.n_values) {
    for (auto [v, tag] : {std::pair{ga::RelationVariant::Lam, std::string("lam")},
                          std::pair{ga::RelationVariant::LamBar, std::string("lambar")}}) {
      ga::HilbertReport r = ga::hilbert_check(v, N);
      out.push_back(make(S,
                         "alg-hilbert-" + tag + "-n" + std::to_string(N),
                         "hilbert-series", r.ok,
                         std::string(ga::variant_name(v)) + " N=" +
                             std::to_string(N) + " dims " + dims_str(r.dims),
                         "(1, N, N^2, N(N-1)(N+1)/3, 0) = " + dims_str(r.expected)));
    }
  }
  {  // the degree-4 slice collapses entirely
    bool ok = true;
    std::string got = "degree-4 dims:";
    for (int N : cfg.n_values) {
      ga::HilbertReport a = ga::hilbert_check(ga::RelationVariant::Lam, N);
      ga::HilbertReport b = ga::hilbert_check(ga::RelationVariant::LamBar, N);
      ok = ok && a.dims[4] == 0 && b.dims[4] == 0;
      got += " " + std::to_string(a.dims[4]) + "/" + std::to_string(b.dims[4]);
    }
    out.push_back(make(S, "alg-quartic-zero", "quartic-zero", ok, got,
                       "every product of four grade-1 generators vanishes"));
  }
  {  // degree-3 slice of Lam at N=2
    ga::DegreeSpan span = ga::ideal_degree_span(ga::RelationVariant::Lam, 2, 3);
    int q = ga::quotient_dim(ga::RelationVariant::Lam, 2, 3);
    bool ok = span.rank == 6 && q == 2;
    out.push_back(make(S, "alg-lam-deg3-rank-n2", "hilbert-series", ok,
                       "ideal rank " + std::to_string(span.rank) +
                           ", quotient dim " + std::to_string(q),
                       "rank 2^3 - 2 = 6, quotient dim 2"));
  }

  // S-type degree-3 dimension against the independent necklace count
  for (int N = 1; N <= 3; ++N) {
    int q = ga::quotient_dim(ga::RelationVariant::S, N, 3);
    int neck = ga::necklace_dim_s_degree3(N);
    int formula = (2 * N * N * N + N) / 3;
    bool ok = (q == neck) && (q == formula);
    out.push_back(make(S, "alg-s-necklace-n" + std::to_string(N), "s-dimension",
                       ok,
                       "quotient dim " + std::to_string(q) +
                           ", necklace count " + std::to_string(neck),
                       "(2N^3 + N)/3 = " + std::to_string(formula)));
  }

  // surjection diagram: ideal(src) contained in ideal(dst) certifies src -> dst
  struct Arrow {
    ga::RelationVariant src, dst;
    const char* id;
  };
  for (const Arrow& a : {Arrow{ga::RelationVariant::S, ga::RelationVariant::S1,
                               "alg-surj-s-s1"},
                         Arrow{ga::RelationVariant::S1, ga::RelationVariant::S0,
                               "alg-surj-s1-s0"},
                         Arrow{ga::RelationVariant::Sbar, ga::RelationVariant::S1,
                               "alg-surj-sbar-s1"},
                         Arrow{ga::RelationVariant::Lam0, ga::RelationVariant::Lam1,
                               "alg-surj-lam0-lam1"},
                         Arrow{ga::RelationVariant::Lam1, ga::RelationVariant::Lam,
                               "alg-surj-lam1-lam"},
                         Arrow{ga::RelationVariant::Lam1, ga::RelationVariant::LamBar,
                               "alg-surj-lam1-lambar"}}) {
    bool ok = ga::surjection_check(a.src, a.dst, 2) &&
              ga::surjection_check(a.src, a.dst, 3);
    out.push_back(make(S, a.id, "surjection-diagram", ok,
                       std::string("ideal(") + ga::variant_name(a.src) +
                           ") contained in ideal(" + ga::variant_name(a.dst) +
                           ") at N=2,3",
                       std::string(ga::variant_name(a.src)) + " -> " +
                           ga::variant_name(a.dst) + " quotient surjection"));
  }
  {  // the reverse arrows fail: Lam imposes strictly more relations
    ga::DegreeSpan lam = ga::ideal_degree_span(ga::RelationVariant::Lam, 2, 3);
    ga::DegreeSpan lam1 = ga::ideal_degree_span(ga::RelationVariant::Lam1, 2, 3);
    bool ok = !ga::surjection_check(ga::RelationVariant::Lam,
                                    ga::RelationVariant::Lam1, 2);
    out.push_back(make(S, "alg-surj-lam-lam1-reverse", "surjection-diagram", ok,
                       "ideal(Lam) not contained in ideal(Lam1) at N=2 (ranks " +
                           std::to_string(lam.rank) + " vs " +
                           std::to_string(lam1.rank) + ")",
                       "no surjection Lam -> Lam1; the diagram only claims "
                       "Lam1 -> Lam"));
    bool ok2 = !ga::surjection_check(ga::RelationVariant::Lam,
                                     ga::RelationVariant::Lam0, 2);
    out.push_back(make(S, "alg-surj-lam-lam0-reverse", "surjection-diagram", ok2,
                       "ideal(Lam) not contained in ideal(Lam0) at N=2",
                       "no surjection Lam -> Lam0; the diagram only claims "
                       "Lam0 -> Lam1 -> Lam"));
  }
  {  // Lam0 and Lam1 ideals coincide at N=2 and separate at N=3
    bool eq2 = ga::surjection_check(ga::RelationVariant::Lam0,
                                    ga::RelationVariant::Lam1, 2) &&
               ga::surjection_check(ga::RelationVariant::Lam1,
                                    ga::RelationVariant::Lam0, 2);
    out.push_back(make(S, "alg-lam0-lam1-span-n2", "surjection-diagram", eq2,
                       "ideal(Lam0) = ideal(Lam1) at N=2 (mutual inclusion)",
                       "two generators are too few to separate the variants"));
    bool strict3 = ga::surjection_check(ga::RelationVariant::Lam0,
                                        ga::RelationVariant::Lam1, 3) &&
                   !ga::surjection_check(ga::RelationVariant::Lam1,
                                         ga::RelationVariant::Lam0, 3);
    out.push_back(make(S, "alg-lam0-lam1-span-n3", "surjection-diagram", strict3,
                       "ideal(Lam0) strictly contained in ideal(Lam1) at N=3",
                       "the inclusion is proper once N >= 3"));
  }

  {  // Jacobi identity for the Pauli structure constants
    bool ok = ga::jacobi_check(mt::pauli_structure_constants(), 3);
    out.push_back(make(S, "alg-jacobi-pauli", "jacobi", ok,
                       "C^k_ij = 2 i eps_kij satisfies the quadratic Jacobi sum",
                       "structure constants of a Lie algebra"));
  }
  {  // and for the real rotation-algebra constants
    std::vector<Cyclo12> f(27, Cyclo12::zero());
    for (int k = 1; k <= 3; ++k)
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          f[((k - 1) * 3 + (i - 1)) * 3 + (j - 1)] =
              Cyclo12::from_int(eps3(k, i, j));
    bool ok = ga::jacobi_check(f, 3);
    out.push_back(make(S, "alg-jacobi-eps", "jacobi", ok,
                       "f^k_ij = eps_kij satisfies the quadratic Jacobi sum",
                       "real cross-product structure constants"));
  }

  return out;
}

// ---------------------------------------------------------------------------
// clifford
// ---------------------------------------------------------------------------

std::vector<CheckRecord> suite_clifford(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string S = "clifford";
  std::mt19937_64 rng(cfg.seed ^ 0xc11ff0u);
  mt::QSet qs = mt::q_matrices();
  std::array<mt::MatC, 3> sig = mt::pauli_matrices();

  {
    mt::EtaReport r = mt::eta_verify();
    out.push_back(make(S, "cl-eta-table", "eta-table", r.ok,
                       std::to_string(r.checked) +
                           " cyclic anticommutators {Q_a,Q_b,Q_c} and dotted "
                           "conjugates are scalar and reproduce the frozen "
                           "tables",
                       "eta and dotted-eta, all 27 + 27 components"));
  }
  {
    Cyclo12 c;
    mt::MatC m = mt::tern_anticomm(qs.q[0], qs.q[1], qs.q[2]);
    bool ok = m.is_scalar(&c) && c == mt::eta(1, 2, 3);
    out.push_back(make(S, "cl-eta-123", "eta-table", ok,
                       "{Q1,Q2,Q3}_cyc = (" + c.to_string() + ") * 1",
                       "eta_123 = " + mt::eta(1, 2, 3).to_string()));
  }
  {
    out.push_back(disc(
        S, "cl-eta-displayed", "eta-displayed-values",
        "exact cyclic sums: eta = 3 on equal triples and even permutations, "
        "3*j^2 on odd permutations (e.g. {Q1,Q2,Q3}_cyc = 3*1 since "
        "Q1 Q2 Q3 = 1)",
        "displayed values 1 / j^2 / j (e.g. eta_123 = j^2) cannot be produced "
        "by the displayed generators under any normalization"));
  }
  {
    mt::SkewReport r = mt::skew_vanish_check();
    out.push_back(make(S, "cl-skew-j", "skew-ternary", r.j_zero,
                       "{Q1,Q2,Q3} with weights (1, j, j^2) = 0",
                       "j-skew combination vanishes"));
    out.push_back(make(S, "cl-skew-j2", "skew-ternary", r.j2_zero,
                       "{Q1,Q2,Q3} with weights (1, j^2, j) = 0",
                       "j^2-skew combination vanishes"));
    out.push_back(make(S, "cl-skew-odd", "skew-ternary",
                       r.odd_j_zero && r.odd_j2_zero,
                       "both skew combinations vanish for the odd ordering "
                       "(Q2,Q1,Q3)",
                       "skew vanishing is ordering-independent"));
  }
  {
    bool ok = true;
    for (int t = 0; t < 30 && ok; ++t) {
      mt::MatC a = mt::random_small_matrix(rng, 3);
      mt::MatC b = mt::random_small_matrix(rng, 3);
      ok = ok && (mt::dagger(mt::dagger(a)) == a);
      ok = ok && (mt::dagger(a * b) == mt::dagger(b) * mt::dagger(a));
    }
    out.push_back(make(S, "cl-dagger-involution", "hermitian-conjugates", ok,
                       "dagger(dagger(A)) = A and dagger(AB) = dagger(B) "
                       "dagger(A) on 30 random pairs",
                       "hermitian conjugation is an involutive anti-automorphism"));
  }
  {
    int good = 0;
    for (int t = 0; t < 100; ++t) {
      mt::MatC p = mt::random_invertible(rng, 3);
      if (mt::similarity_invariance(p)) ++good;
    }
    out.push_back(make(S, "cl-similarity", "similarity-invariance", good == 100,
                       std::to_string(good) +
                           "/100 random invertible P reproduce the eta table "
                           "after Q_b -> P^-1 Q_b P",
                       "the defining relations are basis-independent"));
  }

  {
    mt::MatC m = mt::pauli_cubic(1, 2, 1);
    bool ok = m == Cyclo12::from_int(-2) * sig[1];
    out.push_back(make(S, "cl-pauli-121", "pauli-cubic", ok,
                       "{sigma1,sigma2,sigma1} = -2 sigma2", "two-generator cubic"));
  }
  {
    mt::MatC m = mt::pauli_cubic(2, 1, 2);
    bool ok = m == Cyclo12::from_int(-2) * sig[0];
    out.push_back(make(S, "cl-pauli-212", "pauli-cubic", ok,
                       "{sigma2,sigma1,sigma2} = -2 sigma1", "two-generator cubic"));
  }
  {
    bool ok = mt::pauli_cubic(1, 2, 3).is_zero();
    out.push_back(make(S, "cl-pauli-123-zero", "pauli-cubic", ok,
                       "{sigma1,sigma2,sigma3} = 0",
                       "the three-distinct-indices cubic vanishes"));
  }
  {
    bool ok = true;
    for (int i = 1; i <= 3 && ok; ++i)
      for (int k = 1; k <= 3 && ok; ++k) {
        if (i == k) continue;
        ok = mt::pauli_cubic(i, k, i) == Cyclo12::from_int(-2) * sig[k - 1];
      }
    out.push_back(make(S, "cl-pauli-cubic-pairs", "pauli-cubic", ok,
                       "{sigma_i,sigma_k,sigma_i} = -2 sigma_k for all i != k",
                       "all six two-generator cubics"));
  }
  {
    bool ok = true;
    for (int i = 1; i <= 3 && ok; ++i)
      for (int j = 1; j <= 3 && ok; ++j) {
        mt::MatC expect = mt::MatC::zero(2);
        if (i == j) expect = mt::MatC::identity(2);
        for (int k = 1; k <= 3; ++k) {
          int e = eps3(i, j, k);
          if (e != 0)
            expect = expect + (Cyclo12::from_int(e) * Cyclo12::i_unit()) * sig[k - 1];
        }
        ok = sig[i - 1] * sig[j - 1] == expect;
      }
    out.push_back(make(S, "cl-pauli-product", "pauli-algebra", ok,
                       "sigma_i sigma_j = delta_ij 1 + i eps_ijk sigma_k",
                       "all 9 products"));
  }
  {
    std::vector<Cyclo12> f = mt::pauli_structure_constants();
    bool ok = true;
    for (int k = 1; k <= 3 && ok; ++k)
      for (int i = 1; i <= 3 && ok; ++i)
        for (int j = 1; j <= 3 && ok; ++j)
          ok = f[((k - 1) * 3 + (i - 1)) * 3 + (j - 1)] ==
               Cyclo12::from_int(2 * eps3(k, i, j)) * Cyclo12::i_unit();
    for (int i = 1; i <= 3 && ok; ++i)
      for (int j = 1; j <= 3 && ok; ++j) {
        mt::MatC expect = mt::MatC::zero(2);
        for (int k = 1; k <= 3; ++k) {
          int e = eps3(k, i, j);
          if (e != 0)
            expect = expect + (Cyclo12::from_int(2 * e) * Cyclo12::i_unit()) * sig[k - 1];
        }
        ok = mt::commutator(sig[i - 1], sig[j - 1]) == expect;
      }
    out.push_back(make(S, "cl-structure-constants", "pauli-algebra", ok,
                       "[sigma_i,sigma_j] = C^k_ij sigma_k with C^k_ij = 2 i eps_kij",
                       "binary commutators close with the stated constants"));
  }
  {
    int good = 0;
    for (int t = 0; t < 100; ++t) {
      mt::MatC s = mt::random_det_one(rng);
      if (mt::epsilon_invariance_check(s)) ++good;
    }
    out.push_back(make(S, "cl-epsilon-unimodular", "epsilon-invariance",
                       good == 100,
                       std::to_string(good) +
                           "/100 random det-1 matrices preserve eps_ab",
                       "det S = 1 implies epsilon invariance"));
  }
  {
    int tested = 0, rejected = 0;
    while (tested < 100) {
      mt::MatC s = mt::random_invertible(rng, 2);
      if (mt::det(s) == Cyclo12::one()) continue;
      ++tested;
      if (!mt::epsilon_invariance_check(s)) ++rejected;
    }
    out.push_back(make(S, "cl-epsilon-generic", "epsilon-invariance",
                       rejected == 100,
                       std::to_string(rejected) +
                           "/100 random matrices with det != 1 fail to preserve "
                           "eps_ab",
                       "epsilon invariance is equivalent to det S = 1"));
  }

  return out;
}

// ---------------------------------------------------------------------------
// forms
// ---------------------------------------------------------------------------

namespace {

gf::CoordPoly random_coordpoly(std::mt19937_64& rng, int nvars, int maxdeg,
                               int nterms) {
  std::uniform_int_distribution<int> dd(0, maxdeg);
  gf::CoordPoly p(nvars);
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> expo(nvars, 0);
    int budget = dd(rng);
    for (int v = 0; v < nvars && budget > 0; ++v) {
      std::uniform_int_distribution<int> part(0, budget);
      int e = part(rng);
      expo[v] = e;
      budget -= e;
    }
    p.add_term(expo, random_cyclo(rng));
  }
  return p;
}

void enumerate_monomials(int nvars, int maxdeg,
                         const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> expo(nvars, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars) {
      fn(expo);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      expo[pos] = e;
      rec(pos + 1, left - e);
    }
    expo[pos] = 0;
  };
  rec(0, maxdeg);
}

gf::FormWord word_of(std::initializer_list<gf::BasisForm> letters) {
  return gf::FormWord(letters);
}

}  // namespace

std::vector<CheckRecord> suite_forms(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string S = "forms";
  std::mt19937_64 rng(cfg.seed ^ 0xf0435u);
  using K = gf::BasisForm::Kind;

  {  // d^3 on every monomial of degree <= 4, up to three variables
    int checked = 0;
    bool ok = true;
    for (int nv = 1; nv <= 3; ++nv) {
      enumerate_monomials(nv, 4, [&](const std::vector<int>& expo) {
        gf::CoordPoly m(nv);
        m.add_term(expo, Cyclo12::one());
        ++checked;
        if (!gf::d3_check(m)) ok = false;
      });
    }
    out.push_back(make(S, "fm-d3-monomials", "d3-zero", ok,
                       std::to_string(checked) +
                           " monomials (deg <= 4, up to 3 variables): "
                           "normal_form(d^3 m) = 0",
                       "d^3 = 0 on monomials"));
  }
  {  // and on 200 random polynomials
    bool ok = true;
    std::uniform_int_distribution<int> nv(1, 3);
    for (int t = 0; t < 200 && ok; ++t)
      ok = gf::d3_check(random_coordpoly(rng, nv(rng), 4, 3));
    out.push_back(make(S, "fm-d3-random", "d3-zero", ok,
                       "200 seeded random polynomials: normal_form(d^3 f) = 0",
                       "d^3 = 0"));
  }
  {  // d^2 does not vanish
    gf::GradedForm x1 = gf::GradedForm::from_function(gf::CoordPoly::variable(1, 1));
    gf::GradedForm dd = gf::normal_form(gf::d(gf::d(x1)));
    gf::GradedForm expect(1);
    expect.add_term(word_of({{K::d2x, 1}}), gf::CoordPoly::constant(1, Cyclo12::one()));
    bool ok = !dd.is_zero() && dd == expect;
    out.push_back(make(S, "fm-d2-nonzero", "d2-nonzero", ok,
                       "d(d(x)) = d2x != 0",
                       "the calculus closes at height three, not two"));
  }
  {  // second differential expands into second partials plus d2x terms
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
      int nv = 2 + (t % 2);
      gf::CoordPoly f = random_coordpoly(rng, nv, 3, 3);
      gf::GradedForm lhs = gf::normal_form(gf::d(gf::d(gf::GradedForm::from_function(f))));
      gf::GradedForm rhs(nv);
      for (int k = 1; k <= nv; ++k)
        for (int i = 1; i <= nv; ++i)
          rhs.add_term(word_of({{K::dx, k}, {K::dx, i}}),
                       gf::derivative(gf::derivative(f, i), k));
      for (int i = 1; i <= nv; ++i)
        rhs.add_term(word_of({{K::d2x, i}}), gf::derivative(f, i));
      ok = lhs == gf::normal_form(rhs);
    }
    out.push_back(make(S, "fm-d2-expansion", "d2-expansion", ok,
                       "d^2 f = (d_k d_i f) dx^k dx^i + (d_i f) d2x^i on 20 "
                       "random polynomials",
                       "exact expansion of the second differential"));
  }
  {  // graded Leibniz rule, in the two senses the bimodule supports:
     // a grade-0 (function) left factor against an arbitrary form, and pure
     // basis-form words of every grade against each other
    bool ok = true;
    std::uniform_int_distribution<int> kind(0, 1), idx(1, 2), len(0, 2),
        len1(1, 2);
    const int nv = 2;
    for (int t = 0; t < 20 && ok; ++t) {
      gf::FormWord w2;
      int l2 = len(rng);
      for (int k = 0; k < l2; ++k)
        w2.push_back({static_cast<K>(kind(rng)), idx(rng)});
      gf::GradedForm th(nv);
      th.add_term(w2, random_coordpoly(rng, nv, 2, 2));
      gf::GradedForm f =
          gf::GradedForm::from_function(random_coordpoly(rng, nv, 2, 2));
      gf::GradedForm left = gf::normal_form(gf::d(f * th));
      gf::GradedForm right =
          gf::normal_form(gf::d(f) * th + f * gf::d(th));
      ok = left == right;
    }
    for (int t = 0; t < 20 && ok; ++t) {
      gf::FormWord w1, w2;
      int l1 = len1(rng), l2 = len1(rng);
      for (int k = 0; k < l1; ++k)
        w1.push_back({static_cast<K>(kind(rng)), idx(rng)});
      for (int k = 0; k < l2; ++k)
        w2.push_back({static_cast<K>(kind(rng)), idx(rng)});
      gf::GradedForm om(nv), th(nv);
      om.add_term(w1, gf::CoordPoly::constant(nv, random_cyclo(rng)));
      th.add_term(w2, gf::CoordPoly::constant(nv, random_cyclo(rng)));
      gf::GradedForm left = gf::normal_form(gf::d(om * th));
      Cyclo12 jg = Cyclo12::j_unit().pow(gf::form_grade(w1));
      gf::GradedForm right =
          gf::normal_form(gf::d(om) * th + jg * (om * gf::d(th)));
      ok = left == right;
    }
    out.push_back(make(S, "fm-leibniz", "graded-leibniz", ok,
                       "d(f th) = (d f) th + f (d th) for 20 random grade-0 "
                       "left factors, and d(w v) = (d w) v + j^grade(w) w (d v) "
                       "for 20 random pairs of basis words",
                       "j-graded Leibniz rule"));
  }
  {  // the d2x-past-dx exchange rule
    bool ok = true;
    for (int k = 1; k <= 3 && ok; ++k)
      for (int i = 1; i <= 3 && ok; ++i) {
        gf::GradedForm a(3), b(3);
        a.add_term(word_of({{K::d2x, k}, {K::dx, i}}),
                   gf::CoordPoly::constant(3, Cyclo12::one()));
        b.add_term(word_of({{K::dx, i}, {K::d2x, k}}),
                   gf::CoordPoly::constant(3, Cyclo12::j2_unit()));
        ok = gf::normal_form(a) == gf::normal_form(b);
      }
    out.push_back(make(S, "fm-rewrite-d2x-dx", "rewrite-d2x-dx", ok,
                       "d2x^k dx^i = j^2 dx^i d2x^k for all index pairs",
                       "grade-2 letters commute past grade-1 letters at cost j^2"));
  }
  {  // cyclic rule for dx triples
    bool ok = true;
    for (int i = 1; i <= 3 && ok; ++i)
      for (int k = 1; k <= 3 && ok; ++k)
        for (int m = 1; m <= 3 && ok; ++m) {
          gf::GradedForm a(3), b(3);
          a.add_term(word_of({{K::dx, i}, {K::dx, k}, {K::dx, m}}),
                     gf::CoordPoly::constant(3, Cyclo12::one()));
          b.add_term(word_of({{K::dx, k}, {K::dx, m}, {K::dx, i}}),
                     gf::CoordPoly::constant(3, Cyclo12::j_unit()));
          ok = gf::normal_form(a - b).is_zero();
          if (i == k && k == m) ok = ok && gf::normal_form(a).is_zero();
        }
    out.push_back(make(S, "fm-dx-cyclic", "dx-cyclic", ok,
                       "dx^i dx^k dx^m = j dx^k dx^m dx^i; diagonal triples "
                       "vanish",
                       "cyclic identification with weight j"));
  }
  {  // four dx letters always vanish
    bool ok = true;
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c)
          for (int e = 1; e <= 2; ++e) {
            gf::GradedForm w(2);
            w.add_term(word_of({{K::dx, a}, {K::dx, b}, {K::dx, c}, {K::dx, e}}),
                       gf::CoordPoly::constant(2, Cyclo12::one()));
            if (!gf::normal_form(w).is_zero()) ok = false;
          }
    out.push_back(make(S, "fm-dx-quartic-zero", "dx-quartic-zero", ok,
                       "all 16 length-4 dx words over 2 variables vanish",
                       "no invariant content above word length three"));
  }
  {  // two d2x letters vanish
    bool ok = true;
    for (int i = 1; i <= 3 && ok; ++i)
      for (int k = 1; k <= 3 && ok; ++k) {
        gf::GradedForm w(3);
        w.add_term(word_of({{K::d2x, i}, {K::d2x, k}}),
                   gf::CoordPoly::constant(3, Cyclo12::one()));
        ok = gf::normal_form(w).is_zero();
      }
    out.push_back(make(S, "fm-d2x-pair-zero", "d2x-pair-zero", ok,
                       "d2x^i d2x^k = 0 for all index pairs",
                       "grade-2 letters square to zero in the quotient"));
  }
  {  // normal form is idempotent
    bool ok = true;
    std::uniform_int_distribution<int> kind(0, 1), idx(1, 3), len(0, 3);
    for (int t = 0; t < 30 && ok; ++t) {
      gf::GradedForm f(3);
      for (int terms = 0; terms < 3; ++terms) {
        gf::FormWord w;
        int l = len(rng);
        for (int k = 0; k < l; ++k)
          w.push_back({static_cast<K>(kind(rng)), idx(rng)});
        f.add_term(w, random_coordpoly(rng, 3, 2, 2));
      }
      gf::GradedForm once = gf::normal_form(f);
      ok = gf::normal_form(once) == once;
    }
    out.push_back(make(S, "fm-nf-idempotent", "normal-form", ok,
                       "normal_form(normal_form(F)) = normal_form(F) on 30 "
                       "random forms",
                       "the rewriting terminates in one pass"));
  }
  {  // the raw third differential decomposes into vanishing pieces
    bool ok = true;
    for (int t = 0; t < 10 && ok; ++t) {
      int nv = 2;
      gf::CoordPoly f = random_coordpoly(rng, nv, 3, 3);
      gf::GradedForm raw3 = gf::d(gf::d(gf::d(gf::GradedForm::from_function(f))));
      gf::GradedForm cube(nv), bracket(nv);
      for (int m = 1; m <= nv; ++m)
        for (int k = 1; k <= nv; ++k)
          for (int i = 1; i <= nv; ++i)
            cube.add_term(
                word_of({{K::dx, m}, {K::dx, k}, {K::dx, i}}),
                gf::derivative(gf::derivative(gf::derivative(f, i), k), m));
      Cyclo12 one_plus_j = Cyclo12::one() + Cyclo12::j_unit();
      for (int k = 1; k <= nv; ++k)
        for (int i = 1; i <= nv; ++i) {
          gf::CoordPoly s = gf::derivative(gf::derivative(f, i), k);
          bracket.add_term(word_of({{K::d2x, k}, {K::dx, i}}), s);
          bracket.add_term(word_of({{K::dx, k}, {K::d2x, i}}), one_plus_j * s);
        }
      ok = (raw3 == cube + bracket) && gf::normal_form(cube).is_zero() &&
           gf::normal_form(bracket).is_zero();
    }
    out.push_back(make(S, "fm-d3-residual", "d3-residual", ok,
                       "d^3 f = (third partials) dx-cubes + S_ki (d2x^k dx^i - "
                       "j^2 dx^k d2x^i); both pieces rewrite to zero",
                       "exact decomposition of the raw third differential"));
  }

  return out;
}

// ---------------------------------------------------------------------------
// heisenberg
// ---------------------------------------------------------------------------

namespace {

wo::ParamScalar scal(const Cyclo12& c) { return wo::ParamScalar::from_cyclo(c); }

// k * lambda as a ParamScalar coefficient
wo::ParamScalar lmul(const Cyclo12& k) {
  return scal(k) * wo::ParamScalar::lambda();
}

wo::OperatorPoly random_operator(std::mt19937_64& rng, int maxdeg,
                                 bool with_lambda) {
  std::uniform_int_distribution<int> deg(0, maxdeg);
  wo::OperatorPoly a;
  for (int t = 0; t < 3; ++t) {
    wo::ParamScalar c = scal(random_cyclo(rng));
    if (with_lambda)
      c = c + wo::ParamScalar::lambda() * scal(random_cyclo(rng));
    a.add_term(deg(rng), deg(rng), c);
  }
  return a;
}

}  // namespace

std::vector<CheckRecord> suite_heisenberg(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string S = "heisenberg";
  std::mt19937_64 rng(cfg.seed ^ 0x4e15e9u);

  const Cyclo12 one = Cyclo12::one();
  const Cyclo12 J = Cyclo12::j_unit();
  const Cyclo12 J2 = Cyclo12::j2_unit();
  const Cyclo12 I = Cyclo12::i_unit();
  const wo::OperatorPoly id = wo::OperatorPoly::identity();
  const wo::OperatorPoly X = wo::OperatorPoly::x_op();
  const wo::OperatorPoly D = wo::OperatorPoly::d_op();
  const wo::OperatorPoly c1 = wo::build_c(1);
  const wo::OperatorPoly c2 = wo::build_c(2);
  const wo::OperatorPoly c3 = wo::build_c(3);

  {
    bool ok = wo::commutator(D, X) == id;
    out.push_back(make(S, "hb-dx-commutator", "weyl-relation", ok,
                       "[D, x] = 1", "the defining Weyl relation"));
  }

  // binary commutators of the three first-order generators
  struct Bin {
    const char* id;
    const wo::OperatorPoly *a, *b;
    Cyclo12 coeff;
    const char* text;
  };
  for (const Bin& bc :
       {Bin{"hb-comm-12", &c1, &c2, J2 - J, "[c1,c2] = lambda (j^2 - j) 1"},
        Bin{"hb-comm-23", &c2, &c3, one - J2, "[c2,c3] = lambda (1 - j^2) 1"},
        Bin{"hb-comm-31", &c3, &c1, J - one, "[c3,c1] = lambda (j - 1) 1"}}) {
    bool ok = wo::commutator(*bc.a, *bc.b) == lmul(bc.coeff) * id;
    out.push_back(make(S, bc.id, "c-binary", ok, bc.text,
                       "exact identity in the formal parameter lambda"));
  }

  // two-generator ternary brackets
  struct Tern {
    const char* id;
    const wo::OperatorPoly *a, *b;
    Cyclo12 coeff;
    const wo::OperatorPoly* rhs;
    const char* text;
  };
  for (const Tern& tc : {
           Tern{"hb-tern-121", &c1, &c2, Cyclo12::from_int(-3), &c1,
                "{c1,c2,c1} = -3 lambda c1"},
           Tern{"hb-tern-212", &c2, &c1, Cyclo12::from_int(3), &c2,
                "{c2,c1,c2} = 3 lambda c2"},
           Tern{"hb-tern-232", &c2, &c3, Cyclo12::from_int(-3) * J, &c2,
                "{c2,c3,c2} = -3 j lambda c2"},
           Tern{"hb-tern-323", &c3, &c2, Cyclo12::from_int(3) * J, &c3,
                "{c3,c2,c3} = 3 j lambda c3"},
           Tern{"hb-tern-313", &c3, &c1, Cyclo12::from_int(-3) * J2, &c3,
                "{c3,c1,c3} = -3 j^2 lambda c3"},
           Tern{"hb-tern-131", &c1, &c3, Cyclo12::from_int(3) * J2, &c1,
                "{c1,c3,c1} = 3 j^2 lambda c1"},
       }) {
    wo::OperatorPoly got = wo::ternary_j_commutator(*tc.a, *tc.b, *tc.a);
    bool ok = got == lmul(tc.coeff) * (*tc.rhs);
    out.push_back(make(S, tc.id, "c-ternary", ok, tc.text,
                       "exact identity in lambda"));
  }

  {  // the two mixed three-generator brackets
    wo::OperatorPoly got = wo::ternary_j_commutator(c2, c3, c1);
    wo::OperatorPoly expect = lmul(one - J) * c1 + lmul(J2 - one) * c2 +
                              lmul(J - J2) * c3;
    out.push_back(make(S, "hb-tern-231", "c-mixed", got == expect,
                       "{c2,c3,c1} = lambda[(1-j)c1 + (j^2-1)c2 + (j-j^2)c3]",
                       "mixed ternary bracket, even ordering"));
  }
  {
    wo::OperatorPoly got = wo::ternary_j_commutator(c1, c3, c2);
    wo::OperatorPoly expect = lmul(J2 - J) * (c1 + c2 + c3);
    out.push_back(make(S, "hb-tern-132", "c-mixed", got == expect,
                       "{c1,c3,c2} = lambda (j^2 - j)(c1 + c2 + c3)",
                       "mixed ternary bracket, odd ordering"));
  }
  {  // unit middle slot
    const wo::OperatorPoly* cs[3] = {&c1, &c2, &c3};
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 0; b < 3 && ok; ++b)
        ok = wo::ternary_j_commutator(*cs[a], id, *cs[b]) ==
             wo::commutator(*cs[a], *cs[b]);
    out.push_back(make(S, "hb-unit-bracket", "unit-bracket", ok,
                       "{c_a, 1, c_b} = [c_a, c_b] for all nine pairs",
                       "bracket with unit reduces to the commutator"));
  }
  {  // the six-term alternating combination
    wo::OperatorPoly lhs = (c1 * c3 * c2 + c3 * c2 * c1 + c2 * c1 * c3) -
                           (c2 * c3 * c1 + c3 * c1 * c2 + c1 * c2 * c3);
    bool ok = lhs == lmul(Cyclo12::from_int(3) * (J - J2)) * id;
    out.push_back(make(S, "hb-six-term", "six-term", ok,
                       "(c1c3c2 + c3c2c1 + c2c1c3) - (c2c3c1 + c3c1c2 + "
                       "c1c2c3) = 3 lambda (j - j^2) 1",
                       "exact identity in lambda"));
  }
  {  // normalized generators turn the six-term value into s (s^2 the constant)
    wo::OperatorPoly n1 = wo::build_c_normalized(1);
    wo::OperatorPoly n2 = wo::build_c_normalized(2);
    wo::OperatorPoly n3 = wo::build_c_normalized(3);
    wo::OperatorPoly lhs = (n1 * n3 * n2 + n3 * n2 * n1 + n2 * n1 * n3) -
                           (n2 * n3 * n1 + n3 * n1 * n2 + n1 * n2 * n3);
    bool ok = lhs == wo::ParamScalar::s() * id;
    out.push_back(make(S, "hb-six-term-normalized", "six-term", ok,
                       "same combination for the normalized generators = s * 1",
                       "with lambda -> -i s and prefactor 1/sqrt(3) per factor"));
  }

  // linear relations recovering D, 1, x
  {
    bool ok = c1 + c2 + c3 == (scal(Cyclo12::from_int(3)) *
                               wo::ParamScalar::lambda()) * D;
    out.push_back(make(S, "hb-sum-d", "c-linear", ok,
                       "c1 + c2 + c3 = 3 lambda D", "unweighted sum"));
  }
  {
    bool ok = c3 + scal(J) * c1 + scal(J2) * c2 == scal(Cyclo12::from_int(3)) * id;
    out.push_back(make(S, "hb-sum-unit", "c-linear", ok,
                       "c3 + j c1 + j^2 c2 = 3 * 1", "j-weighted sum"));
  }
  {
    bool ok = c3 + scal(J2) * c1 + scal(J) * c2 == scal(Cyclo12::from_int(3)) * X;
    out.push_back(make(S, "hb-sum-x", "c-linear", ok,
                       "c3 + j^2 c1 + j c2 = 3 x", "j^2-weighted sum"));
  }
  {  // the 3x3 root-of-unity transformation matrix
    mt::MatC m(3);
    const Cyclo12 vals[3][3] = {{one, one, one}, {J, J2, one}, {J2, J, one}};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.at(r, c) = vals[r][c];
    Cyclo12 dt = mt::det(m);
    bool ok = !dt.is_zero() && mt::inverse(m) * m == mt::MatC::identity(3);
    // column action on (1,1,1): row sums, using 1 + j + j^2 = 0
    Cyclo12 r0 = m.at(0, 0) + m.at(0, 1) + m.at(0, 2);
    Cyclo12 r1 = m.at(1, 0) + m.at(1, 1) + m.at(1, 2);
    Cyclo12 r2 = m.at(2, 0) + m.at(2, 1) + m.at(2, 2);
    ok = ok && r0 == Cyclo12::from_int(3) && r1.is_zero() && r2.is_zero();
    out.push_back(make(S, "hb-vandermonde", "vandermonde", ok,
                       "det = " + dt.to_string() +
                           " != 0; inverse verified; (1,1,1) maps to (3,0,0)",
                       "root-of-unity transformation matrix is invertible"));
  }

  {  // polarization identity for arbitrary operators
    bool ok = true;
    std::vector<wo::OperatorPoly> samples = {
        X + D, X - D,
        scal(Cyclo12::from_int(2)) * X + scal(Cyclo12::from_int(3)) * D + id};
    for (int t = 0; t < 20; ++t) samples.push_back(random_operator(rng, 2, false));
    wo::ParamScalar half = wo::ParamScalar::from_rat(Rat(1, 2));
    for (const auto& a : samples) {
      wo::OperatorPoly ad = wo::adjoint(a);
      wo::OperatorPoly sum = a + ad, dif = a - ad;
      ok = ok && (half * (sum * sum - dif * dif) == a * ad + ad * a);
      if (!ok) break;
    }
    out.push_back(make(S, "hb-hquad", "hquad", ok,
                       "(1/2)[(a + a+)^2 - (a - a+)^2] = a a+ + a+ a on "
                       "fixed and 20 random operators",
                       "polarization identity"));
  }
  {  // the quadratic combination for the first-order ladder pair
    wo::OperatorPoly a = X + D;  // x + i p with p = -i D
    wo::OperatorPoly ad = wo::adjoint(a);
    wo::OperatorPoly sum = a * ad + ad * a;
    wo::OperatorPoly h = X * X - D * D;
    bool two_h = sum == scal(Cyclo12::from_int(2)) * h;
    bool printed = sum == h;
    out.push_back(disc(S, "hb-quad-factor2", "hquad-sum",
                       std::string("a a+ + a+ a = 2(x^2 - D^2) for a = x + D") +
                           (two_h ? " [verified]" : " [UNEXPECTED]"),
                       std::string("displayed claim: a a+ + a+ a = -D^2 + x^2") +
                           (printed ? "" : " (factor 2 missing in the display)")));
  }

  {  // cubic combination collapsing to the third-order operator
    wo::OperatorPoly khat = wo::build_khat();
    wo::OperatorPoly closed = wo::khat_closed_form();
    wo::OperatorPoly manual;
    manual.add_term(0, 3, scal(Cyclo12::from_int(2)) * wo::ParamScalar::lambda() *
                              wo::ParamScalar::lambda() * wo::ParamScalar::lambda());
    manual.add_term(3, 0, scal(-one));
    manual.add_term(0, 0, scal(-one));
    bool ok = khat == closed && closed == manual;
    out.push_back(make(S, "hb-khat-symbolic", "khat", ok,
                       "(1/27)[cubic j-weighted sums of c1,c2,c3] = "
                       "2 lambda^3 D^3 - x^3 - 1",
                       "exact identity in lambda"));
  }
  {
    wo::OperatorPoly k = wo::substitute_lambda(wo::build_khat(), -I, 0);
    wo::OperatorPoly manual;
    manual.add_term(0, 3, scal(Cyclo12::from_int(2) * I));
    manual.add_term(3, 0, scal(-one));
    manual.add_term(0, 0, scal(-one));
    bool ok = k == manual;
    out.push_back(make(S, "hb-khat-specialized", "khat", ok,
                       "lambda = -i gives 2i D^3 - x^3 - 1",
                       "(-i)^3 = i doubles into the leading coefficient"));
  }
  {
    wo::OperatorPoly k = wo::substitute_lambda(wo::build_khat(), -I, 0);
    bool ok = wo::adjoint(k) == k;
    out.push_back(make(S, "hb-khat-selfadjoint", "khat-hermitian", ok,
                       "K+ = K at lambda = -i",
                       "the cubic combination is formally self-adjoint"));
  }
  {
    wo::OperatorPoly lhs = (X + id) * (X + scal(J) * id) * (X + scal(J2) * id);
    bool ok = lhs == wo::pow(X, 3) + id;
    out.push_back(make(S, "hb-potential-factorization", "potential-factorization",
                       ok, "(x + 1)(x + j)(x + j^2) = x^3 + 1",
                       "the potential part factors over Q(j)"));
  }

  const wo::OperatorPoly K1 = -wo::pow(D, 3) + wo::pow(X, 3);
  const wo::OperatorPoly K2 = wo::pow(D, 3) + wo::pow(X, 3);
  {
    bool ok = wo::adjoint(K1) == K2;
    out.push_back(make(S, "hb-k1-dagger", "h6", ok,
                       "(-D^3 + x^3)+ = D^3 + x^3",
                       "the two third-order operators are mutually adjoint"));
  }
  const wo::OperatorPoly sextic = -wo::pow(D, 6) + wo::pow(X, 6);
  {
    wo::ParamScalar half = wo::ParamScalar::from_rat(Rat(1, 2));
    bool ok = half * (K1 * K2 + K2 * K1) == sextic;
    out.push_back(make(S, "hb-h6-anticommutator", "h6", ok,
                       "(1/2)(K1 K2 + K2 K1) = -D^6 + x^6",
                       "positive-definite sixth-order operator"));
  }
  {
    out.push_back(disc(S, "hb-h6-sign", "h6-sign",
                       "derived: (1/2)(K1 K2 + K2 K1) = -D^6 + x^6 "
                       "(p^6 = -D^6, positive definite)",
                       "one display prints +d^6/dx^6 + x^6; the companion "
                       "display prints -d^6/dx^6 + x^6; the symbolic oracle "
                       "fixes the minus sign"));
  }

  const wo::OperatorPoly H0 = -wo::pow(D, 2) + wo::pow(X, 2);
  const wo::OperatorPoly H1 = -wo::pow(D, 2) + scal(J) * wo::pow(X, 2);
  const wo::OperatorPoly H2 = -wo::pow(D, 2) + scal(J2) * wo::pow(X, 2);
  const wo::OperatorPoly cyc = H0 * H1 * H2 + H1 * H2 * H0 + H2 * H0 * H1;
  {
    bool ok = cyc == scal(Cyclo12::from_int(3)) * sextic;
    out.push_back(make(S, "hb-cyclic-cross-cancel", "cyclic-h", ok,
                       "H0 H1 H2 + H1 H2 H0 + H2 H0 H1 = 3(-D^6 + x^6)",
                       "all mixed terms cancel through 1 + j + j^2 = 0"));
  }
  {
    wo::OperatorPoly rem = cyc - sextic;
    bool is_twice = rem == scal(Cyclo12::from_int(2)) * sextic;
    out.push_back(disc(S, "hb-cyclic-remainder", "cyclic-h",
                       "cyclic sum minus displayed value = " + wo::to_string(rem) +
                           (is_twice ? " = 2(-D^6 + x^6)" : ""),
                       "displayed claim: cyclic sum = -D^6 + x^6 (remainder 0); "
                       "the exact remainder is printed on the left"));
  }
  {
    wo::OperatorPoly odd = H0 * H2 * H1 + H2 * H1 * H0 + H1 * H0 * H2;
    bool ok = odd == cyc;
    out.push_back(make(S, "hb-cyclic-odd-even", "cyclic-h", ok,
                       "odd ordering H0 H2 H1 + H2 H1 H0 + H1 H0 H2 equals the "
                       "even one",
                       "identical result for both orderings"));
  }
  {
    wo::OperatorPoly p = H0 * H1 * H2;
    auto it = p.terms.find({0, 6});
    bool ok = it != p.terms.end() && it->second == scal(-one);
    out.push_back(make(S, "hb-cyclic-leading", "cyclic-h", ok,
                       "D^6 coefficient of H0 H1 H2 alone = -1",
                       "leading symbol of a single product"));
  }
  {
    out.push_back(disc(S, "hb-exotic-note", "exotic-h",
                       "implemented: H1 = -D^2 + j x^2, H2 = -D^2 + j^2 x^2 "
                       "(second-order displays)",
                       "a companion sentence displays first-order expressions "
                       "i p + j x instead; the second-order forms are the ones "
                       "whose cyclic product closes, so they are implemented "
                       "and the sentence is catalogued"));
  }

  {  // ladder action on the Gaussian vacuum
    wo::GaussPoly vac = wo::GaussPoly::vacuum();
    bool ok = wo::apply(X + D, vac).is_zero();
    out.push_back(make(S, "hb-gauss-vacuum", "ladder-vacuum", ok,
                       "(x + D) e^{-x^2/2} = 0", "annihilation of the vacuum"));
  }
  {
    wo::GaussPoly phi1;
    phi1.coeffs = {Cyclo12::zero(), Cyclo12::from_int(2)};
    bool ok = wo::apply(X - D, wo::GaussPoly::vacuum()) == phi1;
    out.push_back(make(S, "hb-gauss-phione", "ladder-excited", ok,
                       "(x - D) e^{-x^2/2} = 2x e^{-x^2/2}",
                       "first excited state"));
  }
  {
    wo::GaussPoly phi1, three_phi1;
    phi1.coeffs = {Cyclo12::zero(), Cyclo12::from_int(2)};
    three_phi1.coeffs = {Cyclo12::zero(), Cyclo12::from_int(6)};
    bool ok = wo::apply(H0, phi1) == three_phi1;
    out.push_back(make(S, "hb-gauss-eigen3", "harmonic-eigen", ok,
                       "(-D^2 + x^2) 2x e^{-x^2/2} = 6x e^{-x^2/2} = 3 Phi1",
                       "eigenvalue 3 on the first excited state"));
  }

  {  // structural properties on random operators
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
      wo::OperatorPoly a = random_operator(rng, 3, true);
      wo::OperatorPoly b = random_operator(rng, 3, true);
      wo::OperatorPoly c = random_operator(rng, 3, true);
      ok = (a * b) * c == a * (b * c);
    }
    out.push_back(make(S, "hb-assoc", "weyl-normal-order", ok,
                       "(AB)C = A(BC) on 20 random operator triples",
                       "normal-ordered composition is associative"));
  }
  {
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
      wo::OperatorPoly a = random_operator(rng, 3, false);
      wo::OperatorPoly b = random_operator(rng, 3, false);
      ok = wo::adjoint(a * b) == wo::adjoint(b) * wo::adjoint(a);
    }
    out.push_back(make(S, "hb-adjoint-antiauto", "adjoint-convention", ok,
                       "(AB)+ = B+ A+ on 20 random lambda-free pairs",
                       "the formal adjoint is an anti-automorphism"));
  }
  {
    bool ok = true;
    std::uniform_int_distribution<int> coeff(0, 3);
    for (int t = 0; t < 15 && ok; ++t) {
      wo::OperatorPoly a = random_operator(rng, 2, false);
      wo::OperatorPoly b = random_operator(rng, 2, false);
      wo::GaussPoly g;
      for (int k = 0; k <= coeff(rng); ++k) g.coeffs.push_back(random_cyclo(rng));
      ok = wo::apply(a * b, g) == wo::apply(a, wo::apply(b, g));
    }
    out.push_back(make(S, "hb-apply-module", "gauss-action", ok,
                       "apply(AB, f) = apply(A, apply(B, f)) on 15 random cases",
                       "operator action is a module action"));
  }

  return out;
}

// ---------------------------------------------------------------------------
// spectral
// ---------------------------------------------------------------------------

std::vector<CheckRecord> suite_spectral(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  const std::string S = "spectral";
  constexpr double kFdL = 7.0;
  constexpr double kFdH = 0.025;

  // --- harmonic sanity -----------------------------------------------------
  spc::Spectrum harm = spc::operator_spectrum(spc::harmonic_op(), 64);
  {
    double worst = 0.0;
    for (int n = 0; n < 32; ++n)
      worst = std::max(worst, std::abs(harm.eigenvalues[n] - (2.0 * n + 1.0)) /
                                  (2.0 * n + 1.0));
    out.push_back(make(S, "sp-harmonic-diagonal", "harmonic-eigen",
                       worst <= cfg.tol_eigen,
                       "oscillator-basis harmonic eigenvalues vs 1, 3, 5, ... "
                       "(32 levels), max rel dev " + format_double(worst),
                       "exact odd integers; level 1 equals 3", worst));
  }
  {
    spc::FdResult hfd = spc::fd_oracle_harmonic(kFdL, kFdH, 6);
    double worst = 0.0;
    for (int n = 0; n < 6; ++n)
      worst = std::max(worst, std::abs(hfd.eigenvalues[n] - (2.0 * n + 1.0)) /
                                  (2.0 * n + 1.0));
    out.push_back(make(S, "sp-harmonic-fd", "fd-oracle", worst <= 1e-8,
                       "grid oracle harmonic eigenvalues vs 1, 3, 5, ... "
                       "(6 levels), max rel dev " + format_double(worst),
                       "independent discretization agrees to 1e-8", worst));
  }

  // --- sextic spectrum -----------------------------------------------------
  spc::Spectrum sext = spc::sextic_spectrum(cfg.spectral_m);
  {
    double worst = 0.0;
    for (int n = 0; n < 6; ++n)
      worst = std::max(worst, sext.error_estimates[n] /
                                  std::max(1.0, std::abs(sext.eigenvalues[n])));
    out.push_back(make(S, "sp-sextic-selfconv", "sextic-spectrum",
                       worst <= cfg.tol_eigen,
                       "lowest 6 sextic eigenvalues: max rel shift between M=" +
                           std::to_string(cfg.spectral_m) + " and M=" +
                           std::to_string(2 * cfg.spectral_m) + " is " +
                           format_double(worst),
                       "basis truncation converged to 1e-8", worst));
  }
  spc::FdResult sfd = spc::fd_oracle_sextic(kFdL, kFdH, 6);
  {
    double worst = 0.0;
    for (int n = 0; n < 6; ++n)
      worst = std::max(worst, std::abs(sfd.eigenvalues[n] - sext.eigenvalues[n]) /
                                  std::abs(sext.eigenvalues[n]));
    out.push_back(make(S, "sp-sextic-fd-agree", "sextic-spectrum", worst <= 1e-6,
                       "lowest 6 sextic eigenvalues, basis vs grid oracle: max "
                       "rel dev " + format_double(worst),
                       "two independent discretizations agree to 1e-6", worst));
  }
  {
    double mass = std::max(sfd.boundary_mass, 0.0);
    out.push_back(make(S, "sp-fd-boundary", "fd-oracle",
                       !sfd.resolution_warning,
                       "worst eigenvector boundary mass " + format_double(mass),
                       "below 1e-10: the box [-7, 7] contains the low states",
                       mass));
  }
  {
    // measured with the order-4 stencil variant: the production order-8
    // stencil's truncation error is already below the eigensolver noise
    // floor at admissible step sizes, leaving nothing to halve
    spc::FdResult coarse = spc::fd_oracle_sextic_low_order(kFdL, 2.0 * kFdH, 6);
    spc::FdResult fine = spc::fd_oracle_sextic_low_order(kFdL, kFdH, 6);
    double sum = 0.0;
    int cnt = 0;
    for (int n = 3; n <= 5; ++n) {
      double ec = std::abs(coarse.eigenvalues[n] - sext.eigenvalues[n]);
      double ef = std::abs(fine.eigenvalues[n] - sext.eigenvalues[n]);
      if (ef > 0.0 && ec > 0.0) {
        sum += std::log2(ec / ef);
        ++cnt;
      }
    }
    double order = cnt ? sum / cnt : 0.0;
    out.push_back(make(S, "sp-fd-convergence-order", "fd-oracle",
                       cnt == 3 && order >= 3.5 && order <= 4.5,
                       "mean effective order " + format_double(order) +
                           " from h = 0.05 vs 0.025 on levels 3..5, 9-point "
                           "stencil",
                       "fourth-order stencil: expected order in [3.5, 4.5]",
                       order));
  }
  {
    int conv = sext.converged_count(cfg.tol_eigen);
    out.push_back(make(S, "sp-spectrum-converged", "spectrum-export", conv >= 40,
                       std::to_string(conv) + " leading eigenvalues converged "
                       "at 1e-8 relative",
                       "at least 40 usable levels at M = " +
                           std::to_string(cfg.spectral_m)));
  }
  {
    spc::SlopeFit fit = spc::loglog_slope(sext.eigenvalues, 20, 60);
    double dev = std::abs(fit.slope - 3.0);
    out.push_back(make(S, "sp-growth-slope", "eigenvalue-growth", dev <= 0.05,
                       "log-log slope of eigenvalue n vs n over n in [20, 60]: " +
                           format_double(fit.slope),
                       "cubic growth, 3.0 +/- 0.05", dev));
  }
  {
    spc::SlopeFit fit = spc::affine_cbrt_fit(sext.eigenvalues, 60);
    out.push_back(make(S, "sp-cbrt-affine", "eigenvalue-growth",
                       fit.r2 > 0.9999,
                       "cube roots of the eigenvalues against n + 1/2: R^2 = " +
                           format_double(fit.r2) + ", slope " +
                           format_double(fit.slope),
                       "affine to R^2 > 0.9999", 1.0 - fit.r2));
  }
  {
    spc::SlopeFit fit = spc::loglog_slope(sext.eigenvalues, 20, 60);
    out.push_back(disc(S, "sp-lambda-scaling", "spectrum-rule",
                       "measured growth exponent " + format_double(fit.slope) +
                           " (cubic in n, consistent with E_n linear in n and "
                           "eigenvalue = E^3)",
                       "displayed closing rule says eigenvalue grows like n "
                       "(first power); the measured exponent is 3"));
  }

  // --- series solutions ----------------------------------------------------
  std::array<spc::SeriesSolution, 3> sols = {
      spc::series_solution(0, 60), spc::series_solution(1, 60),
      spc::series_solution(2, 60)};
  for (int b = 0; b < 3; ++b) {
    double r = spc::series_ode_residual(sols[b]);
    out.push_back(make(S, "sp-series-residual-b" + std::to_string(b),
                       "series-ode", r <= cfg.tol_ode,
                       "branch " + std::to_string(b) +
                           " (60 retained terms): max |2i f''' - x^3 f| on "
                           "[-1, 1] is " + format_double(r),
                       "solves the third-order equation to 1e-10", r));
  }
  {
    bool ok = true;
    double worst = 0.0;
    for (int b = 0; b < 3; ++b) {
      spc::EigenResidual er = spc::khat_eigen_residual(sols[b]);
      ok = ok && er.low_degrees_vanish;
      worst = std::max(worst, er.max_abs);
    }
    out.push_back(make(S, "sp-series-exact", "series-ode", ok,
                       "all three branches: (2i D^3 - x^3 - 1) f + f has every "
                       "coefficient below the truncation boundary exactly zero",
                       "cancellation is exact in Q(zeta12), not just small",
                       worst));
  }
  {
    spc::SeriesSolution s0 = sols[0];
    Cyclo12 expect = Rat(-1, 240) * Cyclo12::i_unit();
    bool ok = s0.coeffs.size() > 6 && s0.coeffs[6] == expect &&
              s0.coeffs[0] == Cyclo12::one();
    out.push_back(make(S, "sp-series-c6-ratio", "series-ode", ok,
                       "branch 0: c6 / c0 = -i/240",
                       "first recurrence step 1/(2i * 4 * 5 * 6)"));
  }
  std::array<spc::HypergeomMatch, 3> matches = {
      spc::match_series(sols[0]), spc::match_series(sols[1]),
      spc::match_series(sols[2])};
  for (int b = 0; b < 2; ++b) {
    const spc::HypergeomMatch& m = matches[b];
    out.push_back(make(
        S, "sp-series-match-b" + std::to_string(b), "series-params",
        m.printed_matches && m.minus_sign_matches,
        "branch " + std::to_string(b) + ": derived parameters (" +
            exactfield::to_string(m.p_derived) + ", " +
            exactfield::to_string(m.q_derived) + ") equal the tabulated pair",
        "lower parameters (" + exactfield::to_string(m.p_printed) + ", " +
            exactfield::to_string(m.q_printed) + ")"));
  }
  {
    const spc::HypergeomMatch& m = matches[2];
    bool sane = !m.printed_matches && m.minus_sign_matches &&
                m.p_derived == Rat(7, 6) && m.q_derived == Rat(4, 3);
    out.push_back(disc(S, "sp-series-match-b2", "series-params",
                       std::string("branch 2: derived parameters (") +
                           exactfield::to_string(m.p_derived) + ", " +
                           exactfield::to_string(m.q_derived) + ")" +
                           (sane ? "" : " [UNEXPECTED STATE]"),
                       "tabulated pair (" + exactfield::to_string(m.p_printed) +
                           ", " + exactfield::to_string(m.q_printed) +
                           ") disagrees; first coefficient gap " +
                           format_double(m.printed_residual),
                       m.printed_residual));
  }
  {
    bool minus_all = true, plus_none = true;
    for (const auto& m : matches) {
      minus_all = minus_all && m.minus_sign_matches;
      plus_none = plus_none && !m.plus_sign_matches;
    }
    out.push_back(disc(S, "sp-series-arg-sign", "series-argument",
                       std::string("argument -i x^6 / 432 reproduces the exact "
                                   "coefficients on every branch") +
                           (minus_all && plus_none ? "" : " [UNEXPECTED STATE]"),
                       "the displayed argument is +i x^6 / 432; with the "
                       "displayed equation 2i f''' = x^3 f the sign must be "
                       "negative"));
  }
  {
    out.push_back(disc(S, "sp-series-convention", "hyper-convention",
                       "coefficient matching requires the factorial convention "
                       "c_k ~ 1/((p)_k (q)_k k!)",
                       "the displayed convention omits k!; the recurrence "
                       "denominator (k+4)(k+5)(k+6) forces the k! normalization"));
  }

  // --- quantization --------------------------------------------------------
  std::mt19937_64 rng(cfg.seed ^ 0x0ac710u);
  {
    std::uniform_real_distribution<double> loge(std::log(0.1), std::log(100.0));
    std::uniform_real_distribution<double> mk(0.5, 2.0);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      double E = std::exp(loge(rng)), m = mk(rng), k = mk(rng);
      double a = spc::action_integral(E, m, k);
      double g = spc::gamma_closed_form(E, m, k);
      worst = std::max(worst, std::abs(a / g - 1.0));
    }
    out.push_back(make(S, "sp-action-gamma-random", "bs-gamma", worst <= 1e-8,
                       "20 random (E, m, k): quadrature vs closed form, max "
                       "rel dev " + format_double(worst),
                       "tanh-sinh quadrature equals the Gamma expression",
                       worst));
  }
  {
    double worst = 0.0;
    for (double E : {0.1, 1.0, 10.0, 100.0}) {
      double a = spc::action_integral(E, 1.0, 1.0);
      double g = spc::gamma_closed_form(E, 1.0, 1.0);
      worst = std::max(worst, std::abs(a / g - 1.0));
    }
    out.push_back(make(S, "sp-action-gamma-decades", "bs-gamma", worst <= 1e-8,
                       "E in {0.1, 1, 10, 100}: quadrature vs closed form, "
                       "max rel dev " + format_double(worst),
                       "agreement across three decades of energy", worst));
  }
  {
    double a = spc::action_integral(1.0, 1.0, 1.0);
    const double frozen = 7.005440706685347;  // 4 * 6^(1/3) Gamma(7/6)^2 / Gamma(4/3)
    double dev = std::abs(a / frozen - 1.0);
    out.push_back(make(S, "sp-action-value", "bs-gamma", dev <= 1e-8,
                       "action at E = m = k = 1: " + format_double(a),
                       "4 * 6^(1/3) Gamma(7/6)^2 / Gamma(4/3) = " +
                           format_double(frozen),
                       dev));
  }
  {
    double a1 = spc::action_integral(1.0, 1.0, 1.0);
    double worst = 0.0;
    for (double E : {2.0, 5.0, 50.0})
      worst = std::max(worst,
                       std::abs(spc::action_integral(E, 1.0, 1.0) / (E * a1) - 1.0));
    out.push_back(make(S, "sp-action-linearity", "bs-action", worst <= 1e-8,
                       "action(E)/E constant: max rel dev " + format_double(worst),
                       "the sextic action is exactly linear in E", worst));
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> mk(0.5, 2.0);
    for (int t = 0; t < 10; ++t) {
      double E = std::exp(std::uniform_real_distribution<double>(
          std::log(0.1), std::log(100.0))(rng));
      double m = mk(rng), k = mk(rng);
      double omega = std::sqrt(k / m);
      double expect = 2.0 * std::acos(-1.0) * E / omega;
      worst = std::max(worst,
                       std::abs(spc::harmonic_action(E, m, k) / expect - 1.0));
    }
    out.push_back(make(S, "sp-harmonic-action", "bs-harmonic", worst <= 1e-10,
                       "harmonic orbit: quadrature vs 2 pi E / omega, max rel "
                       "dev " + format_double(worst),
                       "closed orbit area of the quadratic Hamiltonian", worst));
  }
  {
    double c = spc::en_coefficient();
    const double frozen = 0.1427461942609395213;
    double dev = std::abs(c / frozen - 1.0);
    out.push_back(make(S, "sp-en-coefficient", "bs-en", dev <= 1e-12,
                       "Gamma(4/3) / (4 * 6^(1/3) Gamma(7/6)^2) = " +
                           format_double(c),
                       "Gamma evaluation " + format_double(frozen) +
                           "; a companion six-digit rendering 0.142749 is off "
                           "by 2.8e-6 from this value",
                       dev));
  }
  {
    auto rows = spc::energy_levels(10, "paper_nh", 1.0, 1.0, 1.0);
    double e1 = rows[0].E_n;
    double worst = 0.0;
    for (const auto& r : rows)
      worst = std::max(worst, std::abs(r.E_n / (r.n * e1) - 1.0));
    out.push_back(make(S, "sp-en-linearity", "bs-en", worst <= 1e-12,
                       "E_n / n constant over n = 1..10, E_1 = " +
                           format_double(e1),
                       "levels exactly proportional to integers", worst));
  }
  {
    // the orbit of energy E carries p^6 + x^6 = 6 E^3 (m = k = 1), so the
    // eigenvalues of the sextic operator are compared against the classical
    // invariant at the standard-quantized energies; equivalently, against
    // the cube of the cube-root-normalized level 6^(1/3) E_n
    auto rows = spc::energy_levels(40, "standard_2pi_half", 1.0, 1.0, 1.0);
    double worst = 0.0;
    for (int n = 20; n <= 40; ++n) {
      double e = rows[n].E_n;
      double lam = sext.eigenvalues[n];
      worst = std::max(worst, std::abs(6.0 * e * e * e / lam - 1.0));
    }
    out.push_back(make(S, "sp-semiclassical", "spectrum-rule", worst <= 0.03,
                       "6 (E_n)^3 vs eigenvalue n for n in [20, 40], standard "
                       "quantization: max rel dev " + format_double(worst),
                       "semiclassical levels cubed track the spectrum within 3%",
                       worst));
  }
  {
    const double g76 = 0.9277193336300392007;
    const double g43 = 0.8929795115692492112;
    const double g16 = 5.566316001780235;
    const double g13 = 2.678938534707747;
    double worst = std::abs(std::tgamma(7.0 / 6.0) / g76 - 1.0);
    worst = std::max(worst, std::abs(std::tgamma(4.0 / 3.0) / g43 - 1.0));
    worst = std::max(worst, std::abs((g16 / 6.0) / std::tgamma(7.0 / 6.0) - 1.0));
    worst = std::max(worst, std::abs((g13 / 3.0) / std::tgamma(4.0 / 3.0) - 1.0));
    out.push_back(make(S, "sp-gamma-accuracy", "gamma-eval", worst <= 1e-12,
                       "Gamma(7/6), Gamma(4/3) vs frozen references and vs the "
                       "recurrence from Gamma(1/6), Gamma(1/3): max rel dev " +
                           format_double(worst),
                       "Gamma values accurate to 1e-12", worst));
  }

  return out;
}

// ---------------------------------------------------------------------------
// orchestration and exports
// ---------------------------------------------------------------------------

std::vector<CheckRecord> run_suites(const std::vector<std::string>& names,
                                    const RunConfig& cfg) {
  using SuiteFn = std::vector<CheckRecord> (*)(const RunConfig&);
  static const std::map<std::string, SuiteFn> table = {
      {"algebra", &suite_algebra},
      {"clifford", &suite_clifford},
      {"forms", &suite_forms},
      {"heisenberg", &suite_heisenberg},
      {"spectral", &suite_spectral},
  };
  std::vector<SuiteFn> fns;
  for (const auto& n : names) {
    auto it = table.find(n);
    if (it == table.end()) throw std::invalid_argument("unknown suite: " + n);
    fns.push_back(it->second);
  }

  std::vector<CheckRecord> all;
  if (cfg.jobs > 1 && fns.size() > 1) {
    std::vector<std::future<std::vector<CheckRecord>>> futs;
    for (SuiteFn fn : fns)
      futs.push_back(std::async(std::launch::async, fn, std::cref(cfg)));
    for (auto& f : futs) {
      auto recs = f.get();
      all.insert(all.end(), recs.begin(), recs.end());
    }
  } else {
    for (SuiteFn fn : fns) {
      auto recs = fn(cfg);
      all.insert(all.end(), recs.begin(), recs.end());
    }
  }
  sort_records(all);
  return all;
}

std::string dimension_census_csv(const std::vector<int>& n_values) {
  std::string csv = "variant,N,degree,dimension\n";
  for (ga::RelationVariant v : ga::all_variants)
    for (int N : n_values)
      for (int d = 0; d <= 4; ++d)
        csv += std::string(ga::variant_name(v)) + "," + std::to_string(N) + "," +
               std::to_string(d) + "," +
               std::to_string(ga::quotient_dim(v, N, d)) + "\n";
  return csv;
}

std::string spectrum_csv(const spc::Spectrum& sp) {
  std::string csv = "n,eigenvalue,error_estimate,M\n";
  for (size_t n = 0; n < sp.eigenvalues.size(); ++n)
    csv += std::to_string(n) + "," + format_double(sp.eigenvalues[n]) + "," +
           format_double(sp.error_estimates[n]) + "," + std::to_string(sp.M) +
           "\n";
  return csv;
}

std::string quantization_csv(const std::vector<spc::QuantizationResult>& rows) {
  std::string csv = "n,E_n,action,convention\n";
  for (const auto& r : rows)
    csv += std::to_string(r.n) + "," + format_double(r.E_n) + "," +
           format_double(r.action) + "," + r.convention + "\n";
  return csv;
}

std::string series_match_json() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int b = 0; b < 3; ++b) {
    spc::HypergeomMatch m = spc::match_series(spc::series_solution(b, 40));
    nlohmann::ordered_json item;
    item["branch"] = m.branch;
    item["p_derived"] = exactfield::to_string(m.p_derived);
    item["q_derived"] = exactfield::to_string(m.q_derived);
    item["p_printed"] = exactfield::to_string(m.p_printed);
    item["q_printed"] = exactfield::to_string(m.q_printed);
    item["printed_matches"] = m.printed_matches;
    item["argument_minus_matches"] = m.minus_sign_matches;
    item["argument_plus_matches"] = m.plus_sign_matches;
    item["printed_first_gap"] = m.printed_residual;
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

}  // namespace ternwb::cli
