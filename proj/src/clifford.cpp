#include "ternwb/clifford.hpp"

#include <sstream>

namespace ternwb::matrixternary {

namespace {

MatC from_rows(std::initializer_list<std::initializer_list<Cyclo12>> rows) {
  MatC m(static_cast<int>(rows.size()));
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (const auto& v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

}  // namespace

QSet q_matrices() {
  const Cyclo12 z = Cyclo12::zero();
  const Cyclo12 o = Cyclo12::one();
  const Cyclo12 j = Cyclo12::j_unit();
  const Cyclo12 j2 = Cyclo12::j2_unit();
  QSet s;
  s.q[0] = from_rows({{z, o, z}, {z, z, j}, {j2, z, z}});
  s.q[1] = from_rows({{z, j, z}, {z, z, o}, {j2, z, z}});
  s.q[2] = from_rows({{z, o, z}, {z, z, o}, {o, z, z}});
  for (int k = 0; k < 3; ++k) s.qdag[k] = dagger(s.q[k]);
  return s;
}

namespace {

bool even_perm(int a, int b, int c) {
  return (a == 1 && b == 2 && c == 3) || (a == 2 && b == 3 && c == 1) ||
         (a == 3 && b == 1 && c == 2);
}

bool odd_perm(int a, int b, int c) {
  return (a == 2 && b == 1 && c == 3) || (a == 3 && b == 2 && c == 1) ||
         (a == 1 && b == 3 && c == 2);
}

}  // namespace

Cyclo12 eta(int a, int b, int c) {
  const Cyclo12 three = Cyclo12::from_int(3);
  if ((a == b && b == c) || even_perm(a, b, c)) return three;
  if (odd_perm(a, b, c)) return three * Cyclo12::j2_unit();
  return Cyclo12::zero();
}

Cyclo12 eta_printed(int a, int b, int c) {
  if (a == b && b == c) return Cyclo12::one();
  if (even_perm(a, b, c)) return Cyclo12::j2_unit();
  if (odd_perm(a, b, c)) return Cyclo12::j_unit();
  return Cyclo12::zero();
}

Cyclo12 eta_dotted(int a, int b, int c) { return conj(eta(c, b, a)); }

namespace {

void check_table(const std::array<MatC, 3>& gens,
                 Cyclo12 (*table)(int, int, int), const char* label,
                 EtaReport& rep) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        MatC lhs = tern_anticomm(gens[a - 1], gens[b - 1], gens[c - 1]);
        Cyclo12 scalar;
        bool is_scalar = lhs.is_scalar(&scalar);
        ++rep.checked;
        if (!is_scalar || !(scalar == table(a, b, c))) {
          rep.ok = false;
          std::ostringstream os;
          os << label << "(" << a << "," << b << "," << c << "): ";
          if (!is_scalar)
            os << "result is not a scalar multiple of the identity";
          else
            os << "got " << scalar.to_string() << ", want "
               << table(a, b, c).to_string();
          rep.failures.push_back(os.str());
        }
      }
}

}  // namespace

EtaReport eta_verify() {
  QSet s = q_matrices();
  EtaReport rep;
  check_table(s.q, &eta, "eta", rep);
  check_table(s.qdag, &eta_dotted, "eta_dotted", rep);
  return rep;
}

SkewReport skew_vanish_check() {
  QSet s = q_matrices();
  const MatC &q1 = s.q[0], &q2 = s.q[1], &q3 = s.q[2];
  const Cyclo12 j = Cyclo12::j_unit();
  const Cyclo12 j2 = Cyclo12::j2_unit();
  auto skew = [](const MatC& a, const MatC& b, const MatC& c,
                 const Cyclo12& r1, const Cyclo12& r2) {
    return a * b * c + r1 * (b * c * a) + r2 * (c * a * b);
  };
  SkewReport rep;
  rep.j_zero = skew(q1, q2, q3, j, j2).is_zero();
  rep.j2_zero = skew(q1, q2, q3, j2, j).is_zero();
  rep.odd_j_zero = skew(q2, q1, q3, j, j2).is_zero();
  rep.odd_j2_zero = skew(q2, q1, q3, j2, j).is_zero();
  return rep;
}

bool similarity_invariance(const MatC& p) {
  MatC pinv = inverse(p);  // throws on singular input
  QSet s = q_matrices();
  std::array<MatC, 3> qt;
  for (int k = 0; k < 3; ++k) qt[k] = pinv * s.q[k] * p;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        MatC lhs = tern_anticomm(qt[a - 1], qt[b - 1], qt[c - 1]);
        Cyclo12 scalar;
        if (!lhs.is_scalar(&scalar) || !(scalar == eta(a, b, c))) return false;
      }
  return true;
}

std::array<MatC, 3> pauli_matrices() {
  const Cyclo12 z = Cyclo12::zero();
  const Cyclo12 o = Cyclo12::one();
  const Cyclo12 iu = Cyclo12::i_unit();
  return {from_rows({{z, o}, {o, z}}), from_rows({{z, -iu}, {iu, z}}),
          from_rows({{o, z}, {z, -o}})};
}

MatC pauli_cubic(int i, int k, int l) {
  auto sigma = pauli_matrices();
  return ternary_j_commutator(sigma[i - 1], sigma[k - 1], sigma[l - 1]);
}

std::vector<Cyclo12> pauli_structure_constants() {
  // C^k_{ij} = 2*i*eps_{kij}.
  std::vector<Cyclo12> f(27, Cyclo12::zero());
  auto eps = [](int a, int b, int c) -> int {
    if (a == b || b == c || a == c) return 0;
    // parity of the permutation (a, b, c) of (0, 1, 2)
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
  };
  Cyclo12 twoi = Cyclo12::from_int(2) * Cyclo12::i_unit();
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        f[(k * 3 + i) * 3 + j] = Rat(eps(k, i, j)) * twoi;
  return f;
}

bool epsilon_invariance_check(const MatC& s) {
  if (s.n != 2) throw std::invalid_argument("epsilon check needs a 2x2 matrix");
  MatC eps(2);
  eps.at(0, 1) = Cyclo12::one();
  eps.at(1, 0) = -Cyclo12::one();
  for (int ap = 0; ap < 2; ++ap)
    for (int bp = 0; bp < 2; ++bp) {
      Cyclo12 sum;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          sum += s.at(a, ap) * s.at(b, bp) * eps.at(a, b);
      if (!(sum == eps.at(ap, bp))) return false;
    }
  return true;
}

MatC random_small_matrix(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  MatC m(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m.at(r, c) = Cyclo12::from_int(coeff(rng)) +
                   Cyclo12::from_int(coeff(rng)) * Cyclo12::j_unit();
  return m;
}

MatC random_invertible(std::mt19937_64& rng, int dim) {
  for (;;) {
    MatC m = random_small_matrix(rng, dim);
    if (!det(m).is_zero()) return m;
  }
}

MatC random_det_one(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> which(0, 1);
  MatC m = MatC::identity(2);
  for (int step = 0; step < 4; ++step) {
    MatC shear = MatC::identity(2);
    Cyclo12 r = Cyclo12::from_int(coeff(rng)) +
                Cyclo12::from_int(coeff(rng)) * Cyclo12::j_unit();
    if (which(rng))
      shear.at(0, 1) = r;
    else
      shear.at(1, 0) = r;
    m = m * shear;
  }
  return m;
}

}  // namespace ternwb::matrixternary
