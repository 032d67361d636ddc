#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "ternwb/matrix.hpp"

namespace ternwb::matrixternary {

// The three ternary Clifford generators and their hermitian conjugates.
// Z3 grading metadata: grade(Q_k) = 1, grade(Qdag_k) = 2.
struct QSet {
  std::array<MatC, 3> q;
  std::array<MatC, 3> qdag;
  static constexpr int q_grade = 1;
  static constexpr int qdag_grade = 2;
};

QSet q_matrices();

// eta table actually satisfied by the generators above, frozen from exact
// arithmetic: eta_aaa = 3 on the diagonal, 3 on even permutations of (1,2,3),
// 3*j^2 on odd permutations, zero otherwise.  Indices are 1-based.  The
// dotted table is eta_dotted(a,b,c) = conj(eta(c,b,a)).
//
// The displayed table (diagonal 1, even permutations j^2, odd permutations
// j) is inconsistent with the displayed generators for every nonzero entry:
// Q1*Q2 equals the transpose of Q3, so Q1*Q2*Q3 = 1 and each cyclic product
// is a unit scalar, making every nonzero cyclic sum 3 times a unit; no
// choice of generators with unimodular entries can reach a diagonal value
// of 1.  The displayed values are kept as eta_printed for the discrepancy
// catalogue.
Cyclo12 eta(int a, int b, int c);
Cyclo12 eta_printed(int a, int b, int c);
Cyclo12 eta_dotted(int a, int b, int c);

struct EtaReport {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> failures;
};

// Checks tern_anticomm(Q_a, Q_b, Q_c) == eta_abc * 1 over all 27 triples, and
// the dotted analogue for the conjugate generators.
EtaReport eta_verify();

struct SkewReport {
  bool j_zero = false;
  bool j2_zero = false;
  bool odd_j_zero = false;
  bool odd_j2_zero = false;
  bool ok() const { return j_zero && j2_zero && odd_j_zero && odd_j2_zero; }
};

// Both skew ternary commutators of (Q1, Q2, Q3) vanish, and likewise for the
// odd ordering (Q2, Q1, Q3).
SkewReport skew_vanish_check();

// With Qt_b = P^-1 Q_b P, the full eta table is reproduced exactly.
// Throws on singular P.
bool similarity_invariance(const MatC& p);

std::array<MatC, 3> pauli_matrices();

// Cubic j-commutator {sigma_i, sigma_k, sigma_l}; indices 1-based.
MatC pauli_cubic(int i, int k, int l);

// Structure constants C^k_{ij} = 2*i*eps_{kij} of the Pauli commutators,
// flattened for jacobi_check.
std::vector<Cyclo12> pauli_structure_constants();

// True iff S^a_{a'} S^b_{b'} eps_{ab} = eps_{a'b'} for all primed pairs,
// which is equivalent to det S = 1.
bool epsilon_invariance_check(const MatC& s);

// Property-test generators: entries a + b*j with a, b drawn from {-2..2}.
MatC random_small_matrix(std::mt19937_64& rng, int dim);
MatC random_invertible(std::mt19937_64& rng, int dim);
// Random 2x2 matrix of determinant exactly 1 (product of shears).
MatC random_det_one(std::mt19937_64& rng);

}  // namespace ternwb::matrixternary
