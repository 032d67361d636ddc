#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ternwb/ncpoly.hpp"

namespace ternwb::gradedalg {

// The eight degree-3 constitutive-relation families.  The S group generalizes
// commutative generators (grade 0), the Lambda group generalizes Grassmann
// generators (grade 1, conjugates grade 2).
enum class RelationVariant { S, Sbar, S1, S0, Lam0, Lam1, Lam, LamBar };

constexpr std::array<RelationVariant, 8> all_variants{
    RelationVariant::S,    RelationVariant::Sbar, RelationVariant::S1,
    RelationVariant::S0,   RelationVariant::Lam0, RelationVariant::Lam1,
    RelationVariant::Lam,  RelationVariant::LamBar};

const char* variant_name(RelationVariant v);
std::optional<RelationVariant> variant_from_name(const std::string& name);
Family default_family(RelationVariant v);

// All degree-3 defining relations of the variant, instantiated over ordered
// index triples from {1..N}.  The generator family defaults to the variant's
// natural one; pass an override to compare relation patterns across families.
std::vector<NCPoly> relation_instances(RelationVariant v, int N,
                                       std::optional<Family> family = {});

// Degree-d slice of the two-sided ideal generated by the variant's relations:
// rows are a reduced echelon basis of the slice in the N^d word basis
// (deterministic first-nonzero pivoting), so rank == rows.size().
struct DegreeSpan {
  int degree = 0;
  int n_words = 0;  // N^degree
  std::vector<std::vector<Cyclo12>> rows;
  int rank = 0;
};

DegreeSpan ideal_degree_span(RelationVariant v, int N, int d,
                             std::optional<Family> family = {});

// N^d minus the ideal-slice rank; degrees 0..2 are unconstrained.
int quotient_dim(RelationVariant v, int N, int d);

// Quotient dimensions for degrees 0..4 against the generating-function
// coefficients (1, N, N^2, N(N-1)(N+1)/3, 0).  Defined for Lam and LamBar.
struct HilbertReport {
  RelationVariant variant;
  int N;
  std::array<int, 5> dims;
  std::array<int, 5> expected;
  bool ok;
};

HilbertReport hilbert_check(RelationVariant v, int N);

// True iff the degree-3 ideal slice of src is contained in that of dst
// (row-space inclusion), which certifies the quotient surjection src -> dst.
bool surjection_check(RelationVariant src, RelationVariant dst, int N);

// Independent oracle for the S quotient at degree 3: count cyclic-rotation
// classes of index triples; an all-equal triple contributes one dimension,
// an aperiodic orbit contributes two.
int necklace_dim_s_degree3(int N);

// Structure constants f^k_{ij} for an n-dimensional bracket, flattened as
// f[(k*n + i)*n + j].  Rejects non-antisymmetric input; returns true iff the
// quadratic Jacobi sum vanishes for every index triple.
bool jacobi_check(const std::vector<Cyclo12>& f, int n);

}  // namespace ternwb::gradedalg
