#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "prymscope/residue.hpp"

namespace prymscope {

/// Branching datum of an abelian Galois cover of the line: an m x s matrix
/// over Z/N whose j-th column is the local monodromy at the j-th branch
/// point. Valid matrices have no zero column and every row summing to 0
/// mod N (no ramification over infinity).
struct CoverMatrix {
  int modulus = 0;
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;  // row-major, reduced to [0, N)

  int at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
  ResidueVector row(int i) const;
  ResidueVector column(int j) const;

  friend bool operator==(const CoverMatrix&, const CoverMatrix&) = default;
};

/// Checks the cover-matrix invariants and returns the validated value.
/// Rejects with BAD_MODULUS, BAD_DIMENSIONS, TOO_FEW_COLUMNS, ZERO_COLUMN
/// or ROW_SUM_NONZERO (checked in that order).
CoverMatrix validate_matrix(int modulus, int rows, int cols,
                            std::span<const int> entries);

/// N / gcd(N, entries of column j); at least 2 for a valid matrix.
int ramification_order(const CoverMatrix& matrix, int j);

/// Genus of the cover by Riemann-Hurwitz over the branching data. Exact
/// integer arithmetic; a non-integral or negative value aborts via
/// internal_error rather than rounding.
std::int64_t genus(const CoverMatrix& cover);

/// Dimension of the eigenspace of holomorphic differentials attached to the
/// character with row-span vector alpha: 0 for the trivial character,
/// otherwise -1 + sum over nonzero entries of (N - alpha_j)/N. Requires the
/// entries of alpha to sum to 0 mod N (SUM_NOT_ZERO otherwise).
std::int64_t eigen_dim(const ResidueVector& alpha);

/// One character of the Galois group, keyed by its row-span vector.
struct Character {
  ResidueVector alpha;  // length s, the row-span vector n.A
  ResidueVector rep;    // lex-least n in (Z/N)^m with rep.A = alpha
  std::int64_t dim = 0;
  int zeros = 0;        // zero entries of alpha

  friend bool operator==(const Character&, const Character&) = default;
};

struct CoverData {
  CoverMatrix matrix;
  SubgroupData group;       // column span, the Galois group
  std::int64_t degree = 0;  // |group|
  std::int64_t genus = 0;
  std::vector<Character> characters;  // sorted lex by alpha, exactly `degree` many

  const Character* find_character(const ResidueVector& alpha) const;
};

/// Enumerates the distinct row-span vectors n.A with one representative each,
/// computes all eigenspace dimensions and cross-checks their sum against the
/// Riemann-Hurwitz genus (two independent formulas; disagreement is a bug).
CoverData character_table(const CoverMatrix& cover);

}  // namespace prymscope
