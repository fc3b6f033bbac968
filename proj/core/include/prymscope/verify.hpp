#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "prymscope/search.hpp"

namespace prymscope {

/// Outcome of one verification sweep: named counters plus a list of failed
/// assertions, each carrying the offending instance.
struct VerifyReport {
  std::string suite;
  std::vector<std::pair<std::string, std::int64_t>> counters;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  void count(const std::string& name, std::int64_t delta = 1);
  std::int64_t counter(const std::string& name) const;
};

/// Random valid cover matrix within the given bounds. The character budget
/// caps N^m so a sample's character table stays small.
CoverMatrix random_cover_matrix(std::mt19937_64& rng, int max_modulus,
                                int max_rows, int min_cols, int max_cols,
                                int char_budget);

/// Random invertible matrix over Z/N, as rows.
std::vector<std::vector<int>> random_invertible(std::mt19937_64& rng, int modulus,
                                                int size);

/// Applies A -> U.A.P (and sigma -> U.sigma) for rows U, permutation perm.
CoverMatrix transform_matrix(const CoverMatrix& a,
                             const std::vector<std::vector<int>>& u,
                             const std::vector<int>& perm);
ResidueVector transform_sigma(const ResidueVector& sigma,
                              const std::vector<std::vector<int>>& u);

/// Exact-identity sweep over random matrices: character dimensions vs genus,
/// conjugate duality, minus-character count, double-cover Riemann-Hurwitz,
/// and the parity form of the pairing for sigma with all coordinates N/2.
VerifyReport verify_identities(std::int64_t samples, std::uint64_t seed);

/// Random (A, U, P, unit) transformations: canonical keys and certificates
/// must agree with the untransformed run.
VerifyReport verify_symmetry(std::int64_t samples, std::uint64_t seed);

/// Combined identity + symmetry suite (the CLI's `invariants`).
VerifyReport verify_invariants(std::int64_t samples, std::uint64_t seed);

/// Cyclic trichotomy sweep: every enumerated cyclic datum is classified, and
/// whenever the third branch applies with its dimension argument available
/// the certificate must say NOT_SPECIAL.
VerifyReport verify_trichotomy();

/// Cyclic sum-criterion sweep (N in {4,6,8,10,12}, s in [6,9], sigma = N/2,
/// lax): every applicable instance must be NOT_SPECIAL.
VerifyReport verify_cyclic_sums();

/// Distinct-type theorem sweep over the tractable slice with s in [14,16]
/// (single-row N in {8,10,12} plus two- and three-row covers over Z/2):
/// every applicable instance must be NOT_SPECIAL; reports vacuity if none.
VerifyReport verify_abelian_thm();

}  // namespace prymscope
