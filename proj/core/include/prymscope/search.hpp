#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prymscope/certify.hpp"

namespace prymscope {

enum class SymmetryLevel { kFull, kInvariantHash };

/// Bounds and options for an exhaustive sweep. The hard caps (N <= 16,
/// m <= 4, 4 <= s <= 16) keep exact canonicalization affordable; anything
/// outside is refused with SPEC_OUT_OF_RANGE.
struct SearchSpec {
  int modulus = 0;
  int rows = 0;
  int cols_min = 0;
  int cols_max = 0;
  bool strict_etale = false;
  BoundMode mode = BoundMode::kUnitaryOnly;
  int workers = 1;
  SymmetryLevel symmetry = SymmetryLevel::kFull;
};

void validate_spec(const SearchSpec& spec);

/// Orbit identifier. At FULL level two matrices get equal keys exactly when
/// they differ by a column permutation and an invertible row transformation;
/// at INVARIANT_HASH level the key is a fingerprint of orbit invariants and
/// collisions are possible (coarse dedup only).
std::string canonical_key(const CoverMatrix& cover, SymmetryLevel level);

/// Lexicographically least row-major matrix in the orbit
/// {U.A.P : U invertible over Z/N, P a column permutation}.
CoverMatrix canonical_matrix(const CoverMatrix& cover);

/// One representative per FULL orbit of valid matrices within the given
/// bounds, sorted by ascending canonical key.
std::vector<CoverMatrix> enumerate_covers(const SearchSpec& spec);

/// All order-2 elements of the Galois group in ascending order; under
/// strict_etale only those outside every inertia subgroup <T_j>.
std::vector<ResidueVector> enumerate_sigmas(const CoverData& cover,
                                            bool strict_etale);

/// Everything the sweep knows about one (cover, sigma) pair.
struct SearchResult {
  CoverData cover;
  PrymDatum datum;
  PrymDecomposition decomposition;
  Certificate certificate;
  TrichotomyResult trichotomy;
  CyclicSumsResult cyclic_sums;
  AbelianThmResult abelian_thm;
  std::string key;  // FULL canonical key of the cover
};

SearchResult analyze_pair(const CoverData& cover, const ResidueVector& sigma,
                          bool strict_etale, BoundMode mode);

/// Disjoint unit of enumeration work: one column-count and one contiguous
/// range of first-column values.
struct EnumerationShard {
  int cols = 0;
  int first_lo = 0;  // packed column values, inclusive
  int first_hi = 0;

  std::string id() const;
};

std::vector<EnumerationShard> enumeration_shards(const SearchSpec& spec);

/// Runs one shard, invoking the sink for every (cover, sigma) result in
/// deterministic order.
void run_shard(const SearchSpec& spec, const EnumerationShard& shard,
               const std::function<void(const SearchResult&)>& sink);

/// Full sweep over all shards, parallelized over spec.workers; the result
/// set is independent of the worker count and sorted by (key, sigma).
std::vector<SearchResult> run_search(const SearchSpec& spec);

}  // namespace prymscope
