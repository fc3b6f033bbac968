#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prymscope/prym.hpp"

namespace prymscope {

enum class BoundMode { kUnitaryOnly, kWithSymplectic };
enum class Verdict { kNotSpecial, kInconclusive };

const char* bound_mode_name(BoundMode m);
const char* verdict_name(Verdict v);

/// Dedup key for eigenspace types: same unordered pair {a, b} and the same
/// self-duality. Zero counts and multiplicities never enter the bound.
struct TypeKey {
  int a = 0;
  int b = 0;
  bool self_dual = false;

  bool trivial() const { return b == 0; }
  friend bool operator==(const TypeKey&, const TypeKey&) = default;
  friend auto operator<=>(const TypeKey&, const TypeKey&) = default;
};

TypeKey type_key(const EigenType& t);

/// Symmetric-space dimension of the real simple factor attached to a type:
/// 0 when trivial, a*b for a conjugate pair (unitary factor), a(a+1)/2 for a
/// self-dual type (symplectic factor).
std::int64_t delta_of_type(const TypeKey& t);
std::int64_t delta_of_type(const EigenType& t);

/// Lower bound for the dimension of the smallest special subvariety
/// containing the family, compared against the family dimension s-3.
struct Certificate {
  int cols = 0;
  int family_dim = 0;
  std::int64_t bound_unitary = 0;
  std::int64_t bound_with_symplectic = 0;
  std::vector<TypeKey> witnesses;  // distinct nontrivial keys behind the active bound
  Verdict verdict = Verdict::kInconclusive;
  BoundMode mode = BoundMode::kUnitaryOnly;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Sums delta over the distinct nontrivial type keys among the minus orbits,
/// each key counted once regardless of multiplicity. The unitary bound uses
/// conjugate-pair keys only; the symplectic bound adds self-dual keys.
/// Verdict is NOT_SPECIAL exactly when the active bound exceeds s-3.
Certificate lower_bound(const PrymDecomposition& dec, BoundMode mode);

enum class TrichotomyBranch { kOneNontrivial, kAllSameOneSm3, kExpectNotSpecial };

const char* trichotomy_branch_name(TrichotomyBranch b);

/// Classification of a cyclic datum by its minus eigenspace types: either at
/// most one eigenspace is nontrivial, or all share the type {1, s-3}, or the
/// family should not be special. `presumption_ok` records whether the
/// dimension argument behind the third branch actually applies (a zero-free
/// nontrivial conjugate-pair witness is available), so the harness only
/// asserts NOT_SPECIAL when it does.
struct TrichotomyResult {
  bool applicable = false;  // Galois group cyclic
  TrichotomyBranch branch = TrichotomyBranch::kOneNontrivial;
  bool presumption_ok = false;

  friend bool operator==(const TrichotomyResult&, const TrichotomyResult&) = default;
};

TrichotomyResult check_prop_cyclic_trichotomy(const CoverData& cover,
                                              const PrymDatum& datum,
                                              const PrymDecomposition& dec);

/// Hypotheses of the cyclic sum criterion: cyclic group of order > 2,
/// s > 5, and for the generating row (a_1..a_s) both sum(a_i) > 2N and
/// sum([-a_i]) > 2N. For a single-row matrix generating all of Z/N the given
/// row is used verbatim; otherwise the hypotheses are evaluated on the
/// lex-least generator of the row span, rescaled to the group order.
struct CyclicSumsResult {
  bool applicable = false;
};

CyclicSumsResult check_prop_cyclic_sums(const CoverData& cover,
                                        const PrymDatum& datum);

/// Existence of two conjugate-pair minus orbits of distinct types with all
/// four dimensions >= 2 and combined zero counts < s, for s > 13.
struct AbelianThmResult {
  bool applicable = false;
  std::optional<std::pair<TypeKey, TypeKey>> witness_pair;
};

AbelianThmResult check_thm_abelian(const PrymDecomposition& dec);

}  // namespace prymscope
