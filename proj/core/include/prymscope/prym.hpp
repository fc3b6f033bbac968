#pragma once

#include <cstdint>
#include <vector>

#include "prymscope/cover.hpp"

namespace prymscope {

enum class Ramification { kEtale, kRamifiedTwo, kRamifiedOther };

const char* ramification_name(Ramification r);

/// An involution sigma in the Galois group together with the branching
/// behaviour of the double cover it defines.
struct PrymDatum {
  ResidueVector sigma;
  Ramification ramification = Ramification::kEtale;
  std::int64_t fixed_points = 0;
};

/// Validates sigma against the cover: order exactly 2 (every coordinate 0 or
/// N/2, not all zero), membership in the Galois group, fixed-point count
/// sum over columns with sigma in <T_j> of degree/ord(T_j). With strict_etale
/// any sigma fixing points is rejected (SIGMA_RAMIFIED).
PrymDatum validate_datum(const CoverData& cover, const ResidueVector& sigma,
                         bool strict_etale);

/// +1 if rep.sigma = 0, -1 if rep.sigma = N/2; no other value can occur for
/// a valid sigma, and the result does not depend on the representative.
int sigma_pairing(const Character& character, const ResidueVector& sigma);

/// Unordered eigenspace type {a, b} (a >= b) of a minus orbit, with the
/// self-duality flag (alpha = -alpha) and the zero count of alpha.
/// `multiplicity` counts how many minus orbits realize the same values.
struct EigenType {
  int a = 0;
  int b = 0;
  bool self_dual = false;
  int zeros = 0;
  int multiplicity = 1;

  bool trivial() const { return b == 0; }
  friend bool operator==(const EigenType&, const EigenType&) = default;
  friend auto operator<=>(const EigenType&, const EigenType&) = default;
};

/// A {alpha, -alpha} orbit of sigma-minus characters. Self-dual orbits have
/// alpha = -alpha and are counted once.
struct MinusOrbit {
  ResidueVector alpha;      // lex-least of the pair
  std::int64_t dim_alpha = 0;
  std::int64_t dim_conj = 0;  // dimension at -alpha (equals dim_alpha if self-dual)
  bool self_dual = false;
  int zeros = 0;

  EigenType type() const {
    auto a = static_cast<int>(dim_alpha > dim_conj ? dim_alpha : dim_conj);
    auto b = static_cast<int>(dim_alpha > dim_conj ? dim_conj : dim_alpha);
    return EigenType{a, b, self_dual, zeros, 1};
  }
};

struct PrymDecomposition {
  PrymDatum datum;
  int cols = 0;  // branch point count s
  std::vector<MinusOrbit> minus_orbits;  // sorted by alpha
  std::vector<EigenType> types;          // aggregated with multiplicities
  std::int64_t prym_dim = 0;
  std::int64_t quotient_genus = 0;
};

/// Splits the character table by the sigma pairing, groups the minus part
/// into conjugate orbits and checks the double-cover bookkeeping: exactly
/// degree/2 minus characters, prym_dim + quotient_genus = genus, and
/// genus = 2*quotient_genus - 1 + fixed_points/2.
PrymDecomposition decompose(const CoverData& cover, const PrymDatum& datum);

}  // namespace prymscope
