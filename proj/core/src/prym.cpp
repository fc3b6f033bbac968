#include "prymscope/prym.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace prymscope {

const char* ramification_name(Ramification r) {
  switch (r) {
    case Ramification::kEtale: return "ETALE";
    case Ramification::kRamifiedTwo: return "RAMIFIED_TWO";
    case Ramification::kRamifiedOther: return "RAMIFIED_OTHER";
  }
  return "UNKNOWN";
}

PrymDatum validate_datum(const CoverData& cover, const ResidueVector& sigma,
                         bool strict_etale) {
  const CoverMatrix& mat = cover.matrix;
  if (sigma.modulus() != mat.modulus) {
    throw validation_error(errc::mixed_modulus, "sigma modulus " + std::to_string(sigma.modulus()));
  }
  if (sigma.size() != mat.rows) {
    throw validation_error(errc::mixed_length, "sigma length " + std::to_string(sigma.size()));
  }
  if (mat.modulus % 2 != 0) {
    throw validation_error(errc::odd_modulus,
                           "no order-2 element exists mod " + std::to_string(mat.modulus));
  }
  const int half = mat.modulus / 2;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma[i] != 0 && sigma[i] != half) {
      throw validation_error(errc::not_involution,
                             "coordinate " + std::to_string(i) + " = " + std::to_string(sigma[i]));
    }
  }
  if (sigma.is_zero()) {
    throw validation_error(errc::not_involution, "sigma is the identity");
  }
  if (!cover.group.contains(sigma)) {
    throw validation_error(errc::sigma_not_in_group, "sigma not in the column span");
  }

  // All points over z_j share the inertia subgroup <T_j>; sigma fixes the
  // whole fiber of degree/ord(T_j) points iff it lies in that subgroup.
  std::int64_t fixed = 0;
  for (int j = 0; j < mat.cols; ++j) {
    ResidueVector col = mat.column(j);
    if (cyclic_subgroup_contains(col, sigma)) {
      fixed += cover.degree / element_order(col);
    }
  }
  if (fixed % 2 != 0) {
    throw internal_error("fixed-point count " + std::to_string(fixed) + " is odd");
  }

  PrymDatum datum;
  datum.sigma = sigma;
  datum.fixed_points = fixed;
  datum.ramification = fixed == 0 ? Ramification::kEtale
                       : fixed == 2 ? Ramification::kRamifiedTwo
                                    : Ramification::kRamifiedOther;
  if (strict_etale && fixed > 0) {
    throw validation_error(errc::sigma_ramified,
                           std::to_string(fixed) + " fixed points under strict-etale");
  }
  return datum;
}

int sigma_pairing(const Character& character, const ResidueVector& sigma) {
  int p = dot(character.rep, sigma);
  if (p == 0) return +1;
  if (p == sigma.modulus() / 2) return -1;
  throw internal_error("sigma pairing " + std::to_string(p) + " is neither 0 nor N/2");
}

PrymDecomposition decompose(const CoverData& cover, const PrymDatum& datum) {
  PrymDecomposition dec;
  dec.datum = datum;
  dec.cols = cover.matrix.cols;

  std::int64_t minus_count = 0;
  std::map<std::vector<int>, const Character*> minus;  // alpha -> character
  for (const Character& c : cover.characters) {
    if (sigma_pairing(c, datum.sigma) == -1) {
      ++minus_count;
      dec.prym_dim += c.dim;
      minus.emplace(c.alpha.entries(), &c);
    } else {
      dec.quotient_genus += c.dim;
    }
  }
  if (2 * minus_count != cover.degree) {
    throw internal_error("INTERNAL_MINUS_COUNT: " + std::to_string(minus_count) +
                         " minus characters for degree " + std::to_string(cover.degree));
  }

  // Group into {alpha, -alpha} orbits keyed by the lex-least member.
  for (const auto& [alpha_entries, c] : minus) {
    ResidueVector neg = -c->alpha;
    if (neg.entries() < alpha_entries) continue;  // orbit already emitted
    const Character* conj = cover.find_character(neg);
    if (conj == nullptr || sigma_pairing(*conj, datum.sigma) != -1) {
      throw internal_error("conjugate character missing from the minus part");
    }
    MinusOrbit orbit;
    orbit.alpha = c->alpha;
    orbit.dim_alpha = c->dim;
    orbit.dim_conj = conj->dim;
    orbit.self_dual = neg == c->alpha;
    orbit.zeros = c->zeros;
    if (conj->zeros != c->zeros) {
      throw internal_error("zero counts differ within a conjugate orbit");
    }
    dec.minus_orbits.push_back(std::move(orbit));
  }

  // Aggregate equal types; orbits are already in deterministic alpha order.
  std::map<std::tuple<int, int, bool, int>, int> type_counts;
  for (const MinusOrbit& o : dec.minus_orbits) {
    EigenType t = o.type();
    ++type_counts[{t.a, t.b, t.self_dual, t.zeros}];
  }
  for (const auto& [key, count] : type_counts) {
    dec.types.push_back(EigenType{std::get<0>(key), std::get<1>(key),
                                  std::get<2>(key), std::get<3>(key), count});
  }

  if (dec.prym_dim + dec.quotient_genus != cover.genus) {
    throw internal_error("prym_dim + quotient_genus != genus");
  }
  if (cover.genus != 2 * dec.quotient_genus - 1 + datum.fixed_points / 2) {
    throw internal_error("double-cover Riemann-Hurwitz cross-check failed: genus " +
                         std::to_string(cover.genus) + ", quotient " +
                         std::to_string(dec.quotient_genus) + ", fixed " +
                         std::to_string(datum.fixed_points));
  }
  return dec;
}

}  // namespace prymscope
