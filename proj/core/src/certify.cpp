#include "prymscope/certify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace prymscope {

const char* bound_mode_name(BoundMode m) {
  return m == BoundMode::kUnitaryOnly ? "UNITARY_ONLY" : "WITH_SYMPLECTIC";
}

const char* verdict_name(Verdict v) {
  return v == Verdict::kNotSpecial ? "NOT_SPECIAL" : "INCONCLUSIVE";
}

const char* trichotomy_branch_name(TrichotomyBranch b) {
  switch (b) {
    case TrichotomyBranch::kOneNontrivial: return "ONE_NONTRIVIAL";
    case TrichotomyBranch::kAllSameOneSm3: return "ALL_SAME_1_SM3";
    case TrichotomyBranch::kExpectNotSpecial: return "EXPECT_NOT_SPECIAL";
  }
  return "UNKNOWN";
}

TypeKey type_key(const EigenType& t) { return TypeKey{t.a, t.b, t.self_dual}; }

std::int64_t delta_of_type(const TypeKey& t) {
  if (t.trivial()) return 0;
  if (t.self_dual) return static_cast<std::int64_t>(t.a) * (t.a + 1) / 2;
  return static_cast<std::int64_t>(t.a) * t.b;
}

std::int64_t delta_of_type(const EigenType& t) { return delta_of_type(type_key(t)); }

Certificate lower_bound(const PrymDecomposition& dec, BoundMode mode) {
  Certificate cert;
  cert.cols = dec.cols;
  cert.family_dim = dec.cols - 3;
  cert.mode = mode;

  // Same-type eigenspaces may share a simple monodromy factor, so each
  // distinct nontrivial key contributes exactly once.
  std::set<TypeKey> keys;
  for (const MinusOrbit& orbit : dec.minus_orbits) {
    TypeKey key = type_key(orbit.type());
    if (!key.trivial()) keys.insert(key);
  }
  for (const TypeKey& key : keys) {
    if (key.self_dual) {
      cert.bound_with_symplectic += delta_of_type(key);
    } else {
      cert.bound_unitary += delta_of_type(key);
    }
  }
  cert.bound_with_symplectic += cert.bound_unitary;

  std::int64_t active = mode == BoundMode::kUnitaryOnly ? cert.bound_unitary
                                                        : cert.bound_with_symplectic;
  for (const TypeKey& key : keys) {
    if (mode == BoundMode::kUnitaryOnly && key.self_dual) continue;
    cert.witnesses.push_back(key);
  }
  cert.verdict = active > cert.family_dim ? Verdict::kNotSpecial : Verdict::kInconclusive;

  if (cert.bound_with_symplectic < cert.bound_unitary) {
    throw internal_error("symplectic bound below unitary bound");
  }
  return cert;
}

namespace {

bool group_is_cyclic(const SubgroupData& group) {
  std::int64_t exponent = 1;
  for (const ResidueVector& g : group.elements) {
    exponent = std::lcm(exponent, element_order(g));
  }
  return exponent == group.order();
}

// Unordered type {dim, dim_conj} of one minus character.
std::pair<std::int64_t, std::int64_t> char_type(std::int64_t d1, std::int64_t d2) {
  return d1 >= d2 ? std::pair{d1, d2} : std::pair{d2, d1};
}

}  // namespace

TrichotomyResult check_prop_cyclic_trichotomy(const CoverData& cover,
                                              const PrymDatum& datum,
                                              const PrymDecomposition& dec) {
  (void)datum;
  TrichotomyResult res;
  res.applicable = group_is_cyclic(cover.group);

  const int s = dec.cols;

  // Classify over individual minus characters: a conjugate pair contributes
  // two eigenspaces of the same unordered type.
  std::int64_t nontrivial = 0;
  bool all_one_sm3 = true;
  for (const MinusOrbit& o : dec.minus_orbits) {
    auto t = char_type(o.dim_alpha, o.dim_conj);
    int members = o.self_dual ? 1 : 2;
    if (t.second >= 1) nontrivial += members;
    if (t != std::pair<std::int64_t, std::int64_t>{s - 3, 1}) all_one_sm3 = false;
  }

  if (nontrivial <= 1) {
    res.branch = TrichotomyBranch::kOneNontrivial;
  } else if (all_one_sm3) {
    res.branch = TrichotomyBranch::kAllSameOneSm3;
  } else {
    res.branch = TrichotomyBranch::kExpectNotSpecial;
  }

  // The dimension argument needs a zero-free nontrivial conjugate pair.
  // Its key alone gives d*(s-2-d) which exceeds s-3 once min(dims) >= 2 and
  // s > 5; otherwise a second nontrivial conjugate pair of a different type
  // pushes the sum past s-3.
  bool single_witness = false;
  bool pair_witness = false;
  for (const MinusOrbit& o : dec.minus_orbits) {
    if (o.self_dual || o.zeros != 0) continue;
    auto t = char_type(o.dim_alpha, o.dim_conj);
    if (t.second < 1) continue;
    if (t.second >= 2 && s > 5) single_witness = true;
    for (const MinusOrbit& p : dec.minus_orbits) {
      if (p.self_dual) continue;
      auto u = char_type(p.dim_alpha, p.dim_conj);
      if (u.second >= 1 && u != t) pair_witness = true;
    }
  }
  res.presumption_ok = single_witness || pair_witness;
  return res;
}

CyclicSumsResult check_prop_cyclic_sums(const CoverData& cover,
                                        const PrymDatum& datum) {
  (void)datum;
  CyclicSumsResult res;
  if (!group_is_cyclic(cover.group)) return res;
  const std::int64_t d = cover.degree;
  const int s = cover.matrix.cols;
  // Order <= 2 makes every character self-dual; the unitary-pair argument
  // does not reach those, so the criterion stays inapplicable.
  if (d <= 2 || s <= 5) return res;

  const int n = cover.matrix.modulus;
  std::vector<int> hyp_row;
  std::int64_t hyp_mod = 0;
  if (cover.matrix.rows == 1 && d == n) {
    hyp_row = cover.matrix.row(0).entries();
    hyp_mod = n;
  } else {
    // Reduce to a generating character of the row span, rescaled to Z/d.
    // Characters are sorted by alpha, so the first generator is lex-least.
    const Character* gen = nullptr;
    for (const Character& c : cover.characters) {
      if (element_order(c.alpha) == d) { gen = &c; break; }
    }
    if (gen == nullptr) {
      throw internal_error("cyclic row span without a generating character");
    }
    hyp_mod = d;
    const std::int64_t scale = n / d;
    hyp_row.reserve(static_cast<size_t>(s));
    for (int j = 0; j < s; ++j) {
      int e = gen->alpha[j];
      if (e % scale != 0) {
        throw internal_error("generator entry not divisible by N/d");
      }
      hyp_row.push_back(static_cast<int>(e / scale));
    }
  }

  std::int64_t sum = 0, neg_sum = 0;
  for (int a : hyp_row) {
    sum += a;
    if (a != 0) neg_sum += hyp_mod - a;
  }
  res.applicable = sum > 2 * hyp_mod && neg_sum > 2 * hyp_mod;
  return res;
}

AbelianThmResult check_thm_abelian(const PrymDecomposition& dec) {
  AbelianThmResult res;
  if (dec.cols <= 13) return res;

  // Only conjugate-pair orbits feed the unitary bound the theorem relies on.
  for (size_t i = 0; i < dec.minus_orbits.size(); ++i) {
    const MinusOrbit& a = dec.minus_orbits[i];
    if (a.self_dual || std::min(a.dim_alpha, a.dim_conj) < 2) continue;
    for (size_t j = i + 1; j < dec.minus_orbits.size(); ++j) {
      const MinusOrbit& b = dec.minus_orbits[j];
      if (b.self_dual || std::min(b.dim_alpha, b.dim_conj) < 2) continue;
      TypeKey ka = type_key(a.type());
      TypeKey kb = type_key(b.type());
      if (ka == kb) continue;
      if (a.zeros + b.zeros >= dec.cols) continue;
      res.applicable = true;
      res.witness_pair = {ka, kb};
      return res;
    }
  }
  return res;
}

}  // namespace prymscope
