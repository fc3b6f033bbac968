#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "prymscope/errors.hpp"

namespace prymscope {

/// Canonical representative of an integer in [0, modulus).
int reduce_mod(long long value, int modulus);

/// Fixed-length vector over Z/N. Entries are always stored reduced to
/// [0, N); length and modulus are immutable after construction.
class ResidueVector {
 public:
  ResidueVector() : modulus_(2) {}  // empty placeholder
  ResidueVector(int modulus, std::vector<int> entries);
  static ResidueVector zero(int modulus, int length);

  int modulus() const { return modulus_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool is_zero() const;

  ResidueVector operator+(const ResidueVector& other) const;
  ResidueVector operator-() const;
  ResidueVector scaled(long long k) const;

  friend bool operator==(const ResidueVector& a, const ResidueVector& b) {
    return a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
  }
  // Lexicographic on entries; modulus first so mixed sets still order totally.
  friend bool operator<(const ResidueVector& a, const ResidueVector& b) {
    if (a.modulus_ != b.modulus_) return a.modulus_ < b.modulus_;
    return a.entries_ < b.entries_;
  }

 private:
  int modulus_;
  std::vector<int> entries_;
};

/// Componentwise dot product a.b reduced mod N.
int dot(const ResidueVector& a, const ResidueVector& b);

/// Finite subgroup of (Z/N)^m, closed under addition and negation,
/// with elements kept sorted for deterministic iteration and lookup.
struct SubgroupData {
  int modulus = 0;
  int ambient_rank = 0;
  std::vector<ResidueVector> elements;  // sorted lex, contains zero

  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
  bool contains(const ResidueVector& v) const;
};

/// Smallest addition-closed subset of (Z/N)^m containing the generators and
/// zero, computed by breadth-first saturation.
SubgroupData span_closure(std::span<const ResidueVector> generators,
                          int modulus, int ambient_rank);

/// True iff candidate is an integer multiple of generator mod N.
bool cyclic_subgroup_contains(const ResidueVector& generator,
                              const ResidueVector& candidate);

/// Least k >= 1 with k.v = 0; equals lcm over coordinates of N/gcd(N, e).
std::int64_t element_order(const ResidueVector& v);

/// All u in [1, N) with gcd(u, N) = 1, ascending.
std::vector<int> units(int modulus);

}  // namespace prymscope
