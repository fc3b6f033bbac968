#include "prymscope/residue.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace prymscope {

int reduce_mod(long long value, int modulus) {
  long long r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

ResidueVector::ResidueVector(int modulus, std::vector<int> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
  if (modulus_ < 2) {
    throw validation_error(errc::bad_modulus,
                           "modulus must be >= 2, got " + std::to_string(modulus_));
  }
  for (auto& e : entries_) e = reduce_mod(e, modulus_);
}

ResidueVector ResidueVector::zero(int modulus, int length) {
  return ResidueVector(modulus, std::vector<int>(static_cast<size_t>(length), 0));
}

bool ResidueVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

namespace {

void check_compatible(const ResidueVector& a, const ResidueVector& b) {
  if (a.modulus() != b.modulus()) {
    throw validation_error(errc::mixed_modulus,
                           std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
  }
  if (a.size() != b.size()) {
    throw validation_error(errc::mixed_length,
                           std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

}  // namespace

ResidueVector ResidueVector::operator+(const ResidueVector& other) const {
  check_compatible(*this, other);
  std::vector<int> out(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i) {
    out[i] = reduce_mod(static_cast<long long>(entries_[i]) + other.entries_[i], modulus_);
  }
  return ResidueVector(modulus_, std::move(out));
}

ResidueVector ResidueVector::operator-() const {
  std::vector<int> out(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i) {
    out[i] = reduce_mod(-static_cast<long long>(entries_[i]), modulus_);
  }
  return ResidueVector(modulus_, std::move(out));
}

ResidueVector ResidueVector::scaled(long long k) const {
  std::vector<int> out(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i) {
    out[i] = reduce_mod(k * entries_[i], modulus_);
  }
  return ResidueVector(modulus_, std::move(out));
}

int dot(const ResidueVector& a, const ResidueVector& b) {
  check_compatible(a, b);
  long long acc = 0;
  for (int i = 0; i < a.size(); ++i) acc += static_cast<long long>(a[i]) * b[i];
  return reduce_mod(acc, a.modulus());
}

bool SubgroupData::contains(const ResidueVector& v) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), v);
  return it != elements.end() && *it == v;
}

SubgroupData span_closure(std::span<const ResidueVector> generators,
                          int modulus, int ambient_rank) {
  if (modulus < 2) {
    throw validation_error(errc::bad_modulus, std::to_string(modulus));
  }
  for (const auto& g : generators) {
    if (g.modulus() != modulus) {
      throw validation_error(errc::mixed_modulus,
                             "generator modulus " + std::to_string(g.modulus()));
    }
    if (g.size() != ambient_rank) {
      throw validation_error(errc::mixed_length,
                             "generator length " + std::to_string(g.size()));
    }
  }

  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> work;
  std::vector<int> zero(static_cast<size_t>(ambient_rank), 0);
  seen.insert(zero);
  work.push(zero);
  // Saturation under +generator reaches the whole subgroup: in a finite group
  // -g is a positive multiple of g.
  while (!work.empty()) {
    std::vector<int> x = std::move(work.front());
    work.pop();
    for (const auto& g : generators) {
      std::vector<int> y(x.size());
      for (size_t i = 0; i < x.size(); ++i) {
        y[i] = reduce_mod(static_cast<long long>(x[i]) + g[static_cast<int>(i)], modulus);
      }
      if (seen.insert(y).second) work.push(std::move(y));
    }
  }

  SubgroupData out;
  out.modulus = modulus;
  out.ambient_rank = ambient_rank;
  out.elements.reserve(seen.size());
  for (const auto& e : seen) out.elements.emplace_back(modulus, e);
  return out;
}

bool cyclic_subgroup_contains(const ResidueVector& generator,
                              const ResidueVector& candidate) {
  check_compatible(generator, candidate);
  std::int64_t ord = element_order(generator);
  ResidueVector acc = ResidueVector::zero(generator.modulus(), generator.size());
  for (std::int64_t k = 0; k < ord; ++k) {
    if (acc == candidate) return true;
    acc = acc + generator;
  }
  return false;
}

std::int64_t element_order(const ResidueVector& v) {
  std::int64_t ord = 1;
  for (int i = 0; i < v.size(); ++i) {
    std::int64_t coord_ord = v.modulus() / std::gcd(v.modulus(), v[i]);
    ord = std::lcm(ord, coord_ord);
  }
  return ord;
}

std::vector<int> units(int modulus) {
  if (modulus < 2) {
    throw validation_error(errc::bad_modulus, std::to_string(modulus));
  }
  std::vector<int> out;
  for (int u = 1; u < modulus; ++u) {
    if (std::gcd(u, modulus) == 1) out.push_back(u);
  }
  return out;
}

}  // namespace prymscope
