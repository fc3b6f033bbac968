// Test-only oracles, kept independent of the library's implementation paths:
// subgroup closure by pairwise-sum fixpoint, element orders by brute
// multiplication, and orbit components by BFS over elementary moves.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "prymscope/cover.hpp"
#include "prymscope/residue.hpp"

namespace prymscope::testing {

// Fixpoint of S -> S + S starting from the generators and zero.
inline std::set<std::vector<int>> oracle_span(const std::vector<std::vector<int>>& gens,
                                              int modulus, int rank) {
  std::set<std::vector<int>> s;
  s.insert(std::vector<int>(static_cast<size_t>(rank), 0));
  for (const auto& g : gens) s.insert(g);
  while (true) {
    std::set<std::vector<int>> next = s;
    for (const auto& a : s) {
      for (const auto& b : s) {
        std::vector<int> c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % modulus;
        next.insert(std::move(c));
      }
    }
    if (next.size() == s.size()) return s;
    s.swap(next);
  }
}

inline int oracle_element_order(const std::vector<int>& v, int modulus) {
  std::vector<int> acc(v.size(), 0);
  for (int k = 1;; ++k) {
    for (size_t i = 0; i < v.size(); ++i) acc[i] = (acc[i] + v[i]) % modulus;
    if (std::all_of(acc.begin(), acc.end(), [](int e) { return e == 0; })) return k;
  }
}

// Orbit components of a set of matrices under elementary moves: adjacent
// column transpositions plus elementary row operations (swap, add, unit
// scale), which generate the column-permutation x invertible-row-action
// group for the small moduli used here.
class OrbitComponents {
 public:
  OrbitComponents(const std::vector<CoverMatrix>& matrices, int modulus, int rows, int cols)
      : modulus_(modulus), rows_(rows), cols_(cols) {
    for (const auto& m : matrices) index_.emplace(m.entries, -1);
    int next_id = 0;
    for (const auto& m : matrices) {
      if (index_[m.entries] != -1) continue;
      flood(m.entries, next_id++);
    }
    count_ = next_id;
  }

  int count() const { return count_; }
  int component_of(const std::vector<int>& entries) const {
    auto it = index_.find(entries);
    return it == index_.end() ? -1 : it->second;
  }

 private:
  void flood(const std::vector<int>& start, int id) {
    std::vector<std::vector<int>> stack{start};
    index_[start] = id;
    while (!stack.empty()) {
      std::vector<int> cur = std::move(stack.back());
      stack.pop_back();
      for (const auto& next : neighbors(cur)) {
        auto it = index_.find(next);
        if (it == index_.end() || it->second != -1) continue;
        it->second = id;
        stack.push_back(next);
      }
    }
  }

  std::vector<std::vector<int>> neighbors(const std::vector<int>& e) const {
    std::vector<std::vector<int>> out;
    // adjacent column swaps
    for (int j = 0; j + 1 < cols_; ++j) {
      std::vector<int> n = e;
      for (int i = 0; i < rows_; ++i) {
        std::swap(n[static_cast<size_t>(i) * cols_ + j], n[static_cast<size_t>(i) * cols_ + j + 1]);
      }
      out.push_back(std::move(n));
    }
    // unit scalings of each row
    for (int u = 2; u < modulus_; ++u) {
      if (std::gcd(u, modulus_) != 1) continue;
      for (int i = 0; i < rows_; ++i) {
        std::vector<int> n = e;
        for (int j = 0; j < cols_; ++j) {
          n[static_cast<size_t>(i) * cols_ + j] = n[static_cast<size_t>(i) * cols_ + j] * u % modulus_;
        }
        out.push_back(std::move(n));
      }
    }
    if (rows_ >= 2) {
      for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < rows_; ++k) {
          if (i == k) continue;
          // row i += row k
          std::vector<int> n = e;
          for (int j = 0; j < cols_; ++j) {
            n[static_cast<size_t>(i) * cols_ + j] =
                (n[static_cast<size_t>(i) * cols_ + j] + e[static_cast<size_t>(k) * cols_ + j]) % modulus_;
          }
          out.push_back(std::move(n));
        }
      }
      // row swap of the first two rows
      std::vector<int> n = e;
      for (int j = 0; j < cols_; ++j) {
        std::swap(n[static_cast<size_t>(0) * cols_ + j], n[static_cast<size_t>(1) * cols_ + j]);
      }
      out.push_back(std::move(n));
    }
    return out;
  }

  int modulus_, rows_, cols_, count_ = 0;
  std::map<std::vector<int>, int> index_;
};

// Every valid matrix for (modulus, rows, cols): nonzero columns, zero row sums.
inline std::vector<CoverMatrix> all_valid_matrices(int modulus, int rows, int cols) {
  std::int64_t packed_count = 1;
  for (int i = 0; i < rows; ++i) packed_count *= modulus;

  std::vector<std::vector<int>> tuples;
  for (std::int64_t v = 1; v < packed_count; ++v) {
    std::vector<int> t(static_cast<size_t>(rows));
    std::int64_t rest = v;
    for (int i = rows - 1; i >= 0; --i) {
      t[static_cast<size_t>(i)] = static_cast<int>(rest % modulus);
      rest /= modulus;
    }
    tuples.push_back(std::move(t));
  }

  std::vector<CoverMatrix> out;
  std::vector<int> choice(static_cast<size_t>(cols), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == cols) {
      for (int i = 0; i < rows; ++i) {
        long long sum = 0;
        for (int j = 0; j < cols; ++j) sum += tuples[static_cast<size_t>(choice[static_cast<size_t>(j)])][static_cast<size_t>(i)];
        if (sum % modulus != 0) return;
      }
      CoverMatrix m;
      m.modulus = modulus;
      m.rows = rows;
      m.cols = cols;
      m.entries.resize(static_cast<size_t>(rows) * cols);
      for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
          m.entries[static_cast<size_t>(i) * cols + j] = tuples[static_cast<size_t>(choice[static_cast<size_t>(j)])][static_cast<size_t>(i)];
        }
      }
      out.push_back(std::move(m));
      return;
    }
    for (size_t v = 0; v < tuples.size(); ++v) {
      choice[static_cast<size_t>(pos)] = static_cast<int>(v);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace prymscope::testing
