#include "prymscope/search.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "prymscope/hash.hpp"

namespace prymscope {

namespace {

constexpr int kMaxModulus = 16;
constexpr int kMaxRows = 4;
constexpr int kMinCols = 4;
constexpr int kMaxCols = 16;
constexpr int kMaxFirstBuckets = 64;

std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// All distinct row-span vectors n.A, sorted lex.
std::vector<std::vector<int>> row_span_vectors(const CoverMatrix& a) {
  std::set<std::vector<int>> seen;
  std::vector<int> idx(static_cast<size_t>(a.rows), 0);
  while (true) {
    std::vector<int> alpha(static_cast<size_t>(a.cols), 0);
    for (int j = 0; j < a.cols; ++j) {
      long long acc = 0;
      for (int i = 0; i < a.rows; ++i) {
        acc += static_cast<long long>(idx[static_cast<size_t>(i)]) * a.at(i, j);
      }
      alpha[static_cast<size_t>(j)] = reduce_mod(acc, a.modulus);
    }
    seen.insert(std::move(alpha));
    int i = a.rows - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == a.modulus - 1) idx[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
  }
  return {seen.begin(), seen.end()};
}

// Minimizes the row-major matrix over row sequences drawn from the row span.
// {U.A : U invertible} is exactly the set of m-tuples of row-span elements
// that generate the whole span, and for fixed rows the column permutation
// minimizing the row-major reading sorts columns lexicographically.
class CanonicalMinimizer {
 public:
  explicit CanonicalMinimizer(const CoverMatrix& a)
      : n_(a.modulus), m_(a.rows), s_(a.cols), span_(row_span_vectors(a)) {
    target_ = static_cast<std::int64_t>(span_.size());
  }

  std::vector<int> run() {
    std::set<std::vector<int>> zero_only;
    zero_only.insert(std::vector<int>(static_cast<size_t>(s_), 0));
    dfs(0, zero_only);
    if (best_.empty()) {
      throw internal_error("canonicalization found no generating row tuple");
    }
    return best_;
  }

 private:
  std::vector<int> flatten(const std::vector<int>* extra) const {
    std::vector<const std::vector<int>*> rows = chosen_;
    if (extra != nullptr) rows.push_back(extra);
    std::vector<int> order(static_cast<size_t>(s_));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      for (const auto* r : rows) {
        int ex = (*r)[static_cast<size_t>(x)], ey = (*r)[static_cast<size_t>(y)];
        if (ex != ey) return ex < ey;
      }
      return false;
    });
    std::vector<int> flat;
    flat.reserve(rows.size() * static_cast<size_t>(s_));
    for (const auto* r : rows) {
      for (int j : order) flat.push_back((*r)[static_cast<size_t>(j)]);
    }
    return flat;
  }

  // Compares a prefix against the same-length prefix of the current best.
  // Returns <0/0/>0; 0 or <0 means the subtree can still win.
  int compare_with_best(const std::vector<int>& prefix) const {
    for (size_t k = 0; k < prefix.size(); ++k) {
      if (prefix[k] != best_[k]) return prefix[k] < best_[k] ? -1 : 1;
    }
    return 0;
  }

  void dfs(int depth, const std::set<std::vector<int>>& closure) {
    if (depth == m_) {
      if (static_cast<std::int64_t>(closure.size()) != target_) return;
      std::vector<int> flat = flatten(nullptr);
      if (best_.empty() || flat < best_) best_ = std::move(flat);
      return;
    }
    const std::int64_t remaining_cap = int_pow(n_, m_ - depth - 1);

    struct Candidate {
      std::vector<int> prefix;
      const std::vector<int>* v;
      std::int64_t steps;  // least k >= 1 with k.v inside closure
    };
    std::vector<Candidate> cands;
    for (const auto& v : span_) {
      std::int64_t steps = 1;
      std::vector<int> acc = v;
      while (closure.find(acc) == closure.end()) {
        for (size_t i = 0; i < acc.size(); ++i) {
          acc[i] = reduce_mod(acc[i] + static_cast<long long>(v[i]), n_);
        }
        ++steps;
      }
      std::int64_t grown = static_cast<std::int64_t>(closure.size()) * steps;
      if (grown * remaining_cap < target_) continue;  // cannot reach the span
      cands.push_back({flatten(&v), &v, steps});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.prefix != b.prefix) return a.prefix < b.prefix;
      return *a.v < *b.v;
    });

    for (const Candidate& c : cands) {
      if (!best_.empty() && compare_with_best(c.prefix) > 0) break;

      std::set<std::vector<int>> next = closure;
      std::vector<int> shift(static_cast<size_t>(s_), 0);
      for (std::int64_t k = 1; k < c.steps; ++k) {
        for (size_t i = 0; i < shift.size(); ++i) {
          shift[i] = reduce_mod(shift[i] + static_cast<long long>((*c.v)[i]), n_);
        }
        for (const auto& e : closure) {
          std::vector<int> moved(e.size());
          for (size_t i = 0; i < e.size(); ++i) {
            moved[i] = reduce_mod(e[i] + static_cast<long long>(shift[i]), n_);
          }
          next.insert(std::move(moved));
        }
      }
      chosen_.push_back(c.v);
      dfs(depth + 1, next);
      chosen_.pop_back();
    }
  }

  int n_, m_, s_;
  std::vector<std::vector<int>> span_;
  std::int64_t target_ = 0;
  std::vector<int> best_;
  std::vector<const std::vector<int>*> chosen_;
};

std::string key_header(char level, int n, int m, int s) {
  std::ostringstream os;
  os << level << std::setfill('0') << std::setw(3) << n << std::setw(1) << m
     << std::setw(2) << s << ':';
  return os.str();
}

std::string full_key_of_canonical(const CoverMatrix& canon) {
  std::ostringstream os;
  os << key_header('F', canon.modulus, canon.rows, canon.cols);
  for (int e : canon.entries) os << std::setfill('0') << std::setw(2) << e;
  return os.str();
}

}  // namespace

void validate_spec(const SearchSpec& spec) {
  std::ostringstream why;
  if (spec.modulus < 2 || spec.modulus > kMaxModulus) {
    why << "modulus " << spec.modulus << " outside [2," << kMaxModulus << "]";
  } else if (spec.rows < 1 || spec.rows > kMaxRows) {
    why << "rows " << spec.rows << " outside [1," << kMaxRows << "]";
  } else if (spec.cols_min < kMinCols || spec.cols_min > spec.cols_max ||
             spec.cols_max > kMaxCols) {
    why << "cols range [" << spec.cols_min << "," << spec.cols_max
        << "] outside [" << kMinCols << "," << kMaxCols << "]";
  } else if (spec.workers < 1) {
    why << "workers " << spec.workers;
  } else {
    return;
  }
  throw validation_error(errc::spec_out_of_range, why.str());
}

CoverMatrix canonical_matrix(const CoverMatrix& cover) {
  CanonicalMinimizer search(cover);
  CoverMatrix out;
  out.modulus = cover.modulus;
  out.rows = cover.rows;
  out.cols = cover.cols;
  out.entries = search.run();
  return out;
}

std::string canonical_key(const CoverMatrix& cover, SymmetryLevel level) {
  if (level == SymmetryLevel::kFull) {
    return full_key_of_canonical(canonical_matrix(cover));
  }
  // Invariant fingerprint: orbit invariants only, so matrices in one orbit
  // always agree, but distinct orbits may collide.
  CoverData data = character_table(cover);
  std::ostringstream fp;
  fp << cover.modulus << ',' << cover.rows << ',' << cover.cols << ','
     << data.degree << ',' << data.genus << '|';
  std::vector<std::pair<std::int64_t, int>> dims;
  dims.reserve(data.characters.size());
  for (const Character& c : data.characters) dims.emplace_back(c.dim, c.zeros);
  std::sort(dims.begin(), dims.end());
  for (const auto& [dim, zeros] : dims) fp << dim << ':' << zeros << ';';
  std::ostringstream os;
  os << key_header('H', cover.modulus, cover.rows, cover.cols)
     << std::hex << std::setfill('0') << std::setw(16) << fnv1a64(fp.str());
  return os.str();
}

std::string EnumerationShard::id() const {
  std::ostringstream os;
  os << 's' << std::setfill('0') << std::setw(2) << cols << "-c"
     << std::setw(5) << first_lo << '-' << std::setw(5) << first_hi;
  return os.str();
}

std::vector<EnumerationShard> enumeration_shards(const SearchSpec& spec) {
  validate_spec(spec);
  const std::int64_t column_count = int_pow(spec.modulus, spec.rows) - 1;
  const int buckets = static_cast<int>(std::min<std::int64_t>(kMaxFirstBuckets, column_count));
  std::vector<EnumerationShard> shards;
  for (int s = spec.cols_min; s <= spec.cols_max; ++s) {
    for (int b = 0; b < buckets; ++b) {
      // Contiguous, non-overlapping cover of [1, column_count].
      int lo = 1 + static_cast<int>(column_count * b / buckets);
      int hi = static_cast<int>(column_count * (b + 1) / buckets);
      if (lo > hi) continue;
      shards.push_back(EnumerationShard{s, lo, hi});
    }
  }
  return shards;
}

namespace {

// Depth-first walk over non-decreasing column sequences (packed values) with
// the first column restricted to the shard's range; leaves with all row sums
// divisible by N become candidate matrices.
void enumerate_shard_candidates(const SearchSpec& spec, const EnumerationShard& shard,
                                const std::function<void(const CoverMatrix&)>& sink) {
  const int n = spec.modulus;
  const int m = spec.rows;
  const int s = shard.cols;
  const int packed_count = static_cast<int>(int_pow(n, m));

  std::vector<std::vector<int>> tuples(static_cast<size_t>(packed_count));
  for (int v = 0; v < packed_count; ++v) {
    std::vector<int> t(static_cast<size_t>(m));
    int rest = v;
    for (int i = m - 1; i >= 0; --i) {
      t[static_cast<size_t>(i)] = rest % n;
      rest /= n;
    }
    tuples[static_cast<size_t>(v)] = std::move(t);
  }

  std::vector<int> cols(static_cast<size_t>(s), 0);
  std::vector<long long> sums(static_cast<size_t>(m), 0);

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == s) {
      for (int i = 0; i < m; ++i) {
        if (sums[static_cast<size_t>(i)] % n != 0) return;
      }
      CoverMatrix cand;
      cand.modulus = n;
      cand.rows = m;
      cand.cols = s;
      cand.entries.resize(static_cast<size_t>(m) * static_cast<size_t>(s));
      for (int j = 0; j < s; ++j) {
        const auto& t = tuples[static_cast<size_t>(cols[static_cast<size_t>(j)])];
        for (int i = 0; i < m; ++i) {
          cand.entries[static_cast<size_t>(i) * s + j] = t[static_cast<size_t>(i)];
        }
      }
      sink(cand);
      return;
    }
    const int lo = pos == 0 ? std::max(1, shard.first_lo) : cols[static_cast<size_t>(pos - 1)];
    const int hi = pos == 0 ? shard.first_hi : packed_count - 1;
    for (int v = lo; v <= hi; ++v) {
      cols[static_cast<size_t>(pos)] = v;
      const auto& t = tuples[static_cast<size_t>(v)];
      for (int i = 0; i < m; ++i) sums[static_cast<size_t>(i)] += t[static_cast<size_t>(i)];
      self(self, pos + 1);
      for (int i = 0; i < m; ++i) sums[static_cast<size_t>(i)] -= t[static_cast<size_t>(i)];
    }
  };
  rec(rec, 0);
}

bool is_canonical(const CoverMatrix& cand) {
  return canonical_matrix(cand).entries == cand.entries;
}

}  // namespace

std::vector<ResidueVector> enumerate_sigmas(const CoverData& cover, bool strict_etale) {
  const int n = cover.matrix.modulus;
  const int m = cover.matrix.rows;
  std::vector<ResidueVector> out;
  if (n % 2 != 0) return out;
  const int half = n / 2;

  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> v(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
      // High bit first so the enumeration is lex-ascending in the vector.
      if (mask & (1 << (m - 1 - i))) v[static_cast<size_t>(i)] = half;
    }
    ResidueVector sigma(n, std::move(v));
    if (!cover.group.contains(sigma)) continue;
    if (strict_etale) {
      bool inside_inertia = false;
      for (int j = 0; j < cover.matrix.cols && !inside_inertia; ++j) {
        inside_inertia = cyclic_subgroup_contains(cover.matrix.column(j), sigma);
      }
      if (inside_inertia) continue;
    }
    out.push_back(std::move(sigma));
  }
  return out;
}

SearchResult analyze_pair(const CoverData& cover, const ResidueVector& sigma,
                          bool strict_etale, BoundMode mode) {
  SearchResult r;
  r.cover = cover;
  r.datum = validate_datum(cover, sigma, strict_etale);
  r.decomposition = decompose(cover, r.datum);
  r.certificate = lower_bound(r.decomposition, mode);
  r.trichotomy = check_prop_cyclic_trichotomy(cover, r.datum, r.decomposition);
  r.cyclic_sums = check_prop_cyclic_sums(cover, r.datum);
  r.abelian_thm = check_thm_abelian(r.decomposition);
  return r;
}

void run_shard(const SearchSpec& spec, const EnumerationShard& shard,
               const std::function<void(const SearchResult&)>& sink) {
  enumerate_shard_candidates(spec, shard, [&](const CoverMatrix& cand) {
    if (spec.symmetry == SymmetryLevel::kFull && !is_canonical(cand)) return;
    CoverData data = character_table(cand);
    std::string key = spec.symmetry == SymmetryLevel::kFull
                          ? full_key_of_canonical(cand)
                          : canonical_key(cand, SymmetryLevel::kInvariantHash);
    for (const ResidueVector& sigma : enumerate_sigmas(data, spec.strict_etale)) {
      SearchResult r = analyze_pair(data, sigma, spec.strict_etale, spec.mode);
      r.key = key;
      sink(r);
    }
  });
}

namespace {

// Pulls shards off a shared counter; the first exception from any worker is
// rethrown on the calling thread once everyone has joined.
template <typename Item, typename Fn>
std::vector<std::vector<Item>> parallel_over_shards(
    const std::vector<EnumerationShard>& shards, int workers, Fn&& run_one) {
  std::vector<std::vector<Item>> results(shards.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < shards.size(); i = next.fetch_add(1)) {
      if (failed.load()) return;
      try {
        results[i] = run_one(shards[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  int thread_count = std::min<int>(workers, static_cast<int>(shards.size()));
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace

std::vector<CoverMatrix> enumerate_covers(const SearchSpec& spec) {
  validate_spec(spec);
  auto shards = enumeration_shards(spec);
  auto per_shard = parallel_over_shards<CoverMatrix>(
      shards, spec.workers, [&](const EnumerationShard& shard) {
        std::vector<CoverMatrix> out;
        enumerate_shard_candidates(spec, shard, [&](const CoverMatrix& cand) {
          if (spec.symmetry == SymmetryLevel::kFull) {
            if (is_canonical(cand)) out.push_back(cand);
          } else {
            out.push_back(cand);
          }
        });
        return out;
      });

  std::vector<CoverMatrix> merged;
  for (auto& chunk : per_shard) {
    merged.insert(merged.end(), std::make_move_iterator(chunk.begin()),
                  std::make_move_iterator(chunk.end()));
  }
  if (spec.symmetry == SymmetryLevel::kInvariantHash) {
    // Coarse dedup: keep the lex-least matrix per fingerprint. Collisions can
    // merge genuinely distinct orbits; FULL level is the exact contract.
    std::map<std::string, CoverMatrix> by_key;
    for (auto& m : merged) {
      std::string key = canonical_key(m, SymmetryLevel::kInvariantHash);
      auto it = by_key.find(key);
      if (it == by_key.end() || m.entries < it->second.entries) {
        by_key.insert_or_assign(std::move(key), std::move(m));
      }
    }
    merged.clear();
    for (auto& [key, m] : by_key) merged.push_back(std::move(m));
    return merged;
  }
  std::sort(merged.begin(), merged.end(), [](const CoverMatrix& a, const CoverMatrix& b) {
    return full_key_of_canonical(a) < full_key_of_canonical(b);
  });
  return merged;
}

std::vector<SearchResult> run_search(const SearchSpec& spec) {
  validate_spec(spec);
  auto shards = enumeration_shards(spec);
  auto per_shard = parallel_over_shards<SearchResult>(
      shards, spec.workers, [&](const EnumerationShard& shard) {
        std::vector<SearchResult> out;
        run_shard(spec, shard, [&](const SearchResult& r) { out.push_back(r); });
        return out;
      });

  std::vector<SearchResult> merged;
  for (auto& chunk : per_shard) {
    merged.insert(merged.end(), std::make_move_iterator(chunk.begin()),
                  std::make_move_iterator(chunk.end()));
  }
  std::sort(merged.begin(), merged.end(), [](const SearchResult& a, const SearchResult& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.datum.sigma.entries() < b.datum.sigma.entries();
  });
  return merged;
}

}  // namespace prymscope
