#include "prymscope/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace prymscope {

ResidueVector CoverMatrix::row(int i) const {
  std::vector<int> out(static_cast<size_t>(cols));
  for (int j = 0; j < cols; ++j) out[static_cast<size_t>(j)] = at(i, j);
  return ResidueVector(modulus, std::move(out));
}

ResidueVector CoverMatrix::column(int j) const {
  std::vector<int> out(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) out[static_cast<size_t>(i)] = at(i, j);
  return ResidueVector(modulus, std::move(out));
}

CoverMatrix validate_matrix(int modulus, int rows, int cols,
                            std::span<const int> entries) {
  if (modulus < 2) {
    throw validation_error(errc::bad_modulus, std::to_string(modulus));
  }
  if (rows < 1) {
    throw validation_error(errc::bad_dimensions, "rows = " + std::to_string(rows));
  }
  if (entries.size() != static_cast<size_t>(rows) * static_cast<size_t>(std::max(cols, 0))) {
    throw validation_error(errc::bad_dimensions,
                           "expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                               " entries, got " + std::to_string(entries.size()));
  }
  if (cols < 4) {
    throw validation_error(errc::too_few_columns, "s = " + std::to_string(cols));
  }

  CoverMatrix m;
  m.modulus = modulus;
  m.rows = rows;
  m.cols = cols;
  m.entries.resize(entries.size());
  for (size_t k = 0; k < entries.size(); ++k) {
    m.entries[k] = reduce_mod(entries[k], modulus);
  }

  for (int j = 0; j < cols; ++j) {
    bool zero = true;
    for (int i = 0; i < rows; ++i) {
      if (m.at(i, j) != 0) { zero = false; break; }
    }
    if (zero) {
      throw validation_error(errc::zero_column, "column " + std::to_string(j));
    }
  }
  for (int i = 0; i < rows; ++i) {
    long long sum = 0;
    for (int j = 0; j < cols; ++j) sum += m.at(i, j);
    if (sum % modulus != 0) {
      throw validation_error(errc::row_sum_nonzero, "row " + std::to_string(i));
    }
  }
  return m;
}

namespace {

int column_gcd(const CoverMatrix& m, int j) {
  int g = m.modulus;
  for (int i = 0; i < m.rows; ++i) g = std::gcd(g, m.at(i, j));
  return g;
}

SubgroupData column_span(const CoverMatrix& m) {
  std::vector<ResidueVector> cols;
  cols.reserve(static_cast<size_t>(m.cols));
  for (int j = 0; j < m.cols; ++j) cols.push_back(m.column(j));
  return span_closure(cols, m.modulus, m.rows);
}

}  // namespace

int ramification_order(const CoverMatrix& matrix, int j) {
  if (j < 0 || j >= matrix.cols) {
    throw validation_error(errc::index_out_of_range, "column " + std::to_string(j));
  }
  return matrix.modulus / column_gcd(matrix, j);
}

std::int64_t genus(const CoverMatrix& cover) {
  std::int64_t d = column_span(cover).order();
  std::int64_t gcd_sum = 0;
  for (int j = 0; j < cover.cols; ++j) gcd_sum += column_gcd(cover, j);

  // g = 1 + d((s-2)/2 - gcd_sum/(2N)), over the common denominator 2N.
  std::int64_t n = cover.modulus;
  std::int64_t numer = 2 * n + d * (n * (cover.cols - 2) - gcd_sum);
  if (numer % (2 * n) != 0) {
    throw internal_error("INTERNAL_NONINTEGRAL_GENUS: numerator " + std::to_string(numer) +
                         " not divisible by " + std::to_string(2 * n));
  }
  std::int64_t g = numer / (2 * n);
  if (g < 0) {
    throw internal_error("INTERNAL_NONINTEGRAL_GENUS: negative genus " + std::to_string(g));
  }
  return g;
}

std::int64_t eigen_dim(const ResidueVector& alpha) {
  long long sum = 0;
  for (int j = 0; j < alpha.size(); ++j) sum += alpha[j];
  if (sum % alpha.modulus() != 0) {
    throw validation_error(errc::sum_not_zero,
                           "entry sum " + std::to_string(sum) + " mod " +
                               std::to_string(alpha.modulus()));
  }
  if (alpha.is_zero()) return 0;  // trivial character: differentials pull back from P^1

  std::int64_t numer = 0;  // sum of (N - alpha_j) over nonzero entries
  for (int j = 0; j < alpha.size(); ++j) {
    if (alpha[j] != 0) numer += alpha.modulus() - alpha[j];
  }
  if (numer % alpha.modulus() != 0) {
    throw internal_error("eigen_dim: fractional-part sum not integral");
  }
  std::int64_t dim = numer / alpha.modulus() - 1;
  if (dim < 0) {
    throw internal_error("eigen_dim: negative dimension");
  }
  return dim;
}

const Character* CoverData::find_character(const ResidueVector& alpha) const {
  auto it = std::lower_bound(characters.begin(), characters.end(), alpha,
                             [](const Character& c, const ResidueVector& a) {
                               return c.alpha < a;
                             });
  if (it == characters.end() || !(it->alpha == alpha)) return nullptr;
  return &*it;
}

CoverData character_table(const CoverMatrix& cover) {
  CoverData data;
  data.matrix = cover;
  data.group = column_span(cover);
  data.degree = data.group.order();
  data.genus = genus(cover);

  const int n = cover.modulus;
  const int m = cover.rows;
  const int s = cover.cols;

  // Walk n over (Z/N)^m in lex order so the first representative seen for
  // each alpha is the lex-least one.
  std::map<std::vector<int>, std::vector<int>> reps;  // alpha -> rep
  std::vector<int> idx(static_cast<size_t>(m), 0);
  while (true) {
    std::vector<int> alpha(static_cast<size_t>(s), 0);
    for (int j = 0; j < s; ++j) {
      long long acc = 0;
      for (int i = 0; i < m; ++i) acc += static_cast<long long>(idx[static_cast<size_t>(i)]) * cover.at(i, j);
      alpha[static_cast<size_t>(j)] = reduce_mod(acc, n);
    }
    reps.emplace(std::move(alpha), idx);

    int i = m - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - 1) idx[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
  }

  if (static_cast<std::int64_t>(reps.size()) != data.degree) {
    throw internal_error("INTERNAL_CHARACTER_COUNT: " + std::to_string(reps.size()) +
                         " distinct row-span vectors vs degree " + std::to_string(data.degree));
  }

  std::int64_t dim_sum = 0;
  data.characters.reserve(reps.size());
  for (const auto& [alpha, rep] : reps) {
    Character c{ResidueVector(n, alpha), ResidueVector(n, rep), 0, 0};
    c.dim = eigen_dim(c.alpha);
    c.zeros = static_cast<int>(std::count(alpha.begin(), alpha.end(), 0));
    dim_sum += c.dim;
    data.characters.push_back(std::move(c));
  }

  if (dim_sum != data.genus) {
    throw internal_error("character dims sum to " + std::to_string(dim_sum) +
                         " but genus is " + std::to_string(data.genus));
  }
  return data;
}

}  // namespace prymscope
