#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "prymscope/search.hpp"

namespace prymscope {

/// One catalog line. Serialized as a single JSON value with keys in the
/// fixed documented order so catalogs diff cleanly and determinism is
/// byte-testable.
struct CatalogRecord {
  int schema_version = 1;
  int modulus = 0;
  int rows = 0;
  int cols = 0;
  std::vector<int> matrix;  // row-major
  std::vector<int> sigma;
  std::int64_t group_order = 0;
  std::int64_t genus = 0;
  Ramification ramification = Ramification::kEtale;
  std::int64_t fixed_points = 0;
  std::int64_t prym_dim = 0;
  std::int64_t quotient_genus = 0;
  std::vector<EigenType> minus_types;
  std::int64_t bound_unitary = 0;
  std::int64_t bound_with_symplectic = 0;
  int family_dim = 0;
  Verdict verdict = Verdict::kInconclusive;
  TrichotomyResult prop_trichotomy;
  bool prop_sums_applicable = false;
  bool thm_abelian_applicable = false;
  std::string canonical_key;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

CatalogRecord build_record(const SearchResult& result);

/// One line of JSON, no trailing newline, keys in the documented order.
std::string serialize_record(const CatalogRecord& record);

/// Inverse of serialize_record; throws PARSE_ERROR on malformed input.
CatalogRecord parse_record(const std::string& line);

struct CatalogSummary {
  std::int64_t records = 0;
  std::int64_t covers = 0;  // distinct canonical keys
  std::string checksum;     // "fnv1a64:<16 hex>" over all data lines
};

/// Runs the sweep and writes the catalog: one record per line sorted by
/// (canonical_key, sigma), then a footer line with totals and a checksum.
/// Work is sharded; each completed shard leaves a marker (carrying its
/// records) under `<out>.progress/`, and with `resume` set those shards are
/// loaded instead of recomputed. The progress directory is removed once the
/// catalog is complete. Output is byte-identical for any worker count.
CatalogSummary write_catalog(const SearchSpec& spec,
                             const std::filesystem::path& out, bool resume);

/// Re-reads a catalog, checks every line parses, and verifies the footer
/// totals and checksum.
CatalogSummary validate_catalog(const std::filesystem::path& path);

}  // namespace prymscope
