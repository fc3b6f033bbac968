#include "prymscope/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "prymscope/hash.hpp"

namespace prymscope {

namespace {

using ordered_json = nlohmann::ordered_json;

Ramification ramification_from_name(const std::string& name) {
  if (name == "ETALE") return Ramification::kEtale;
  if (name == "RAMIFIED_TWO") return Ramification::kRamifiedTwo;
  if (name == "RAMIFIED_OTHER") return Ramification::kRamifiedOther;
  throw validation_error(errc::parse_error, "ramification '" + name + "'");
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "NOT_SPECIAL") return Verdict::kNotSpecial;
  if (name == "INCONCLUSIVE") return Verdict::kInconclusive;
  throw validation_error(errc::parse_error, "verdict '" + name + "'");
}

TrichotomyBranch branch_from_name(const std::string& name) {
  if (name == "ONE_NONTRIVIAL") return TrichotomyBranch::kOneNontrivial;
  if (name == "ALL_SAME_1_SM3") return TrichotomyBranch::kAllSameOneSm3;
  if (name == "EXPECT_NOT_SPECIAL") return TrichotomyBranch::kExpectNotSpecial;
  throw validation_error(errc::parse_error, "branch '" + name + "'");
}

std::string checksum_string(std::uint64_t h) {
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setfill('0') << std::setw(16) << h;
  return os.str();
}

}  // namespace

CatalogRecord build_record(const SearchResult& result) {
  CatalogRecord rec;
  rec.modulus = result.cover.matrix.modulus;
  rec.rows = result.cover.matrix.rows;
  rec.cols = result.cover.matrix.cols;
  rec.matrix = result.cover.matrix.entries;
  rec.sigma = result.datum.sigma.entries();
  rec.group_order = result.cover.degree;
  rec.genus = result.cover.genus;
  rec.ramification = result.datum.ramification;
  rec.fixed_points = result.datum.fixed_points;
  rec.prym_dim = result.decomposition.prym_dim;
  rec.quotient_genus = result.decomposition.quotient_genus;
  rec.minus_types = result.decomposition.types;
  rec.bound_unitary = result.certificate.bound_unitary;
  rec.bound_with_symplectic = result.certificate.bound_with_symplectic;
  rec.family_dim = result.certificate.family_dim;
  rec.verdict = result.certificate.verdict;
  rec.prop_trichotomy = result.trichotomy;
  rec.prop_sums_applicable = result.cyclic_sums.applicable;
  rec.thm_abelian_applicable = result.abelian_thm.applicable;
  rec.canonical_key = result.key;
  return rec;
}

std::string serialize_record(const CatalogRecord& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["modulus"] = r.modulus;
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["matrix"] = r.matrix;
  j["sigma"] = r.sigma;
  j["group_order"] = r.group_order;
  j["genus"] = r.genus;
  j["ramification"] = ramification_name(r.ramification);
  j["fixed_points"] = r.fixed_points;
  j["prym_dim"] = r.prym_dim;
  j["quotient_genus"] = r.quotient_genus;
  ordered_json types = ordered_json::array();
  for (const EigenType& t : r.minus_types) {
    ordered_json tj;
    tj["a"] = t.a;
    tj["b"] = t.b;
    tj["self_dual"] = t.self_dual;
    tj["zeros"] = t.zeros;
    tj["multiplicity"] = t.multiplicity;
    types.push_back(std::move(tj));
  }
  j["minus_types"] = std::move(types);
  j["bound_unitary"] = r.bound_unitary;
  j["bound_with_symplectic"] = r.bound_with_symplectic;
  j["family_dim"] = r.family_dim;
  j["verdict"] = verdict_name(r.verdict);
  ordered_json tri;
  tri["applicable"] = r.prop_trichotomy.applicable;
  tri["branch"] = trichotomy_branch_name(r.prop_trichotomy.branch);
  tri["presumption_ok"] = r.prop_trichotomy.presumption_ok;
  j["prop_trichotomy"] = std::move(tri);
  j["prop_sums_applicable"] = r.prop_sums_applicable;
  j["thm_abelian_applicable"] = r.thm_abelian_applicable;
  j["canonical_key"] = r.canonical_key;
  return j.dump();
}

CatalogRecord parse_record(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(errc::parse_error, e.what());
  }
  try {
    CatalogRecord r;
    r.schema_version = j.at("schema_version").get<int>();
    r.modulus = j.at("modulus").get<int>();
    r.rows = j.at("rows").get<int>();
    r.cols = j.at("cols").get<int>();
    r.matrix = j.at("matrix").get<std::vector<int>>();
    r.sigma = j.at("sigma").get<std::vector<int>>();
    r.group_order = j.at("group_order").get<std::int64_t>();
    r.genus = j.at("genus").get<std::int64_t>();
    r.ramification = ramification_from_name(j.at("ramification").get<std::string>());
    r.fixed_points = j.at("fixed_points").get<std::int64_t>();
    r.prym_dim = j.at("prym_dim").get<std::int64_t>();
    r.quotient_genus = j.at("quotient_genus").get<std::int64_t>();
    for (const auto& tj : j.at("minus_types")) {
      EigenType t;
      t.a = tj.at("a").get<int>();
      t.b = tj.at("b").get<int>();
      t.self_dual = tj.at("self_dual").get<bool>();
      t.zeros = tj.at("zeros").get<int>();
      t.multiplicity = tj.at("multiplicity").get<int>();
      r.minus_types.push_back(t);
    }
    r.bound_unitary = j.at("bound_unitary").get<std::int64_t>();
    r.bound_with_symplectic = j.at("bound_with_symplectic").get<std::int64_t>();
    r.family_dim = j.at("family_dim").get<int>();
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    const auto& tri = j.at("prop_trichotomy");
    r.prop_trichotomy.applicable = tri.at("applicable").get<bool>();
    r.prop_trichotomy.branch = branch_from_name(tri.at("branch").get<std::string>());
    r.prop_trichotomy.presumption_ok = tri.at("presumption_ok").get<bool>();
    r.prop_sums_applicable = j.at("prop_sums_applicable").get<bool>();
    r.thm_abelian_applicable = j.at("thm_abelian_applicable").get<bool>();
    r.canonical_key = j.at("canonical_key").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(errc::parse_error, e.what());
  }
}

namespace {

struct SortableLine {
  std::string key;
  std::vector<int> sigma;
  std::string line;
};

std::vector<SortableLine> load_marker(const std::filesystem::path& marker) {
  std::ifstream in(marker);
  if (!in) {
    throw validation_error(errc::io_error, "cannot read " + marker.string());
  }
  std::vector<SortableLine> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CatalogRecord rec = parse_record(line);
    out.push_back({rec.canonical_key, rec.sigma, line});
  }
  return out;
}

void write_marker(const std::filesystem::path& marker,
                  const std::vector<SortableLine>& lines) {
  std::filesystem::path tmp = marker;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw validation_error(errc::io_error, "cannot write " + tmp.string());
    }
    for (const auto& l : lines) out << l.line << '\n';
  }
  std::filesystem::rename(tmp, marker);
}

std::string spec_fingerprint(const SearchSpec& spec) {
  std::ostringstream os;
  os << "modulus=" << spec.modulus << " rows=" << spec.rows
     << " cols=" << spec.cols_min << ".." << spec.cols_max
     << " strict=" << spec.strict_etale << " mode=" << bound_mode_name(spec.mode);
  return os.str();
}

// Markers are only reusable for the run parameters that produced them.
void check_progress_fingerprint(const std::filesystem::path& progress,
                                const SearchSpec& spec, bool resume) {
  const std::filesystem::path marker = progress / "spec.txt";
  const std::string expected = spec_fingerprint(spec);
  if (resume && std::filesystem::exists(marker)) {
    std::ifstream in(marker);
    std::string found;
    std::getline(in, found);
    if (found != expected) {
      throw validation_error(errc::spec_out_of_range,
                             "progress directory was written by a different run (" +
                                 found + " vs " + expected + "); remove " +
                                 progress.string() + " or rerun without --resume");
    }
    return;
  }
  std::ofstream out(marker, std::ios::trunc);
  if (out) out << expected << '\n';
}

}  // namespace

CatalogSummary write_catalog(const SearchSpec& spec,
                             const std::filesystem::path& out, bool resume) {
  validate_spec(spec);
  if (spec.symmetry != SymmetryLevel::kFull) {
    throw validation_error(errc::spec_out_of_range,
                           "catalogs are written at FULL symmetry level");
  }

  const std::filesystem::path progress = out.string() + ".progress";
  std::filesystem::create_directories(progress);
  check_progress_fingerprint(progress, spec, resume);

  auto shards = enumeration_shards(spec);
  std::vector<std::vector<SortableLine>> per_shard(shards.size());

  {
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < shards.size(); i = next.fetch_add(1)) {
        if (failed.load()) return;
        try {
          const std::filesystem::path marker = progress / (shards[i].id() + ".jsonl");
          if (resume && std::filesystem::exists(marker)) {
            per_shard[i] = load_marker(marker);
            continue;
          }
          std::vector<SortableLine> lines;
          run_shard(spec, shards[i], [&](const SearchResult& r) {
            CatalogRecord rec = build_record(r);
            lines.push_back({rec.canonical_key, rec.sigma, serialize_record(rec)});
          });
          write_marker(marker, lines);
          per_shard[i] = std::move(lines);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    };
    int threads = std::min<int>(std::max(spec.workers, 1),
                                std::max<int>(1, static_cast<int>(shards.size())));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
  }

  std::vector<SortableLine> all;
  for (auto& chunk : per_shard) {
    all.insert(all.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  }
  std::sort(all.begin(), all.end(), [](const SortableLine& a, const SortableLine& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.sigma < b.sigma;
  });

  CatalogSummary summary;
  std::uint64_t checksum = fnv1a64("");
  {
    std::ofstream file(out, std::ios::trunc | std::ios::binary);
    if (!file) {
      throw validation_error(errc::io_error, "cannot write " + out.string());
    }
    std::set<std::string> keys;
    for (const auto& l : all) {
      std::string with_newline = l.line + '\n';
      checksum = fnv1a64(with_newline, checksum);
      file << with_newline;  // whole lines only
      keys.insert(l.key);
    }
    summary.records = static_cast<std::int64_t>(all.size());
    summary.covers = static_cast<std::int64_t>(keys.size());
    summary.checksum = checksum_string(checksum);

    ordered_json footer;
    footer["footer"] = true;
    footer["records"] = summary.records;
    footer["covers"] = summary.covers;
    footer["checksum"] = summary.checksum;
    file << footer.dump() << '\n';
  }

  std::error_code ec;
  std::filesystem::remove_all(progress, ec);  // stale once the catalog exists
  return summary;
}

CatalogSummary validate_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw validation_error(errc::io_error, "cannot read " + path.string());
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  if (lines.empty()) {
    throw validation_error(errc::parse_error, "catalog has no footer");
  }

  ordered_json footer;
  try {
    footer = ordered_json::parse(lines.back());
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(errc::parse_error, std::string("footer: ") + e.what());
  }
  if (!footer.contains("footer") || footer["footer"] != true) {
    throw validation_error(errc::parse_error, "last line is not a footer");
  }

  CatalogSummary summary;
  std::uint64_t checksum = fnv1a64("");
  std::set<std::string> keys;
  for (size_t i = 0; i + 1 < lines.size(); ++i) {
    CatalogRecord rec = parse_record(lines[i]);
    keys.insert(rec.canonical_key);
    checksum = fnv1a64(lines[i] + '\n', checksum);
  }
  summary.records = static_cast<std::int64_t>(lines.size()) - 1;
  summary.covers = static_cast<std::int64_t>(keys.size());
  summary.checksum = checksum_string(checksum);

  if (footer.at("records").get<std::int64_t>() != summary.records ||
      footer.at("covers").get<std::int64_t>() != summary.covers ||
      footer.at("checksum").get<std::string>() != summary.checksum) {
    throw validation_error(errc::parse_error, "footer does not match catalog content");
  }
  return summary;
}

}  // namespace prymscope
