// prymscope: analyze abelian covers of the line and their Prym eigenspace
// data, enumerate them up to symmetry into catalogs, and run the built-in
// verification sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 broken
// internal invariant.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prymscope/catalog.hpp"
#include "prymscope/verify.hpp"

namespace {

using namespace prymscope;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

// Matrix grammar: rows separated by ';' (newlines are accepted as row
// separators in files), entries by ','. "@path" loads the file.
std::vector<std::vector<int>> parse_matrix_spec(const std::string& spec) {
  std::string text = spec;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) {
      throw validation_error(errc::io_error, "cannot read " + text.substr(1));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ';';
  }

  std::vector<std::vector<int>> rows;
  std::stringstream row_stream(text);
  std::string row_text;
  while (std::getline(row_stream, row_text, ';')) {
    if (row_text.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<int> row;
    std::stringstream entry_stream(row_text);
    std::string entry;
    while (std::getline(entry_stream, entry, ',')) {
      try {
        row.push_back(std::stoi(entry));
      } catch (const std::exception&) {
        throw validation_error(errc::parse_error, "bad matrix entry '" + entry + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw validation_error(errc::parse_error, "empty matrix spec");
  }
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) {
      throw validation_error(errc::parse_error, "rows have different lengths");
    }
  }
  return rows;
}

std::vector<int> parse_csv_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string entry;
  while (std::getline(stream, entry, ',')) {
    try {
      out.push_back(std::stoi(entry));
    } catch (const std::exception&) {
      throw validation_error(errc::parse_error, "bad integer '" + entry + "'");
    }
  }
  return out;
}

BoundMode parse_mode(const std::string& mode) {
  if (mode == "unitary") return BoundMode::kUnitaryOnly;
  if (mode == "symplectic") return BoundMode::kWithSymplectic;
  throw validation_error(errc::parse_error, "mode must be unitary or symplectic");
}

int default_workers() {
  if (const char* env = std::getenv("PRYMSCOPE_WORKERS")) {
    try {
      int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed PRYMSCOPE_WORKERS='" << env << "'\n";
  }
  return 1;
}

void print_text_report(const SearchResult& r, std::ostream& os) {
  const CoverMatrix& a = r.cover.matrix;
  os << "cover: N=" << a.modulus << " m=" << a.rows << " s=" << a.cols << '\n';
  os << "matrix:";
  for (int i = 0; i < a.rows; ++i) {
    os << ' ';
    for (int j = 0; j < a.cols; ++j) os << (j ? "," : "") << a.at(i, j);
    if (i + 1 < a.rows) os << ';';
  }
  os << '\n';
  os << "sigma: ";
  for (int i = 0; i < r.datum.sigma.size(); ++i) os << (i ? "," : "") << r.datum.sigma[i];
  os << "  (" << ramification_name(r.datum.ramification) << ", "
     << r.datum.fixed_points << " fixed points)\n";
  os << "degree " << r.cover.degree << ", genus " << r.cover.genus << '\n';
  os << "character dims:";
  for (const Character& c : r.cover.characters) os << ' ' << c.dim;
  os << '\n';
  os << "minus types:";
  for (const EigenType& t : r.decomposition.types) {
    os << " {" << t.a << ',' << t.b << '}' << (t.self_dual ? "sd" : "")
       << " zeros=" << t.zeros << " x" << t.multiplicity;
  }
  os << '\n';
  os << "prym dim " << r.decomposition.prym_dim << ", quotient genus "
     << r.decomposition.quotient_genus << '\n';
  os << "bounds: unitary " << r.certificate.bound_unitary << ", with-symplectic "
     << r.certificate.bound_with_symplectic << "; family dim "
     << r.certificate.family_dim << " (mode " << bound_mode_name(r.certificate.mode)
     << ")\n";
  os << "checkers: trichotomy " << (r.trichotomy.applicable ? "applicable" : "n/a")
     << " branch " << trichotomy_branch_name(r.trichotomy.branch)
     << ", cyclic-sums " << (r.cyclic_sums.applicable ? "applicable" : "n/a")
     << ", abelian-thm " << (r.abelian_thm.applicable ? "applicable" : "n/a") << '\n';
  os << "verdict: " << verdict_name(r.certificate.verdict) << '\n';
}

int cmd_analyze(int modulus, const std::string& matrix_spec, const std::string& sigma_csv,
                bool strict_etale, const std::string& mode_name, const std::string& format) {
  const BoundMode mode = parse_mode(mode_name);
  auto rows = parse_matrix_spec(matrix_spec);
  std::vector<int> entries;
  for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());

  CoverMatrix matrix = validate_matrix(modulus, static_cast<int>(rows.size()),
                                       static_cast<int>(rows.front().size()), entries);
  CoverData cover = character_table(matrix);
  std::vector<int> sigma_entries = parse_csv_ints(sigma_csv);
  if (static_cast<int>(sigma_entries.size()) != matrix.rows) {
    throw validation_error(errc::mixed_length,
                           "sigma has " + std::to_string(sigma_entries.size()) +
                               " entries for " + std::to_string(matrix.rows) + " rows");
  }
  ResidueVector sigma(modulus, sigma_entries);

  SearchResult result = analyze_pair(cover, sigma, strict_etale, mode);
  result.key = canonical_key(matrix, SymmetryLevel::kFull);

  if (format == "json") {
    std::cout << serialize_record(build_record(result)) << '\n';
  } else if (format == "text") {
    print_text_report(result, std::cout);
  } else {
    throw validation_error(errc::parse_error, "format must be json or text");
  }
  return 0;
}

int cmd_enumerate(const SearchSpec& spec, const std::string& out, bool resume) {
  CatalogSummary summary = write_catalog(spec, out, resume);
  std::cout << "wrote " << summary.records << " records (" << summary.covers
            << " covers) to " << out << " [" << summary.checksum << "]\n";
  return 0;
}

void print_report(const VerifyReport& report) {
  std::cout << "suite " << report.suite << ":";
  for (const auto& [name, value] : report.counters) {
    std::cout << ' ' << name << '=' << value;
  }
  std::cout << (report.passed() ? "  PASS" : "  FAIL") << '\n';
  for (const auto& note : report.notes) std::cout << "  note: " << note << '\n';
  for (const auto& failure : report.failures) std::cout << "  FAILED: " << failure << '\n';
}

int cmd_verify_paper(const std::string& suite, std::int64_t samples, std::uint64_t seed) {
  std::vector<VerifyReport> reports;
  if (suite == "trichotomy" || suite == "all") reports.push_back(verify_trichotomy());
  if (suite == "cyclic-sums" || suite == "all") reports.push_back(verify_cyclic_sums());
  if (suite == "abelian-thm" || suite == "all") reports.push_back(verify_abelian_thm());
  if (suite == "invariants" || suite == "all") reports.push_back(verify_invariants(samples, seed));
  if (reports.empty()) {
    throw validation_error(errc::parse_error, "unknown suite '" + suite + "'");
  }
  bool ok = true;
  for (const VerifyReport& report : reports) {
    print_report(report);
    ok = ok && report.passed();
  }
  return ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Prym eigenspace analysis for abelian covers of the line"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze one (matrix, sigma) pair");
  int modulus = 0;
  std::string matrix_spec, sigma_csv;
  bool strict_etale = false;
  std::string mode_name = "unitary";
  std::string format = "json";
  analyze->add_option("--modulus", modulus, "modulus N")->required();
  analyze->add_option("--matrix", matrix_spec,
                      "rows separated by ';', entries by ','; or @file")->required();
  analyze->add_option("--sigma", sigma_csv, "involution, comma-separated")->required();
  analyze->add_flag("--strict-etale", strict_etale, "reject sigma with fixed points");
  analyze->add_option("--mode", mode_name, "unitary|symplectic");
  analyze->add_option("--format", format, "json|text");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "sweep all covers into a catalog");
  SearchSpec spec;
  spec.workers = default_workers();
  std::string out_path;
  bool resume = false;
  std::string enum_mode = "unitary";
  enumerate->add_option("--modulus", spec.modulus, "modulus N")->required();
  enumerate->add_option("--rows", spec.rows, "row count m")->required();
  enumerate->add_option("--cols-min", spec.cols_min, "least branch point count")->required();
  enumerate->add_option("--cols-max", spec.cols_max, "greatest branch point count")->required();
  enumerate->add_flag("--strict-etale", spec.strict_etale, "only fixed-point-free sigma");
  enumerate->add_option("--mode", enum_mode, "unitary|symplectic");
  enumerate->add_option("--workers", spec.workers, "worker threads (default PRYMSCOPE_WORKERS or 1)");
  enumerate->add_option("--out", out_path, "catalog path")->required();
  enumerate->add_flag("--resume", resume, "reuse completed shards from <out>.progress/");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the verification sweeps");
  std::string suite = "all";
  std::int64_t samples = 10000;
  std::uint64_t seed = 42;
  verify->add_option("--suite", suite, "trichotomy|cyclic-sums|abelian-thm|invariants|all");
  verify->add_option("--samples", samples, "random samples for the invariants suite");
  verify->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (analyze->parsed()) {
      return cmd_analyze(modulus, matrix_spec, sigma_csv, strict_etale, mode_name, format);
    }
    if (enumerate->parsed()) {
      spec.mode = parse_mode(enum_mode);
      return cmd_enumerate(spec, out_path, resume);
    }
    if (verify->parsed()) {
      return cmd_verify_paper(suite, samples, seed);
    }
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInputError;
}
