#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "starcoef/verify.hpp"

namespace starcoef {

inline constexpr const char* kVersion = "1.0.0";

enum class OutputFormat { Csv, Json };
enum class TableKind { Thm1, Thm2, Thm3, Lemma2, Klz, Loewner };
enum class Suite { Bounds, Sharpness, Jabotinsky, Lemma1, Roundtrip };

struct RunConfig {
  int order = kDefaultOrder;
  double rel_tol = 1e-8;
  double abs_floor = 1e-12;
  uint64_t seed = 0;
  double alpha_step = 0.01;
  int n_max = 12;
  OutputFormat format = OutputFormat::Csv;
  std::string out;  // empty selects the command default (stdout or a file)
  int threads = 0;  // 0 = all cores; the output never depends on this

  void validate() const;
  Tolerance tolerance() const { return {rel_tol, abs_floor}; }
};

/// Alpha grid i * alpha_step for i = 0.. up to but excluding 1.
std::vector<double> alpha_grid(double step);

struct TableRow {
  int n = 0;
  std::optional<int> g;  // present only for the lemma2 table
  double alpha = 0.0;
  int k = 0;
  std::string regime;
  double bound = 0.0;
  std::string sharp;
  std::string extremal;
};

std::vector<TableRow> make_table(const RunConfig& config, TableKind kind);
std::string table_to_csv(const std::vector<TableRow>& rows);
nlohmann::ordered_json table_to_json(const RunConfig& config, const std::vector<TableRow>& rows);

std::string table_kind_name(TableKind kind);
std::string suite_name(Suite suite);

struct VerifyRun {
  std::vector<std::pair<Suite, VerificationReport>> reports;
  bool all_pass = true;
};

/// Executes the selected suites with deterministic ordering. Suite
/// strictness scales off config.rel_tol: the identity suite runs 1e-4 times
/// tighter and the two-route suite 1e-1 times tighter, so the defaults land
/// on 1e-12 and 1e-9 while --tol still moves everything together.
VerifyRun run_verify(const RunConfig& config, const std::set<Suite>& suites);

std::string verify_to_csv(const VerifyRun& run);
nlohmann::ordered_json verify_to_json(const RunConfig& config, const VerifyRun& run);

std::string search_to_csv(int n, double alpha, const SearchResult& result);
nlohmann::ordered_json search_to_json(const RunConfig& config, int n, double alpha,
                                      const SearchResult& result);

/// %.17g, the fixed reproducible float form used in every CSV cell.
std::string format_double(double v);

// Command entry points; return the process exit code.
int cmd_table(const RunConfig& config, TableKind kind);
int cmd_verify(const RunConfig& config, std::set<Suite> suites);
int cmd_sharp(const RunConfig& config, int n, double alpha);
int cmd_search(const RunConfig& config, int n, double alpha, long budget, SearchTarget target);

}  // namespace starcoef
