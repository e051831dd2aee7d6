// Command-line front end: bound tables, verification runs, sharpness checks
// and extremal search over the starlike coefficient machinery.

#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starcoef/report.hpp"

namespace {

using starcoef::RunConfig;

void add_common_flags(CLI::App* cmd, RunConfig& config, std::string& format) {
  cmd->add_option("--order", config.order, "Series truncation order (8..40)");
  cmd->add_option("--tol", config.rel_tol, "Relative tolerance for checks");
  cmd->add_option("--abs-floor", config.abs_floor, "Absolute tolerance floor");
  cmd->add_option("--seed", config.seed, "Base seed for sampled functions");
  cmd->add_option("--alpha-step", config.alpha_step, "Alpha grid step (0, 0.25]");
  cmd->add_option("--n-max", config.n_max, "Largest coefficient index in tables (2..20)");
  cmd->add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", config.out, "Output path (default: stdout, verify: report file)");
  cmd->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
}

starcoef::OutputFormat parse_format(const std::string& format) {
  return format == "json" ? starcoef::OutputFormat::Json : starcoef::OutputFormat::Csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coefficient bounds for inverses of starlike functions of order alpha"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "csv";

  // table <which>
  std::string which;
  CLI::App* table = app.add_subcommand("table", "Emit a bound table over an (n, alpha) grid");
  table->add_option("which", which, "One of: thm1, thm2, thm3, lemma2, klz, loewner")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "lemma2", "klz", "loewner"}));
  add_common_flags(table, config, format);

  // verify [suites...]
  std::vector<std::string> suite_names;
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites; exit 0 iff all pass");
  verify->add_option("suites", suite_names,
                     "Subset of: bounds, sharpness, jabotinsky, lemma1, roundtrip (default all)")
      ->check(CLI::IsMember({"bounds", "sharpness", "jabotinsky", "lemma1", "roundtrip"}));
  add_common_flags(verify, config, format);

  // sharp --n --alpha
  int sharp_n = 2;
  double sharp_alpha = 0.0;
  CLI::App* sharp = app.add_subcommand("sharp", "Check extremal attainment at one (n, alpha)");
  sharp->add_option("--n", sharp_n, "Coefficient index")->required();
  sharp->add_option("--alpha", sharp_alpha, "Order alpha in [0, 1)")->required();
  add_common_flags(sharp, config, format);

  // search --n --alpha --budget
  int search_n = 4;
  double search_alpha = 0.5;
  long budget = 1000;
  std::string target = "thm1";
  CLI::App* search =
      app.add_subcommand("search", "Explore an open regime for near-extremal functions");
  search->add_option("--n", search_n, "Coefficient index")->required();
  search->add_option("--alpha", search_alpha, "Order alpha in [0, 1)")->required();
  search->add_option("--budget", budget, "Total objective evaluations")->required();
  search->add_option("--target", target, "Objective family: thm1 (|A_n|) or thm3 (|B_n|)")
      ->check(CLI::IsMember({"thm1", "thm3"}));
  add_common_flags(search, config, format);

  CLI11_PARSE(app, argc, argv);
  config.format = parse_format(format);

  try {
    if (table->parsed()) {
      static const std::map<std::string, starcoef::TableKind> kinds = {
          {"thm1", starcoef::TableKind::Thm1},     {"thm2", starcoef::TableKind::Thm2},
          {"thm3", starcoef::TableKind::Thm3},     {"lemma2", starcoef::TableKind::Lemma2},
          {"klz", starcoef::TableKind::Klz},       {"loewner", starcoef::TableKind::Loewner}};
      return starcoef::cmd_table(config, kinds.at(which));
    }
    if (verify->parsed()) {
      static const std::map<std::string, starcoef::Suite> suites = {
          {"bounds", starcoef::Suite::Bounds},         {"sharpness", starcoef::Suite::Sharpness},
          {"jabotinsky", starcoef::Suite::Jabotinsky}, {"lemma1", starcoef::Suite::Lemma1},
          {"roundtrip", starcoef::Suite::Roundtrip}};
      std::set<starcoef::Suite> selected;
      for (const std::string& name : suite_names) selected.insert(suites.at(name));
      return starcoef::cmd_verify(config, selected);
    }
    if (sharp->parsed()) return starcoef::cmd_sharp(config, sharp_n, sharp_alpha);
    if (search->parsed())
      return starcoef::cmd_search(config, search_n, search_alpha, budget,
                                  target == "thm3" ? starcoef::SearchTarget::Thm3
                                                   : starcoef::SearchTarget::Thm1);
  } catch (const starcoef::WrongRegime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const starcoef::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const starcoef::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
