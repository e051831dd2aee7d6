#include "starcoef/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "starcoef/parallel.hpp"
#include "starcoef/rng.hpp"

namespace starcoef {

namespace {

const double kBoundsSuiteAlphas[] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
constexpr int kBoundsSamplesPerAlpha = 100;
constexpr int kJabotinskySamples = 50;
constexpr int kRoundtripSamples = 20;

// Suite strictness relative to config.rel_tol (defaults 1e-8 -> 1e-9, 1e-12).
constexpr double kJabotinskyTightening = 1e-1;
constexpr double kLemma1Tightening = 1e-4;

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

void tag_rows(VerificationReport& rep, const std::string& suffix, double alpha) {
  for (CheckRow& row : rep.checks) {
    row.name += suffix;
    row.alpha = alpha;
  }
}

nlohmann::ordered_json config_echo(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["order"] = config.order;
  j["rel_tol"] = config.rel_tol;
  j["abs_floor"] = config.abs_floor;
  j["seed"] = config.seed;
  j["alpha_step"] = config.alpha_step;
  j["n_max"] = config.n_max;
  return j;
}

int write_payload(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 1;
  }
  out << payload;
  return out.good() ? 0 : 1;
}

std::string default_extension(OutputFormat format) {
  return format == OutputFormat::Csv ? ".csv" : ".json";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

void RunConfig::validate() const {
  if (!(alpha_step > 0.0 && alpha_step <= 0.25))
    throw ConfigError("alpha_step must lie in (0, 0.25]");
  if (n_max < 2 || n_max > 20) throw ConfigError("n_max must lie in [2, 20]");
  if (order < 8 || order > 40) throw ConfigError("order must lie in [8, 40]");
  if (!(rel_tol > 0.0)) throw ConfigError("rel_tol must be positive");
  if (abs_floor < 0.0) throw ConfigError("abs_floor must be nonnegative");
  if (threads < 0) throw ConfigError("threads must be nonnegative");
}

std::vector<double> alpha_grid(double step) {
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double a = i * step;
    if (!(a < 1.0)) break;
    grid.push_back(a);
  }
  return grid;
}

std::string table_kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::Thm1: return "thm1";
    case TableKind::Thm2: return "thm2";
    case TableKind::Thm3: return "thm3";
    case TableKind::Lemma2: return "lemma2";
    case TableKind::Klz: return "klz";
    case TableKind::Loewner: return "loewner";
  }
  return "?";
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::Bounds: return "bounds";
    case Suite::Sharpness: return "sharpness";
    case Suite::Jabotinsky: return "jabotinsky";
    case Suite::Lemma1: return "lemma1";
    case Suite::Roundtrip: return "roundtrip";
  }
  return "?";
}

std::vector<TableRow> make_table(const RunConfig& config, TableKind kind) {
  const std::vector<double> grid = alpha_grid(config.alpha_step);
  std::vector<TableRow> rows;

  const auto from_bound = [](int n, double alpha, const BoundResult& b) {
    return TableRow{n,
                    std::nullopt,
                    alpha,
                    b.interval_k,
                    regime_name(b.regime),
                    b.value,
                    sharpness_name(b.sharp),
                    extremal_name(b.extremal)};
  };

  switch (kind) {
    case TableKind::Thm1:
      for (int n = 2; n <= config.n_max; ++n)
        for (double a : grid) rows.push_back(from_bound(n, a, thm1_bound(n, a)));
      break;
    case TableKind::Thm2:
      for (int m = 0; m <= config.n_max; ++m)
        for (double a : grid) rows.push_back(from_bound(m, a, thm2_bound(m, a)));
      break;
    case TableKind::Thm3:
      for (int n = 0; n <= config.n_max; ++n)
        for (double a : grid) rows.push_back(from_bound(n, a, thm3_bound(n, a)));
      break;
    case TableKind::Lemma2:
      for (int n = 1; n <= config.n_max; ++n)
        for (int g = 1; g <= config.n_max; ++g)
          for (double a : grid) {
            TableRow row = from_bound(n, a, lemma2_bound(n, g, a));
            row.g = g;
            rows.push_back(row);
          }
      break;
    case TableKind::Klz:
      for (double a : grid) {
        const KlzBounds b = klz_bounds(a);
        rows.push_back({2, std::nullopt, a, interval_index(a, 2), "KLZ-A2", b.a2, "SharpKnown",
                        extremal_name(Extremal::koebe())});
        const bool low = a <= 2.0 / 3.0;
        rows.push_back({3, std::nullopt, a, interval_index(a, 3),
                        low ? "KLZ-A3-low" : "KLZ-A3-high", b.a3, "SharpKnown",
                        extremal_name(low ? Extremal::koebe() : Extremal::koebe_n(2))});
      }
      break;
    case TableKind::Loewner:
      for (int n = 2; n <= config.n_max; ++n)
        rows.push_back({n, std::nullopt, 0.0, 0, "Loewner", loewner_bound(n), "SharpKnown",
                        extremal_name(Extremal::koebe())});
      break;
  }
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  const bool with_g = !rows.empty() && rows.front().g.has_value();
  std::string csv = with_g ? "n,g,alpha,k,regime,bound,sharp,extremal\n"
                           : "n,alpha,k,regime,bound,sharp,extremal\n";
  for (const TableRow& row : rows) {
    csv += std::to_string(row.n);
    if (with_g) csv += "," + std::to_string(row.g.value_or(0));
    csv += "," + format_double(row.alpha);
    csv += "," + std::to_string(row.k);
    csv += "," + csv_quote(row.regime);
    csv += "," + format_double(row.bound);
    csv += "," + csv_quote(row.sharp);
    csv += "," + csv_quote(row.extremal);
    csv += "\n";
  }
  return csv;
}

nlohmann::ordered_json table_to_json(const RunConfig& config, const std::vector<TableRow>& rows) {
  nlohmann::ordered_json j;
  j["config"] = config_echo(config);
  j["rows"] = nlohmann::ordered_json::array();
  for (const TableRow& row : rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    if (row.g) r["g"] = *row.g;
    r["alpha"] = row.alpha;
    r["k"] = row.k;
    r["regime"] = row.regime;
    r["bound"] = row.bound;
    r["sharp"] = row.sharp;
    r["extremal"] = row.extremal;
    j["rows"].push_back(std::move(r));
  }
  return j;
}

namespace {

VerificationReport run_bounds_suite(const RunConfig& config) {
  VerificationReport rep;
  rep.seed = config.seed;
  rep.order = config.order;
  rep.tol = config.tolerance();
  int index = 0;
  for (double alpha : kBoundsSuiteAlphas) {
    VerificationReport part =
        verify_bounds_sample(alpha, kBoundsSamplesPerAlpha, config.order,
                             derive_seed(config.seed, 1000 + static_cast<uint64_t>(index)),
                             config.tolerance(), config.threads);
    rep.append(std::move(part));
    ++index;
  }
  return rep;
}

VerificationReport run_sharpness_suite(const RunConfig& config) {
  const std::vector<double> grid = alpha_grid(config.alpha_step);
  const int n_top = std::min({config.n_max, 10, config.order});
  std::vector<std::pair<int, double>> points;
  for (int n = 0; n <= n_top; ++n)
    for (double a : grid) points.emplace_back(n, a);

  std::vector<VerificationReport> slots(points.size());
  parallel_for_index(static_cast<int>(points.size()), config.threads, [&](int i) {
    slots[static_cast<size_t>(i)] = verify_sharpness(
        points[static_cast<size_t>(i)].first, points[static_cast<size_t>(i)].second,
        config.order, config.tolerance());
  });
  VerificationReport rep;
  rep.seed = config.seed;
  rep.order = config.order;
  rep.tol = config.tolerance();
  for (VerificationReport& part : slots) rep.append(std::move(part));
  return rep;
}

VerificationReport run_jabotinsky_suite(const RunConfig& config) {
  const Tolerance tol{config.rel_tol * kJabotinskyTightening, config.abs_floor};
  const int n_top = std::min(15, config.order - 4);
  static const int kPowers[] = {-3, -2, -1, 1, 2, 3};

  std::vector<VerificationReport> slots(kJabotinskySamples);
  parallel_for_index(kJabotinskySamples, config.threads, [&](int i) {
    const double alpha = (i % 10) / 10.0;
    const StarlikeSpec spec =
        sample_starlike(alpha, derive_seed(config.seed, 2000 + static_cast<uint64_t>(i)),
                        config.order);
    VerificationReport part = verify_jabotinsky(realize(spec), kPowers, n_top, tol);
    char tag[24];
    std::snprintf(tag, sizeof(tag), "[s=%d]", i);
    tag_rows(part, tag, alpha);
    slots[static_cast<size_t>(i)] = std::move(part);
  });
  VerificationReport rep;
  rep.seed = config.seed;
  rep.order = config.order;
  rep.tol = tol;
  for (VerificationReport& part : slots) rep.append(std::move(part));
  return rep;
}

VerificationReport run_lemma1_suite(const RunConfig& config) {
  const Tolerance tol{config.rel_tol * kLemma1Tightening, config.abs_floor};
  static const double kAlphas[] = {0.0, 0.13, 0.5, 0.86};
  std::vector<Lemma1Point> grid;
  for (int n = 1; n <= 6; ++n)
    for (double a : kAlphas)
      for (int g = 1; g <= 10; ++g) grid.push_back({n, a, g});
  VerificationReport rep = verify_lemma1(grid, tol);
  rep.seed = config.seed;
  rep.order = config.order;
  return rep;
}

VerificationReport run_roundtrip_suite(const RunConfig& config) {
  const int N = std::min(16, config.order);
  VerificationReport rep;
  rep.seed = config.seed;
  rep.order = config.order;
  rep.tol = config.tolerance();

  static const double kAlphas[] = {0.0, 0.25, 0.5, 0.75, 0.9};
  for (double a : kAlphas) {
    VerificationReport part = verify_roundtrip(koebe_alpha(a, config.order), N, config.tolerance());
    char tag[40];
    std::snprintf(tag, sizeof(tag), "[K_alpha,a=%g]", a);
    tag_rows(part, tag, a);
    rep.append(std::move(part));
  }
  static const std::pair<double, int> kRoots[] = {{0.0, 2}, {0.3, 3}, {0.6, 5}};
  for (const auto& [a, n] : kRoots) {
    VerificationReport part =
        verify_roundtrip(koebe_alpha_n(a, n, config.order), N, config.tolerance());
    char tag[48];
    std::snprintf(tag, sizeof(tag), "[K_alpha_n,a=%g,n=%d]", a, n);
    tag_rows(part, tag, a);
    rep.append(std::move(part));
  }
  for (int i = 0; i < kRoundtripSamples; ++i) {
    const double alpha = (i % 10) / 10.0;
    const StarlikeSpec spec =
        sample_starlike(alpha, derive_seed(config.seed, 3000 + static_cast<uint64_t>(i)),
                        config.order);
    VerificationReport part = verify_roundtrip(realize(spec), N, config.tolerance());
    char tag[24];
    std::snprintf(tag, sizeof(tag), "[s=%d]", i);
    tag_rows(part, tag, alpha);
    rep.append(std::move(part));
  }
  return rep;
}

}  // namespace

VerifyRun run_verify(const RunConfig& config, const std::set<Suite>& suites) {
  VerifyRun run;
  for (Suite suite : suites) {
    VerificationReport rep;
    try {
      switch (suite) {
        case Suite::Bounds: rep = run_bounds_suite(config); break;
        case Suite::Sharpness: rep = run_sharpness_suite(config); break;
        case Suite::Jabotinsky: rep = run_jabotinsky_suite(config); break;
        case Suite::Lemma1: rep = run_lemma1_suite(config); break;
        case Suite::Roundtrip: rep = run_roundtrip_suite(config); break;
      }
    } catch (const Error& e) {
      // One broken suite (PrecisionErosion and friends) must not vaporize
      // the report; surface it as a failing row so the file is still
      // written and the exit status stays nonzero.
      CheckRow row;
      row.name = std::string("error:") + e.what();
      row.pass = false;
      rep.checks.push_back(std::move(row));
      rep.recompute_excess();
    }
    run.all_pass = run.all_pass && rep.all_pass();
    run.reports.emplace_back(suite, std::move(rep));
  }
  return run;
}

std::string verify_to_csv(const VerifyRun& run) {
  std::string csv = "suite,name,n,alpha,observed,bound,ratio,pass\n";
  for (const auto& [suite, rep] : run.reports) {
    const std::string sname = suite_name(suite);
    for (const CheckRow& row : rep.checks) {
      csv += sname;
      csv += "," + csv_quote(row.name);
      csv += "," + std::to_string(row.n);
      csv += "," + format_double(row.alpha);
      csv += "," + format_double(row.observed);
      csv += "," + format_double(row.bound);
      csv += "," + format_double(row.ratio);
      csv += row.pass ? ",true\n" : ",false\n";
    }
  }
  return csv;
}

nlohmann::ordered_json verify_to_json(const RunConfig& config, const VerifyRun& run) {
  nlohmann::ordered_json j;
  j["config"] = config_echo(config);
  j["all_pass"] = run.all_pass;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& [suite, rep] : run.reports) {
    const std::string sname = suite_name(suite);
    for (const CheckRow& row : rep.checks) {
      nlohmann::ordered_json r;
      r["suite"] = sname;
      r["name"] = row.name;
      r["n"] = row.n;
      r["alpha"] = row.alpha;
      r["observed"] = row.observed;
      r["bound"] = row.bound;
      r["ratio"] = row.ratio;
      r["pass"] = row.pass;
      j["rows"].push_back(std::move(r));
    }
  }
  return j;
}

std::string search_to_csv(int n, double alpha, const SearchResult& result) {
  std::string csv = "n,alpha,k,regime,bound,best_ratio,baseline_ratio,atoms\n";
  csv += std::to_string(n);
  csv += "," + format_double(alpha);
  csv += "," + std::to_string(result.bound.interval_k);
  csv += "," + csv_quote(regime_name(result.bound.regime));
  csv += "," + format_double(result.bound.value);
  csv += "," + format_double(result.best_ratio);
  csv += "," + format_double(result.baseline_ratio);
  csv += "," + csv_quote(spec_to_json(result.best_spec)["atoms"].dump());
  csv += "\n";
  return csv;
}

nlohmann::ordered_json search_to_json(const RunConfig& config, int n, double alpha,
                                      const SearchResult& result) {
  nlohmann::ordered_json j;
  j["config"] = config_echo(config);
  j["n"] = n;
  j["alpha"] = alpha;
  j["regime"] = regime_name(result.bound.regime);
  j["k"] = result.bound.interval_k;
  j["bound"] = result.bound.value;
  j["best_ratio"] = result.best_ratio;
  j["baseline_ratio"] = result.baseline_ratio;
  j["best_spec"] = spec_to_json(result.best_spec);
  return j;
}

int cmd_table(const RunConfig& config, TableKind kind) {
  config.validate();
  const std::vector<TableRow> rows = make_table(config, kind);
  const std::string payload = config.format == OutputFormat::Csv
                                  ? table_to_csv(rows)
                                  : table_to_json(config, rows).dump(2) + "\n";
  return write_payload(config.out, payload);
}

int cmd_verify(const RunConfig& config, std::set<Suite> suites) {
  config.validate();
  if (suites.empty())
    suites = {Suite::Bounds, Suite::Sharpness, Suite::Jabotinsky, Suite::Lemma1,
              Suite::Roundtrip};
  const VerifyRun run = run_verify(config, suites);
  const std::string path =
      config.out.empty() ? "verify_report" + default_extension(config.format) : config.out;
  const std::string payload = config.format == OutputFormat::Csv
                                  ? verify_to_csv(run)
                                  : verify_to_json(config, run).dump(2) + "\n";
  const int io_status = write_payload(path, payload);

  for (const auto& [suite, rep] : run.reports) {
    size_t failed = 0;
    for (const CheckRow& row : rep.checks)
      if (!row.pass) ++failed;
    std::cerr << "suite " << suite_name(suite) << ": " << rep.checks.size() << " checks, "
              << failed << " failed\n";
  }
  std::cerr << (run.all_pass ? "verify: PASS" : "verify: FAIL") << " (report: " << path << ")\n";
  if (io_status != 0) return io_status;
  return run.all_pass ? 0 : 1;
}

int cmd_sharp(const RunConfig& config, int n, double alpha) {
  config.validate();
  VerifyRun run;
  run.reports.emplace_back(Suite::Sharpness,
                           verify_sharpness(n, alpha, config.order, config.tolerance()));
  run.all_pass = run.reports.front().second.all_pass();
  const std::string payload = config.format == OutputFormat::Csv
                                  ? verify_to_csv(run)
                                  : verify_to_json(config, run).dump(2) + "\n";
  const int io_status = write_payload(config.out, payload);
  if (io_status != 0) return io_status;
  return run.all_pass ? 0 : 1;
}

int cmd_search(const RunConfig& config, int n, double alpha, long budget, SearchTarget target) {
  config.validate();
  if (budget < 1) throw ConfigError("search budget must be >= 1");
  const SearchResult result = search_extremal(n, alpha, budget, config.seed, config.order,
                                              target, config.threads);
  const std::string payload = config.format == OutputFormat::Csv
                                  ? search_to_csv(n, alpha, result)
                                  : search_to_json(config, n, alpha, result).dump(2) + "\n";
  return write_payload(config.out, payload);
}

}  // namespace starcoef
