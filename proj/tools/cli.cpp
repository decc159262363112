#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "report.hpp"
#include "sens/analysis.hpp"
#include "sens/config.hpp"
#include "sens/errors.hpp"
#include "sens/parse.hpp"
#include "sens/power.hpp"
#include "sens/sensitiveness.hpp"
#include "sens/serialize.hpp"
#include "sens/simulation.hpp"
#include "sens/tables.hpp"

namespace sens::cli {
namespace {

using nlohmann::json;

// A flag value that parses but is rejected by the library.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
auto for_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SpecError& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const DomainError& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const ConfigError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

struct TestOptions {
  std::string test;
  std::optional<std::int64_t> df;
  std::optional<std::int64_t> groups;
  double sig = 0.05;
  int tails = 1;

  void add_to(CLI::App& cmd, const char* sig_flag = "--sig") {
    cmd.add_option("--test", test, "t2, r, chi2 or anova")->required();
    cmd.add_option("--df", df, "chi2 degrees of freedom");
    cmd.add_option("--groups", groups, "number of anova groups");
    cmd.add_option(sig_flag, sig, "significance level")->capture_default_str();
    cmd.add_option("--tails", tails, "1 or 2 (t family only)")->capture_default_str();
  }

  TestSpec build() const {
    try {
      return make_test_spec(test, sig, tails, df, groups);
    } catch (const SpecError& e) {
      const std::string what = e.what();
      std::string flag = "--test";
      if (what.find("sig") != std::string::npos) flag = "--sig";
      else if (what.find("tail") != std::string::npos) flag = "--tails";
      else if (what.find("df") != std::string::npos) flag = "--df";
      else if (what.find("group") != std::string::npos) flag = "--groups";
      throw UsageError(flag + ": " + what);
    }
  }

  Settings settings(const TestSpec& spec) const {
    return {{"test", spec.label()},
            {"sig", fmt(spec.sig)},
            {"tails", spec.two_tailed() ? "2" : "1"}};
  }
};

struct FormatOptions {
  std::string kind = "json";
  int precision = 4;
  std::string out_path;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--format", kind, "json, csv or md")
        ->check(CLI::IsMember({"json", "csv", "md", "markdown"}))
        ->capture_default_str();
    cmd.add_option("--precision", precision, "decimals in csv and md output")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
    cmd.add_option("--out", out_path, "write to this file instead of stdout");
  }
};

Cell df2_cell(const DegreesOfFreedom& df) {
  if (df.df2) return *df.df2;
  return std::monostate{};
}

void emit(const FormatOptions& format, std::ostream& out, const Settings& settings,
          const std::string& key, const json& payload, const Table& table) {
  std::string text;
  switch (parse_format_kind(format.kind)) {
    case FormatKind::Json: text = render_json(settings, key, payload); break;
    case FormatKind::Csv: text = render_csv(settings, table, format.precision); break;
    case FormatKind::Markdown: text = render_markdown(settings, table, format.precision); break;
  }
  if (format.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(format.out_path, std::ios::binary);
  if (!file) throw UsageError("--out: cannot write " + format.out_path);
  file << text;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("--out: cannot write " + path.string());
  file << text;
}

// --- solve ---------------------------------------------------------------

struct SolveCommand {
  TestOptions test;
  FormatOptions format;
  std::string es;
  std::optional<int> decimals;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("solve", "minimum N at which a target MES is significant");
    test.add_to(*cmd);
    cmd->add_option("--es", es, "target effect size, e.g. d=0.5 or V2=0.21")->required();
    cmd->add_option("--decimals", decimals, "compare the achieved MES rounded to this many decimals")
        ->check(CLI::Range(0, 12));
    format.add_to(*cmd);
  }

  void run(std::ostream& out) const {
    const TestSpec spec = test.build();
    const EffectSize target = for_flag("--es", [&] {
      EffectSize e = parse_effect_size(es);
      spec.check_metric(e.spec());
      return e;
    });
    const SensitivenessResult r =
        for_flag("--es", [&] { return min_sample_size(spec, target, SolveOptions{decimals}); });
    Table table{{"target", "n_min", "df1", "df2", "critical_value", "achieved_metric",
                 "achieved_mes", "at_df_floor", "equal_split"},
                {{target.label() + "=" + fmt(target.value()), r.n_min, r.df.df1, df2_cell(r.df),
                  r.critical_value, r.achieved_mes.label(), r.achieved_mes.value(), r.at_df_floor,
                  r.equal_split}}};
    Settings settings = test.settings(spec);
    settings.emplace_back("target", target.label() + "=" + fmt(target.value()));
    emit(format, out, settings, "result", json(r), table);
  }
};

// --- mes -----------------------------------------------------------------

struct MesCommand {
  TestOptions test;
  FormatOptions format;
  std::int64_t n = 0;
  std::string metric;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("mes", "critical value and minimum effect size at a given N");
    test.add_to(*cmd);
    cmd->add_option("--n", n, "total sample size")->required();
    cmd->add_option("--metric", metric, "report in this metric (d, r, w, f, V2, ...)");
    format.add_to(*cmd);
  }

  void run(std::ostream& out) const {
    const TestSpec spec = test.build();
    std::optional<MetricSpec> m;
    if (!metric.empty()) {
      m = for_flag("--metric", [&] { return parse_effect_size(metric + "=0").spec(); });
    }
    const MesAtN r = for_flag("--n", [&] {
      if (m) for_flag("--metric", [&] { spec.check_metric(*m); return 0; });
      return mes_at_n(spec, n, m);
    });
    Table table{{"n", "df1", "df2", "critical_value", "metric", "mes", "attainable"},
                {{r.n, r.df.df1, df2_cell(r.df), r.critical_value, r.mes.label(), r.mes.value(),
                  r.attainable}}};
    emit(format, out, test.settings(spec), "result", json(r), table);
  }
};

// --- posthoc -------------------------------------------------------------

struct PosthocCommand {
  FormatOptions format;
  std::int64_t n_actual = 0;
  std::int64_t n_min = 0;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("posthoc", "percent over- or under-sensitiveness");
    cmd->add_option("--n-actual", n_actual, "sample size used")->required();
    cmd->add_option("--n-min", n_min, "minimum sample size for sensitiveness")->required();
    format.add_to(*cmd);
  }

  void run(std::ostream& out) const {
    const double pct = for_flag(n_min < 1 ? "--n-min" : "--n-actual",
                                [&] { return post_hoc_sensitiveness(n_actual, n_min); });
    const json payload{{"n_actual", n_actual}, {"n_min", n_min}, {"sensitiveness_percent", pct}};
    Table table{{"n_actual", "n_min", "sensitiveness_percent"}, {{n_actual, n_min, pct}}};
    emit(format, out, {}, "result", payload, table);
  }
};

// --- power ---------------------------------------------------------------

struct PowerCommand {
  TestOptions test;
  FormatOptions format;
  std::string es;
  std::optional<double> power;
  std::optional<std::int64_t> n;
  std::string allocation = "balanced";

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("power", "power at N, or minimum N for a target power");
    test.add_to(*cmd, "--alpha");
    cmd->add_option("--es", es, "population effect size, e.g. d=0.5")->required();
    auto* p = cmd->add_option("--power", power, "target power");
    auto* nn = cmd->add_option("--n", n, "total sample size");
    p->excludes(nn);
    cmd->add_option("--allocation", allocation, "balanced or unrestricted")
        ->check(CLI::IsMember({"balanced", "unrestricted"}))
        ->capture_default_str();
    format.add_to(*cmd);
  }

  void run(std::ostream& out) const {
    const TestSpec spec = test.build();
    PowerSpec ps{spec, for_flag("--es", [&] { return parse_effect_size(es); }),
                 power.value_or(0.80)};
    for_flag(power ? "--power" : "--es", [&] { ps.validate(); return 0; });
    PowerResult r;
    if (n) {
      r = for_flag("--n", [&] {
        const MesAtN at = mes_at_n(spec, *n);
        return PowerResult{*n, power_at_n(ps, *n), at.critical_value, noncentrality_at_n(ps, *n),
                           at.df};
      });
    } else {
      const Allocation a =
          allocation == "balanced" ? Allocation::Balanced : Allocation::Unrestricted;
      r = for_flag("--es", [&] { return min_n_for_power(ps, a); });
    }
    Settings settings{{"test", spec.label()},
                      {"alpha", fmt(spec.sig)},
                      {"tails", spec.two_tailed() ? "2" : "1"},
                      {"es", ps.population_es.label() + "=" + fmt(ps.population_es.value())}};
    if (!n) {
      settings.emplace_back("target_power", fmt(ps.target_power));
      settings.emplace_back("allocation", allocation);
    }
    Table table{{"n", "power", "df1", "df2", "critical_value", "noncentrality"},
                {{r.n, r.power, r.df.df1, df2_cell(r.df), r.critical_value,
                  r.noncentrality.value}}};
    emit(format, out, settings, "result", json(r), table);
  }
};

// --- table ---------------------------------------------------------------

struct TableCommand {
  FormatOptions format;
  std::string which;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("table", "reference sample-size tables");
    cmd->add_option("which", which, "table2 or supp2")
        ->required()
        ->check(CLI::IsMember({"table2", "supp2"}));
    format.add_to(*cmd);
  }

  void run(std::ostream& out) const {
    const std::vector<TableRow> rows =
        which == "table2" ? generate_table2() : generate_supp_table2();
    Table table{{"test", "size", "target_metric", "target", "n_sns", "n_pwr", "df1", "df2",
                 "critical_value", "actual_es"},
                {}};
    for (const auto& r : rows) {
      table.rows.push_back({r.test_label, r.size, r.target_es.label(), r.target_es.value(),
                            r.n_sns, r.n_pwr, r.df.df1, df2_cell(r.df), r.critical_value,
                            r.actual_es.value()});
    }
    const Settings settings{{"sig", "0.05"}, {"tails", "1"}, {"power", "0.8"}};
    emit(format, out, settings, "rows", json(rows), table);
  }
};

// --- simulate ------------------------------------------------------------

struct SimulateCommand {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string out_dir;
  bool paper_scale = false;
  bool null_effect = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("simulate", "Monte Carlo comparison of sampling strategies");
    cmd->add_option("--config", config_path, "JSON or TOML configuration")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", seed, "override the configured seed");
    cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    cmd->add_option("--out", out_dir, "directory for outcomes.json, outcomes.csv, comparisons.csv, summary.md");
    cmd->add_flag("--paper-scale", paper_scale, "start from the full-size design");
    cmd->add_flag("--null", null_effect, "set group 2 means equal to group 1 (no true effect)");
  }

  void run(std::ostream& out) const {
    SimulationConfig base =
        paper_scale ? SimulationConfig::paper_defaults() : SimulationConfig::desk_defaults();
    SimulationConfig config =
        config_path.empty()
            ? base
            : for_flag("--config", [&] { return load_simulation_config(config_path, base); });
    if (seed) config.seed = *seed;
    if (threads) config.threads = *threads;
    if (null_effect) {
      for (auto& m : config.macro_pops) m.mean2 = m.mean1;
    }
    for_flag("--config", [&] { config.validate(); return 0; });

    const std::vector<StudyOutcome> outcomes = run_simulation(config);
    json config_json = config;
    config_json.erase("threads");  // outputs must not depend on the thread count
    const std::string outcomes_json =
        json{{"config", config_json}, {"outcomes", outcomes}}.dump(2) + "\n";
    const std::string summary = "seed = " + std::to_string(config.seed) +
                                ", sig = " + fmt(config.sig) +
                                ", tails = " + (config.tails == Tails::Two ? "2" : "1") +
                                ", mes_threshold = " + fmt(config.mes_threshold) + "\n\n" +
                                comparison_table_markdown(outcomes);
    if (out_dir.empty()) {
      out << summary;
      return;
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw UsageError("--out: cannot create " + out_dir + ": " + ec.message());
    const std::filesystem::path dir(out_dir);
    write_file(dir / "outcomes.json", outcomes_json);
    write_file(dir / "outcomes.csv", simulation_table_csv(outcomes));
    write_file(dir / "comparisons.csv", comparison_table_csv(outcomes));
    write_file(dir / "summary.md", summary);
    out << "wrote outcomes.json, outcomes.csv, comparisons.csv, summary.md to " << out_dir << "\n";
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sensitiveness analysis: minimum sample sizes for significance", "sens"};
  app.require_subcommand(1);
  SolveCommand solve;
  MesCommand mes;
  PosthocCommand posthoc;
  PowerCommand power;
  TableCommand table;
  SimulateCommand simulate;
  solve.attach(app);
  mes.attach(app);
  posthoc.attach(app);
  power.attach(app);
  table.attach(app);
  simulate.attach(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("solve")) solve.run(out);
    else if (app.got_subcommand("mes")) mes.run(out);
    else if (app.got_subcommand("posthoc")) posthoc.run(out);
    else if (app.got_subcommand("power")) power.run(out);
    else if (app.got_subcommand("table")) table.run(out);
    else if (app.got_subcommand("simulate")) simulate.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const DegenerateInputError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace sens::cli
