// Command-line front end: analyze | sweep | fit | validate.
//
// Exit codes: 0 success, 1 validation/spec failure, 2 numeric failure,
// 3 I/O or parse failure. Machine-readable output goes to stdout (or --out);
// diagnostics go to stderr only.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankine/errors.hpp"
#include "rankine/report.hpp"

namespace {

using namespace rankine;

struct SpecFlags {
  std::string p_boiler = "50bar";
  std::string t_max = "600C";
  std::string p_cond = "12.5kPa";
  double eta_pump = 1.0;
  double eta_turbine = 1.0;
  double alpha = 0.9;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
  cmd->add_option("--p-boiler", flags.p_boiler,
                  "Boiler pressure, e.g. 50bar or 5000kPa");
  cmd->add_option("--t-max", flags.t_max,
                  "Turbine inlet temperature, e.g. 600C or 873.15K");
  cmd->add_option("--p-cond", flags.p_cond,
                  "Condenser pressure, e.g. 12.5kPa");
  cmd->add_option("--eta-pump", flags.eta_pump, "Pump isentropic efficiency");
  cmd->add_option("--eta-turbine", flags.eta_turbine,
                  "Turbine isentropic efficiency");
  cmd->add_option("--alpha", flags.alpha, "Gross loss factor");
}

cycle::CycleSpec to_spec(const SpecFlags& flags) {
  cycle::CycleSpec spec;
  spec.p_boiler = report::parse_pressure(flags.p_boiler);
  spec.T_max = report::parse_temperature(flags.t_max);
  spec.p_cond = report::parse_pressure(flags.p_cond);
  spec.eta_pump = flags.eta_pump;
  spec.eta_turbine = flags.eta_turbine;
  spec.alpha = flags.alpha;
  return spec;
}

report::Format to_format(const std::string& name) {
  if (name == "text") return report::Format::Text;
  if (name == "csv") return report::Format::Csv;
  if (name == "json") return report::Format::Json;
  throw ParseError("unknown format '" + name + "' (expected text|csv|json)");
}

void emit(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << data;
    if (!std::cout) throw ParseError("write to stdout failed");
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + out_path + "'");
  out << data;
  if (!out) throw ParseError("write to '" + out_path + "' failed");
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Ideal four-stage steam Rankine cycle simulator"};
  app.require_subcommand(1);

  SpecFlags flags;
  std::string format = "text";
  std::string out_path;
  std::string pressures_arg = "0.78125:2:9";
  std::string metric_arg = "w_net";
  std::string model_arg = "auto";
  std::string fit_input;
  std::string plot_dir;

  auto* analyze = app.add_subcommand("analyze", "Solve one cycle");
  add_spec_flags(analyze, flags);
  analyze->add_option("--format", format, "text|csv|json");
  analyze->add_option("--out", out_path, "Output file (default stdout)");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Condenser-pressure parametric sweep");
  add_spec_flags(sweep_cmd, flags);
  sweep_cmd->add_option("--pressures", pressures_arg,
                        "Comma list (kPa unless suffixed) or start:ratio:count");
  sweep_cmd->add_option("--format", format, "text|csv|json");
  sweep_cmd->add_option("--out", out_path, "Output file (default stdout)");
  sweep_cmd->add_option("--plot-dir", plot_dir,
                        "Also write two-column <metric>.dat plot files here");

  auto* fit = app.add_subcommand("fit", "Fit trendlines to a sweep CSV");
  fit->add_option("input", fit_input, "Sweep CSV produced by `sweep`")
      ->required();
  fit->add_option("--metric", metric_arg,
                  "q_b|w_net|w_elec|eta_cyc|eta_pp|chi4");
  fit->add_option("--model", model_arg, "log|power|auto");
  fit->add_option("--format", format, "text|csv|json");
  fit->add_option("--out", out_path, "Output file (default stdout)");

  auto* validate =
      app.add_subcommand("validate", "Run the built-in golden checks");
  validate->add_option("--format", format, "text|json");
  validate->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }

  const report::Format fmt = to_format(format);

  if (analyze->parsed()) {
    const cycle::CycleSpec spec = to_spec(flags);
    const cycle::CycleResult result = cycle::solve_cycle(spec);
    switch (fmt) {
      case report::Format::Text: emit(report::analyze_text(spec, result), out_path); break;
      case report::Format::Csv: emit(report::analyze_csv(result), out_path); break;
      case report::Format::Json: emit(report::analyze_json(spec, result), out_path); break;
    }
    return 0;
  }

  if (sweep_cmd->parsed()) {
    const cycle::CycleSpec base = to_spec(flags);
    const auto pressures = report::parse_pressures_arg(pressures_arg);
    const auto rows = sweep::run_sweep(base, pressures);
    switch (fmt) {
      case report::Format::Text: emit(report::sweep_text(rows), out_path); break;
      case report::Format::Csv: emit(report::sweep_csv(rows), out_path); break;
      case report::Format::Json: emit(report::sweep_json(rows), out_path); break;
    }
    if (!plot_dir.empty()) {
      std::filesystem::create_directories(plot_dir);
      for (const auto metric :
           {report::Metric::QBoiler, report::Metric::WNet,
            report::Metric::WElec, report::Metric::EtaCyc,
            report::Metric::EtaPp, report::Metric::Chi4}) {
        emit(report::plot_data(rows, metric),
             plot_dir + "/" + report::metric_name(metric) + ".dat");
      }
    }
    return 0;
  }

  if (fit->parsed()) {
    std::ifstream in(fit_input, std::ios::binary);
    if (!in) throw ParseError("cannot open sweep CSV '" + fit_input + "'");
    const auto rows = report::parse_sweep_csv(in);
    const auto rep =
        report::fit_metric(rows, report::metric_from_name(metric_arg), model_arg);
    switch (fmt) {
      case report::Format::Text: emit(report::fit_text(rep), out_path); break;
      case report::Format::Csv: emit(report::fit_csv(rep), out_path); break;
      case report::Format::Json: emit(report::fit_json(rep), out_path); break;
    }
    return 0;
  }

  // validate
  const report::ValidationReport rep = report::run_validation();
  emit(fmt == report::Format::Json ? report::validation_json(rep)
                                   : report::validation_text(rep),
       out_path);
  return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
