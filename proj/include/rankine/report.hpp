#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rankine/cycle.hpp"
#include "rankine/regression.hpp"
#include "rankine/sweep.hpp"

namespace rankine::report {

enum class Format { Text, Csv, Json };

// Sweep metrics addressable from the CLI and the fit command.
enum class Metric { QBoiler, WNet, WElec, EtaCyc, EtaPp, Chi4 };

Metric metric_from_name(const std::string& name);  // throws ParseError
const char* metric_name(Metric metric);
double metric_value(const sweep::SweepRow& row, Metric metric);

// "50bar", "12.5kPa", "5MPa", "611.657Pa" -> Pa.
double parse_pressure(const std::string& text);
// "600C", "873.15K" -> K.
double parse_temperature(const std::string& text);
// Pressure list element: unit suffix optional, bare numbers are kPa.
double parse_pressure_kpa_default(const std::string& text);

// --pressures argument: comma list of pressures or "start:ratio:count"
// geometric form (start in kPa when unsuffixed).
std::vector<double> parse_pressures_arg(const std::string& text);

// Exact contract header of the sweep CSV.
extern const char* const kSweepCsvHeader;

std::string analyze_text(const cycle::CycleSpec& spec,
                         const cycle::CycleResult& result);
std::string analyze_csv(const cycle::CycleResult& result);
std::string analyze_json(const cycle::CycleSpec& spec,
                         const cycle::CycleResult& result);

std::string sweep_csv(const std::vector<sweep::SweepRow>& rows);
std::string sweep_text(const std::vector<sweep::SweepRow>& rows);
std::string sweep_json(const std::vector<sweep::SweepRow>& rows);

// Parses a CSV produced by sweep_csv. Throws ParseError with line numbers.
std::vector<sweep::SweepRow> parse_sweep_csv(std::istream& in);

// Two-column plot data: log2(p_cond [kPa]) vs metric.
std::string plot_data(const std::vector<sweep::SweepRow>& rows, Metric metric);

struct FitEntry {
  regression::FitModel model;
  bool recommended = false;
};

struct FitReport {
  Metric metric = Metric::WNet;
  std::vector<FitEntry> entries;
};

// Fits the requested families to (p_cond [kPa], metric). model_name is
// "log", "power", or "auto" (both families, higher transformed R^2 wins).
FitReport fit_metric(const std::vector<sweep::SweepRow>& rows, Metric metric,
                     const std::string& model_name);

std::string fit_text(const FitReport& report);
std::string fit_csv(const FitReport& report);
std::string fit_json(const FitReport& report);

struct ValidationCheck {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass = true;
};

// Golden suite over the base-case cycle, sweep endpoints, crossover,
// regression coefficients, and the practical condenser-pressure limit.
ValidationReport run_validation();

std::string validation_text(const ValidationReport& report);
std::string validation_json(const ValidationReport& report);

}  // namespace rankine::report
