#pragma once

#include <vector>

#include "rankine/cycle.hpp"

namespace rankine::sweep {

// One sweep point. Energies in MJ/kg (the solver's J/kg converted exactly
// once here), efficiencies as fractions.
struct SweepRow {
  double p_cond = 0.0;   // Pa
  double q_b = 0.0;      // MJ/kg
  double w_net = 0.0;    // MJ/kg
  double w_elec = 0.0;   // MJ/kg
  double eta_cyc = 0.0;  // fraction
  double eta_pp = 0.0;   // fraction
  double chi4 = 0.0;
  bool exit_superheated = false;
};

// [start, start*ratio, ..., start*ratio^(count-1)].
std::vector<double> geometric_sequence(double start, double ratio, int count);

// One row per pressure, ascending in p_cond. Points are evaluated with an
// OpenMP parallel loop; output is independent of scheduling.
std::vector<SweepRow> run_sweep(const cycle::CycleSpec& base,
                                std::vector<double> pressures);

// Serial reference path, kept for testing and benchmarking against the
// parallel one. Must produce bit-identical rows.
std::vector<SweepRow> run_sweep_serial(const cycle::CycleSpec& base,
                                       std::vector<double> pressures);

// Condenser pressure at which the turbine exit is exactly saturated vapor,
// located by bisection on extended_quality(p, s3) - 1 to 1 Pa absolute.
double find_saturated_exit_pressure(const cycle::CycleSpec& base,
                                    double p_lo, double p_hi);

}  // namespace rankine::sweep
