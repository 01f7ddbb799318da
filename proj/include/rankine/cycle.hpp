#pragma once

#include "rankine/steam.hpp"

namespace rankine::cycle {

// Full definition of one ideal four-stage cycle.
struct CycleSpec {
  double p_boiler = 5.0e6;     // Pa, boiler/superheater pressure (states 2-3)
  double T_max = 873.15;       // K, turbine inlet temperature (state 3)
  double p_cond = 12.5e3;      // Pa, condenser pressure (states 4-1)
  double eta_pump = 1.0;       // isentropic efficiency, (0, 1]
  double eta_turbine = 1.0;    // isentropic efficiency, (0, 1]
  double alpha = 0.9;          // gross loss factor, [0, 1]
};

// Solved states plus all per-unit-mass energy metrics.
struct CycleResult {
  steam::ThermoState state1;   // condenser exit, saturated liquid
  steam::ThermoState state2;   // pump exit
  steam::ThermoState state3;   // turbine inlet
  steam::ThermoState state4;   // turbine exit
  double w_p = 0.0;            // pump work [J/kg]
  double w_t = 0.0;            // turbine work [J/kg]
  double w_net = 0.0;          // net cycle work [J/kg]
  double q_b = 0.0;            // boiler input heat [J/kg]
  double q_c = 0.0;            // condenser heat rejection [J/kg]
  double w_elec = 0.0;         // alpha * w_net [J/kg]
  double eta_cyc = 0.0;        // cycle efficiency, fraction
  double eta_pp = 0.0;         // plant efficiency, alpha * eta_cyc
  double chi4 = 0.0;           // extended quality at turbine exit
  bool exit_superheated = false;
};

// Throws DomainError naming the violated condition when spec is invalid.
void validate_spec(const CycleSpec& spec);

CycleResult solve_cycle(const CycleSpec& spec);

// 1 - tsat(p_cond) / T_max.
double carnot_bound(const CycleSpec& spec);

}  // namespace rankine::cycle
