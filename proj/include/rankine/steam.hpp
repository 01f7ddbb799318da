#pragma once

#include <string>

namespace rankine::steam {

enum class Phase {
  CompressedLiquid,
  SuperheatedVapor,
  TwoPhase,
  SaturatedLiquid,
  SaturatedVapor,
};

const char* phase_name(Phase phase);

// One thermodynamic water/steam state. Strict SI units throughout.
struct ThermoState {
  double p = 0.0;    // absolute pressure [Pa]
  double T = 0.0;    // temperature [K]
  double h = 0.0;    // specific enthalpy [J/kg]
  double s = 0.0;    // specific entropy [J/(kg K)]
  double v = 0.0;    // specific volume [m^3/kg]
  Phase phase = Phase::CompressedLiquid;
  double x = -1.0;   // quality; meaningful only for the saturated/two-phase tags
};

// Saturated liquid/vapor property pair at one pressure.
struct SaturationPoint {
  double p_sat = 0.0;  // [Pa]
  double T_sat = 0.0;  // [K]
  double hf = 0.0;     // [J/kg]
  double hg = 0.0;     // [J/kg]
  double sf = 0.0;     // [J/(kg K)]
  double sg = 0.0;     // [J/(kg K)]
};

inline constexpr double kTripleT = 273.16;       // K
inline constexpr double kTripleP = 611.657;      // Pa (on the saturation line)
inline constexpr double kCriticalT = 647.096;    // K
inline constexpr double kCriticalP = 22.064e6;   // Pa
inline constexpr double kMaxP = 10.0e6;          // Pa, envelope of this build
inline constexpr double kMaxT = 1073.15;         // K

// Saturation pressure [Pa] for kTripleT <= T <= kCriticalT.
double psat(double T);

// Saturation temperature [K] for kTripleP <= p <= kCriticalP.
double tsat(double p);

// Single-phase state from (p, T). Rejects T == tsat(p); use state_px there.
ThermoState props_pt(double p, double T);

// Saturation endpoints at p, kTripleP <= p < kCriticalP.
SaturationPoint sat_props(double p);

// Two-phase (or saturated-boundary) state from pressure and quality.
ThermoState state_px(double p, double x);

// State from pressure and specific entropy. Two-phase when s lies inside the
// dome, otherwise bracketed root-finding on T over the forward equations.
ThermoState state_ps(double p, double s);

// (s - sf)/(sg - sf) at p: equals quality inside the dome, exceeds 1 for
// superheated states. Continuous in p and s.
double extended_quality(double p, double s);

}  // namespace rankine::steam
