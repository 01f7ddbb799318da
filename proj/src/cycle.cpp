#include "rankine/cycle.hpp"

#include <cmath>
#include <string>

#include "rankine/errors.hpp"

namespace rankine::cycle {
namespace {

using steam::ThermoState;

// State from pressure and specific enthalpy. Only needed for non-ideal pump
// or turbine efficiencies, where the exit enthalpy is no longer isentropic.
ThermoState state_ph(double p, double h) {
  const steam::SaturationPoint sp = steam::sat_props(p);
  if (h >= sp.hf && h <= sp.hg) {
    return steam::state_px(p, (h - sp.hf) / (sp.hg - sp.hf));
  }
  // Enthalpy is monotone in T on both single-phase branches; reuse the
  // entropy inversion by searching on s instead would be circular, so run a
  // plain bisection on T directly.
  double t_lo, t_hi;
  const bool vapor = h > sp.hg;
  if (vapor) {
    t_lo = sp.T_sat + 1e-6;
    t_hi = steam::kMaxT;
  } else {
    t_lo = steam::kTripleT;
    t_hi = sp.T_sat - 1e-6;
  }
  auto h_at = [&](double T) { return steam::props_pt(p, T).h; };
  double f_lo = h_at(t_lo) - h;
  double f_hi = h_at(t_hi) - h;
  if (f_lo * f_hi > 0.0) {
    throw DomainError("state_ph: enthalpy unreachable at this pressure");
  }
  for (int it = 0; it < 200; ++it) {
    const double t_mid = 0.5 * (t_lo + t_hi);
    const double f_mid = h_at(t_mid) - h;
    if (std::abs(f_mid) <= 1e-9 * std::abs(h)) {
      return steam::props_pt(p, t_mid);
    }
    if (f_lo * f_mid < 0.0) {
      t_hi = t_mid;
      f_hi = f_mid;
    } else {
      t_lo = t_mid;
      f_lo = f_mid;
    }
  }
  throw NumericError("state_ph: enthalpy inversion did not converge");
}

template <typename Fn>
auto with_state_label(int state, Fn&& fn) {
  try {
    return fn();
  } catch (const DomainError& e) {
    throw DomainError("state " + std::to_string(state) + ": " + e.what());
  } catch (const NumericError& e) {
    throw NumericError("state " + std::to_string(state) + ": " + e.what());
  }
}

}  // namespace

void validate_spec(const CycleSpec& spec) {
  if (!(spec.p_cond >= steam::kTripleP)) {
    throw DomainError(
        "invalid spec: p_cond must be at or above the triple-point pressure "
        "(611.657 Pa)");
  }
  if (!(spec.p_cond < spec.p_boiler)) {
    throw DomainError(
        "invalid spec: p_cond must be strictly below p_boiler (the turbine "
        "must expand)");
  }
  if (!(spec.p_boiler <= steam::kMaxP)) {
    throw DomainError("invalid spec: p_boiler above the 10 MPa envelope");
  }
  if (!(spec.T_max <= steam::kMaxT)) {
    throw DomainError("invalid spec: T_max above the 1073.15 K envelope");
  }
  if (!(spec.T_max > steam::tsat(spec.p_boiler))) {
    throw DomainError(
        "invalid spec: T_max must exceed tsat(p_boiler) (state 3 must be "
        "superheated)");
  }
  if (!(spec.eta_pump > 0.0) || !(spec.eta_pump <= 1.0)) {
    throw DomainError("invalid spec: eta_pump must lie in (0, 1]");
  }
  if (!(spec.eta_turbine > 0.0) || !(spec.eta_turbine <= 1.0)) {
    throw DomainError("invalid spec: eta_turbine must lie in (0, 1]");
  }
  if (!(spec.alpha >= 0.0) || !(spec.alpha <= 1.0)) {
    throw DomainError("invalid spec: alpha must lie in [0, 1]");
  }
}

CycleResult solve_cycle(const CycleSpec& spec) {
  validate_spec(spec);
  CycleResult r;

  // State 1: saturated liquid at condenser pressure.
  r.state1 = with_state_label(1, [&] { return steam::state_px(spec.p_cond, 0.0); });

  // State 2: isentropic compression to boiler pressure, then the efficiency
  // correction h2 = h1 + (h2s - h1) / eta_pump.
  const ThermoState state2s =
      with_state_label(2, [&] { return steam::state_ps(spec.p_boiler, r.state1.s); });
  if (spec.eta_pump == 1.0) {
    r.state2 = state2s;
  } else {
    const double h2 = r.state1.h + (state2s.h - r.state1.h) / spec.eta_pump;
    r.state2 = with_state_label(2, [&] { return state_ph(spec.p_boiler, h2); });
  }

  // State 3: superheated steam at boiler pressure and peak temperature.
  r.state3 = with_state_label(3, [&] { return steam::props_pt(spec.p_boiler, spec.T_max); });

  // State 4: isentropic expansion to condenser pressure, then
  // h4 = h3 - eta_turbine * (h3 - h4s).
  const ThermoState state4s =
      with_state_label(4, [&] { return steam::state_ps(spec.p_cond, r.state3.s); });
  if (spec.eta_turbine == 1.0) {
    r.state4 = state4s;
  } else {
    const double h4 = r.state3.h - spec.eta_turbine * (r.state3.h - state4s.h);
    r.state4 = with_state_label(4, [&] { return state_ph(spec.p_cond, h4); });
  }

  r.w_p = r.state2.h - r.state1.h;
  r.q_b = r.state3.h - r.state2.h;
  r.w_t = r.state3.h - r.state4.h;
  r.q_c = r.state4.h - r.state1.h;
  r.w_net = r.w_t - r.w_p;
  r.eta_cyc = r.w_net / r.q_b;
  r.w_elec = spec.alpha * r.w_net;
  r.eta_pp = spec.alpha * r.eta_cyc;
  r.chi4 = steam::extended_quality(spec.p_cond, r.state4.s);
  r.exit_superheated = r.chi4 > 1.0;
  return r;
}

double carnot_bound(const CycleSpec& spec) {
  validate_spec(spec);
  return 1.0 - steam::tsat(spec.p_cond) / spec.T_max;
}

}  // namespace rankine::cycle
