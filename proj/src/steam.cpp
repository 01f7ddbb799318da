#include "rankine/steam.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

#include "rankine/errors.hpp"

// IAPWS-IF97 industrial formulation, restricted to the regions this project
// needs: compressed liquid (region 1), superheated vapor (region 2), and the
// saturation line (region-4 quadratic). Reference state: zero internal energy
// and entropy for saturated liquid at the triple point.

namespace rankine::steam {
namespace {

constexpr double kGasConstant = 461.526;  // J/(kg K)

// ---------------------------------------------------------------------------
// Saturation line (region 4)

constexpr std::array<double, 10> n4 = {
    0.11670521452767e4,  -0.72421316703206e6, -0.17073846940092e2,
    0.12020824702470e5,  -0.32325550322333e7, 0.14915108613530e2,
    -0.48232657361591e4, 0.40511340542057e6,  -0.23855557567849,
    0.65017534844798e3,
};

double saturation_pressure(double T) {
  const double theta = T + n4[8] / (T - n4[9]);
  const double a = theta * theta + n4[0] * theta + n4[1];
  const double b = n4[2] * theta * theta + n4[3] * theta + n4[4];
  const double c = n4[5] * theta * theta + n4[6] * theta + n4[7];
  const double q = 2.0 * c / (-b + std::sqrt(b * b - 4.0 * a * c));
  return 1.0e6 * q * q * q * q;
}

double saturation_temperature(double p) {
  const double beta = std::pow(p / 1.0e6, 0.25);
  const double e = beta * beta + n4[2] * beta + n4[5];
  const double f = n4[0] * beta * beta + n4[3] * beta + n4[6];
  const double g = n4[1] * beta * beta + n4[4] * beta + n4[7];
  const double d = 2.0 * g / (-f - std::sqrt(f * f - 4.0 * e * g));
  const double t = n4[9] + d;
  return 0.5 * (t - std::sqrt(t * t - 4.0 * (n4[8] + n4[9] * d)));
}

// ---------------------------------------------------------------------------
// Region 1: compressed liquid. Dimensionless Gibbs energy gamma(pi, tau),
// p* = 16.53 MPa, T* = 1386 K.

struct GibbsTerm {
  int I;
  int J;
  double n;
};

constexpr std::array<GibbsTerm, 34> r1 = {{
    {0, -2, 0.14632971213167},      {0, -1, -0.84548187169114},
    {0, 0, -0.37563603672040e1},    {0, 1, 0.33855169168385e1},
    {0, 2, -0.95791963387872},      {0, 3, 0.15772038513228},
    {0, 4, -0.16616417199501e-1},   {0, 5, 0.81214629983568e-3},
    {1, -9, 0.28319080123804e-3},   {1, -7, -0.60706301565874e-3},
    {1, -1, -0.18990068218419e-1},  {1, 0, -0.32529748770505e-1},
    {1, 1, -0.21841717175414e-1},   {1, 3, -0.52838357969930e-4},
    {2, -3, -0.47184321073267e-3},  {2, 0, -0.30001780793026e-3},
    {2, 1, 0.47661393906987e-4},    {2, 3, -0.44141845330846e-5},
    {2, 17, -0.72694996297594e-15}, {3, -4, -0.31679644845054e-4},
    {3, 0, -0.28270797985312e-5},   {3, 6, -0.85205128120103e-9},
    {4, -5, -0.22425281908000e-5},  {4, -2, -0.65171222895601e-6},
    {4, 10, -0.14341729937924e-12}, {5, -8, -0.40516996860117e-6},
    {8, -11, -0.12734301741641e-8}, {8, -6, -0.17424871230634e-9},
    {21, -29, -0.68762131295531e-18}, {23, -31, 0.14478307828521e-19},
    {29, -38, 0.26335781662795e-22},  {30, -39, -0.11947622640071e-22},
    {31, -40, 0.18228094581404e-23},  {32, -41, -0.93537087292458e-25},
}};

struct Region1Eval {
  double gamma = 0.0;
  double gamma_pi = 0.0;
  double gamma_tau = 0.0;
};

Region1Eval region1_eval(double p, double T) {
  const double pi = p / 16.53e6;
  const double tau = 1386.0 / T;
  const double a = 7.1 - pi;
  const double b = tau - 1.222;
  Region1Eval out;
  for (const auto& t : r1) {
    const double pa = std::pow(a, t.I);
    const double pb = std::pow(b, t.J);
    out.gamma += t.n * pa * pb;
    out.gamma_pi -= t.n * t.I * std::pow(a, t.I - 1) * pb;
    out.gamma_tau += t.n * pa * t.J * std::pow(b, t.J - 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Region 2: superheated vapor. gamma = ideal part + residual part,
// p* = 1 MPa, T* = 540 K.

constexpr std::array<GibbsTerm, 9> r2o = {{
    {0, 0, -0.96927686500217e1},  {0, 1, 0.10086655968018e2},
    {0, -5, -0.56087911283020e-2}, {0, -4, 0.71452738081455e-1},
    {0, -3, -0.40710498223928},   {0, -2, 0.14240819171444e1},
    {0, -1, -0.43839511319450e1}, {0, 2, -0.28408632460772},
    {0, 3, 0.21268463753307e-1},
}};

constexpr std::array<GibbsTerm, 43> r2r = {{
    {1, 0, -0.17731742473213e-2},   {1, 1, -0.17834862292358e-1},
    {1, 2, -0.45996013696365e-1},   {1, 3, -0.57581259083432e-1},
    {1, 6, -0.50325278727930e-1},   {2, 1, -0.33032641670203e-4},
    {2, 2, -0.18948987516315e-3},   {2, 4, -0.39392777243355e-2},
    {2, 7, -0.43797295650573e-1},   {2, 36, -0.26674547914087e-4},
    {3, 0, 0.20481737692309e-7},    {3, 1, 0.43870667284435e-6},
    {3, 3, -0.32277677238570e-4},   {3, 6, -0.15033924542148e-2},
    {3, 35, -0.40668253562649e-1},  {4, 1, -0.78847309559367e-9},
    {4, 2, 0.12790717852285e-7},    {4, 3, 0.48225372718507e-6},
    {5, 7, 0.22922076337661e-5},    {6, 3, -0.16714766451061e-10},
    {6, 16, -0.21171472321355e-2},  {6, 35, -0.23895741934104e2},
    {7, 0, -0.59059564324270e-17},  {7, 11, -0.12621808899101e-5},
    {7, 25, -0.38946842435739e-1},  {8, 8, 0.11256211360459e-10},
    {8, 36, -0.82311340897998e1},   {9, 13, 0.19809712802088e-7},
    {10, 4, 0.10406965210174e-18},  {10, 10, -0.10234747095929e-12},
    {10, 14, -0.10018179379511e-8}, {16, 29, -0.80882908646985e-10},
    {16, 50, 0.10693031879409},     {18, 57, -0.33662250574171},
    {20, 20, 0.89185845355421e-24}, {20, 35, 0.30629316876232e-12},
    {20, 48, -0.42002467698208e-5}, {21, 21, -0.59056029685639e-25},
    {22, 53, 0.37826947613457e-5},  {23, 39, -0.12768608934681e-14},
    {24, 26, 0.73087610595061e-28}, {24, 40, 0.55414715350778e-16},
    {24, 58, -0.94369707241210e-6},
}};

struct Region2Eval {
  double gamma = 0.0;
  double gamma_pi = 0.0;
  double gamma_tau = 0.0;
};

Region2Eval region2_eval(double p, double T) {
  const double pi = p / 1.0e6;
  const double tau = 540.0 / T;
  Region2Eval out;
  out.gamma = std::log(pi);
  out.gamma_pi = 1.0 / pi;
  for (const auto& t : r2o) {
    out.gamma += t.n * std::pow(tau, t.J);
    out.gamma_tau += t.n * t.J * std::pow(tau, t.J - 1);
  }
  const double b = tau - 0.5;
  for (const auto& t : r2r) {
    const double pp = std::pow(pi, t.I);
    const double pb = std::pow(b, t.J);
    out.gamma += t.n * pp * pb;
    out.gamma_pi += t.n * t.I * std::pow(pi, t.I - 1) * pb;
    out.gamma_tau += t.n * pp * t.J * std::pow(b, t.J - 1);
  }
  return out;
}

ThermoState liquid_state(double p, double T) {
  const auto g = region1_eval(p, T);
  const double tau = 1386.0 / T;
  const double pi = p / 16.53e6;
  ThermoState st;
  st.p = p;
  st.T = T;
  st.h = kGasConstant * T * tau * g.gamma_tau;
  st.s = kGasConstant * (tau * g.gamma_tau - g.gamma);
  st.v = pi * g.gamma_pi * kGasConstant * T / p;
  st.phase = Phase::CompressedLiquid;
  return st;
}

ThermoState vapor_state(double p, double T) {
  const auto g = region2_eval(p, T);
  const double tau = 540.0 / T;
  const double pi = p / 1.0e6;
  ThermoState st;
  st.p = p;
  st.T = T;
  st.h = kGasConstant * T * tau * g.gamma_tau;
  st.s = kGasConstant * (tau * g.gamma_tau - g.gamma);
  st.v = pi * g.gamma_pi * kGasConstant * T / p;
  st.phase = Phase::SuperheatedVapor;
  return st;
}

void check_pressure_range(double p, const char* op) {
  if (!(p >= kTripleP) || !(p <= kCriticalP)) {
    throw DomainError(std::string(op) + ": pressure " + std::to_string(p) +
                      " Pa outside saturation range [611.657 Pa, 22.064 MPa]");
  }
}

// Bisection with secant acceleration on T such that s_of_T(T) = target.
// Budget 200 iterations, convergence 1e-9 relative in s.
double solve_temperature(const std::function<double(double)>& s_of_T,
                         double t_lo, double t_hi, double target,
                         const char* label) {
  double f_lo = s_of_T(t_lo) - target;
  double f_hi = s_of_T(t_hi) - target;
  const double tol = 1e-9 * std::abs(target);
  if (std::abs(f_lo) <= tol) return t_lo;
  if (std::abs(f_hi) <= tol) return t_hi;
  if (f_lo * f_hi > 0.0) {
    throw DomainError(std::string(label) +
                      ": target entropy unreachable at this pressure");
  }
  double t_mid = 0.5 * (t_lo + t_hi);
  for (int it = 0; it < 200; ++it) {
    // Secant step when it lands inside the bracket, bisection otherwise.
    double t_sec = t_lo - f_lo * (t_hi - t_lo) / (f_hi - f_lo);
    if (!(t_sec > t_lo) || !(t_sec < t_hi)) {
      t_sec = 0.5 * (t_lo + t_hi);
    }
    t_mid = t_sec;
    const double f_mid = s_of_T(t_mid) - target;
    if (std::abs(f_mid) <= tol) return t_mid;
    if (f_lo * f_mid < 0.0) {
      t_hi = t_mid;
      f_hi = f_mid;
    } else {
      t_lo = t_mid;
      f_lo = f_mid;
    }
    if (t_hi - t_lo < 1e-13 * t_hi) break;
  }
  const double resid = std::abs(s_of_T(t_mid) - target);
  if (resid <= tol) return t_mid;
  throw NumericError(std::string(label) +
                     ": entropy inversion did not converge within 200 "
                     "iterations (residual " + std::to_string(resid) + ")");
}

}  // namespace

const char* phase_name(Phase phase) {
  switch (phase) {
    case Phase::CompressedLiquid: return "compressed-liquid";
    case Phase::SuperheatedVapor: return "superheated-vapor";
    case Phase::TwoPhase: return "two-phase";
    case Phase::SaturatedLiquid: return "saturated-liquid";
    case Phase::SaturatedVapor: return "saturated-vapor";
  }
  return "unknown";
}

double psat(double T) {
  if (!(T >= kTripleT) || !(T <= kCriticalT)) {
    throw DomainError("psat: temperature " + std::to_string(T) +
                      " K outside saturation range [273.16 K, 647.096 K]");
  }
  return saturation_pressure(T);
}

double tsat(double p) {
  check_pressure_range(p, "tsat");
  return saturation_temperature(p);
}

ThermoState props_pt(double p, double T) {
  if (!(p > 0.0) || !(p <= kMaxP)) {
    throw DomainError("props_pt: pressure " + std::to_string(p) +
                      " Pa outside envelope (0, 10 MPa]");
  }
  if (!(T >= kTripleT) || !(T <= kMaxT)) {
    throw DomainError("props_pt: temperature " + std::to_string(T) +
                      " K outside envelope [273.16 K, 1073.15 K]");
  }
  if (p >= kTripleP) {
    const double ts = saturation_temperature(p);
    if (T == ts) {
      throw DomainError(
          "props_pt: T equals tsat(p), phase is ambiguous; use state_px");
    }
    if (T < ts) return liquid_state(p, T);
  }
  return vapor_state(p, T);
}

SaturationPoint sat_props(double p) {
  check_pressure_range(p, "sat_props");
  if (!(p < kCriticalP)) {
    throw DomainError("sat_props: pressure at/above the critical point");
  }
  const double ts = saturation_temperature(p);
  const ThermoState liq = liquid_state(p, ts);
  const ThermoState vap = vapor_state(p, ts);
  SaturationPoint sp;
  sp.p_sat = p;
  sp.T_sat = ts;
  sp.hf = liq.h;
  sp.hg = vap.h;
  sp.sf = liq.s;
  sp.sg = vap.s;
  return sp;
}

ThermoState state_px(double p, double x) {
  if (!(x >= 0.0) || !(x <= 1.0)) {
    throw DomainError("state_px: quality " + std::to_string(x) +
                      " outside [0, 1]");
  }
  const SaturationPoint sp = sat_props(p);
  ThermoState st;
  st.p = p;
  st.T = sp.T_sat;
  st.h = sp.hf + x * (sp.hg - sp.hf);
  st.s = sp.sf + x * (sp.sg - sp.sf);
  const ThermoState liq = liquid_state(p, sp.T_sat);
  const ThermoState vap = vapor_state(p, sp.T_sat);
  st.v = liq.v + x * (vap.v - liq.v);
  st.x = x;
  st.phase = x == 0.0   ? Phase::SaturatedLiquid
             : x == 1.0 ? Phase::SaturatedVapor
                        : Phase::TwoPhase;
  return st;
}

ThermoState state_ps(double p, double s) {
  const SaturationPoint sp = sat_props(p);
  if (s >= sp.sf && s <= sp.sg) {
    return state_px(p, (s - sp.sf) / (sp.sg - sp.sf));
  }
  constexpr double kEps = 1e-6;  // K, keeps the bracket off the dome
  if (s > sp.sg) {
    const double T = solve_temperature(
        [p](double t) { return vapor_state(p, t).s; }, sp.T_sat + kEps, kMaxT,
        s, "state_ps[superheated]");
    return vapor_state(p, T);
  }
  const double T = solve_temperature(
      [p](double t) { return liquid_state(p, t).s; }, kTripleT,
      sp.T_sat - kEps, s, "state_ps[liquid]");
  return liquid_state(p, T);
}

double extended_quality(double p, double s) {
  const SaturationPoint sp = sat_props(p);
  return (s - sp.sf) / (sp.sg - sp.sf);
}

}  // namespace rankine::steam
