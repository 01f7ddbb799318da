#include "rankine/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "rankine/errors.hpp"

namespace rankine::sweep {
namespace {

SweepRow make_row(double p_cond, double alpha, const cycle::CycleResult& cr) {
  SweepRow row;
  row.p_cond = p_cond;
  row.q_b = cr.q_b * 1e-6;
  row.w_net = cr.w_net * 1e-6;
  // alpha applied after the MJ conversion so that w_elec == alpha * w_net
  // holds bitwise row-wise.
  row.w_elec = alpha * row.w_net;
  row.eta_cyc = cr.eta_cyc;
  row.eta_pp = cr.eta_pp;
  row.chi4 = cr.chi4;
  row.exit_superheated = cr.exit_superheated;
  return row;
}

std::vector<double> sorted_unique(std::vector<double> pressures) {
  std::sort(pressures.begin(), pressures.end());
  const auto dup = std::adjacent_find(pressures.begin(), pressures.end());
  if (dup != pressures.end()) {
    throw DomainError("run_sweep: duplicate condenser pressure " +
                      std::to_string(*dup) + " Pa");
  }
  return pressures;
}

[[noreturn]] void rethrow_with_pressure(double p, const std::string& what,
                                        bool numeric) {
  const std::string msg =
      "sweep point p_cond=" + std::to_string(p) + " Pa: " + what;
  if (numeric) throw NumericError(msg);
  throw DomainError(msg);
}

}  // namespace

std::vector<double> geometric_sequence(double start, double ratio, int count) {
  if (!(start > 0.0)) throw DomainError("geometric_sequence: start must be > 0");
  if (!(ratio > 0.0)) throw DomainError("geometric_sequence: ratio must be > 0");
  if (count < 1) throw DomainError("geometric_sequence: count must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = start * std::pow(ratio, i);
  }
  return out;
}

std::vector<SweepRow> run_sweep_serial(const cycle::CycleSpec& base,
                                       std::vector<double> pressures) {
  pressures = sorted_unique(std::move(pressures));
  std::vector<SweepRow> rows(pressures.size());
  for (std::size_t i = 0; i < pressures.size(); ++i) {
    cycle::CycleSpec spec = base;
    spec.p_cond = pressures[i];
    try {
      rows[i] = make_row(pressures[i], base.alpha, cycle::solve_cycle(spec));
    } catch (const NumericError& e) {
      rethrow_with_pressure(pressures[i], e.what(), true);
    } catch (const DomainError& e) {
      rethrow_with_pressure(pressures[i], e.what(), false);
    }
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const cycle::CycleSpec& base,
                                std::vector<double> pressures) {
  pressures = sorted_unique(std::move(pressures));
  const auto n = static_cast<std::ptrdiff_t>(pressures.size());
  std::vector<SweepRow> rows(pressures.size());

  // Exceptions must not cross the parallel region; remember the first failing
  // (lowest-pressure) point and rethrow after the loop.
  std::ptrdiff_t fail_index = n;
  std::string fail_what;
  bool fail_numeric = false;

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    cycle::CycleSpec spec = base;
    spec.p_cond = pressures[idx];
    try {
      rows[idx] = make_row(pressures[idx], base.alpha, cycle::solve_cycle(spec));
    } catch (const std::exception& e) {
#pragma omp critical(rankine_sweep_fail)
      if (i < fail_index) {
        fail_index = i;
        fail_what = e.what();
        fail_numeric = dynamic_cast<const NumericError*>(&e) != nullptr;
      }
    }
  }
  if (fail_index < n) {
    rethrow_with_pressure(pressures[static_cast<std::size_t>(fail_index)],
                          fail_what, fail_numeric);
  }
  return rows;
}

double find_saturated_exit_pressure(const cycle::CycleSpec& base,
                                    double p_lo, double p_hi) {
  cycle::CycleSpec probe = base;
  probe.p_cond = p_lo;
  cycle::validate_spec(probe);
  probe.p_cond = p_hi;
  cycle::validate_spec(probe);
  if (!(p_lo < p_hi)) {
    throw DomainError("find_saturated_exit_pressure: bracket must be ordered");
  }

  const double s3 = steam::props_pt(base.p_boiler, base.T_max).s;
  auto f = [&](double p) { return steam::extended_quality(p, s3) - 1.0; };

  double f_lo = f(p_lo);
  double f_hi = f(p_hi);
  if (!(f_lo < 0.0) || !(f_hi > 0.0)) {
    throw DomainError(
        "find_saturated_exit_pressure: bracket does not straddle chi = 1 "
        "(need chi < 1 at the low end and chi > 1 at the high end)");
  }
  for (int it = 0; it < 200; ++it) {
    const double p_mid = 0.5 * (p_lo + p_hi);
    if (p_hi - p_lo <= 1.0) return p_mid;
    const double f_mid = f(p_mid);
    if (f_mid == 0.0) return p_mid;
    if (f_mid < 0.0) {
      p_lo = p_mid;
      f_lo = f_mid;
    } else {
      p_hi = p_mid;
      f_hi = f_mid;
    }
  }
  throw NumericError(
      "find_saturated_exit_pressure: bisection did not reach 1 Pa within 200 "
      "iterations");
}

}  // namespace rankine::sweep
