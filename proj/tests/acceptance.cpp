// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] is the path to the CLI binary (used by the CLI-contract
// criterion).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "rankine/cycle.hpp"
#include "rankine/regression.hpp"
#include "rankine/report.hpp"
#include "rankine/steam.hpp"
#include "rankine/sweep.hpp"

using namespace rankine;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string description;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& detail) {
    if (!ok) failures.push_back(detail);
  }
  void within(const std::string& name, double expected, double computed,
              double tol) {
    if (!(std::abs(computed - expected) <= tol)) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%s: expected %.9g +/- %.3g, got %.9g",
                    name.c_str(), expected, tol, computed);
      failures.push_back(buf);
    }
  }
  ~Criterion() {
    if (failures.empty()) {
      std::printf("PASS criterion %d: %s\n", id, description.c_str());
    } else {
      std::printf("FAIL criterion %d: %s\n", id, description.c_str());
      for (const auto& f : failures) std::printf("       %s\n", f.c_str());
      ++g_failures;
    }
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const cycle::CycleSpec kBase{};

std::vector<sweep::SweepRow> base_rows() {
  return sweep::run_sweep(kBase, sweep::geometric_sequence(781.25, 2.0, 9));
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion1() {
  Criterion c{1, "base-case golden cycle metrics"};
  const auto r = cycle::solve_cycle(kBase);
  c.within("eta_cyc [%]", 38.597, 100.0 * r.eta_cyc, 0.05);
  c.within("w_p [kJ/kg]", 5.043, r.w_p / 1e3, 0.05);
  c.within("w_t [kJ/kg]", 1336.989, r.w_t / 1e3, 2.0);
  c.within("w_net [kJ/kg]", 1331.946, r.w_net / 1e3, 2.0);
  c.within("q_b [kJ/kg]", 3450.927, r.q_b / 1e3, 3.0);
  c.within("q_c [kJ/kg]", 2118.981, r.q_c / 1e3, 3.0);
}

void criterion2() {
  Criterion c{2, "base-case state benchmarks"};
  const auto r = cycle::solve_cycle(kBase);
  c.within("T_1 [C]", 50.28, r.state1.T - 273.15, 0.1);
  c.within("h_1 [kJ/kg]", 210.5, r.state1.h / 1e3, 0.7);
  c.within("h_2 [kJ/kg]", 215.56, r.state2.h / 1e3, 0.7);
  c.within("h_3 [kJ/kg]", 3666.5, r.state3.h / 1e3, 1.5);
  c.within("s_3 [kJ/kg/K]", 7.2589, r.state3.s / 1e3, 0.002);
  c.within("h_4 [kJ/kg]", 2329.5, r.state4.h / 1e3, 1.5);
  c.within("x_4 [%]", 88.96, 100.0 * r.state4.x, 0.10);
}

void criterion3() {
  Criterion c{3, "sweep endpoints"};
  const auto rows = base_rows();
  c.within("chi4(0.78125 kPa) [%]", 79.95, 100.0 * rows.front().chi4, 0.3);
  c.within("chi4(100 kPa) [%]", 98.34, 100.0 * rows[7].chi4, 0.3);
}

void criterion4() {
  Criterion c{4, "saturated-exit crossover pressure"};
  const double p = sweep::find_saturated_exit_pressure(kBase, 100e3, 200e3);
  c.within("crossover [kPa]", 134.945, p / 1e3, 1.5);
  const double s3 = steam::props_pt(kBase.p_boiler, kBase.T_max).s;
  c.within("chi at crossover", 1.0, steam::extended_quality(p, s3), 1e-4);
}

void criterion5() {
  Criterion c{5, "regression reproduction on the nine-point sweep"};
  const auto rows = base_rows();
  const auto qb = report::fit_metric(rows, report::Metric::QBoiler, "log")
                      .entries[0].model;
  c.within("q_b fit a", -0.087356, qb.a, 0.02 * 0.087356);
  c.within("q_b fit b", 3.651362, qb.b, 0.01 * 3.651362);
  const auto wn = report::fit_metric(rows, report::Metric::WNet, "log")
                      .entries[0].model;
  c.within("w_net fit a", -0.13474, wn.a, 0.02 * 0.13474);
  c.within("w_net fit b", 1.64988, wn.b, 0.01 * 1.64988);
  const auto ec = report::fit_metric(rows, report::Metric::EtaCyc, "log")
                      .entries[0].model;
  c.within("eta_cyc fit a", -0.029895, ec.a, 0.02 * 0.029895);
  c.within("eta_cyc fit b", 0.454749, ec.b, 0.01 * 0.454749);
  const auto chi = report::fit_metric(rows, report::Metric::Chi4, "auto");
  const auto& chi_log = chi.entries[0].model;
  const auto& chi_pow = chi.entries[1].model;
  c.within("chi4 power a", 0.802021, chi_pow.a, 0.01 * 0.802021);
  c.within("chi4 power b", 0.043447, chi_pow.b, 0.02 * 0.043447);
  c.within("chi4 power R2", 0.995394, chi_pow.r2_transformed, 0.003);
  c.within("chi4 log R2", 0.990295, chi_log.r2_transformed, 0.003);
}

void criterion6() {
  Criterion c{6, "practical condenser-pressure limit psat(30 C)"};
  c.within("psat(303.15 K) [kPa]", 4.24, steam::psat(303.15) / 1e3, 0.02);
}

void criterion7() {
  Criterion c{7, "property formulation verification tables to 1e-6 relative"};
  struct PT { double p, T, v, h, s; };
  const PT liquid[] = {
      {3e6, 300.0, 0.100215168e-2, 0.115331273e6, 0.392294792e3},
      {3e6, 500.0, 0.120241800e-2, 0.975542239e6, 0.258041912e4},
  };
  const PT vapor[] = {
      {3500.0, 300.0, 0.394913866e2, 0.254991145e7, 0.852238967e4},
      {3500.0, 700.0, 0.923015898e2, 0.333568375e7, 0.101749996e5},
  };
  for (const auto& t : liquid) {
    const auto st = steam::props_pt(t.p, t.T);
    c.require(rel(st.v, t.v) < 1e-6 && rel(st.h, t.h) < 1e-6 &&
                  rel(st.s, t.s) < 1e-6,
              "liquid point (" + std::to_string(t.p) + ", " +
                  std::to_string(t.T) + ")");
  }
  for (const auto& t : vapor) {
    const auto st = steam::props_pt(t.p, t.T);
    c.require(rel(st.v, t.v) < 1e-6 && rel(st.h, t.h) < 1e-6 &&
                  rel(st.s, t.s) < 1e-6,
              "vapor point (" + std::to_string(t.p) + ", " +
                  std::to_string(t.T) + ")");
  }
  c.require(rel(steam::psat(300.0), 0.353658941e4) < 1e-6, "psat(300)");
  c.require(rel(steam::psat(500.0), 0.263889776e7) < 1e-6, "psat(500)");
  c.require(rel(steam::psat(600.0), 0.123443146e8) < 1e-6, "psat(600)");
  c.require(rel(steam::tsat(0.1e6), 0.372755919e3) < 1e-6, "tsat(0.1 MPa)");
  c.require(rel(steam::tsat(1e6), 0.453035632e3) < 1e-6, "tsat(1 MPa)");
  c.require(rel(steam::tsat(10e6), 0.584149488e3) < 1e-6, "tsat(10 MPa)");
}

void criterion8() {
  Criterion c{8, "property invariant suites"};

  // Round trip over 100 random envelope points.
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> up(1e3, 10e6);
  std::uniform_real_distribution<double> ut(274.0, 1073.0);
  int tested = 0;
  while (tested < 100) {
    const double p = up(rng);
    const double T = ut(rng);
    if (p >= steam::kTripleP) {
      const double ts = steam::tsat(p);
      if (std::abs(T - ts) < 0.5) continue;
      if (T < ts && T > 623.0) continue;
    }
    const auto back = steam::state_ps(p, steam::props_pt(p, T).s);
    c.require(rel(back.T, T) < 1e-6,
              "round trip at p=" + std::to_string(p) + " T=" + std::to_string(T));
    ++tested;
  }

  // tsat/psat monotonicity and inverse consistency.
  double prev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double p = 0.7e3 * std::pow(300e3 / 0.7e3, i / 49.0);
    const double t = steam::tsat(p);
    c.require(t > prev, "tsat monotonicity");
    c.require(std::abs(steam::psat(t) - p) / p <= 1e-6, "inverse consistency");
    prev = t;
  }
  prev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double T = 275.0 + (600.0 - 275.0) * i / 49.0;
    const double p = steam::psat(T);
    c.require(p > prev, "psat monotonicity");
    prev = p;
  }

  // First-law closure and Carnot dominance on every sweep point; strict
  // monotonicity of the response curves.
  const auto rows = base_rows();
  for (const auto& row : rows) {
    cycle::CycleSpec spec = kBase;
    spec.p_cond = row.p_cond;
    const auto r = cycle::solve_cycle(spec);
    c.require(std::abs(r.q_b - r.w_net - r.q_c) / r.q_b <= 1e-9,
              "first-law closure at " + std::to_string(row.p_cond));
    c.require(r.eta_cyc < cycle::carnot_bound(spec),
              "Carnot dominance at " + std::to_string(row.p_cond));
  }
  for (size_t i = 1; i < rows.size(); ++i) {
    c.require(rows[i].q_b < rows[i - 1].q_b, "q_b decreasing");
    c.require(rows[i].w_net < rows[i - 1].w_net, "w_net decreasing");
    c.require(rows[i].eta_cyc < rows[i - 1].eta_cyc, "eta_cyc decreasing");
    c.require(rows[i].chi4 > rows[i - 1].chi4, "chi4 increasing");
  }
}

void criterion9() {
  Criterion c{9, "regression property suite"};
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> coef(0.2, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double a = coef(rng);
    const double b = coef(rng) - 1.5;
    std::vector<regression::Point> lp, pp;
    for (int i = 1; i <= 5; ++i) {
      const double x = 1.5 * i;
      lp.emplace_back(x, a * std::log(x) + b);
      pp.emplace_back(x, a * std::pow(x, b));
    }
    const auto ml = regression::fit_log(lp);
    const auto mp = regression::fit_power(pp);
    c.require(std::abs(ml.a - a) <= 1e-10 * std::abs(a) &&
                  std::abs(ml.b - b) <= 1e-10 * std::max(1.0, std::abs(b)),
              "log model recovery");
    c.require(std::abs(mp.a - a) <= 1e-10 * std::abs(a) &&
                  std::abs(mp.b - b) <= 1e-10 * std::max(1.0, std::abs(b)),
              "power model recovery");

    // Shift/scale laws under x -> c*x.
    const double cx = 4.0;
    std::vector<regression::Point> lps, pps;
    for (const auto& [x, y] : lp) lps.emplace_back(cx * x, y);
    for (const auto& [x, y] : pp) pps.emplace_back(cx * x, y);
    const auto mls = regression::fit_log(lps);
    const auto mps = regression::fit_power(pps);
    c.require(std::abs(mls.a - ml.a) <= 1e-9 * std::abs(ml.a), "shift law: a");
    c.require(std::abs(mls.b - (ml.b - ml.a * std::log(cx))) <= 1e-9,
              "shift law: b");
    c.require(std::abs(mps.b - mp.b) <= 1e-9 * std::abs(mp.b), "scale law: b");
    c.require(std::abs(mps.a - mp.a * std::pow(cx, -mp.b)) <=
                  1e-9 * std::abs(mp.a),
              "scale law: a");
  }

  const auto chi = report::fit_metric(base_rows(), report::Metric::Chi4, "auto");
  c.require(chi.entries[1].model.kind == regression::FitKind::Power &&
                chi.entries[1].recommended,
            "chi4 fit-family selection prefers power");
}

void criterion10(const std::string& cli) {
  Criterion c{10, "CLI contract"};
  if (cli.empty()) {
    c.require(false, "no CLI binary path supplied");
    return;
  }
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("rankine_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto run = [&](const std::string& args) {
    return std::system((cli + " " + args + " 2>" + (dir / "err.txt").string())
                           .c_str());
  };

  // validate exits 0 and lists the golden checks.
  const fs::path vout = dir / "validate.txt";
  c.require(run("validate --out " + vout.string()) == 0,
            "validate exit code");
  const std::string vtext = slurp(vout);
  c.require(vtext.find("OVERALL: PASS") != std::string::npos,
            "validate overall line");
  size_t pass_lines = 0;
  for (size_t pos = 0; (pos = vtext.find("PASS", pos)) != std::string::npos;
       ++pos) {
    ++pass_lines;
  }
  c.require(pass_lines >= 10, "validate lists >= 10 checks");

  // sweep twice with identical flags is byte-identical.
  const fs::path s1 = dir / "s1.csv", s2 = dir / "s2.csv";
  c.require(run("sweep --format csv --out " + s1.string()) == 0, "sweep 1");
  c.require(run("sweep --format csv --out " + s2.string()) == 0, "sweep 2");
  c.require(slurp(s1) == slurp(s2) && !slurp(s1).empty(),
            "sweep determinism (byte-identical)");

  // bar/kPa unit equivalence.
  const fs::path a1 = dir / "a1.json", a2 = dir / "a2.json";
  c.require(run("analyze --p-boiler 50bar --format json --out " + a1.string()) == 0,
            "analyze bar");
  c.require(run("analyze --p-boiler 5000kPa --format json --out " + a2.string()) == 0,
            "analyze kPa");
  c.require(slurp(a1) == slurp(a2) && !slurp(a1).empty(),
            "50 bar == 5000 kPa outputs");

  // Invalid spec: nonzero exit, nothing on the data stream.
  const fs::path bad = dir / "bad.txt";
  const int rc = run("analyze --p-cond 50bar --out " + bad.string());
  c.require(rc != 0, "invalid spec rejected");
  c.require(!fs::exists(bad) || slurp(bad).empty(), "no partial data output");

  fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10(cli);
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
