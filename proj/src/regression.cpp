#include "rankine/regression.hpp"

#include <cmath>
#include <cstddef>

#include "rankine/errors.hpp"

namespace rankine::regression {
namespace {

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
};

// Closed-form OLS of v against u.
Line ols(const std::vector<Point>& uv) {
  const auto n = static_cast<double>(uv.size());
  double su = 0.0, sv = 0.0, suu = 0.0, suv = 0.0;
  for (const auto& [u, v] : uv) {
    su += u;
    sv += v;
    suu += u * u;
    suv += u * v;
  }
  const double denom = n * suu - su * su;
  if (denom == 0.0) {
    throw DomainError("regression: degenerate design (no spread in x)");
  }
  Line line;
  line.slope = (n * suv - su * sv) / denom;
  line.intercept = (sv - line.slope * su) / n;
  return line;
}

void require_design(const std::vector<Point>& points) {
  if (points.size() < 2) {
    throw DomainError("regression: need at least 2 points");
  }
  bool distinct = false;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].first != points[0].first) distinct = true;
  }
  if (!distinct) {
    throw DomainError("regression: degenerate design (all x identical)");
  }
}

}  // namespace

double r_squared(const std::vector<Point>& points,
                 const std::function<double(double)>& predictor) {
  if (points.size() < 2) {
    throw DomainError("r_squared: need at least 2 points");
  }
  double mean = 0.0;
  for (const auto& [x, y] : points) mean += y;
  mean /= static_cast<double>(points.size());
  double ss_tot = 0.0, ss_res = 0.0;
  for (const auto& [x, y] : points) {
    ss_tot += (y - mean) * (y - mean);
    const double r = y - predictor(x);
    ss_res += r * r;
  }
  if (ss_tot == 0.0) {
    throw DomainError("r_squared: zero variance in y, R^2 undefined");
  }
  return 1.0 - ss_res / ss_tot;
}

FitModel fit_log(const std::vector<Point>& points) {
  require_design(points);
  std::vector<Point> uv;
  uv.reserve(points.size());
  for (const auto& [x, y] : points) {
    if (!(x > 0.0)) throw DomainError("fit_log: all x must be > 0");
    uv.emplace_back(std::log(x), y);
  }
  const Line line = ols(uv);
  FitModel m;
  m.kind = FitKind::Log;
  m.a = line.slope;
  m.b = line.intercept;
  m.r2_original = r_squared(
      points, [&](double x) { return m.a * std::log(x) + m.b; });
  m.r2_transformed = m.r2_original;
  return m;
}

FitModel fit_power(const std::vector<Point>& points) {
  require_design(points);
  std::vector<Point> uv;
  uv.reserve(points.size());
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw DomainError("fit_power: all x and y must be > 0");
    }
    uv.emplace_back(std::log(x), std::log(y));
  }
  const Line line = ols(uv);
  FitModel m;
  m.kind = FitKind::Power;
  m.a = std::exp(line.intercept);
  m.b = line.slope;
  m.r2_transformed = r_squared(
      uv, [&](double u) { return line.slope * u + line.intercept; });
  m.r2_original = r_squared(
      points, [&](double x) { return m.a * std::pow(x, m.b); });
  return m;
}

double predict(const FitModel& model, double x) {
  return model.kind == FitKind::Log ? model.a * std::log(x) + model.b
                                    : model.a * std::pow(x, model.b);
}

}  // namespace rankine::regression
