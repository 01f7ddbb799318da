#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace rankine::regression {

enum class FitKind { Log, Power };

// Trendline fit: y = a*ln(x) + b (log) or y = a*x^b (power).
struct FitModel {
  FitKind kind = FitKind::Log;
  double a = 0.0;
  double b = 0.0;
  // R^2 in the linearized space the fit was solved in (the spreadsheet
  // trendline convention) and in the original (x, y) space. Identical for
  // the log family.
  double r2_transformed = 0.0;
  double r2_original = 0.0;
};

using Point = std::pair<double, double>;

// OLS of y against ln(x). Requires >= 2 distinct x, all x > 0.
FitModel fit_log(const std::vector<Point>& points);

// OLS of ln(y) against ln(x); a = exp(intercept), b = slope.
// Requires >= 2 distinct x, all x > 0 and y > 0.
FitModel fit_power(const std::vector<Point>& points);

// 1 - SS_res/SS_tot with SS_tot about the mean of y. Throws when the y
// variance is zero.
double r_squared(const std::vector<Point>& points,
                 const std::function<double(double)>& predictor);

double predict(const FitModel& model, double x);

}  // namespace rankine::regression
