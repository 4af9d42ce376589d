#pragma once

#include <functional>
#include <vector>

namespace levyavg {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;    // estimated absolute error
  bool converged = false;
  long evaluations = 0;

  QuadResult& operator+=(const QuadResult& o) {
    value += o.value;
    error += o.error;
    converged = converged && o.converged;
    evaluations += o.evaluations;
    return *this;
  }
};

/// Adaptive Gauss-Kronrod (G7/K15) on [a, b].  Splits the interval with the
/// largest error estimate until both tolerances are met or the interval
/// budget is exhausted; `converged` reports which happened.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-10, double rel_tol = 1e-10,
                     int max_intervals = 4000);

/// Same, but with caller-supplied initial breakpoints (useful when the
/// integrand has known structure: singular endpoints, oscillation scales).
QuadResult integrate_segments(const std::function<double(double)>& f,
                              const std::vector<double>& breakpoints,
                              double abs_tol = 1e-10, double rel_tol = 1e-10,
                              int max_intervals = 4000);

/// Bisection/secant hybrid root finder on a bracket [lo, hi].
/// Requires f(lo) and f(hi) of opposite sign.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double x_tol = 1e-10, int max_iter = 200);

/// Compensated accumulator for order-stable reductions.
class KahanSum {
public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace levyavg
