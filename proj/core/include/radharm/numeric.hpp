#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace radharm::numeric {

using RealFunction = std::function<double(double)>;

inline constexpr double kDefaultTolerance = 1e-10;

/// Minimum number of panels adaptive quadrature may create before it is
/// allowed to report NonConvergence on budget grounds.
inline constexpr int kMinPanelBudget = 1000;
inline constexpr int kDefaultPanelBudget = 2000;

/// A real interval whose ends may individually be open. Open ends are never
/// evaluated by anything in this library.
class Interval {
 public:
  Interval(double lo, double hi, bool open_lo, bool open_hi);

  static Interval open(double lo, double hi) { return {lo, hi, true, true}; }
  static Interval closed(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval real_line() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {-inf, inf, true, true};
  }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  bool open_lo() const noexcept { return open_lo_; }
  bool open_hi() const noexcept { return open_hi_; }
  bool finite() const noexcept;
  double length() const noexcept { return hi_ - lo_; }

  bool contains(double x) const noexcept;

 private:
  double lo_;
  double hi_;
  bool open_lo_;
  bool open_hi_;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, >= 0
  long evaluations = 0;
  int panels = 0;
};

struct QuadratureOptions {
  double tol = kDefaultTolerance;
  int max_panels = kDefaultPanelBudget;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature over a finite
/// interval. The panel with the largest error is bisected until the summed
/// error estimate is below `tol`, or until every remaining panel error sits at
/// its rounding floor (in which case error_estimate may exceed tol).
///
/// Throws NonConvergence if the budget runs out, if a panel next to an open
/// end can no longer be bisected without a node landing on that end, or if
/// `f` returns a non-finite value. Throws DomainViolation for infinite bounds
/// and std::invalid_argument for tol <= 0.
QuadratureResult integrate(const RealFunction& f, const Interval& iv,
                           const QuadratureOptions& options = {});

inline QuadratureResult integrate(const RealFunction& f, const Interval& iv,
                                  double tol) {
  return integrate(f, iv, QuadratureOptions{tol, kDefaultPanelBudget});
}

enum class DerivativeOrder { First = 1, Second = 2 };

/// Step actually used by `derivative` for the given point and hint.
double difference_step(double r, DerivativeOrder order, double step_hint);

/// Central difference estimate of f' or f'' at r with O(h^2) error.
/// h = max(step_hint, eps^(1/3) max(1,|r|)) for first derivatives and
/// eps^(1/4) scaling for second derivatives. The whole [r-2h, r+2h] window
/// must lie inside `domain`, otherwise DomainViolation.
double derivative(const RealFunction& f, double r, DerivativeOrder order,
                  double step_hint = 0.0,
                  const Interval& domain = Interval::real_line());

/// Richardson-extrapolated second derivative built from two calls to
/// `derivative` with steps h and 2h; error O(h^4).
double second_derivative_extrapolated(const RealFunction& f, double r,
                                      const Interval& domain);

/// n evenly spaced points from lo to hi inclusive (n >= 2), or {lo} for n == 1.
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace radharm::numeric
