#include "radharm/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "radharm/errors.hpp"

namespace radharm::numeric {

Interval::Interval(double lo, double hi, bool open_lo, bool open_hi)
    : lo_(lo), hi_(hi), open_lo_(open_lo), open_hi_(open_hi) {
  if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) {
    std::ostringstream msg;
    msg << "interval requires lo < hi, got [" << lo << ", " << hi << "]";
    throw DomainViolation(msg.str());
  }
}

bool Interval::finite() const noexcept {
  return std::isfinite(lo_) && std::isfinite(hi_);
}

bool Interval::contains(double x) const noexcept {
  const bool above = open_lo_ ? x > lo_ : x >= lo_;
  const bool below = open_hi_ ? x < hi_ : x <= hi_;
  return above && below;
}

namespace {

// Kronrod 15-point abscissae; odd indices are the 7-point Gauss abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a;
  double b;
  double value;
  double error;      // max(truncation, rounding floor)
  double floor;      // 50 eps * integral of |f| over the panel
  bool refinable() const { return error > floor; }
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    return x.error < y.error;
  }
};

class Integrator {
 public:
  Integrator(const RealFunction& f, const Interval& iv) : f_(f), iv_(iv) {}

  long evaluations() const { return evaluations_; }

  // Returns false if a node would touch an open end or leave the interval.
  bool nodes_admissible(double a, double b) const {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    if (!(a < center && center < b)) return false;
    for (double x : kXgk) {
      if (!iv_.contains(center - half * x) || !iv_.contains(center + half * x))
        return false;
    }
    return true;
  }

  Panel evaluate(double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<double, 15> fv{};
    fv[7] = call(center);
    for (int j = 0; j < 7; ++j) {
      fv[j] = call(center - half * kXgk[j]);
      fv[14 - j] = call(center + half * kXgk[j]);
    }
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
      const double pair = fv[j] + fv[14 - j];
      resk += kWgk[j] * pair;
      resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
      if (j % 2 == 1) resg += kWg[j / 2] * pair;
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fv[7] - mean);
    for (int j = 0; j < 7; ++j)
      resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));

    const double value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
      err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double floor = 50.0 * kEps * resabs;
    return Panel{a, b, value, std::max(err, floor), floor};
  }

 private:
  double call(double x) {
    ++evaluations_;
    const double y = f_(x);
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg << "integrand is not finite at x=" << x
          << " (non-integrable singularity?)";
      throw NonConvergence(msg.str(), std::nan(""),
                           std::numeric_limits<double>::infinity(),
                           evaluations_);
    }
    return y;
  }

  const RealFunction& f_;
  const Interval& iv_;
  long evaluations_ = 0;
};

}  // namespace

QuadratureResult integrate(const RealFunction& f, const Interval& iv,
                           const QuadratureOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("integrate: tol must be > 0");
  if (!iv.finite()) throw DomainViolation("integrate: interval must be finite");
  const int budget = std::max(options.max_panels, kMinPanelBudget);

  Integrator integrator(f, iv);
  if (!integrator.nodes_admissible(iv.lo(), iv.hi()))
    throw DomainViolation("integrate: interval too short to place nodes");

  std::priority_queue<Panel, std::vector<Panel>, ByError> active;
  std::vector<Panel> settled;
  active.push(integrator.evaluate(iv.lo(), iv.hi()));
  int panels = 1;

  auto totals = [&] {
    double value = 0.0, error = 0.0;
    auto copy = active;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    for (const Panel& p : settled) {
      value += p.value;
      error += p.error;
    }
    return std::pair{value, error};
  };

  double value = active.top().value;
  double error = active.top().error;
  for (;;) {
    if (error <= options.tol) break;
    // Drop panels whose error is pure rounding; bisecting them cannot help.
    while (!active.empty() && !active.top().refinable()) {
      settled.push_back(active.top());
      active.pop();
    }
    if (active.empty()) break;

    const Panel worst = active.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (panels >= budget || !integrator.nodes_admissible(worst.a, mid) ||
        !integrator.nodes_admissible(mid, worst.b)) {
      std::ostringstream msg;
      msg << "quadrature did not converge on [" << iv.lo() << ", " << iv.hi()
          << "]: error estimate " << error << " > tol " << options.tol
          << " after " << panels << " panels";
      if (panels < budget)
        msg << " (panel [" << worst.a << ", " << worst.b
            << "] cannot be refined further)";
      throw NonConvergence(msg.str(), value, error, integrator.evaluations());
    }
    active.pop();
    const Panel left = integrator.evaluate(worst.a, mid);
    const Panel right = integrator.evaluate(mid, worst.b);
    active.push(left);
    active.push(right);
    ++panels;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    if (panels % 64 == 0) std::tie(value, error) = totals();
  }

  std::tie(value, error) = totals();
  return QuadratureResult{value, error, integrator.evaluations(), panels};
}

double difference_step(double r, DerivativeOrder order, double step_hint) {
  const double scale = std::max(1.0, std::abs(r));
  const double base = order == DerivativeOrder::First
                          ? std::cbrt(kEps) * scale
                          : std::sqrt(std::sqrt(kEps)) * scale;
  double h = std::max(step_hint, base);
  // Make r + h exactly representable so the stencil is symmetric.
  volatile double shifted = r + h;
  h = shifted - r;
  return h;
}

double derivative(const RealFunction& f, double r, DerivativeOrder order,
                  double step_hint, const Interval& domain) {
  if (order != DerivativeOrder::First && order != DerivativeOrder::Second)
    throw std::invalid_argument("derivative: order must be 1 or 2");
  const double h = difference_step(r, order, step_hint);
  if (!domain.contains(r - 2.0 * h) || !domain.contains(r + 2.0 * h)) {
    std::ostringstream msg;
    msg << "difference stencil [" << r - 2.0 * h << ", " << r + 2.0 * h
        << "] leaves the domain (" << domain.lo() << ", " << domain.hi() << ")";
    throw DomainViolation(msg.str());
  }
  if (order == DerivativeOrder::First) return (f(r + h) - f(r - h)) / (2.0 * h);
  return (f(r + h) - 2.0 * f(r) + f(r - h)) / (h * h);
}

double second_derivative_extrapolated(const RealFunction& f, double r,
                                      const Interval& domain) {
  const double h = difference_step(r, DerivativeOrder::Second, 0.0);
  const double fine = derivative(f, r, DerivativeOrder::Second, h, domain);
  const double coarse = derivative(f, r, DerivativeOrder::Second, 2.0 * h, domain);
  return (4.0 * fine - coarse) / 3.0;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("linspace: n must be >= 1");
  if (n == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + i * step;
  out.back() = hi;
  return out;
}

}  // namespace radharm::numeric
