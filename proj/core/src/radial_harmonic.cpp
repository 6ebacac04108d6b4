#include "radharm/radial_harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "radharm/errors.hpp"

namespace radharm {

namespace {

void check_radius(const SpaceModel& model, double r) {
  if (!model.domain().contains(r)) {
    std::ostringstream msg;
    msg << "r=" << r << " outside (0, " << model.domain_end() << ") for "
        << model.id();
    throw DomainViolation(msg.str());
  }
}

ClosedForm require_closed_form(const SpaceModel& model) {
  auto form = find_closed_form(model);
  if (!form)
    throw UnsupportedModel("no closed form for " + model.id() +
                           "; numeric only");
  return *form;
}

double scaled(double diff, double expected) {
  return std::abs(diff) / std::max(1.0, std::abs(expected));
}

}  // namespace

RadialFunction::RadialFunction(SpaceModel model, RadialKind kind,
                               numeric::RealFunction evaluator,
                               std::optional<double> anchor)
    : model_(model), kind_(kind), evaluator_(std::move(evaluator)), anchor_(anchor) {}

RadialFunction RadialFunction::phi1(const SpaceModel& model) {
  return {model, RadialKind::Phi1, [model](double r) { return radharm::phi1(model, r); }};
}

RadialFunction RadialFunction::phi0_closed(const SpaceModel& model) {
  auto form = require_closed_form(model);
  return {model, RadialKind::Phi0Closed,
          [form = std::move(form)](double r) { return form.evaluate(r); }};
}

RadialFunction RadialFunction::phi0_numeric(const SpaceModel& model, double r_ref,
                                            double tol) {
  check_radius(model, r_ref);
  return {model, RadialKind::Phi0Numeric,
          [model, r_ref, tol](double r) {
            return radharm::phi0_numeric(model, r, r_ref, tol);
          },
          r_ref};
}

RadialFunction RadialFunction::theta(const SpaceModel& model) {
  return {model, RadialKind::Theta, [model](double r) { return radharm::theta(model, r); }};
}

RadialFunction RadialFunction::custom(const SpaceModel& model, numeric::RealFunction fn) {
  return {model, RadialKind::Custom, std::move(fn)};
}

double RadialFunction::operator()(double r) const {
  check_radius(model_, r);
  return evaluator_(r);
}

double phi1(const SpaceModel& model, double r) { return 1.0 / theta(model, r); }

double phi0_closed(const SpaceModel& model, double r) {
  const auto form = require_closed_form(model);
  check_radius(model, r);
  return form.evaluate(r);
}

double phi0_numeric(const SpaceModel& model, double r, double r_ref, double tol) {
  check_radius(model, r);
  check_radius(model, r_ref);
  if (r == r_ref) return 0.0;
  const double lo = std::min(r, r_ref);
  const double hi = std::max(r, r_ref);
  const auto integrand = [&model](double s) { return phi1(model, s); };
  const auto result =
      numeric::integrate(integrand, numeric::Interval::closed(lo, hi), tol);
  return r > r_ref ? result.value : -result.value;
}

double laplacian_radial(const SpaceModel& model, const RadialFunction& f, double r) {
  check_radius(model, r);
  const auto domain = model.domain();
  const auto& fn = f.evaluator();
  const double second = numeric::second_derivative_extrapolated(fn, r, domain);
  const double first =
      numeric::derivative(fn, r, numeric::DerivativeOrder::First, 0.0, domain);
  return -(second + log_derivative_theta(model, r) * first);
}

RadialFunction general_solution(const SpaceModel& model, double a, double b) {
  auto form = require_closed_form(model);
  return {model, RadialKind::General,
          [form = std::move(form), a, b](double r) { return a * form.evaluate(r) + b; }};
}

std::string to_string(EndBehavior behavior) {
  switch (behavior) {
    case EndBehavior::Divergent: return "Divergent";
    case EndBehavior::Extendable: return "Extendable";
    case EndBehavior::NoBoundary: return "NoBoundary";
  }
  return "?";
}

BoundaryClassification classify_boundary(const SpaceModel& model, double tol) {
  BoundaryClassification out;
  const auto integrand = [&model](double s) { return phi1(model, s); };
  const double end = model.domain_end();
  const double eps = std::isfinite(end) ? 0.1 * end : 0.1;

  auto probe = [&](const numeric::Interval& iv, std::string& detail) {
    try {
      const auto result = numeric::integrate(integrand, iv, tol);
      std::ostringstream msg;
      msg << "integrable, value " << result.value;
      detail = msg.str();
      return EndBehavior::Extendable;
    } catch (const NonConvergence& e) {
      detail = e.what();
      return EndBehavior::Divergent;
    }
  };

  out.at_origin = probe(numeric::Interval(0.0, eps, true, false), out.origin_detail);
  if (model.sigma() > 0) {
    out.at_far_end = probe(numeric::Interval(end - eps, end, false, true),
                           out.far_end_detail);
  } else {
    out.at_far_end = EndBehavior::NoBoundary;
    out.far_end_detail = "non-compact end";
  }
  return out;
}

namespace {

struct Grid {
  std::vector<double> r;
  double r_ref;
};

Grid verification_grid(const SpaceModel& model) {
  const double span = std::min(model.domain_end(), 3.0);
  return {numeric::linspace(0.1 * span, 0.9 * span, kVerificationGridPoints),
          0.5 * span};
}

std::optional<TableCorrection> search_correction(const ClosedForm& form,
                                                 const Grid& grid,
                                                 const std::vector<double>& numeric_diff) {
  std::optional<TableCorrection> best;
  const int n_terms = static_cast<int>(form.terms.size());
  for (int flip = -1; flip < n_terms; ++flip) {
    ClosedForm candidate = form;
    if (flip >= 0) candidate.terms[static_cast<std::size_t>(flip)].coefficient *= -1.0;
    const double base = candidate.evaluate(grid.r_ref);
    std::vector<double> diff(grid.r.size());
    double dot = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < grid.r.size(); ++i) {
      diff[i] = candidate.evaluate(grid.r[i]) - base;
      dot += diff[i] * numeric_diff[i];
      norm += diff[i] * diff[i];
    }
    if (norm == 0.0) continue;
    const double factor = dot / norm;
    double residual = 0.0;
    for (std::size_t i = 0; i < grid.r.size(); ++i)
      residual = std::max(residual, scaled(factor * diff[i] - numeric_diff[i], numeric_diff[i]));
    if (!best || residual < best->residual) {
      std::ostringstream msg;
      if (flip >= 0)
        msg << "flip sign of term " << flip << " ("
            << form.terms[static_cast<std::size_t>(flip)].describe(form.model.density().trig_kind)
            << ") and ";
      msg << "scale entry by " << factor;
      best = TableCorrection{factor, flip, residual, msg.str()};
    }
  }
  if (best && best->residual > kDiscrepancyThreshold) {
    best->description = "no single sign/factor repair reconciles the entry (best: " +
                        best->description + ")";
  }
  return best;
}

}  // namespace

TableVerification verify_closed_form(const ClosedForm& form, double tol) {
  const SpaceModel& model = form.model;
  const Grid grid = verification_grid(model);
  TableVerification out{model, form.describe()};
  out.grid_points = static_cast<int>(grid.r.size());
  out.r_ref = grid.r_ref;

  const auto domain = model.domain();
  const numeric::RealFunction closed = [&form](double r) { return form.evaluate(r); };
  const RadialFunction closed_fn = RadialFunction::custom(model, closed);
  const double closed_ref = form.evaluate(grid.r_ref);

  std::vector<double> numeric_diff(grid.r.size());
  for (std::size_t i = 0; i < grid.r.size(); ++i) {
    const double r = grid.r[i];
    const double p1 = phi1(model, r);

    const double d1 = numeric::derivative(closed, r, numeric::DerivativeOrder::First, 0.0, domain);
    out.max_ode_abs = std::max(out.max_ode_abs, std::abs(d1 - p1));
    out.max_ode_residual = std::max(out.max_ode_residual, scaled(d1 - p1, p1));

    numeric_diff[i] = phi0_numeric(model, r, grid.r_ref, tol);
    const double closed_diff = form.evaluate(r) - closed_ref;
    out.max_match_abs = std::max(out.max_match_abs, std::abs(numeric_diff[i] - closed_diff));
    out.max_match_residual =
        std::max(out.max_match_residual, scaled(numeric_diff[i] - closed_diff, numeric_diff[i]));

    const double lap = laplacian_radial(model, closed_fn, r);
    const double term_scale = log_derivative_theta(model, r) * p1;
    out.max_laplacian_abs = std::max(out.max_laplacian_abs, std::abs(lap));
    out.max_laplacian_residual = std::max(out.max_laplacian_residual, scaled(lap, term_scale));
  }

  out.discrepancy = out.max_ode_residual > kDiscrepancyThreshold ||
                    out.max_match_residual > kDiscrepancyThreshold;
  if (out.discrepancy) out.correction = search_correction(form, grid, numeric_diff);
  return out;
}

TableVerification verify_table_entry(const SpaceModel& model, double tol) {
  return verify_closed_form(require_closed_form(model), tol);
}

std::vector<TableVerification> verify_all_table_entries(double tol) {
  std::vector<std::future<TableVerification>> jobs;
  for (const SpaceModel& model : closed_form_catalogue())
    jobs.push_back(std::async(std::launch::async,
                              [model, tol] { return verify_table_entry(model, tol); }));
  std::vector<TableVerification> out;
  out.reserve(jobs.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

}  // namespace radharm
