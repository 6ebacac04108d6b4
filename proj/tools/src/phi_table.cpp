#include <algorithm>
#include <cmath>

#include "commands.hpp"
#include "format.hpp"
#include "radharm/radial_harmonic.hpp"

namespace radharm::cli {

namespace {

// For tabulations without a closed form phi0' = phi1 holds by
// construction, so the residual of the radial equation is that of phi1.
double numeric_residual(const SpaceModel& model, double r) {
  const auto f1 = [&model](double s) { return phi1(model, s); };
  const double d1 = numeric::derivative(f1, r, numeric::DerivativeOrder::First, 0.0,
                                        model.domain());
  const double drift = log_derivative_theta(model, r) * phi1(model, r);
  return std::abs(d1 + drift) / std::max(1.0, std::abs(drift));
}

double closed_residual(const SpaceModel& model, const RadialFunction& closed, double r) {
  const double scale = std::abs(log_derivative_theta(model, r) * phi1(model, r));
  return std::abs(laplacian_radial(model, closed, r)) / std::max(1.0, scale);
}

}  // namespace

int phi_table(const RunConfig& config, std::ostream& out) {
  const auto& args = config.positionals;
  if (args.size() != 5) throw UsageError("usage: phi-table MODEL R_MIN R_MAX N R_REF");
  const SpaceModel model = SpaceModel::parse(args[0]);
  const double r_min = parse_real(args[1], "r_min");
  const double r_max = parse_real(args[2], "r_max");
  const long n = parse_integer(args[3], "n");
  const double r_ref = parse_real(args[4], "r_ref");
  if (n < 1 || n > 1000000) throw UsageError("n must lie in [1, 1000000]");
  if (!(r_min <= r_max)) throw UsageError("r_min must not exceed r_max");

  const auto domain = model.domain();
  const auto grid = numeric::linspace(r_min, r_max, static_cast<int>(n));
  for (double r : {r_min, r_max, r_ref})
    if (!domain.contains(r))
      throw UsageError("r=" + format_exact(r) + " outside the open domain (0, " +
                       format_exact(model.domain_end()) + ") of " + model.id());

  std::optional<RadialFunction> closed;
  if (!config.numeric_only) {
    if (!find_closed_form(model))
      throw UsageError("no closed form; numeric only with --numeric-only (model " +
                       model.id() + ")");
    closed = RadialFunction::phi0_closed(model);
  }

  out << config_line(config, {{"model", model.id()},
                              {"r_min", format_exact(r_min)},
                              {"r_max", format_exact(r_max)},
                              {"n", std::to_string(n)},
                              {"r_ref", format_exact(r_ref)}})
      << '\n';
  out << "r,theta,phi1,phi0_closed,phi0_numeric_diff,laplacian_residual\n";
  const int p = config.precision;
  for (double r : grid) {
    out << format_real(r, p) << ',' << format_real(theta(model, r), p) << ','
        << format_real(phi1(model, r), p) << ',';
    if (closed) out << format_real((*closed)(r), p);
    out << ',' << format_real(phi0_numeric(model, r, r_ref, config.tol), p) << ','
        << format_real(closed ? closed_residual(model, *closed, r) : numeric_residual(model, r),
                       p)
        << '\n';
  }
  return 0;
}

}  // namespace radharm::cli
