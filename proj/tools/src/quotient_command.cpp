#include <cmath>
#include <functional>
#include <optional>

#include "commands.hpp"
#include "format.hpp"
#include "radharm/errors.hpp"
#include "radharm/quotient_geometry.hpp"
#include "svg.hpp"

namespace radharm::cli {

namespace {

using namespace quotient;

constexpr long kDefaultResolution = 400;
constexpr double kFlatHalfWidth = 1.25;

struct Setup {
  DeckGroup group;
  AmbientPoint base;
  // Maps a point of the unit disk to the ambient model; unset for flat groups.
  std::function<AmbientPoint(double, double)> chart;
};

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_exact(v[i]);
  return out;
}

Setup make_setup(const std::string& id, const std::optional<std::vector<double>>& given) {
  const auto pick = [&given](std::vector<double> fallback) {
    return AmbientPoint{given ? *given : std::move(fallback)};
  };
  if (id == "torus") return {DeckGroup::torus(), pick({0.0, 0.0}), {}};
  if (id == "klein") return {DeckGroup::klein_bottle(), pick({0.0, 0.0}), {}};

  const auto sphere_chart = [](std::size_t n) {
    return [n](double x, double y) {
      AmbientPoint q{std::vector<double>(n, 0.0)};
      q[0] = x;
      q[1] = y;
      q[2] = std::sqrt(std::max(0.0, 1.0 - x * x - y * y));
      return q;
    };
  };
  if (id == "rp") {
    AmbientPoint p = pick({1.0, 0.0, 0.0});
    if (p.size() < 3) throw UsageError("rp basepoint needs at least 3 coordinates");
    return {DeckGroup::antipodal(static_cast<int>(p.size()) - 1), p, sphere_chart(p.size())};
  }
  if (id == "lens") {
    AmbientPoint p = pick({1.0, 0.0, 0.0, 0.0});
    if (p.size() < 4 || p.size() % 2 != 0)
      throw UsageError("lens basepoint needs an even number (>= 4) of coordinates");
    return {DeckGroup::lens_z4(static_cast<int>(p.size() - 2) / 2), p, sphere_chart(p.size())};
  }
  if (id == "cpq") {
    AmbientPoint p = pick({1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    if (p.size() < 4 || p.size() % 4 != 0)
      throw UsageError("cpq basepoint needs 4(k+1) real coordinates (Re, Im pairs)");
    const std::size_t n = p.size();
    // z = (sqrt(1 - |w|^2), w, 0, ...) with w = x + iy.
    const auto chart = [n](double x, double y) {
      AmbientPoint q{std::vector<double>(n, 0.0)};
      q[0] = std::sqrt(std::max(0.0, 1.0 - x * x - y * y));
      q[2] = x;
      q[3] = y;
      return q;
    };
    return {DeckGroup::cp_involution(static_cast<int>(n / 4) - 1), p, chart};
  }
  throw UsageError("unknown group '" + id + "' (expected torus, klein, rp, lens or cpq)");
}

std::pair<double, double> chart_position(const Setup& s) {
  if (!s.chart) return {s.base[0], s.base[1]};
  if (s.group.ambient().kind == AmbientKind::ComplexProjective) {
    const AmbientPoint c = canonical_representative(s.base);
    return {c[2], c[3]};
  }
  return {s.base[0], s.base[1]};
}

}  // namespace

int quotient(const RunConfig& config, std::ostream& out) {
  const auto& args = config.positionals;
  if (args.empty() || args.size() > 3)
    throw UsageError("usage: quotient torus|klein|rp|lens|cpq [BASEPOINT] [RESOLUTION]");
  std::optional<std::vector<double>> given;
  if (args.size() >= 2) given = parse_point(args[1]);
  const long resolution =
      args.size() == 3 ? parse_integer(args[2], "resolution") : kDefaultResolution;
  if (resolution < 2 || resolution > 4000) throw UsageError("resolution must lie in [2, 4000]");

  const Setup s = make_setup(args[0], given);
  validate_point(s.group.ambient(), s.base);
  const int n = static_cast<int>(resolution);
  const bool flat = !s.chart;

  const std::string header = config_line(
      config, {{"group", args[0]}, {"basepoint", join(s.base.coords)},
               {"resolution", std::to_string(n)}});

  const InjectivityReport brute = injectivity_radius(s.group, s.base);
  const auto closed = injectivity_radius_closed_form(s.group, s.base);
  const int p = config.precision;
  std::string iota_line = "# iota=" + format_real(brute.radius, p) + " minimizer=" +
                          brute.minimizer + " method=BruteForce";
  if (closed) iota_line += " closed_form=" + format_real(closed->radius, p);

  std::vector<GridSample> samples;
  double spacing = 0.0;
  double x_lo = -1.0, y_lo = -1.0, width = 2.0;
  if (flat) {
    const GridSpec grid{n, kFlatHalfWidth};
    samples = classify_grid(s.group, s.base, grid);
    spacing = grid.spacing();
    x_lo = s.base[0] - kFlatHalfWidth;
    y_lo = s.base[1] - kFlatHalfWidth;
    width = 2.0 * kFlatHalfWidth;
  } else {
    spacing = 2.0 / n;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const double x = -1.0 + (i + 0.5) * spacing;
        const double y = -1.0 + (j + 0.5) * spacing;
        if (x * x + y * y >= 1.0) continue;
        samples.push_back({x, y, in_fundamental_domain(s.group, s.base, s.chart(x, y),
                                                       2.0 * spacing)});
      }
  }

  if (config.svg) {
    SvgFigure figure{args[0] + " iota=" + format_real(brute.radius, p),
                     header,
                     x_lo,
                     x_lo + width,
                     y_lo,
                     y_lo + width,
                     {},
                     spacing,
                     chart_position(s),
                     !flat};
    for (const GridSample& g : samples)
      if (g.cls == DomainClass::Boundary) figure.boundary.emplace_back(g.x, g.y);
    write_svg(out, figure);
    return 0;
  }

  out << header << '\n' << iota_line << '\n' << "x,y,class\n";
  for (const GridSample& g : samples)
    out << format_real(g.x, p) << ',' << format_real(g.y, p) << ',' << to_string(g.cls) << '\n';
  return 0;
}

}  // namespace radharm::cli
