#include "radharm/quotient_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "radharm/errors.hpp"
#include "radharm/special_functions.hpp"

namespace radharm::quotient {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kIsometryTolerance = 1e-12;
constexpr double kMinDisplacement = 0.1;

// Image of (x, y) under a flat group element without allocating.
void flat_image(const DeckGroup& group, const GroupElement& g, double x, double y,
                double& ox, double& oy) {
  if (group.kind() == GroupKind::TorusLattice) {
    const auto& v1 = group.lattice_v1();
    const auto& v2 = group.lattice_v2();
    ox = x + g.a * v1[0] + g.b * v2[0];
    oy = y + g.a * v1[1] + g.b * v2[1];
  } else {
    ox = x + g.a;
    oy = (g.a % 2 == 0) ? y : -y;
  }
}

struct Split {
  double identity;
  double others;  // min over gamma != id
  GroupElement best_other;
};

Split split_distances(const DeckGroup& group, const std::vector<GroupElement>& elements,
                      const AmbientPoint& p, const AmbientPoint& q) {
  Split s{0.0, kInf, {}};
  const Ambient& amb = group.ambient();
  if (group.is_flat()) {
    s.identity = std::hypot(p[0] - q[0], p[1] - q[1]);
    for (const GroupElement& g : elements) {
      if (g.is_identity()) continue;
      double x, y;
      flat_image(group, g, q[0], q[1], x, y);
      const double d = std::hypot(p[0] - x, p[1] - y);
      if (d < s.others) {
        s.others = d;
        s.best_other = g;
      }
    }
    return s;
  }
  s.identity = ambient_distance(amb, p, q);
  for (const GroupElement& g : elements) {
    if (g.is_identity()) continue;
    const double d = ambient_distance(amb, p, group.apply(g, q));
    if (d < s.others) {
      s.others = d;
      s.best_other = g;
    }
  }
  return s;
}

DomainClass classify(const Split& s, double tol) {
  if (s.identity < s.others - tol) return DomainClass::Interior;
  if (std::abs(s.identity - s.others) <= tol) return DomainClass::Boundary;
  return DomainClass::Exterior;
}

AmbientPoint random_point(const Ambient& ambient, std::mt19937_64& rng) {
  if (ambient.kind == AmbientKind::Flat) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const double x = u(rng);
    return flat_point(x, u(rng));
  }
  std::normal_distribution<double> gauss;
  AmbientPoint p{std::vector<double>(ambient.coordinate_count())};
  double n = 0.0;
  do {
    for (double& x : p.coords) x = gauss(rng);
    n = p.norm();
  } while (n < 1e-3);
  for (double& x : p.coords) x /= n;
  return p;
}

bool same_point(const AmbientPoint& a, const AmbientPoint& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

AmbientPoint negated(const AmbientPoint& p) {
  AmbientPoint out = p;
  for (double& x : out.coords) x = -x;
  return out;
}

[[noreturn]] void fail(const DeckGroup& group, const std::string& what) {
  throw SelfCheckFailed(to_string(group.kind()) + ": " + what);
}

void require_flat(const DeckGroup& group) {
  if (!group.is_flat()) throw UnsupportedModel("grid sampling needs a flat group");
}

void check_lens_point(const AmbientPoint& q) {
  if (q.size() < 4 || q.size() % 2 != 0)
    throw InvalidPoint("lens points live on S^(2k+1), k >= 1");
  validate_point({AmbientKind::Sphere, static_cast<int>(q.size()) - 1}, q);
}

}  // namespace

NearestImage nearest_image(const DeckGroup& group, const AmbientPoint& p,
                           const AmbientPoint& q) {
  validate_point(group.ambient(), p);
  validate_point(group.ambient(), q);
  const Split s = split_distances(group, group.elements_for(p, q), p, q);
  if (s.identity <= s.others) return {s.identity, {}};
  return {s.others, s.best_other};
}

double quotient_distance(const DeckGroup& group, const AmbientPoint& p,
                         const AmbientPoint& q) {
  return nearest_image(group, p, q).distance;
}

InjectivityReport injectivity_radius(const DeckGroup& group, const AmbientPoint& p) {
  validate_point(group.ambient(), p);
  const Split s = split_distances(group, group.elements_for(p, p), p, p);
  if (!(s.others > 0.0)) fail(group, "basepoint is fixed by " + group.label(s.best_other));
  return {p, 0.5 * s.others, group.label(s.best_other), InjectivityMethod::BruteForce};
}

double klein_injectivity_closed(double a) {
  return 0.5 * std::min(2.0, std::sqrt(1.0 + 4.0 * a * a));
}

double normalize_klein_basepoint(const AmbientPoint& p) {
  validate_point({AmbientKind::Flat, 2}, p);
  return std::abs(p[1]);
}

std::optional<InjectivityReport> injectivity_radius_closed_form(const DeckGroup& group,
                                                                const AmbientPoint& p) {
  validate_point(group.ambient(), p);
  const auto report = [&p](double radius, std::string minimizer) {
    return InjectivityReport{p, radius, std::move(minimizer), InjectivityMethod::ClosedForm};
  };
  switch (group.kind()) {
    case GroupKind::TorusLattice: {
      const auto& v1 = group.lattice_v1();
      const auto& v2 = group.lattice_v2();
      if (v1 == std::array<double, 2>{1.0, 0.0} && v2 == std::array<double, 2>{0.0, 1.0})
        return report(0.5, "t(1,0)");
      return std::nullopt;
    }
    case GroupKind::KleinBottle: {
      const double a = normalize_klein_basepoint(p);
      return report(klein_injectivity_closed(a), 1.0 + 4.0 * a * a < 4.0 ? "T" : "T^2");
    }
    case GroupKind::Antipodal: return report(std::numbers::pi / 2, "T");
    // <q, Tq> vanishes identically for both actions, so every point is
    // displaced by exactly pi/2.
    case GroupKind::LensZ4:
    case GroupKind::CPInvolution: return report(std::numbers::pi / 4, "T");
  }
  return std::nullopt;
}

std::string to_string(DomainClass cls) {
  switch (cls) {
    case DomainClass::Interior: return "interior";
    case DomainClass::Boundary: return "boundary";
    case DomainClass::Exterior: return "exterior";
  }
  return "?";
}

DomainClass in_fundamental_domain(const DeckGroup& group, const AmbientPoint& p,
                                  const AmbientPoint& q, double tol) {
  validate_point(group.ambient(), p);
  validate_point(group.ambient(), q);
  return classify(split_distances(group, group.elements_for(p, q), p, q), tol);
}

bool klein_fundamental_region(double a, double x, double y) {
  return -1.0 < x && x < 1.0 && 1.0 + 2.0 * x + 4.0 * a * y > 0.0 &&
         1.0 - 2.0 * x + 4.0 * a * y > 0.0;
}

bool lens_domain(const AmbientPoint& q) {
  check_lens_point(q);
  return q[0] > std::abs(q[1]);
}

double cp_quotient_distance(const AmbientPoint& z) {
  if (z.size() < 4 || z.size() % 4 != 0)
    throw InvalidPoint("involution quotient points live in C^(2k+2)");
  const Ambient amb{AmbientKind::ComplexProjective, static_cast<int>(z.size() / 2) - 1};
  validate_point(amb, z);
  // The basepoint orbit is {<e1>, <e2>}.
  const double to_e1 = ambient_distance(amb, basis_vector(z.size(), 0), z);
  const double to_e2 = ambient_distance(amb, basis_vector(z.size(), 2), z);
  return std::min(to_e1, to_e2);
}

SelfCheckReport group_action_selfcheck(const DeckGroup& group, std::uint64_t seed,
                                       int samples) {
  SelfCheckReport report{group.kind(), {}, samples, kInf, 0.0};
  const Ambient& amb = group.ambient();
  std::mt19937_64 rng(seed);
  std::vector<AmbientPoint> points;
  points.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) points.push_back(random_point(amb, rng));

  const std::vector<GroupElement> elements = group.elements(2);
  try {
    if (group.is_flat()) {
      for (const GroupElement& g : elements)
        for (const GroupElement& h : elements) {
          const GroupElement sum = group.kind() == GroupKind::TorusLattice
                                       ? GroupElement{g.a + h.a, g.b + h.b}
                                       : GroupElement{g.a + h.a, 0};
          for (std::size_t i = 0; i < std::min<std::size_t>(points.size(), 16); ++i)
            if (!same_point(group.apply(g, group.apply(h, points[i])),
                            group.apply(sum, points[i]), kIsometryTolerance))
              fail(group, "composition " + group.label(g) + " * " + group.label(h) +
                              " != " + group.label(sum));
        }
      report.checks.push_back("closure of generators up to depth 2");
    } else {
      const int order = group.order();
      for (const AmbientPoint& q : points) {
        AmbientPoint image = q;
        for (int i = 0; i < order; ++i) image = group.generator_image(image);
        const bool back = amb.kind == AmbientKind::ComplexProjective
                              ? ambient_distance(amb, q, image) <= kIsometryTolerance
                              : same_point(q, image, kIsometryTolerance);
        if (!back) fail(group, "T^" + std::to_string(order) + " != id");
      }
      report.checks.push_back("T^" + std::to_string(order) + " = id");
      if (group.kind() == GroupKind::LensZ4) {
        for (const AmbientPoint& q : points)
          if (!same_point(group.generator_image(group.generator_image(q)), negated(q),
                          kIsometryTolerance))
            fail(group, "T^2 != -id");
        report.checks.push_back("T^2 = -id");
      }
    }

    for (const AmbientPoint& q : points)
      for (const GroupElement& g : elements) {
        if (g.is_identity()) continue;
        report.min_displacement =
            std::min(report.min_displacement, ambient_distance(amb, q, group.apply(g, q)));
      }
    if (!(report.min_displacement > kMinDisplacement)) {
      std::ostringstream msg;
      msg << "sampled displacement " << report.min_displacement
          << " not above " << kMinDisplacement << " (fixed point)";
      fail(group, msg.str());
    }
    report.checks.push_back("no sampled fixed point");

    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      const double d = ambient_distance(amb, points[i], points[i + 1]);
      for (const GroupElement& g : elements) {
        const double dg =
            ambient_distance(amb, group.apply(g, points[i]), group.apply(g, points[i + 1]));
        report.max_isometry_defect = std::max(report.max_isometry_defect, std::abs(dg - d));
      }
    }
    if (report.max_isometry_defect > kIsometryTolerance) {
      std::ostringstream msg;
      msg << "isometry defect " << report.max_isometry_defect;
      fail(group, msg.str());
    }
    report.checks.push_back("isometry");
  } catch (const InvalidPoint& e) {
    fail(group, std::string("action leaves the ambient model: ") + e.what());
  }
  return report;
}

std::vector<GridSample> classify_grid(const DeckGroup& group, const AmbientPoint& p,
                                      const GridSpec& grid, std::optional<double> tol) {
  require_flat(group);
  validate_point(group.ambient(), p);
  if (grid.resolution < 1 || !(grid.half_width > 0.0))
    throw DomainViolation("grid needs positive resolution and width");
  const int n = grid.resolution;
  const double h = grid.spacing();
  const double band = tol.value_or(2.0 * h);
  const double x0 = p[0] - grid.half_width + 0.5 * h;
  const double y0 = p[1] - grid.half_width + 0.5 * h;

  // One element list valid for the whole window: the farthest corner bounds
  // the norm of every grid point.
  const double far_x = std::abs(p[0]) + grid.half_width;
  const double far_y = std::abs(p[1]) + grid.half_width;
  const auto elements = group.elements_for(p, flat_point(far_x, far_y));

  std::vector<GridSample> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  const int workers = std::max(1, std::min<int>(static_cast<int>(std::thread::hardware_concurrency()), n));
  std::vector<std::future<void>> jobs;
  for (int w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (int j = w; j < n; j += workers) {
        const double y = y0 + j * h;
        for (int i = 0; i < n; ++i) {
          const double x = x0 + i * h;
          const Split s = split_distances(group, elements, p, flat_point(x, y));
          out[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
              {x, y, classify(s, band)};
        }
      }
    }));
  }
  for (auto& job : jobs) job.get();
  return out;
}

std::vector<AmbientPoint> cut_locus_sample(const DeckGroup& group, const AmbientPoint& p,
                                           int resolution, double half_width) {
  std::vector<AmbientPoint> out;
  for (const GridSample& s : classify_grid(group, p, {resolution, half_width}))
    if (s.cls == DomainClass::Boundary) out.push_back(flat_point(s.x, s.y));
  return out;
}

double fundamental_domain_area(const DeckGroup& group, const AmbientPoint& p,
                               const GridSpec& grid) {
  const auto samples = classify_grid(group, p, grid, kAnalyticBoundaryTolerance);
  const auto inside = std::count_if(samples.begin(), samples.end(), [](const GridSample& s) {
    return s.cls == DomainClass::Interior;
  });
  const double h = grid.spacing();
  return static_cast<double>(inside) * h * h;
}

MonteCarloEstimate lens_domain_volume(int k, int samples, std::uint64_t seed) {
  if (k < 1 || samples < 1) throw DomainViolation("need k >= 1 and samples >= 1");
  constexpr int kChunk = 10000;
  const int chunks = (samples + kChunk - 1) / kChunk;
  const Ambient amb{AmbientKind::Sphere, 2 * k + 1};
  std::vector<std::future<long>> jobs;
  for (int c = 0; c < chunks; ++c) {
    jobs.push_back(std::async(std::launch::async, [=] {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(c)};
      std::mt19937_64 rng(seq);
      const int count = std::min(kChunk, samples - c * kChunk);
      long hits = 0;
      for (int i = 0; i < count; ++i)
        if (lens_domain(random_point(amb, rng))) ++hits;
      return hits;
    }));
  }
  long hits = 0;
  for (auto& job : jobs) hits += job.get();
  const double volume = unit_sphere_volume(2 * k + 1);
  const double fraction = static_cast<double>(hits) / samples;
  return {volume * fraction, volume * std::sqrt(fraction * (1.0 - fraction) / samples),
          samples, seed};
}

bool in_radial_extension_domain(double delta, double x, double y) {
  return -delta < x && x < 1.0 - delta && -delta < y && y < 1.0 - delta &&
         !(x == 0.0 && y == 0.0);
}

double flat_radial_extension(double delta, double x, double y) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainViolation("delta must lie in (0, 1)");
  if (x == 0.0 && y == 0.0) throw DomainViolation("extension undefined at the origin");
  if (!in_radial_extension_domain(delta, x, y)) {
    std::ostringstream msg;
    msg << "(" << x << ", " << y << ") outside (-" << delta << ", " << 1.0 - delta << ")^2";
    throw DomainViolation(msg.str());
  }
  return std::log(x * x + y * y);
}

double five_point_laplacian(const std::function<double(double, double)>& f, double x,
                            double y, double h) {
  const double centre = f(x, y);
  const auto plain = [&](double s) {
    return (f(x + s, y) + f(x - s, y) + f(x, y + s) + f(x, y - s) - 4.0 * centre) / (s * s);
  };
  return (4.0 * plain(0.5 * h) - plain(h)) / 3.0;
}

namespace {

template <typename Fn>
void for_each_sample(double delta, double margin, int samples, std::uint64_t seed, Fn&& fn) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-delta + margin, 1.0 - delta - margin);
  for (int i = 0; i < samples;) {
    const double x = u(rng);
    const double y = u(rng);
    if (std::hypot(x, y) < std::max(0.1, margin)) continue;
    fn(x, y);
    ++i;
  }
}

}  // namespace

double radial_extension_harmonic_residual(double delta, double h, int samples,
                                          std::uint64_t seed) {
  const auto f = [delta](double x, double y) { return flat_radial_extension(delta, x, y); };
  double worst = 0.0;
  for_each_sample(delta, 2.0 * h, samples, seed, [&](double x, double y) {
    worst = std::max(worst, std::abs(five_point_laplacian(f, x, y, h)));
  });
  return worst;
}

bool radial_extension_reflection_symmetric(double delta, int samples, std::uint64_t seed) {
  bool symmetric = true;
  for_each_sample(delta, 0.0, samples, seed, [&](double x, double y) {
    const double v = flat_radial_extension(delta, x, y);
    for (const auto& [rx, ry] : {std::pair{-x, y}, std::pair{x, -y}}) {
      if (!in_radial_extension_domain(delta, rx, ry) ||
          std::abs(flat_radial_extension(delta, rx, ry) - v) > kIsometryTolerance)
        symmetric = false;
    }
  });
  return symmetric;
}

bool radial_extension_is_radial(double delta, int samples, std::uint64_t seed) {
  const DeckGroup torus = DeckGroup::torus();
  const AmbientPoint origin = flat_point(0.0, 0.0);
  bool radial = true;
  for_each_sample(delta, 0.0, samples, seed, [&](double x, double y) {
    const double r = quotient_distance(torus, origin, flat_point(x, y));
    if (std::abs(flat_radial_extension(delta, x, y) - std::log(r * r)) > kIsometryTolerance)
      radial = false;
  });
  return radial;
}

std::optional<std::pair<AmbientPoint, AmbientPoint>> radial_extension_witness(double delta) {
  const DeckGroup torus = DeckGroup::torus();
  const AmbientPoint origin = flat_point(0.0, 0.0);
  constexpr int kSteps = 200;
  const double step = 1.0 / kSteps;
  for (int j = 1; j < kSteps; ++j)
    for (int i = 1; i < kSteps; ++i) {
      const double x = -delta + i * step;
      const double y = -delta + j * step;
      if (std::hypot(x, y) < 0.1) continue;
      const double r1 = quotient_distance(torus, origin, flat_point(x, y));
      const double n1 = std::hypot(x, y);
      if (n1 - r1 < 1e-6) continue;
      // Same quotient distance, but on the ray towards q1 where the
      // extension is honest.
      const double x2 = x * r1 / n1;
      const double y2 = y * r1 / n1;
      if (!in_radial_extension_domain(delta, x2, y2)) continue;
      const double r2 = quotient_distance(torus, origin, flat_point(x2, y2));
      if (std::abs(r2 - r1) > kIsometryTolerance) continue;
      if (std::abs(flat_radial_extension(delta, x, y) - flat_radial_extension(delta, x2, y2)) >
          1e-6)
        return std::pair{flat_point(x, y), flat_point(x2, y2)};
    }
  return std::nullopt;
}

}  // namespace radharm::quotient
