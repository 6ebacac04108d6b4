#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radharm/deck_group.hpp"

namespace radharm::quotient {

/// Nearest orbit point of q as seen from p.
struct NearestImage {
  double distance;
  GroupElement element;
};

/// min over gamma of d(p, gamma q) together with the realizing element.
NearestImage nearest_image(const DeckGroup& group, const AmbientPoint& p,
                           const AmbientPoint& q);

double quotient_distance(const DeckGroup& group, const AmbientPoint& p,
                         const AmbientPoint& q);

enum class InjectivityMethod { BruteForce, ClosedForm };

struct InjectivityReport {
  AmbientPoint base;
  double radius;
  std::string minimizer;  // label of the element realizing the minimum
  InjectivityMethod method;
};

/// Half the smallest displacement d(p, gamma p) over gamma != id.
InjectivityReport injectivity_radius(const DeckGroup& group, const AmbientPoint& p);

/// Known closed form for the group at p, where one exists: 1/2 for the
/// square torus, the Klein bottle formula after normalizing p, pi/2 for
/// the antipodal map, and pi/4 for the lens and involution quotients at
/// their basepoints.
std::optional<InjectivityReport> injectivity_radius_closed_form(const DeckGroup& group,
                                                                const AmbientPoint& p);

/// 1/2 min{2, sqrt(1 + 4 a^2)}.
double klein_injectivity_closed(double a);

/// Moves a Klein bottle basepoint to the form (0, a), a >= 0, using the
/// x-translations and the reflection y -> -y, which are isometries
/// commuting with the deck group.
double normalize_klein_basepoint(const AmbientPoint& p);

enum class DomainClass { Interior, Boundary, Exterior };

std::string to_string(DomainClass cls);

inline constexpr double kAnalyticBoundaryTolerance = 1e-9;

/// Interior if d(p, q) < min over gamma != id of d(p, gamma q) - tol,
/// Boundary if the two agree within tol, Exterior otherwise.
DomainClass in_fundamental_domain(const DeckGroup& group, const AmbientPoint& p,
                                  const AmbientPoint& q,
                                  double tol = kAnalyticBoundaryTolerance);

/// -1 < x < 1, 1 + 2x + 4ay > 0 and 1 - 2x + 4ay > 0.
bool klein_fundamental_region(double a, double x, double y);

/// x1 > |x2| for a unit vector of S^(2k+1).
bool lens_domain(const AmbientPoint& q);

/// Distance in CP^(2k+1) / <T> from the basepoint orbit to the class of z.
/// Equals arccos(max(|z1|, |z2|)); see the ledger for the choice of max.
double cp_quotient_distance(const AmbientPoint& z);

struct SelfCheckReport {
  GroupKind kind;
  std::vector<std::string> checks;  // identities that were verified
  int samples = 0;
  double min_displacement = 0.0;    // over sampled points and gamma != id
  double max_isometry_defect = 0.0;
};

inline constexpr int kSelfCheckSamples = 10000;

/// Verifies the group identities (T^4 = id and T^2 = -id for the lens
/// action, T^2 = id projectively for the involution, closure of the
/// generators up to depth 2 for flat groups), freeness (sampled
/// displacement above 0.1) and the isometry property to 1e-12. Throws
/// SelfCheckFailed naming the violated identity.
SelfCheckReport group_action_selfcheck(const DeckGroup& group, std::uint64_t seed = 42,
                                       int samples = kSelfCheckSamples);

struct GridSample {
  double x;
  double y;
  DomainClass cls;
};

/// Cell-centred square grid of resolution^2 points over
/// [px - w, px + w] x [py - w, py + w].
struct GridSpec {
  int resolution = 400;
  double half_width = 1.25;

  double spacing() const { return 2.0 * half_width / resolution; }
};

/// Classifies every grid point; tol defaults to 2 * spacing. Rows are
/// processed in parallel and returned in row-major order.
std::vector<GridSample> classify_grid(const DeckGroup& group, const AmbientPoint& p,
                                      const GridSpec& grid,
                                      std::optional<double> tol = std::nullopt);

/// Grid points classified Boundary with tol 2 * spacing. Flat groups only.
std::vector<AmbientPoint> cut_locus_sample(const DeckGroup& group, const AmbientPoint& p,
                                           int resolution, double half_width = 1.25);

/// Interior cell count times cell area, with the analytic tolerance.
double fundamental_domain_area(const DeckGroup& group, const AmbientPoint& p,
                               const GridSpec& grid);

struct MonteCarloEstimate {
  double estimate;
  double standard_error;
  int samples;
  std::uint64_t seed;
};

/// vol(S^(2k+1)) times the fraction of uniform samples in lens_domain.
/// Samples are drawn in fixed chunks, each from its own seeded stream, so
/// the result does not depend on scheduling.
MonteCarloEstimate lens_domain_volume(int k, int samples, std::uint64_t seed);

/// log(x^2 + y^2) on O(delta) = (-delta, 1 - delta)^2 without the origin.
double flat_radial_extension(double delta, double x, double y);

/// Membership in O(delta) without the origin.
bool in_radial_extension_domain(double delta, double x, double y);

/// Five-point Laplacian, Richardson-extrapolated from steps h and h/2 so
/// the stencil stays within distance h of (x, y).
double five_point_laplacian(const std::function<double(double, double)>& f, double x,
                            double y, double h);

/// Largest |five_point_laplacian| of flat_radial_extension over sampled
/// points of O(delta) at least 0.1 from the origin and 2h from its edges.
double radial_extension_harmonic_residual(double delta, double h = 1e-3,
                                          int samples = 200, std::uint64_t seed = 42);

/// Whether flat_radial_extension is invariant under (x, y) -> (-x, y) and
/// (x, y) -> (x, -y) on O(delta): every sampled point must map into the
/// domain with an equal value.
bool radial_extension_reflection_symmetric(double delta, int samples = 1000,
                                           std::uint64_t seed = 42);

/// Whether flat_radial_extension agrees with log(r^2), r the torus
/// quotient distance to the origin, at every sampled point of O(delta).
bool radial_extension_is_radial(double delta, int samples = 1000, std::uint64_t seed = 42);

/// Two points of O(delta) at equal quotient distance from the origin with
/// different extension values, if the search finds one.
std::optional<std::pair<AmbientPoint, AmbientPoint>> radial_extension_witness(double delta);

}  // namespace radharm::quotient
