#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radharm/numeric.hpp"

namespace radharm {

enum class Family {
  Sphere,
  ComplexProjective,
  QuaternionProjective,
  OctonionPlane,
  HyperbolicSpace,
  ComplexHyperbolic,
  QuaternionHyperbolic,
  OctonionHyperbolic,
  Euclidean,
};

enum class CurvatureSign : int { Negative = -1, Flat = 0, Positive = 1 };

enum class TrigKind { Circular, Hyperbolic, Polynomial };

/// Theta = s(r)^sine_exponent * c(r)^cosine_exponent where (s, c) is
/// (sin, cos), (sinh, cosh) or (r, 1) depending on trig_kind.
struct DensityProfile {
  int sine_exponent;
  int cosine_exponent;
  TrigKind trig_kind;

  bool operator==(const DensityProfile&) const = default;
};

struct CutLocus {
  enum class Kind { AntipodalPoint, ProjectiveHyperplane, Sphere7, Empty };
  Kind kind;
  int hyperplane_index = -1;  // k-1 for ProjectiveHyperplane, else -1

  std::string describe() const;
  bool operator==(const CutLocus&) const = default;
};

/// A simply connected harmonic model space: a rank-1 symmetric space with the
/// standard normalization (diameter pi for spheres, pi/2 for the projective
/// families), one of their negatively curved duals, or flat R^m.
class SpaceModel {
 public:
  static SpaceModel sphere(int m);
  static SpaceModel complex_projective(int k);
  static SpaceModel quaternion_projective(int k);
  static SpaceModel octonion_plane();
  static SpaceModel hyperbolic(int m);
  static SpaceModel complex_hyperbolic(int k);
  static SpaceModel quaternion_hyperbolic(int k);
  static SpaceModel octonion_hyperbolic();
  static SpaceModel euclidean(int m);

  /// Parses `S<m>`, `CP<k>`, `HP<k>`, `OP2`, `hS<m>`, `hCP<k>`, `hHP<k>`,
  /// `hOP2`, `E<m>`. Case-sensitive; no signs or leading zeros.
  /// Throws UnsupportedModel on anything else.
  static SpaceModel parse(std::string_view id);

  /// Inverse of parse.
  std::string id() const;

  Family family() const noexcept { return family_; }
  int dimension() const noexcept { return dimension_; }
  std::optional<int> projective_index() const noexcept { return index_; }
  CurvatureSign curvature_sign() const noexcept;
  int sigma() const noexcept { return static_cast<int>(curvature_sign()); }

  DensityProfile density() const noexcept;
  /// pi for spheres, pi/2 for the other compact families, +inf otherwise.
  double domain_end() const noexcept;
  /// The open interval (0, domain_end()).
  numeric::Interval domain() const;
  CutLocus cut_locus() const noexcept;

  /// Dual across the sin <-> sinh substitution; Euclidean space is self-dual.
  SpaceModel dual() const;

  bool operator==(const SpaceModel&) const = default;

 private:
  SpaceModel(Family family, int dimension, std::optional<int> index)
      : family_(family), dimension_(dimension), index_(index) {}

  Family family_;
  int dimension_;
  std::optional<int> index_;
};

/// Volume density Theta(r) in geodesic polar coordinates.
double theta(const SpaceModel& model, double r);

/// Theta(r) / r^(m-1); tends to 1 as r -> 0.
double theta_tilde(const SpaceModel& model, double r);

/// Theta'(r) / Theta(r), in closed form.
double log_derivative_theta(const SpaceModel& model, double r);

/// Total volume of a compact (sigma = +1) model, integrating Theta against
/// the unit (m-1)-sphere. Throws UnsupportedModel for sigma <= 0.
double model_volume(const SpaceModel& model);

/// Volume of the geodesic ball of the given radius, 0 < radius <= domain_end.
double ball_volume(const SpaceModel& model, double radius);

/// Every model id used by the closed-form tables plus a spread of others;
/// useful for sweeping catalogue-wide properties.
std::vector<SpaceModel> positive_catalogue(int max_sphere_dim = 8);

}  // namespace radharm
