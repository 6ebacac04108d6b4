#include "radharm/space_models.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "radharm/errors.hpp"
#include "radharm/special_functions.hpp"

namespace radharm {

namespace {

constexpr int kMaxIndex = 4096;

void require(bool ok, const std::string& what) {
  if (!ok) throw UnsupportedModel(what);
}

void check_radius(const SpaceModel& model, double r) {
  if (!(r > 0.0 && r < model.domain_end())) {
    std::ostringstream msg;
    msg << "r=" << r << " outside (0, " << model.domain_end() << ") for "
        << model.id();
    throw DomainViolation(msg.str());
  }
}

// Strict decimal parse: digits only, no leading zero.
std::optional<int> parse_index(std::string_view digits) {
  if (digits.empty() || digits.size() > 6 || digits.front() == '0')
    return std::nullopt;
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    return std::nullopt;
  return value;
}

}  // namespace

std::string CutLocus::describe() const {
  switch (kind) {
    case Kind::AntipodalPoint: return "antipodal point";
    case Kind::ProjectiveHyperplane:
      return "projective hyperplane of index " + std::to_string(hyperplane_index);
    case Kind::Sphere7: return "7-sphere";
    case Kind::Empty: return "empty";
  }
  return "unknown";
}

SpaceModel SpaceModel::sphere(int m) {
  require(m >= 2 && m <= kMaxIndex, "sphere dimension must be >= 2");
  return {Family::Sphere, m, std::nullopt};
}
SpaceModel SpaceModel::complex_projective(int k) {
  require(k >= 1 && k <= kMaxIndex, "CP^k requires k >= 1");
  return {Family::ComplexProjective, 2 * k, k};
}
SpaceModel SpaceModel::quaternion_projective(int k) {
  require(k >= 1 && k <= kMaxIndex, "HP^k requires k >= 1");
  return {Family::QuaternionProjective, 4 * k, k};
}
SpaceModel SpaceModel::octonion_plane() { return {Family::OctonionPlane, 16, 2}; }
SpaceModel SpaceModel::hyperbolic(int m) {
  require(m >= 2 && m <= kMaxIndex, "hyperbolic dimension must be >= 2");
  return {Family::HyperbolicSpace, m, std::nullopt};
}
SpaceModel SpaceModel::complex_hyperbolic(int k) {
  require(k >= 1 && k <= kMaxIndex, "complex hyperbolic space requires k >= 1");
  return {Family::ComplexHyperbolic, 2 * k, k};
}
SpaceModel SpaceModel::quaternion_hyperbolic(int k) {
  require(k >= 1 && k <= kMaxIndex, "quaternion hyperbolic space requires k >= 1");
  return {Family::QuaternionHyperbolic, 4 * k, k};
}
SpaceModel SpaceModel::octonion_hyperbolic() {
  return {Family::OctonionHyperbolic, 16, 2};
}
SpaceModel SpaceModel::euclidean(int m) {
  require(m >= 2 && m <= kMaxIndex, "Euclidean dimension must be >= 2");
  return {Family::Euclidean, m, std::nullopt};
}

SpaceModel SpaceModel::parse(std::string_view id) {
  const std::string original(id);
  auto fail = [&]() -> SpaceModel {
    throw UnsupportedModel("unknown model id '" + original + "'");
  };
  const bool dual = !id.empty() && id.front() == 'h';
  if (dual) id.remove_prefix(1);

  auto take = [&](std::string_view prefix) -> std::optional<int> {
    if (id.substr(0, prefix.size()) != prefix) return std::nullopt;
    auto n = parse_index(id.substr(prefix.size()));
    if (!n) fail();
    return n;
  };

  if (id == "OP2") return dual ? octonion_hyperbolic() : octonion_plane();
  if (id.starts_with("OP")) fail();
  try {
    if (auto k = take("CP")) return dual ? complex_hyperbolic(*k) : complex_projective(*k);
    if (auto k = take("HP")) return dual ? quaternion_hyperbolic(*k) : quaternion_projective(*k);
    if (auto m = take("S")) return dual ? hyperbolic(*m) : sphere(*m);
    if (!dual) {
      if (auto m = take("E")) return euclidean(*m);
    }
  } catch (const UnsupportedModel&) {
    fail();
  }
  return fail();
}

std::string SpaceModel::id() const {
  const std::string k = index_ ? std::to_string(*index_) : std::string{};
  const std::string m = std::to_string(dimension_);
  switch (family_) {
    case Family::Sphere: return "S" + m;
    case Family::ComplexProjective: return "CP" + k;
    case Family::QuaternionProjective: return "HP" + k;
    case Family::OctonionPlane: return "OP2";
    case Family::HyperbolicSpace: return "hS" + m;
    case Family::ComplexHyperbolic: return "hCP" + k;
    case Family::QuaternionHyperbolic: return "hHP" + k;
    case Family::OctonionHyperbolic: return "hOP2";
    case Family::Euclidean: return "E" + m;
  }
  return "?";
}

CurvatureSign SpaceModel::curvature_sign() const noexcept {
  switch (family_) {
    case Family::Sphere:
    case Family::ComplexProjective:
    case Family::QuaternionProjective:
    case Family::OctonionPlane: return CurvatureSign::Positive;
    case Family::Euclidean: return CurvatureSign::Flat;
    default: return CurvatureSign::Negative;
  }
}

DensityProfile SpaceModel::density() const noexcept {
  int cosine = 0;
  switch (family_) {
    case Family::ComplexProjective:
    case Family::ComplexHyperbolic: cosine = 1; break;
    case Family::QuaternionProjective:
    case Family::QuaternionHyperbolic: cosine = 3; break;
    case Family::OctonionPlane:
    case Family::OctonionHyperbolic: cosine = 7; break;
    default: break;
  }
  TrigKind kind = TrigKind::Polynomial;
  if (sigma() > 0) kind = TrigKind::Circular;
  if (sigma() < 0) kind = TrigKind::Hyperbolic;
  return {dimension_ - 1, cosine, kind};
}

double SpaceModel::domain_end() const noexcept {
  if (family_ == Family::Sphere) return std::numbers::pi;
  if (sigma() > 0) return 0.5 * std::numbers::pi;
  return std::numeric_limits<double>::infinity();
}

numeric::Interval SpaceModel::domain() const {
  return numeric::Interval::open(0.0, domain_end());
}

CutLocus SpaceModel::cut_locus() const noexcept {
  switch (family_) {
    case Family::Sphere: return {CutLocus::Kind::AntipodalPoint};
    case Family::ComplexProjective:
    case Family::QuaternionProjective:
      return {CutLocus::Kind::ProjectiveHyperplane, *index_ - 1};
    case Family::OctonionPlane: return {CutLocus::Kind::Sphere7};
    default: return {CutLocus::Kind::Empty};
  }
}

SpaceModel SpaceModel::dual() const {
  switch (family_) {
    case Family::Sphere: return {Family::HyperbolicSpace, dimension_, index_};
    case Family::ComplexProjective: return {Family::ComplexHyperbolic, dimension_, index_};
    case Family::QuaternionProjective: return {Family::QuaternionHyperbolic, dimension_, index_};
    case Family::OctonionPlane: return {Family::OctonionHyperbolic, dimension_, index_};
    case Family::HyperbolicSpace: return {Family::Sphere, dimension_, index_};
    case Family::ComplexHyperbolic: return {Family::ComplexProjective, dimension_, index_};
    case Family::QuaternionHyperbolic: return {Family::QuaternionProjective, dimension_, index_};
    case Family::OctonionHyperbolic: return {Family::OctonionPlane, dimension_, index_};
    case Family::Euclidean: return *this;
  }
  return *this;
}

double theta(const SpaceModel& model, double r) {
  check_radius(model, r);
  const DensityProfile p = model.density();
  switch (p.trig_kind) {
    case TrigKind::Circular:
      return std::pow(std::sin(r), p.sine_exponent) *
             std::pow(std::cos(r), p.cosine_exponent);
    case TrigKind::Hyperbolic:
      return std::pow(std::sinh(r), p.sine_exponent) *
             std::pow(std::cosh(r), p.cosine_exponent);
    case TrigKind::Polynomial: return std::pow(r, p.sine_exponent);
  }
  return 0.0;
}

double theta_tilde(const SpaceModel& model, double r) {
  check_radius(model, r);
  const DensityProfile p = model.density();
  switch (p.trig_kind) {
    case TrigKind::Circular:
      return std::pow(std::sin(r) / r, p.sine_exponent) *
             std::pow(std::cos(r), p.cosine_exponent);
    case TrigKind::Hyperbolic:
      return std::pow(std::sinh(r) / r, p.sine_exponent) *
             std::pow(std::cosh(r), p.cosine_exponent);
    case TrigKind::Polynomial: return 1.0;
  }
  return 0.0;
}

double log_derivative_theta(const SpaceModel& model, double r) {
  check_radius(model, r);
  const DensityProfile p = model.density();
  const double a = p.sine_exponent;
  const double b = p.cosine_exponent;
  switch (p.trig_kind) {
    case TrigKind::Circular: return a / std::tan(r) - b * std::tan(r);
    case TrigKind::Hyperbolic: return a / std::tanh(r) + b * std::tanh(r);
    case TrigKind::Polynomial: return a / r;
  }
  return 0.0;
}

double ball_volume(const SpaceModel& model, double radius) {
  if (!(radius > 0.0 && radius <= model.domain_end()) || !std::isfinite(radius)) {
    std::ostringstream msg;
    msg << "ball radius " << radius << " outside (0, " << model.domain_end()
        << "] for " << model.id();
    throw DomainViolation(msg.str());
  }
  const auto iv = numeric::Interval(0.0, radius, true, radius == model.domain_end());
  const auto density = [&model](double r) { return theta(model, r); };
  const auto result = numeric::integrate(density, iv, numeric::QuadratureOptions{1e-14});
  return unit_sphere_volume(model.dimension() - 1) * result.value;
}

double model_volume(const SpaceModel& model) {
  if (model.sigma() <= 0)
    throw UnsupportedModel("total volume is infinite for " + model.id() +
                           "; use ball_volume");
  return ball_volume(model, model.domain_end());
}

std::vector<SpaceModel> positive_catalogue(int max_sphere_dim) {
  std::vector<SpaceModel> out;
  for (int m = 2; m <= max_sphere_dim; ++m) out.push_back(SpaceModel::sphere(m));
  for (int k = 1; k <= 4; ++k) out.push_back(SpaceModel::complex_projective(k));
  for (int k = 1; k <= 4; ++k) out.push_back(SpaceModel::quaternion_projective(k));
  out.push_back(SpaceModel::octonion_plane());
  return out;
}

}  // namespace radharm
