#include "radharm/deck_group.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radharm/errors.hpp"

namespace radharm::quotient {

namespace {

constexpr double kUnitTolerance = 1e-12;

double squared_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

AmbientPoint lens_generator(const AmbientPoint& p) {
  AmbientPoint out = p;
  for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
    out[i] = -p[i + 1];
    out[i + 1] = p[i];
  }
  return out;
}

// Pairs (z1, z2) -> (-conj z2, conj z1) on interleaved real storage.
AmbientPoint cp_generator(const AmbientPoint& p) {
  AmbientPoint out = p;
  for (std::size_t i = 0; i + 3 < p.size(); i += 4) {
    const double re1 = p[i], im1 = p[i + 1], re2 = p[i + 2], im2 = p[i + 3];
    out[i] = -re2;
    out[i + 1] = im2;
    out[i + 2] = re1;
    out[i + 3] = -im1;
  }
  return out;
}

AmbientPoint antipodal_generator(const AmbientPoint& p) {
  AmbientPoint out = p;
  for (double& x : out.coords) x = -x;
  return out;
}

}  // namespace

std::size_t Ambient::coordinate_count() const {
  switch (kind) {
    case AmbientKind::Flat: return 2;
    case AmbientKind::Sphere: return static_cast<std::size_t>(dimension) + 1;
    case AmbientKind::ComplexProjective: return 2 * (static_cast<std::size_t>(dimension) + 1);
  }
  return 0;
}

double AmbientPoint::norm() const { return std::sqrt(squared_norm(coords)); }

AmbientPoint flat_point(double x, double y) { return AmbientPoint{{x, y}}; }

AmbientPoint from_complex(const std::vector<std::complex<double>>& z) {
  AmbientPoint out;
  out.coords.reserve(2 * z.size());
  for (const auto& c : z) {
    out.coords.push_back(c.real());
    out.coords.push_back(c.imag());
  }
  return out;
}

AmbientPoint basis_vector(std::size_t n, std::size_t i) {
  AmbientPoint out{std::vector<double>(n, 0.0)};
  out[i] = 1.0;
  return out;
}

AmbientPoint canonical_representative(const AmbientPoint& z) {
  const std::size_t n = z.size() / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> c = z.complex_at(i);
    const double modulus = std::abs(c);
    if (modulus == 0.0) continue;
    const std::complex<double> phase = std::conj(c) / modulus;
    AmbientPoint out = z;
    for (std::size_t j = 0; j < n; ++j) {
      const std::complex<double> w = z.complex_at(j) * phase;
      out[2 * j] = w.real();
      out[2 * j + 1] = w.imag();
    }
    out[2 * i] = modulus;
    out[2 * i + 1] = 0.0;
    return out;
  }
  throw InvalidPoint("zero vector has no projective representative");
}

void validate_point(const Ambient& ambient, const AmbientPoint& p) {
  const std::size_t want = ambient.coordinate_count();
  if (p.size() != want) {
    std::ostringstream msg;
    msg << "expected " << want << " coordinates, got " << p.size();
    throw InvalidPoint(msg.str());
  }
  for (double x : p.coords)
    if (!std::isfinite(x)) throw InvalidPoint("non-finite coordinate");
  if (ambient.kind != AmbientKind::Flat) {
    const double n = p.norm();
    if (std::abs(n - 1.0) > kUnitTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "point must have unit norm, got " << n;
      throw InvalidPoint(msg.str());
    }
  }
}

double ambient_distance(const Ambient& ambient, const AmbientPoint& p,
                        const AmbientPoint& q) {
  validate_point(ambient, p);
  validate_point(ambient, q);
  switch (ambient.kind) {
    case AmbientKind::Flat: return std::hypot(p[0] - q[0], p[1] - q[1]);
    case AmbientKind::Sphere: {
      // 2 atan2(|p - q|, |p + q|) stays accurate near 0 and pi, where
      // arccos of the inner product loses half the digits.
      double minus = 0.0, plus = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        minus += (p[i] - q[i]) * (p[i] - q[i]);
        plus += (p[i] + q[i]) * (p[i] + q[i]);
      }
      return 2.0 * std::atan2(std::sqrt(minus), std::sqrt(plus));
    }
    case AmbientKind::ComplexProjective: {
      // With c = <p, q>, |c| = cos d and |q - c p| = sin d.
      const std::size_t n = p.size() / 2;
      std::complex<double> c = 0.0;
      for (std::size_t i = 0; i < n; ++i) c += std::conj(p.complex_at(i)) * q.complex_at(i);
      double orth = 0.0;
      for (std::size_t i = 0; i < n; ++i) orth += std::norm(q.complex_at(i) - c * p.complex_at(i));
      return std::atan2(std::sqrt(orth), std::abs(c));
    }
  }
  return 0.0;
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::TorusLattice: return "TorusLattice";
    case GroupKind::KleinBottle: return "KleinBottle";
    case GroupKind::Antipodal: return "Antipodal";
    case GroupKind::LensZ4: return "LensZ4";
    case GroupKind::CPInvolution: return "CPInvolution";
  }
  return "?";
}

DeckGroup::DeckGroup(GroupKind kind, Ambient ambient, int depth, int order)
    : kind_(kind), ambient_(ambient), depth_(depth), order_(order) {
  if (depth < 1) throw DomainViolation("enumeration depth must be positive");
}

DeckGroup DeckGroup::torus(std::array<double, 2> v1, std::array<double, 2> v2, int depth) {
  const double det = v1[0] * v2[1] - v1[1] * v2[0];
  if (!(std::abs(det) > 0.0) || !std::isfinite(det))
    throw DomainViolation("lattice generators must be linearly independent");
  DeckGroup g(GroupKind::TorusLattice, {AmbientKind::Flat, 2}, depth, 0);
  g.v1_ = v1;
  g.v2_ = v2;
  return g;
}

DeckGroup DeckGroup::klein_bottle(int depth) {
  DeckGroup g(GroupKind::KleinBottle, {AmbientKind::Flat, 2}, depth, 0);
  g.generator_ = [](const AmbientPoint& p) { return flat_point(p[0] + 1.0, -p[1]); };
  return g;
}

DeckGroup DeckGroup::antipodal(int m) {
  if (m < 1) throw UnsupportedModel("antipodal action needs m >= 1");
  DeckGroup g(GroupKind::Antipodal, {AmbientKind::Sphere, m}, 1, 2);
  g.generator_ = antipodal_generator;
  return g;
}

DeckGroup DeckGroup::lens_z4(int k) {
  if (k < 0) throw UnsupportedModel("lens action needs k >= 0");
  DeckGroup g(GroupKind::LensZ4, {AmbientKind::Sphere, 2 * k + 1}, 1, 4);
  g.generator_ = lens_generator;
  return g;
}

DeckGroup DeckGroup::cp_involution(int k) {
  if (k < 0) throw UnsupportedModel("involution needs k >= 0");
  // T^2 = -id, which is the identity on projective points.
  DeckGroup g(GroupKind::CPInvolution, {AmbientKind::ComplexProjective, 2 * k + 1}, 1, 2);
  g.generator_ = cp_generator;
  return g;
}

DeckGroup DeckGroup::with_generator(Generator generator) const {
  DeckGroup g = *this;
  g.generator_ = std::move(generator);
  return g;
}

AmbientPoint DeckGroup::basepoint() const {
  if (is_flat()) return flat_point(0.0, 0.0);
  return basis_vector(ambient_.coordinate_count(), 0);
}

AmbientPoint DeckGroup::apply(const GroupElement& g, const AmbientPoint& p) const {
  switch (kind_) {
    case GroupKind::TorusLattice:
      return flat_point(p[0] + g.a * v1_[0] + g.b * v2_[0], p[1] + g.a * v1_[1] + g.b * v2_[1]);
    case GroupKind::KleinBottle: {
      const double y = (g.a % 2 == 0) ? p[1] : -p[1];
      return flat_point(p[0] + g.a, y);
    }
    default: break;
  }
  const int power = ((g.a % order_) + order_) % order_;
  AmbientPoint out = p;
  for (int i = 0; i < power; ++i) out = generator_(out);
  return out;
}

std::vector<GroupElement> DeckGroup::elements(int depth) const {
  std::vector<GroupElement> out{{0, 0}};
  switch (kind_) {
    case GroupKind::TorusLattice:
      for (int a = -depth; a <= depth; ++a)
        for (int b = -depth; b <= depth; ++b)
          if (a != 0 || b != 0) out.push_back({a, b});
      break;
    case GroupKind::KleinBottle:
      for (int a = 1; a <= depth; ++a) {
        out.push_back({a, 0});
        out.push_back({-a, 0});
      }
      break;
    default:
      for (int a = 1; a < order_; ++a) out.push_back({a, 0});
      break;
  }
  return out;
}

int DeckGroup::required_depth(const AmbientPoint& p, const AmbientPoint& q) const {
  if (!is_flat()) return 0;
  const double reach = 2.0 * (p.norm() + q.norm());
  if (kind_ == GroupKind::KleinBottle) return static_cast<int>(std::ceil(reach + 4.0));
  // |n1 v1 + n2 v2| >= s_min max(|n1|, |n2|) with s_min the smallest
  // singular value of [v1 v2].
  const double a = v1_[0] * v1_[0] + v1_[1] * v1_[1];
  const double c = v2_[0] * v2_[0] + v2_[1] * v2_[1];
  const double b = v1_[0] * v2_[0] + v1_[1] * v2_[1];
  const double disc = std::sqrt((a - c) * (a - c) + 4.0 * b * b);
  const double s_min = std::sqrt(std::max(0.0, 0.5 * (a + c - disc)));
  const double longest = std::sqrt(std::max(a, c));
  return static_cast<int>(std::ceil((reach + 4.0 * std::max(1.0, longest)) / s_min));
}

std::vector<GroupElement> DeckGroup::elements_for(const AmbientPoint& p,
                                                  const AmbientPoint& q) const {
  if (!is_flat()) return elements(0);
  const int need = required_depth(p, q);
  if (need > depth_) {
    std::ostringstream msg;
    msg << "enumeration depth " << depth_ << " below required " << need;
    throw DepthInsufficient(msg.str());
  }
  return elements(need);
}

std::string DeckGroup::label(const GroupElement& g) const {
  if (g.is_identity()) return "id";
  std::ostringstream out;
  if (kind_ == GroupKind::TorusLattice) {
    out << "t(" << g.a << "," << g.b << ")";
  } else if (g.a == 1) {
    out << "T";
  } else {
    out << "T^" << g.a;
  }
  return out.str();
}

}  // namespace radharm::quotient
