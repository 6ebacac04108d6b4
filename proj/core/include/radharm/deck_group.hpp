#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace radharm::quotient {

/// Where points live: the plane, the unit sphere S^m in R^(m+1), or complex
/// projective space CP^n represented by unit vectors of C^(n+1).
enum class AmbientKind { Flat, Sphere, ComplexProjective };

struct Ambient {
  AmbientKind kind;
  int dimension;  // 2 for Flat, m for S^m, n for CP^n (complex dimension)

  /// Number of real coordinates of a representative.
  std::size_t coordinate_count() const;
  bool operator==(const Ambient&) const = default;
};

/// Real coordinates of a point or of a representative. Complex points are
/// stored interleaved as (Re z1, Im z1, Re z2, Im z2, ...), i.e. C^n = R^2n.
struct AmbientPoint {
  std::vector<double> coords;

  std::size_t size() const noexcept { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }
  double norm() const;
  std::complex<double> complex_at(std::size_t i) const {
    return {coords[2 * i], coords[2 * i + 1]};
  }
  bool operator==(const AmbientPoint&) const = default;
};

AmbientPoint flat_point(double x, double y);
AmbientPoint from_complex(const std::vector<std::complex<double>>& z);
/// e_i in R^n.
AmbientPoint basis_vector(std::size_t n, std::size_t i);

/// Projective representative scaled so its first nonzero complex coordinate
/// is real and positive.
AmbientPoint canonical_representative(const AmbientPoint& z);

/// Throws InvalidPoint unless p has the right length, is finite, and has
/// unit norm (within 1e-12) where the ambient requires it.
void validate_point(const Ambient& ambient, const AmbientPoint& p);

/// Euclidean norm, great-circle angle, or Fubini-Study distance
/// arccos |<p, q>| (projective distances are at most pi/2).
double ambient_distance(const Ambient& ambient, const AmbientPoint& p,
                        const AmbientPoint& q);

enum class GroupKind { TorusLattice, KleinBottle, Antipodal, LensZ4, CPInvolution };

std::string to_string(GroupKind kind);

/// Lattice coefficients (a, b) for the torus, the power a of T for the
/// Klein bottle and the finite groups.
struct GroupElement {
  int a = 0;
  int b = 0;

  bool is_identity() const noexcept { return a == 0 && b == 0; }
  bool operator==(const GroupElement&) const = default;
};

/// A discrete group of isometries acting freely on an ambient model, with
/// enough structure to enumerate the elements that can realize a minimum.
class DeckGroup {
 public:
  using Generator = std::function<AmbientPoint(const AmbientPoint&)>;

  static constexpr int kDefaultDepth = 64;

  /// Translations by the lattice spanned by v1 and v2.
  static DeckGroup torus(std::array<double, 2> v1 = {1.0, 0.0},
                         std::array<double, 2> v2 = {0.0, 1.0},
                         int depth = kDefaultDepth);
  /// Generated by T(x, y) = (x + 1, -y).
  static DeckGroup klein_bottle(int depth = kDefaultDepth);
  /// {id, -id} on S^m.
  static DeckGroup antipodal(int m);
  /// T(x1, x2, x3, x4, ...) = (-x2, x1, -x4, x3, ...) on S^(2k+1).
  static DeckGroup lens_z4(int k = 1);
  /// <T> with T(z) = (-conj z2, conj z1, ..., -conj z(2k+2), conj z(2k+1))
  /// on CP^(2k+1).
  static DeckGroup cp_involution(int k = 1);

  /// Same group structure with the finite generator replaced; lets tests
  /// build deliberately broken actions.
  DeckGroup with_generator(Generator generator) const;

  GroupKind kind() const noexcept { return kind_; }
  const Ambient& ambient() const noexcept { return ambient_; }
  int enumeration_depth() const noexcept { return depth_; }
  bool is_flat() const noexcept { return ambient_.kind == AmbientKind::Flat; }
  /// Number of elements for finite groups, 0 for the infinite flat groups.
  int order() const noexcept { return order_; }
  const std::array<double, 2>& lattice_v1() const noexcept { return v1_; }
  const std::array<double, 2>& lattice_v2() const noexcept { return v2_; }

  /// Natural basepoint: the origin, or e1.
  AmbientPoint basepoint() const;

  AmbientPoint apply(const GroupElement& g, const AmbientPoint& p) const;
  AmbientPoint generator_image(const AmbientPoint& p) const { return generator_(p); }

  /// Elements with |coefficients| <= depth (flat) or the whole group, the
  /// identity first.
  std::vector<GroupElement> elements(int depth) const;

  /// Translation depth beyond which no element can realize
  /// min over gamma of d(p, gamma q), including gamma != id minima. 0 for
  /// finite groups.
  int required_depth(const AmbientPoint& p, const AmbientPoint& q) const;

  /// elements(required_depth(p, q)); DepthInsufficient if that exceeds the
  /// enumeration depth.
  std::vector<GroupElement> elements_for(const AmbientPoint& p,
                                         const AmbientPoint& q) const;

  std::string label(const GroupElement& g) const;

 private:
  DeckGroup(GroupKind kind, Ambient ambient, int depth, int order);

  GroupKind kind_;
  Ambient ambient_;
  int depth_;
  int order_;
  std::array<double, 2> v1_{1.0, 0.0};
  std::array<double, 2> v2_{0.0, 1.0};
  Generator generator_;
};

}  // namespace radharm::quotient
