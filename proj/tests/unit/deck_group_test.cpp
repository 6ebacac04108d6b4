#include "radharm/deck_group.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "radharm/errors.hpp"

namespace radharm::quotient {
namespace {

using std::numbers::pi;

AmbientPoint random_sphere_point(testing::Gen& gen, std::size_t n) {
  return AmbientPoint{gen.unit_vector(n)};
}

TEST(Ambient, CoordinateCounts) {
  EXPECT_EQ((Ambient{AmbientKind::Flat, 2}.coordinate_count()), 2u);
  EXPECT_EQ((Ambient{AmbientKind::Sphere, 3}.coordinate_count()), 4u);
  EXPECT_EQ((Ambient{AmbientKind::ComplexProjective, 3}.coordinate_count()), 8u);
}

TEST(ValidatePoint, RejectsMalformedPoints) {
  const Ambient s3{AmbientKind::Sphere, 3};
  EXPECT_NO_THROW(validate_point(s3, basis_vector(4, 0)));
  EXPECT_THROW(validate_point(s3, basis_vector(3, 0)), InvalidPoint);
  EXPECT_THROW(validate_point(s3, AmbientPoint{{1.0, 1e-5, 0.0, 0.0}}), InvalidPoint);
  EXPECT_THROW(validate_point(s3, AmbientPoint{{std::nan(""), 0.0, 0.0, 0.0}}), InvalidPoint);
  const Ambient flat{AmbientKind::Flat, 2};
  EXPECT_NO_THROW(validate_point(flat, flat_point(3.0, -7.0)));
  EXPECT_THROW(validate_point(flat, flat_point(INFINITY, 0.0)), InvalidPoint);
}

TEST(AmbientDistance, Examples) {
  EXPECT_DOUBLE_EQ(ambient_distance({AmbientKind::Flat, 2}, flat_point(0, 0), flat_point(3, 4)), 5.0);
  EXPECT_NEAR(ambient_distance({AmbientKind::Sphere, 2}, basis_vector(3, 0), basis_vector(3, 1)),
              pi / 2, 1e-15);
  const double s = 1.0 / std::sqrt(2.0);
  const AmbientPoint z = from_complex({s, s, 0.0, 0.0});
  EXPECT_NEAR(ambient_distance({AmbientKind::ComplexProjective, 3}, basis_vector(8, 0), z), pi / 4,
              1e-15);
  EXPECT_THROW(ambient_distance({AmbientKind::Sphere, 2}, basis_vector(3, 0), basis_vector(4, 1)),
               InvalidPoint);
}

TEST(AmbientDistance, SmallAndNearAntipodalAnglesAreAccurate) {
  const Ambient s2{AmbientKind::Sphere, 2};
  const double t = 1e-9;
  const AmbientPoint near{{std::cos(t), std::sin(t), 0.0}};
  EXPECT_NEAR(ambient_distance(s2, basis_vector(3, 0), near), t, 1e-20);
  const AmbientPoint far{{-std::cos(t), std::sin(t), 0.0}};
  EXPECT_NEAR(ambient_distance(s2, basis_vector(3, 0), far), pi - t, 1e-15);
}

TEST(AmbientDistance, PropertyProjectiveGaugeInvariance) {
  testing::Gen gen(4001);
  const Ambient cp3{AmbientKind::ComplexProjective, 3};
  for (int i = 0; i < testing::kCases; ++i) {
    const AmbientPoint p = random_sphere_point(gen, 8), q = random_sphere_point(gen, 8);
    const std::complex<double> phase = std::polar(1.0, gen.uniform(0, 2 * pi));
    std::vector<std::complex<double>> rotated;
    for (std::size_t j = 0; j < 4; ++j) rotated.push_back(phase * q.complex_at(j));
    const double base = ambient_distance(cp3, p, q);
    EXPECT_NEAR(ambient_distance(cp3, p, from_complex(rotated)), base, 1e-12) << "case " << i;
    EXPECT_LE(base, pi / 2 + 1e-15);
    EXPECT_NEAR(ambient_distance(cp3, canonical_representative(p), q), base, 1e-12);
  }
}

TEST(CanonicalRepresentative, FirstNonzeroCoordinateIsRealPositive) {
  const AmbientPoint z = from_complex({{0.0, 0.0}, {0.0, -0.6}, {0.8, 0.0}, {0.0, 0.0}});
  const AmbientPoint c = canonical_representative(z);
  EXPECT_NEAR(c[2], 0.6, 1e-15);
  EXPECT_NEAR(c[3], 0.0, 1e-15);
  EXPECT_NEAR(c.norm(), 1.0, 1e-15);
}

TEST(DeckGroup, Orders) {
  EXPECT_EQ(DeckGroup::torus().order(), 0);
  EXPECT_EQ(DeckGroup::klein_bottle().order(), 0);
  EXPECT_EQ(DeckGroup::antipodal(3).order(), 2);
  EXPECT_EQ(DeckGroup::lens_z4(2).order(), 4);
  EXPECT_EQ(DeckGroup::cp_involution(1).order(), 2);
  EXPECT_EQ(DeckGroup::lens_z4(2).ambient(), (Ambient{AmbientKind::Sphere, 5}));
  EXPECT_EQ(DeckGroup::cp_involution(2).ambient(), (Ambient{AmbientKind::ComplexProjective, 5}));
  EXPECT_THROW(DeckGroup::torus({1.0, 0.0}, {2.0, 0.0}), DomainViolation);
}

TEST(DeckGroup, ElementsStartWithIdentity) {
  const auto torus = DeckGroup::torus().elements(1);
  EXPECT_EQ(torus.size(), 9u);
  EXPECT_TRUE(torus.front().is_identity());
  const auto klein = DeckGroup::klein_bottle().elements(2);
  EXPECT_EQ(klein.size(), 5u);
  EXPECT_TRUE(klein.front().is_identity());
  EXPECT_EQ(DeckGroup::lens_z4().elements(0).size(), 4u);
  EXPECT_EQ(DeckGroup::cp_involution().elements(99).size(), 2u);
}

TEST(DeckGroup, Labels) {
  const DeckGroup klein = DeckGroup::klein_bottle();
  EXPECT_EQ(klein.label({0, 0}), "id");
  EXPECT_EQ(klein.label({1, 0}), "T");
  EXPECT_EQ(klein.label({-2, 0}), "T^-2");
  EXPECT_EQ(DeckGroup::torus().label({1, -1}), "t(1,-1)");
  EXPECT_EQ(to_string(GroupKind::LensZ4), "LensZ4");
}

TEST(DeckGroup, KleinBottleAction) {
  const DeckGroup g = DeckGroup::klein_bottle();
  const AmbientPoint p = flat_point(0.3, 0.7);
  EXPECT_EQ(g.apply({1, 0}, p), flat_point(1.3, -0.7));
  EXPECT_EQ(g.apply({2, 0}, p), flat_point(2.3, 0.7));
  EXPECT_EQ(g.apply({-1, 0}, p), flat_point(-0.7, -0.7));
}

TEST(DeckGroup, LensSquareIsMinusIdentity) {
  testing::Gen gen(4002);
  const DeckGroup g = DeckGroup::lens_z4(2);
  for (int i = 0; i < 20; ++i) {
    const AmbientPoint p = random_sphere_point(gen, 6);
    const AmbientPoint t2 = g.apply({2, 0}, p);
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(t2[j], -p[j]);
    EXPECT_EQ(g.apply({4, 0}, p), p);
  }
}

TEST(DeckGroup, InvolutionSquareIsProjectiveIdentity) {
  testing::Gen gen(4003);
  const DeckGroup g = DeckGroup::cp_involution(1);
  for (int i = 0; i < 20; ++i) {
    const AmbientPoint z = random_sphere_point(gen, 8);
    const AmbientPoint tz = g.generator_image(z);
    const AmbientPoint t2z = g.generator_image(tz);
    EXPECT_NEAR(ambient_distance(g.ambient(), z, t2z), 0.0, 1e-7);
    EXPECT_NEAR(ambient_distance(g.ambient(), z, tz), pi / 2, 1e-12);
  }
}

TEST(DeckGroup, RequiredDepth) {
  const DeckGroup klein = DeckGroup::klein_bottle();
  // ceil(2 * (0 + sqrt(0.4)) + 4)
  EXPECT_EQ(klein.required_depth(flat_point(0, 0), flat_point(0.6, 0.2)), 6);
  EXPECT_EQ(DeckGroup::lens_z4().required_depth(basis_vector(4, 0), basis_vector(4, 1)), 0);
  const DeckGroup shallow = DeckGroup::klein_bottle(3);
  EXPECT_THROW(shallow.elements_for(flat_point(0, 0), flat_point(0.6, 0.2)), DepthInsufficient);
  EXPECT_THROW(DeckGroup::torus({1, 0}, {0, 1}, 2).elements_for(flat_point(0, 0), flat_point(5, 5)),
               DepthInsufficient);
}

TEST(DeckGroup, WithGeneratorReplacesFiniteAction) {
  const DeckGroup g = DeckGroup::lens_z4().with_generator([](const AmbientPoint& p) { return p; });
  EXPECT_EQ(g.apply({1, 0}, basis_vector(4, 1)), basis_vector(4, 1));
  EXPECT_EQ(g.order(), 4);
}

}  // namespace
}  // namespace radharm::quotient
