#include "radharm/space_models.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "radharm/errors.hpp"
#include "radharm/special_functions.hpp"

namespace radharm {
namespace {

using std::numbers::pi;

TEST(SpaceModelIds, RoundTrip) {
  for (const char* id : {"S2", "S3", "S17", "CP1", "CP4", "HP1", "HP3", "OP2", "hS2", "hS5",
                         "hCP2", "hHP3", "hOP2", "E2", "E5", "E12"}) {
    EXPECT_EQ(SpaceModel::parse(id).id(), id);
  }
}

TEST(SpaceModelIds, RejectsMalformedIds) {
  for (const char* id : {"", "S", "S1", "S02", "s3", "CP0", "CP", "HP0", "OP3", "OP1", "hOP3",
                         "hE2", "E1", "E0", "S+3", "S-3", " S3", "S3 ", "CP2x", "hh S3", "hhS3",
                         "X2", "S99999999999"}) {
    EXPECT_THROW(SpaceModel::parse(id), UnsupportedModel) << "'" << id << "'";
  }
}

TEST(SpaceModel, StructuralInvariants) {
  std::vector<SpaceModel> all = positive_catalogue();
  for (const SpaceModel& m : positive_catalogue()) all.push_back(m.dual());
  for (int m = 2; m <= 6; ++m) all.push_back(SpaceModel::euclidean(m));
  for (const SpaceModel& m : all) {
    SCOPED_TRACE(m.id());
    const DensityProfile d = m.density();
    EXPECT_EQ(d.sine_exponent, m.dimension() - 1);
    switch (m.family()) {
      case Family::ComplexProjective:
      case Family::ComplexHyperbolic:
        EXPECT_EQ(m.dimension(), 2 * *m.projective_index());
        EXPECT_EQ(d.cosine_exponent, 1);
        break;
      case Family::QuaternionProjective:
      case Family::QuaternionHyperbolic:
        EXPECT_EQ(m.dimension(), 4 * *m.projective_index());
        EXPECT_EQ(d.cosine_exponent, 3);
        break;
      case Family::OctonionPlane:
      case Family::OctonionHyperbolic:
        EXPECT_EQ(m.dimension(), 16);
        EXPECT_EQ(d.cosine_exponent, 7);
        break;
      default: EXPECT_EQ(d.cosine_exponent, 0);
    }
    if (m.sigma() > 0) {
      EXPECT_EQ(d.trig_kind, TrigKind::Circular);
      EXPECT_EQ(m.domain_end(), m.family() == Family::Sphere ? pi : pi / 2);
      EXPECT_NE(m.cut_locus().kind, CutLocus::Kind::Empty);
    } else {
      EXPECT_EQ(d.trig_kind, m.sigma() < 0 ? TrigKind::Hyperbolic : TrigKind::Polynomial);
      EXPECT_TRUE(std::isinf(m.domain_end()));
      EXPECT_EQ(m.cut_locus().kind, CutLocus::Kind::Empty);
    }
    EXPECT_EQ(m.dual().dual(), m);
    EXPECT_EQ(m.dual().dimension(), m.dimension());
    EXPECT_EQ(m.dual().sigma(), -m.sigma());
  }
}

TEST(SpaceModel, CutLocusDescriptors) {
  EXPECT_EQ(SpaceModel::sphere(4).cut_locus().kind, CutLocus::Kind::AntipodalPoint);
  const CutLocus cp3 = SpaceModel::complex_projective(3).cut_locus();
  EXPECT_EQ(cp3.kind, CutLocus::Kind::ProjectiveHyperplane);
  EXPECT_EQ(cp3.hyperplane_index, 2);
  EXPECT_EQ(SpaceModel::octonion_plane().cut_locus().kind, CutLocus::Kind::Sphere7);
  EXPECT_EQ(SpaceModel::euclidean(3).cut_locus().describe(), "empty");
}

TEST(Theta, Examples) {
  EXPECT_DOUBLE_EQ(theta(SpaceModel::sphere(2), pi / 2), 1.0);
  EXPECT_NEAR(theta(SpaceModel::complex_projective(2), pi / 4), 0.25, 1e-15);
  // sinh(1)^7 cosh(1)^3, evaluated at 40 digits.
  EXPECT_NEAR(theta(SpaceModel::quaternion_hyperbolic(2), 1.0), 11.375000655318738, 1e-13);
  EXPECT_DOUBLE_EQ(theta(SpaceModel::euclidean(4), 2.0), 8.0);
}

TEST(Theta, OutsideOpenDomainIsRejected) {
  const SpaceModel s3 = SpaceModel::sphere(3);
  for (double r : {0.0, -0.1, pi, 4.0, std::nan("")}) {
    EXPECT_THROW(theta(s3, r), DomainViolation) << r;
    EXPECT_THROW(theta_tilde(s3, r), DomainViolation) << r;
    EXPECT_THROW(log_derivative_theta(s3, r), DomainViolation) << r;
  }
  EXPECT_THROW(theta(SpaceModel::complex_projective(2), pi / 2), DomainViolation);
  EXPECT_NO_THROW(theta(SpaceModel::hyperbolic(3), 50.0));
}

TEST(ThetaTilde, Examples) {
  EXPECT_NEAR(theta_tilde(SpaceModel::sphere(3), 1e-4), 1.0, 1e-8);
  EXPECT_DOUBLE_EQ(theta_tilde(SpaceModel::euclidean(5), 2.0), 1.0);
  // sin(0.5) cos(0.5) / 0.5
  EXPECT_NEAR(theta_tilde(SpaceModel::complex_projective(1), 0.5), 0.8414709848078965, 1e-15);
}

TEST(LogDerivativeTheta, Examples) {
  EXPECT_NEAR(log_derivative_theta(SpaceModel::sphere(4), pi / 2), 0.0, 1e-15);
  EXPECT_NEAR(log_derivative_theta(SpaceModel::complex_projective(2), pi / 4), 2.0, 1e-14);
  EXPECT_DOUBLE_EQ(log_derivative_theta(SpaceModel::euclidean(3), 4.0), 0.5);
}

TEST(LogDerivativeTheta, PropertyMatchesDifferenceQuotient) {
  testing::Gen gen(2001);
  for (int i = 0; i < testing::kCases; ++i) {
    const SpaceModel m = gen.model();
    const double r = gen.radius(m);
    const auto log_theta = [&m](double s) { return std::log(theta(m, s)); };
    const double fd =
        numeric::derivative(log_theta, r, numeric::DerivativeOrder::First, 0.0, m.domain());
    const double exact = log_derivative_theta(m, r);
    EXPECT_NEAR(fd, exact, 1e-6 * std::max(1.0, std::abs(exact))) << m.id() << " r=" << r;
  }
}

TEST(Theta, PropertyPositiveOnDomain) {
  for (const SpaceModel& m : positive_catalogue()) {
    for (double r : numeric::linspace(1e-6, m.domain_end() - 1e-6, 2001)) {
      ASSERT_GT(theta(m, r), 0.0) << m.id() << " r=" << r;
      ASSERT_GT(theta(m.dual(), r), 0.0) << m.dual().id() << " r=" << r;
    }
  }
}

TEST(ThetaTilde, PropertyQuadraticApproachToOne) {
  std::vector<SpaceModel> all = positive_catalogue();
  for (const SpaceModel& m : positive_catalogue()) all.push_back(m.dual());
  for (const SpaceModel& m : all) {
    const double c = std::abs(theta_tilde(m, 1e-2) - 1.0) / 1e-4;
    const double at_small = std::abs(theta_tilde(m, 1e-3) - 1.0);
    EXPECT_LE(at_small, 1.01 * c * 1e-6 + 1e-14) << m.id();
    EXPECT_GT(c, 0.0) << m.id();
  }
}

TEST(Theta, PropertyDualIsHyperbolicSubstitution) {
  testing::Gen gen(2002);
  const auto compact = positive_catalogue();
  for (int i = 0; i < testing::kCases; ++i) {
    const SpaceModel m = compact[static_cast<std::size_t>(gen.integer(0, static_cast<int>(compact.size()) - 1))];
    const double r = gen.uniform(1e-3, 1.0);
    const DensityProfile d = m.density();
    const double expected = std::pow(std::sinh(r), d.sine_exponent) * std::pow(std::cosh(r), d.cosine_exponent);
    EXPECT_NEAR(theta(m.dual(), r) / expected, 1.0, 1e-14) << m.id() << " r=" << r;
  }
}

TEST(ModelVolume, Examples) {
  EXPECT_NEAR(model_volume(SpaceModel::sphere(2)) / (4 * pi), 1.0, 1e-9);
  EXPECT_NEAR(model_volume(SpaceModel::complex_projective(1)) / pi, 1.0, 1e-9);
  EXPECT_NEAR(model_volume(SpaceModel::sphere(4)) / (8 * pi * pi / 3), 1.0, 1e-9);
}

TEST(ModelVolume, SpheresMatchGammaFormula) {
  for (int m = 2; m <= 8; ++m) {
    const double expected = 2 * std::pow(pi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
    EXPECT_NEAR(model_volume(SpaceModel::sphere(m)) / expected, 1.0, 1e-9) << "m=" << m;
  }
}

TEST(ModelVolume, ProjectiveFamiliesMatchFrozenValues) {
  // pi^k / k! for CP^k, pi^(2k) / (2k+1)! for HP^k, 6 pi^8 / 11! for OP2.
  const std::pair<const char*, double> cases[] = {
      {"CP2", 4.934802200544679},      {"CP3", 5.16771278004997},
      {"CP4", 4.058712126416768},      {"HP1", 1.6449340668482264},
      {"HP2", 0.8117424252833536},     {"HP3", 0.19075182412208421},
      {"HP4", 0.026147847817654800},   {"OP2", 0.0014262462445993528},
  };
  for (const auto& [id, expected] : cases)
    EXPECT_NEAR(model_volume(SpaceModel::parse(id)) / expected, 1.0, 1e-9) << id;
}

TEST(ModelVolume, NonCompactModelsHaveNoTotal) {
  EXPECT_THROW(model_volume(SpaceModel::hyperbolic(3)), UnsupportedModel);
  EXPECT_THROW(model_volume(SpaceModel::euclidean(2)), UnsupportedModel);
}

TEST(BallVolume, ClosedFormsAndMonotonicity) {
  EXPECT_NEAR(ball_volume(SpaceModel::hyperbolic(2), 1.5), 2 * pi * (std::cosh(1.5) - 1), 1e-11);
  EXPECT_NEAR(ball_volume(SpaceModel::euclidean(3), 2.0), 4 * pi * 8 / 3, 1e-11);
  EXPECT_NEAR(ball_volume(SpaceModel::sphere(2), pi / 2), 2 * pi, 1e-12);
  const SpaceModel cp2 = SpaceModel::complex_projective(2);
  double previous = 0.0;
  for (double r : numeric::linspace(0.1, pi / 2, 15)) {
    const double v = ball_volume(cp2, r);
    EXPECT_GT(v, previous);
    previous = v;
  }
  EXPECT_THROW(ball_volume(cp2, 2.0), DomainViolation);
  EXPECT_THROW(ball_volume(cp2, 0.0), DomainViolation);
  EXPECT_THROW(ball_volume(SpaceModel::hyperbolic(2), std::numeric_limits<double>::infinity()),
               DomainViolation);
}

}  // namespace
}  // namespace radharm
