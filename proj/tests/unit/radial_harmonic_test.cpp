#include "radharm/radial_harmonic.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "radharm/errors.hpp"

namespace radharm {
namespace {

using std::numbers::pi;

TEST(Phi1, Examples) {
  EXPECT_DOUBLE_EQ(phi1(SpaceModel::sphere(3), pi / 2), 1.0);
  EXPECT_DOUBLE_EQ(phi1(SpaceModel::euclidean(4), 2.0), 0.125);
  EXPECT_NEAR(phi1(SpaceModel::complex_hyperbolic(2), 1.0), 0.3992773801824531, 1e-15);
  EXPECT_THROW(phi1(SpaceModel::sphere(3), 0.0), DomainViolation);
}

TEST(Phi0Closed, Examples) {
  EXPECT_NEAR(phi0_closed(SpaceModel::sphere(3), pi / 2), 0.0, 1e-15);
  EXPECT_NEAR(phi0_closed(SpaceModel::sphere(2), pi / 2), 0.0, 1e-15);
  EXPECT_NEAR(phi0_closed(SpaceModel::hyperbolic(3), 1.0), -1.3130352854993313, 1e-15);
}

TEST(Phi0Closed, OutsideTablesOrDomain) {
  EXPECT_THROW(phi0_closed(SpaceModel::sphere(6), 1.0), UnsupportedModel);
  EXPECT_THROW(phi0_closed(SpaceModel::sphere(3), pi), DomainViolation);
  EXPECT_THROW(RadialFunction::phi0_closed(SpaceModel::complex_projective(5)), UnsupportedModel);
}

TEST(Phi0Numeric, Examples) {
  EXPECT_NEAR(phi0_numeric(SpaceModel::sphere(3), pi / 2, pi / 4), 1.0, 1e-8);
  EXPECT_EQ(phi0_numeric(SpaceModel::octonion_plane(), 0.4, 0.4), 0.0);
  EXPECT_NEAR(phi0_numeric(SpaceModel::euclidean(2), std::exp(1.0), 1.0), 1.0, 1e-8);
  EXPECT_THROW(phi0_numeric(SpaceModel::sphere(3), 1.0, 0.0), DomainViolation);
}

TEST(Phi0Numeric, PropertyAntisymmetric) {
  testing::Gen gen(3001);
  for (int i = 0; i < testing::kCases; ++i) {
    const SpaceModel m = gen.model();
    const double r = gen.radius(m), s = gen.radius(m);
    EXPECT_DOUBLE_EQ(phi0_numeric(m, r, s), -phi0_numeric(m, s, r)) << m.id();
  }
}

TEST(Phi0Numeric, PropertyMatchesClosedDifferences) {
  testing::Gen gen(3002);
  const auto models = closed_form_catalogue();
  for (int i = 0; i < testing::kCases; ++i) {
    const SpaceModel m = models[static_cast<std::size_t>(gen.integer(0, static_cast<int>(models.size()) - 1))];
    const double r = gen.radius(m), ref = gen.radius(m);
    const double numeric = phi0_numeric(m, r, ref);
    const double closed = phi0_closed(m, r) - phi0_closed(m, ref);
    EXPECT_NEAR(numeric, closed, 1e-8 * std::max(1.0, std::abs(closed))) << m.id() << " r=" << r;
  }
}

TEST(Phi0, PropertyStrictlyIncreasingOnSortedGrids) {
  testing::Gen gen(3003);
  for (const SpaceModel& m : closed_form_catalogue()) {
    std::vector<double> grid(40);
    for (double& r : grid) r = gen.radius(m);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const double ref = grid[grid.size() / 2];
    for (std::size_t i = 1; i < grid.size(); ++i) {
      // Far out on the dual models the closed forms cancel down to rounding
      // level, so only non-decrease up to that level is observable.
      EXPECT_GT(phi0_closed(m, grid[i]) - phi0_closed(m, grid[i - 1]), -1e-14) << m.id();
      EXPECT_LT(phi0_numeric(m, grid[i - 1], ref), phi0_numeric(m, grid[i], ref)) << m.id();
    }
  }
}

TEST(Phi0Numeric, DivergesTowardsTheOrigin) {
  for (const char* id : {"S2", "S3", "CP2", "HP2", "OP2", "hS3", "hCP3", "E2", "E5"}) {
    const SpaceModel m = SpaceModel::parse(id);
    const double ref = 0.5 * std::min(m.domain_end(), 3.0);
    const double far = phi0_numeric(m, 1e-3, ref);
    const double near = phi0_numeric(m, 1e-6, ref);
    EXPECT_LT(near, far - 1.0) << id;
  }
}

TEST(LaplacianRadial, Examples) {
  const SpaceModel s3 = SpaceModel::sphere(3);
  EXPECT_NEAR(laplacian_radial(s3, RadialFunction::phi0_closed(s3), 1.0), 0.0, 1e-5);

  const auto constant = RadialFunction::custom(s3, [](double) { return 7.0; });
  EXPECT_NEAR(laplacian_radial(s3, constant, 1.0), 0.0, 1e-12);

  const SpaceModel s2 = SpaceModel::sphere(2);
  const auto square = RadialFunction::custom(s2, [](double r) { return r * r; });
  // -(2 + cot(pi/3) * 2 pi/3)
  EXPECT_NEAR(laplacian_radial(s2, square, pi / 3), -3.2091995761561452, 1e-6);
}

TEST(LaplacianRadial, StencilMustFitInDomain) {
  const SpaceModel s3 = SpaceModel::sphere(3);
  EXPECT_THROW(laplacian_radial(s3, RadialFunction::phi1(s3), 1e-5), DomainViolation);
  EXPECT_THROW(laplacian_radial(s3, RadialFunction::phi1(s3), pi - 1e-5), DomainViolation);
}

TEST(LaplacianRadial, PropertyGeneralSolutionsAreHarmonic) {
  testing::Gen gen(3004);
  const auto models = closed_form_catalogue();
  for (int i = 0; i < testing::kCases; ++i) {
    const SpaceModel m = models[static_cast<std::size_t>(gen.integer(0, static_cast<int>(models.size()) - 1))];
    const double a = gen.uniform(-3, 3), b = gen.uniform(-10, 10);
    const double r = gen.radius(m);
    const double scale = std::abs(a * log_derivative_theta(m, r) * phi1(m, r));
    EXPECT_LE(std::abs(laplacian_radial(m, general_solution(m, a, b), r)),
              1e-5 * std::max(1.0, scale))
        << m.id() << " r=" << r;
  }
}

TEST(GeneralSolution, Examples) {
  const SpaceModel s3 = SpaceModel::sphere(3);
  EXPECT_DOUBLE_EQ(general_solution(s3, 0.0, 5.0)(1.2), 5.0);
  EXPECT_DOUBLE_EQ(general_solution(s3, 1.0, 0.0)(1.2), phi0_closed(s3, 1.2));
  EXPECT_NEAR(general_solution(s3, 2.0, -1.0)(pi / 2), -1.0, 1e-15);
  EXPECT_THROW(general_solution(SpaceModel::sphere(7), 1.0, 0.0), UnsupportedModel);
}

TEST(RadialFunction, EvaluationIsDomainChecked) {
  const SpaceModel cp2 = SpaceModel::complex_projective(2);
  const auto f = RadialFunction::phi0_numeric(cp2, 0.5);
  EXPECT_EQ(f.kind(), RadialKind::Phi0Numeric);
  EXPECT_EQ(f.anchor(), 0.5);
  EXPECT_EQ(f(0.5), 0.0);
  EXPECT_THROW(f(pi / 2), DomainViolation);
  EXPECT_THROW(RadialFunction::phi0_numeric(cp2, 2.0), DomainViolation);
  EXPECT_DOUBLE_EQ(RadialFunction::theta(cp2)(0.3), theta(cp2, 0.3));
  EXPECT_FALSE(RadialFunction::phi1(cp2).anchor());
}

TEST(ClassifyBoundary, CompactModelsDivergeAtBothEnds) {
  for (const SpaceModel& m : positive_catalogue()) {
    const auto b = classify_boundary(m);
    EXPECT_EQ(b.at_origin, EndBehavior::Divergent) << m.id();
    EXPECT_EQ(b.at_far_end, EndBehavior::Divergent) << m.id();
    EXPECT_NE(b.far_end_detail.find("did not converge"), std::string::npos) << b.far_end_detail;
  }
}

TEST(ClassifyBoundary, NonCompactModelsHaveNoFarBoundary) {
  for (const char* id : {"hS3", "hCP2", "hOP2", "E2", "E4"}) {
    const auto b = classify_boundary(SpaceModel::parse(id));
    EXPECT_EQ(b.at_origin, EndBehavior::Divergent) << id;
    EXPECT_EQ(b.at_far_end, EndBehavior::NoBoundary) << id;
  }
  EXPECT_EQ(to_string(EndBehavior::Extendable), "Extendable");
}

TEST(VerifyTableEntry, Examples) {
  for (const char* id : {"S3", "CP2", "hS2"}) {
    const auto v = verify_table_entry(SpaceModel::parse(id));
    EXPECT_LT(v.max_ode_residual, 1e-8) << id;
    EXPECT_LT(v.max_match_residual, 1e-8) << id;
    EXPECT_FALSE(v.discrepancy) << id;
    EXPECT_EQ(v.grid_points, 50);
  }
  EXPECT_THROW(verify_table_entry(SpaceModel::sphere(6)), UnsupportedModel);
}

TEST(VerifyTableEntry, EveryRowAgreesWithQuadratureOracle) {
  const auto all = verify_all_table_entries();
  ASSERT_EQ(all.size(), closed_form_catalogue().size());
  for (const auto& v : all) {
    EXPECT_LE(v.max_ode_residual, 1e-6) << v.model.id();
    EXPECT_LE(v.max_match_residual, 1e-8) << v.model.id();
    EXPECT_LE(v.max_laplacian_residual, 1e-5) << v.model.id();
    EXPECT_FALSE(v.discrepancy) << v.model.id();
    EXPECT_FALSE(v.correction) << v.model.id();
  }
}

TEST(VerifyClosedForm, FlippedSignIsDetectedAndRepaired) {
  ClosedForm form = *find_closed_form(SpaceModel::hyperbolic(5));
  form.terms[0].coefficient *= -1.0;  // -2/3 coth instead of +2/3 coth
  const auto v = verify_closed_form(form);
  EXPECT_TRUE(v.discrepancy);
  ASSERT_TRUE(v.correction);
  EXPECT_EQ(v.correction->flipped_term, 0);
  EXPECT_NEAR(v.correction->factor, 1.0, 1e-9);
  EXPECT_LT(v.correction->residual, 1e-6);
}

TEST(VerifyClosedForm, MissingOverallFactorIsDetectedAndRepaired) {
  ClosedForm form = *find_closed_form(SpaceModel::quaternion_hyperbolic(3));
  form.outer_factor = 0.5;
  const auto v = verify_closed_form(form);
  EXPECT_TRUE(v.discrepancy);
  ASSERT_TRUE(v.correction);
  EXPECT_EQ(v.correction->flipped_term, -1);
  EXPECT_NEAR(v.correction->factor, 2.0, 1e-9);
  EXPECT_LT(v.correction->residual, 1e-6);
}

TEST(VerifyClosedForm, UnrepairableEntryKeepsLargeResidual) {
  ClosedForm form = *find_closed_form(SpaceModel::sphere(4));
  form.terms[1].power = 4;  // sec^4 instead of sec^2
  const auto v = verify_closed_form(form);
  EXPECT_TRUE(v.discrepancy);
  ASSERT_TRUE(v.correction);
  EXPECT_GT(v.correction->residual, 1e-6);
  EXPECT_NE(v.correction->description.find("no single"), std::string::npos);
}

}  // namespace
}  // namespace radharm
