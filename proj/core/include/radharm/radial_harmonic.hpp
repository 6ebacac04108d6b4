#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "radharm/closed_forms.hpp"
#include "radharm/numeric.hpp"
#include "radharm/space_models.hpp"

namespace radharm {

enum class RadialKind { Phi1, Phi0Closed, Phi0Numeric, Theta, General, Custom };

/// A function of geodesic distance on (0, domain_end) of a model space.
/// Evaluation outside the open domain throws DomainViolation.
class RadialFunction {
 public:
  RadialFunction(SpaceModel model, RadialKind kind, numeric::RealFunction evaluator,
                 std::optional<double> anchor = std::nullopt);

  static RadialFunction phi1(const SpaceModel& model);
  static RadialFunction phi0_closed(const SpaceModel& model);
  static RadialFunction phi0_numeric(const SpaceModel& model, double r_ref,
                                     double tol = numeric::kDefaultTolerance);
  static RadialFunction theta(const SpaceModel& model);
  static RadialFunction custom(const SpaceModel& model, numeric::RealFunction fn);

  double operator()(double r) const;

  const SpaceModel& model() const noexcept { return model_; }
  RadialKind kind() const noexcept { return kind_; }
  std::optional<double> anchor() const noexcept { return anchor_; }
  numeric::Interval domain() const { return model_.domain(); }

  /// Unchecked evaluator, for handing to numeric kernels.
  const numeric::RealFunction& evaluator() const noexcept { return evaluator_; }

 private:
  SpaceModel model_;
  RadialKind kind_;
  numeric::RealFunction evaluator_;
  std::optional<double> anchor_;
};

/// phi1 = 1 / Theta.
double phi1(const SpaceModel& model, double r);

/// The transcribed table antiderivative of phi1. UnsupportedModel outside
/// the tables.
double phi0_closed(const SpaceModel& model, double r);

/// Integral of phi1 from r_ref to r; antisymmetric in (r, r_ref).
double phi0_numeric(const SpaceModel& model, double r, double r_ref,
                    double tol = numeric::kDefaultTolerance);

/// -(f'' + (Theta'/Theta) f') by finite differences. The second derivative
/// is Richardson-extrapolated from stencils at h and 2h.
double laplacian_radial(const SpaceModel& model, const RadialFunction& f, double r);

/// r -> a * phi0_closed(r) + b.
RadialFunction general_solution(const SpaceModel& model, double a, double b);

enum class EndBehavior { Divergent, Extendable, NoBoundary };

std::string to_string(EndBehavior behavior);

struct BoundaryClassification {
  EndBehavior at_origin = EndBehavior::Divergent;
  EndBehavior at_far_end = EndBehavior::NoBoundary;
  // Messages from the quadrature failures that decided each end.
  std::string origin_detail;
  std::string far_end_detail;
};

/// Decides whether phi1 is integrable next to each end of the domain by
/// attempting the quadrature; NonConvergence means Divergent. Non-compact
/// far ends (sigma <= 0) are NoBoundary.
BoundaryClassification classify_boundary(const SpaceModel& model,
                                         double tol = numeric::kDefaultTolerance);

/// Sign/factor repair of a table entry suggested by the quadrature oracle.
struct TableCorrection {
  double factor = 1.0;      // multiply the (possibly sign-flipped) entry by this
  int flipped_term = -1;    // index of the term whose sign is flipped, or -1
  double residual = 0.0;    // scaled residual after the repair
  std::string description;
};

/// Residuals are scaled: |x - expected| / max(1, |expected|) for the ODE and
/// difference checks, and |lap| / max(1, |Theta'/Theta * phi1|) for the
/// harmonicity check, so rows whose phi1 reaches 1e12 are held to the same
/// relative standard as rows of order one. Raw absolute maxima are kept too.
struct TableVerification {
  SpaceModel model;
  std::string formula;
  int grid_points = 0;
  double r_ref = 0.0;
  double max_ode_residual = 0.0;
  double max_match_residual = 0.0;
  double max_laplacian_residual = 0.0;
  double max_ode_abs = 0.0;
  double max_match_abs = 0.0;
  double max_laplacian_abs = 0.0;
  bool discrepancy = false;
  std::optional<TableCorrection> correction = std::nullopt;
};

inline constexpr int kVerificationGridPoints = 50;
inline constexpr double kDiscrepancyThreshold = 1e-6;

/// Checks a closed form against phi1 (finite differences) and against the
/// quadrature oracle on 50 points of (0.1 D', 0.9 D'), D' = min(D, 3).
/// Any entry may be passed, including deliberately altered ones.
TableVerification verify_closed_form(const ClosedForm& form,
                                     double tol = numeric::kDefaultTolerance);

TableVerification verify_table_entry(const SpaceModel& model,
                                     double tol = numeric::kDefaultTolerance);

/// verify_table_entry over closed_form_catalogue(), one task per row.
std::vector<TableVerification> verify_all_table_entries(
    double tol = numeric::kDefaultTolerance);

}  // namespace radharm
