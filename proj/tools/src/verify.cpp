#include <algorithm>
#include <cmath>
#include <sstream>

#include "commands.hpp"
#include "format.hpp"
#include "radharm/errors.hpp"
#include "radharm/quotient_geometry.hpp"
#include "radharm/radial_harmonic.hpp"
#include "radharm/topology_bounds.hpp"

namespace radharm::cli {

namespace {

constexpr double kOdeLimit = 1e-6;
constexpr double kMatchLimit = 1e-8;
constexpr double kLaplacianLimit = 1e-5;
constexpr double kDensityLimit = 1e-6;
constexpr double kInjectivityLimit = 1e-12;

enum class Status { Pass, Warn, Fail };

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void add(Status status, const std::string& check, const std::string& detail) {
    static constexpr const char* kNames[] = {"PASS", "WARN", "FAIL"};
    out_ << kNames[static_cast<int>(status)] << ' ' << check << ' ' << detail << '\n';
    ++counts_[static_cast<int>(status)];
  }

  int finish() {
    out_ << "summary: " << counts_[0] << " pass, " << counts_[1] << " warn, " << counts_[2]
         << " fail\n";
    return counts_[2] == 0 ? 0 : 1;
  }

 private:
  std::ostream& out_;
  int counts_[3] = {0, 0, 0};
};

void report_table(Report& report, const TableVerification& v) {
  std::ostringstream detail;
  detail << "ode=" << format_residual(v.max_ode_residual)
         << " match=" << format_residual(v.max_match_residual)
         << " laplacian=" << format_residual(v.max_laplacian_residual);
  const std::string check = "table " + v.model.id();
  const bool within = v.max_ode_residual <= kOdeLimit && v.max_match_residual <= kMatchLimit &&
                      v.max_laplacian_residual <= kLaplacianLimit;
  if (v.discrepancy) {
    if (v.correction && v.correction->residual <= kOdeLimit) {
      detail << " transcribed entry disagrees with the quadrature oracle; corrected by: "
             << v.correction->description << " (residual "
             << format_residual(v.correction->residual) << ")";
      report.add(Status::Warn, check, detail.str());
    } else {
      if (v.correction) detail << " " << v.correction->description;
      report.add(Status::Fail, check, detail.str());
    }
    return;
  }
  report.add(within ? Status::Pass : Status::Fail, check, detail.str());
}

void check_boundary(Report& report, const SpaceModel& model, double tol) {
  const auto b = classify_boundary(model, tol);
  const bool ok = b.at_origin == EndBehavior::Divergent && b.at_far_end == EndBehavior::Divergent;
  report.add(ok ? Status::Pass : Status::Fail, "boundary " + model.id(),
             "origin=" + to_string(b.at_origin) + " far_end=" + to_string(b.at_far_end));
}

// Closed-form Theta'/Theta against a difference quotient of log Theta.
void check_density(Report& report, const SpaceModel& model) {
  const double span = std::min(model.domain_end(), 3.0);
  const auto log_theta = [&model](double r) { return std::log(theta(model, r)); };
  double worst = 0.0;
  for (double r : numeric::linspace(0.1 * span, 0.9 * span, 20)) {
    const double expected = log_derivative_theta(model, r);
    const double fd = numeric::derivative(log_theta, r, numeric::DerivativeOrder::First, 0.0,
                                          model.domain());
    worst = std::max(worst, std::abs(fd - expected) / std::max(1.0, std::abs(expected)));
  }
  report.add(worst <= kDensityLimit ? Status::Pass : Status::Fail, "density " + model.id(),
             "log_derivative=" + format_residual(worst));
}

void check_bounds(Report& report, const SpaceModel& model) {
  const auto r = topology::volume_bounds(model, true);
  std::ostringstream detail;
  detail << "gb_bound=" << format_exact(r.gb_bound);
  if (r.sig_bound) detail << " sig_bound=" << format_exact(*r.sig_bound);
  const bool dominance = !r.sig_bound || *r.sig_bound >= r.gb_bound;
  if (!dominance) detail << " signature bound below Gauss-Bonnet bound";
  report.add(dominance ? Status::Pass : Status::Fail, "bounds " + model.id(), detail.str());
  for (const std::string& note : r.notes) report.add(Status::Warn, "bounds " + model.id(), note);
}

void check_group(Report& report, const std::string& name, const quotient::DeckGroup& group,
                 std::uint64_t seed) {
  using namespace quotient;
  try {
    const auto self = group_action_selfcheck(group, seed);
    std::ostringstream detail;
    detail << "min_displacement=" << format_real(self.min_displacement, 6)
           << " isometry_defect=" << format_residual(self.max_isometry_defect);
    report.add(Status::Pass, "group " + name, detail.str());
  } catch (const SelfCheckFailed& e) {
    report.add(Status::Fail, "group " + name, e.what());
  }
  const AmbientPoint p = group.basepoint();
  const auto brute = injectivity_radius(group, p);
  const auto closed = injectivity_radius_closed_form(group, p);
  if (!closed) return;
  const double diff = std::abs(brute.radius - closed->radius);
  report.add(diff <= kInjectivityLimit ? Status::Pass : Status::Fail, "injectivity " + name,
             "iota=" + format_exact(brute.radius) + " closed_form=" +
                 format_exact(closed->radius) + " diff=" + format_residual(diff));
}

void verify_model(Report& report, const SpaceModel& model, double tol) {
  if (find_closed_form(model)) report_table(report, verify_table_entry(model, tol));
  check_density(report, model);
  if (model.sigma() == 1) check_boundary(report, model, tol);
  if (model.sigma() == -1 && model.dimension() % 2 == 0) check_bounds(report, model);
}

}  // namespace

int verify(const RunConfig& config, std::ostream& out) {
  if (config.positionals.size() != 1) throw UsageError("usage: verify all|MODEL");
  const std::string& scope = config.positionals[0];
  out << config_line(config, {{"scope", scope}}) << '\n';
  Report report(out);

  if (scope != "all") {
    verify_model(report, SpaceModel::parse(scope), config.tol);
    return report.finish();
  }

  for (const auto& v : verify_all_table_entries(config.tol)) report_table(report, v);
  std::vector<SpaceModel> models = positive_catalogue();
  for (const SpaceModel& m : positive_catalogue()) models.push_back(m.dual());
  for (int m = 2; m <= 5; ++m) models.push_back(SpaceModel::euclidean(m));
  for (const SpaceModel& m : models) check_density(report, m);
  for (const SpaceModel& m : positive_catalogue()) check_boundary(report, m, config.tol);
  for (const SpaceModel& m : positive_catalogue())
    if (m.dimension() % 2 == 0) check_bounds(report, m.dual());

  using quotient::DeckGroup;
  check_group(report, "torus", DeckGroup::torus(), config.seed);
  check_group(report, "klein", DeckGroup::klein_bottle(), config.seed);
  check_group(report, "rp", DeckGroup::antipodal(2), config.seed);
  check_group(report, "lens", DeckGroup::lens_z4(1), config.seed);
  check_group(report, "cpq", DeckGroup::cp_involution(1), config.seed);
  return report.finish();
}

}  // namespace radharm::cli
