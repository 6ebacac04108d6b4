#include "radharm/topology_bounds.hpp"

#include "radharm/errors.hpp"

namespace radharm::topology {

namespace {

void require_compact(const SpaceModel& model) {
  if (model.sigma() != 1)
    throw UnsupportedModel(model.id() + " is not a compact positively curved model");
}

void require_negative(const SpaceModel& model) {
  if (model.sigma() != -1)
    throw UnsupportedModel(model.id() + " is not a negatively curved model");
}

}  // namespace

int euler_characteristic(const SpaceModel& model) {
  require_compact(model);
  switch (model.family()) {
    case Family::Sphere: return model.dimension() % 2 == 0 ? 2 : 0;
    case Family::ComplexProjective:
    case Family::QuaternionProjective: return *model.projective_index() + 1;
    case Family::OctonionPlane: return 3;
    default: break;
  }
  throw UnsupportedModel("no Euler characteristic for " + model.id());
}

std::optional<int> signature(const SpaceModel& model) {
  require_compact(model);
  if (model.dimension() % 4 != 0) return std::nullopt;
  switch (model.family()) {
    case Family::Sphere: return 0;
    case Family::ComplexProjective: return 1;  // dimension 4j means CP^(2j)
    case Family::QuaternionProjective: return *model.projective_index() % 2 == 0 ? 1 : 0;
    case Family::OctonionPlane: return 1;
    default: break;
  }
  throw UnsupportedModel("no signature for " + model.id());
}

GroupOrderReport allowed_group_orders(const SpaceModel& model) {
  require_compact(model);
  GroupOrderReport out;
  if (model.family() == Family::Sphere) {
    if (model.dimension() % 2 != 0)
      throw UnsupportedModel("group orders are tabulated for even spheres only");
    out.orders = {1, 2};
    out.isometric_orders = {1, 2};
    return out;
  }
  const int n = *model.projective_index();
  out.orders = n % 2 == 0 ? std::set<int>{1} : std::set<int>{1, 2};
  out.isometric_orders = out.orders;
  if (model.family() == Family::QuaternionProjective && n % 2 == 1 && n >= 3) {
    out.isometric_orders = {1};
    out.notes.push_back(
        "isometric_sharpening: no fixed point free isometric involution exists on " +
        model.id() + ", so only the trivial group acts freely by isometries");
  }
  return out;
}

std::vector<TopologyRecord> topology_catalogue(int max_sphere_dim) {
  std::vector<TopologyRecord> out;
  for (const SpaceModel& model : positive_catalogue(max_sphere_dim)) {
    if (model.dimension() % 2 != 0) continue;
    out.push_back({model, euler_characteristic(model), signature(model),
                   allowed_group_orders(model).orders});
  }
  return out;
}

VolumeBoundReport volume_bound_gauss_bonnet(const SpaceModel& model) {
  require_negative(model);
  if (model.dimension() % 2 != 0)
    throw UnsupportedModel("Gauss-Bonnet bound needs an even dimension, " + model.id() +
                           " is odd-dimensional");
  const SpaceModel dual = model.dual();
  const double volume = model_volume(dual);
  const int chi = euler_characteristic(dual);
  VolumeBoundReport out{model, dual, volume, chi, signature(dual), volume / chi,
                        std::nullopt, 1.0, {}};
  if (model.family() == Family::OctonionHyperbolic)
    out.notes.push_back(std::string(kStatementDiscrepancy) +
                        ": the published statement of this bound reads vol(HP^k)/3; "
                        "the Gauss-Bonnet computation gives vol(OP2)/chi(OP2) = vol(OP2)/3, "
                        "which is reported");
  return out;
}

double volume_bound_signature(const SpaceModel& model, bool orientable) {
  require_negative(model);
  const SpaceModel dual = model.dual();
  if (dual.dimension() % 2 != 0 || signature(dual) != 1)
    throw UnsupportedModel("signature bound needs a dual with signature 1; " + dual.id() +
                           " does not have one");
  return (orientable ? 1.0 : 0.5) * model_volume(dual);
}

VolumeBoundReport volume_bounds(const SpaceModel& model, bool orientable) {
  VolumeBoundReport out = volume_bound_gauss_bonnet(model);
  out.epsilon = orientable ? 1.0 : 0.5;
  if (out.signature == 1) out.sig_bound = volume_bound_signature(model, orientable);
  return out;
}

}  // namespace radharm::topology
