#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "radharm/space_models.hpp"

namespace radharm::topology {

/// chi of a compact model: 2 for even spheres, 0 for odd ones, k + 1 for
/// CP^k and HP^k, 3 for OP2. UnsupportedModel unless sigma = +1.
int euler_characteristic(const SpaceModel& model);

/// Hirzebruch signature, or nullopt when the dimension is not divisible by
/// 4. UnsupportedModel unless sigma = +1.
std::optional<int> signature(const SpaceModel& model);

struct GroupOrderReport {
  std::set<int> orders;            // orders allowed by chi and cohomology
  std::set<int> isometric_orders;  // orders of free isometric actions
  std::vector<std::string> notes;
};

/// Orders of groups acting freely on CP^k, HP^k, OP2 or an even sphere:
/// {1} when the projective index is even, {1, 2} when it is odd. For
/// HP^(2k+1), k >= 1, no free isometric involution exists, so the isometric
/// layer is {1}; a note records this.
GroupOrderReport allowed_group_orders(const SpaceModel& model);

struct TopologyRecord {
  SpaceModel model;
  int euler;
  std::optional<int> signature;
  std::set<int> orientable_quotient_orders;  // empty when not tabulated
};

/// Records for the even-dimensional compact catalogue models.
std::vector<TopologyRecord> topology_catalogue(int max_sphere_dim = 8);

/// Note attached to the Cayley hyperbolic plane bound, whose published
/// statement names vol(HP^k) / 3 where the derivation gives vol(OP2) / 3.
inline constexpr const char* kStatementDiscrepancy = "theorem_statement_discrepancy";

struct VolumeBoundReport {
  SpaceModel model;  // the negatively curved model
  SpaceModel dual;
  double dual_volume;
  int euler;                     // of the dual
  std::optional<int> signature;  // of the dual
  double gb_bound;               // dual_volume / euler
  std::optional<double> sig_bound;
  double epsilon;  // 1 if the quotient is orientable, 1/2 otherwise
  std::vector<std::string> notes;
};

/// vol(M) >= vol(dual) / chi(dual) for compact quotients M of an
/// even-dimensional negatively curved model. The signature part is left
/// empty. UnsupportedModel unless sigma = -1 and the dimension is even.
VolumeBoundReport volume_bound_gauss_bonnet(const SpaceModel& model);

/// epsilon * vol(dual) for duals with signature 1 (CP^2k, HP^2k, OP2).
/// UnsupportedModel otherwise.
double volume_bound_signature(const SpaceModel& model, bool orientable);

/// Gauss-Bonnet bound plus the signature bound where it exists.
VolumeBoundReport volume_bounds(const SpaceModel& model, bool orientable);

}  // namespace radharm::topology
