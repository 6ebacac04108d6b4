#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "radharm/topology_bounds.hpp"

namespace radharm::cli {

int bounds(const RunConfig& config, std::ostream& out) {
  if (config.positionals.size() != 1) throw UsageError("usage: bounds MODEL [--orientable true|false]");
  const SpaceModel model = SpaceModel::parse(config.positionals[0]);
  if (model.sigma() != -1)
    throw UsageError(model.id() + " is not negatively curved; bounds need hS<m>, hCP<k>, hHP<k> or hOP2");
  const auto report = topology::volume_bounds(model, config.orientable);

  nlohmann::ordered_json json;
  json["model"] = report.model.id();
  json["dual"] = report.dual.id();
  json["dual_volume"] = report.dual_volume;
  json["euler"] = report.euler;
  json["signature"] = report.signature ? nlohmann::ordered_json(*report.signature) : nlohmann::ordered_json();
  json["gb_bound"] = report.gb_bound;
  json["sig_bound"] = report.sig_bound ? nlohmann::ordered_json(*report.sig_bound) : nlohmann::ordered_json();
  json["epsilon"] = report.epsilon;
  json["notes"] = report.notes;

  out << config_line(config, {{"model", model.id()}}) << '\n' << json.dump(2) << '\n';
  return 0;
}

}  // namespace radharm::cli
