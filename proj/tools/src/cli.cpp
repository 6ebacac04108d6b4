#include "radharm/cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "format.hpp"
#include "radharm/errors.hpp"

namespace radharm::cli {

std::string config_line(const RunConfig& config, const Settings& settings) {
  std::ostringstream line;
  line << "# radharm " << config.command;
  for (const auto& [key, value] : settings) line << ' ' << key << '=' << value;
  line << " tol=" << format_exact(config.tol) << " seed=" << config.seed
       << " precision=" << config.precision << " svg=" << (config.svg ? "true" : "false")
       << " numeric_only=" << (config.numeric_only ? "true" : "false")
       << " orientable=" << (config.orientable ? "true" : "false")
       << " out=" << (config.out.empty() ? "-" : config.out);
  return line.str();
}

namespace {

using Command = int (*)(const RunConfig&, std::ostream&);

int dispatch(Command command, const RunConfig& config, std::ostream& out) {
  if (config.out.empty()) return command(config, out);
  // Render fully before touching the file so failures leave no partial output.
  std::ostringstream buffer;
  const int code = command(config, buffer);
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + config.out + "'");
  file << buffer.str();
  if (!file) throw UsageError("failed writing '" + config.out + "'");
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial harmonic functions on model spaces and their quotients", "radharm"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string orientable = "true";
  app.add_option("--tol", config.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for random sampling");
  app.add_option("--precision", config.precision, "Significant digits in CSV output")
      ->check(CLI::Range(6, 17));
  app.add_option("--out", config.out, "Write output to this file instead of stdout");
  app.add_flag("--svg", config.svg, "Emit an SVG figure instead of CSV (quotient)");
  app.add_flag("--numeric-only", config.numeric_only,
               "Skip closed forms; tabulate the quadrature solution only (phi-table)");
  app.add_option("--orientable", orientable, "Whether the quotient is orientable (bounds)")
      ->check(CLI::IsMember({"true", "false"}));

  struct Subcommand {
    const char* name;
    const char* help;
    const char* usage;
    Command command;
  };
  const Subcommand specs[] = {
      {"phi-table", "Tabulate Theta, phi1 and phi0 on a radial grid",
       "MODEL R_MIN R_MAX N R_REF", phi_table},
      {"verify", "Check the closed-form tables, boundaries and group actions", "all|MODEL",
       verify},
      {"quotient", "Injectivity radius and cut locus of a quotient",
       "torus|klein|rp|lens|cpq [BASEPOINT] [RESOLUTION]", quotient},
      {"bounds", "Volume lower bounds for compact quotients of a negatively curved model",
       "MODEL", bounds},
  };
  std::vector<std::string> positionals;
  Command chosen = nullptr;
  for (const Subcommand& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("args", positionals, spec.usage);
    sub->callback([&chosen, &config, spec] {
      chosen = spec.command;
      config.command = spec.name;
    });
  }

  std::vector<std::string> argv_storage{"radharm"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& arg : argv_storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "radharm: " << e.what() << '\n';
    return kExitUsage;
  }
  config.orientable = orientable == "true";
  config.positionals = positionals;

  try {
    return dispatch(chosen, config, out);
  } catch (const UsageError& e) {
    err << "radharm " << config.command << ": " << e.what() << '\n';
  } catch (const Error& e) {
    err << "radharm " << config.command << ": " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace radharm::cli
