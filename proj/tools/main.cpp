#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

namespace {

struct GlobalFlags {
  std::string config_path;
  std::string out_dir;
  double step_ns = 0.0;
  int jobs = -1;
  bool plot = false;
};

void add_common_flags(CLI::App* cmd, GlobalFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON config file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", flags.out_dir, "output directory (overrides the config)");
  cmd->add_option("--step-ns", flags.step_ns, "integrator step in ns (overrides the config)");
  cmd->add_option("--jobs", flags.jobs, "worker threads for sweeps (0 = all cores)");
  cmd->add_flag("--plot", flags.plot, "also write SVG charts");
}

stapulse::cli::RunConfig load_with_overrides(const GlobalFlags& flags) {
  stapulse::cli::RunConfig config = stapulse::cli::load_config(flags.config_path);
  if (!flags.out_dir.empty()) {
    config.out_dir = flags.out_dir;
  }
  if (flags.step_ns > 0.0) {
    config.step_us = 1e-3 * flags.step_ns;
  }
  if (flags.jobs >= 0) {
    config.jobs = flags.jobs;
  }
  if (flags.plot) {
    config.plot = true;
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortcut-to-adiabaticity pulse design and simulation"};
  app.require_subcommand(1);

  GlobalFlags flags;
  stapulse::cli::SynthOptions synth_options;
  stapulse::cli::PropagateOptions propagate_options;

  CLI::App* synth = app.add_subcommand("synth", "synthesize pulse envelopes and export CSV");
  add_common_flags(synth, flags);
  synth->add_flag("--reverse", synth_options.reverse, "time-reverse the drive");

  CLI::App* prop = app.add_subcommand("propagate", "integrate the driven dynamics");
  add_common_flags(prop, flags);
  prop->add_flag("--bloch", propagate_options.bloch, "also write the Bloch-vector CSV");

  CLI::App* sweep = app.add_subcommand("sweep", "scan fidelity over an error parameter");
  add_common_flags(sweep, flags);

  CLI::App* optimize = app.add_subcommand("optimize", "coordinate scan of the coefficients");
  add_common_flags(optimize, flags);

  CLI::App* compare = app.add_subcommand("compare-chs", "overlay shortcut and sech drives");
  add_common_flags(compare, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const stapulse::cli::RunConfig config = load_with_overrides(flags);
    if (synth->parsed()) {
      return stapulse::cli::cmd_synth(config, synth_options);
    }
    if (prop->parsed()) {
      return stapulse::cli::cmd_propagate(config, propagate_options);
    }
    if (sweep->parsed()) {
      return stapulse::cli::cmd_sweep(config);
    }
    if (optimize->parsed()) {
      return stapulse::cli::cmd_optimize(config);
    }
    if (compare->parsed()) {
      return stapulse::cli::cmd_compare_chs(config);
    }
  } catch (const stapulse::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const stapulse::IntegrationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
