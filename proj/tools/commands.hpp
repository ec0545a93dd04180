#pragma once

#include "config.hpp"

namespace stapulse::cli {

struct SynthOptions {
  bool reverse = false;
};

struct PropagateOptions {
  bool bloch = false;
};

int cmd_synth(const RunConfig& config, const SynthOptions& options);
int cmd_propagate(const RunConfig& config, const PropagateOptions& options);
int cmd_sweep(const RunConfig& config);
int cmd_optimize(const RunConfig& config);
int cmd_compare_chs(const RunConfig& config);

}  // namespace stapulse::cli
