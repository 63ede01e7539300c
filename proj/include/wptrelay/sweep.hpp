#pragma once

#include <string>

#include "wptrelay/config.hpp"

namespace wptrelay {

/// Executes the spec's sweep (or selection-frequency study), writes the CSV
/// named by spec.output_path and a "<output>.manifest" file with the full
/// resolved configuration. Rows come out in deterministic
/// (n, alpha, gamma, mechanism) order. Progress goes to stderr unless quiet.
void run_sweep(const SweepSpec& spec, bool quiet = false);

/// CSV header used by sweep mode (stable schema, documented in the README).
std::string sweep_csv_header();

} // namespace wptrelay
