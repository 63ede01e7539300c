#pragma once

#include <string>
#include <vector>

#include "wptrelay/sim.hpp"

namespace wptrelay {

enum class RunMode { Sweep, SelectionFreq };

/// A resolved experiment description in config-native units (dB, dBm, mW,
/// cm²). Per-cell SimConfigs are derived on demand, so writing the spec back
/// out as a manifest and reloading it reproduces the identical run.
struct SweepSpec {
    // channel
    double gamma_th_db = 33.18;
    double noise_dbm = -75.0;
    double p_max_mw = 100.0;
    ChannelParams los{0.0, 2.5, 8.66};
    ChannelParams nlos{-25.0, 5.76, 9.06};

    // wpt
    double alpha = 0.3;
    double a_r_cm2 = 1.0;

    // geometry
    double d_source_m = 27.0;
    std::string placement_kind = "disk";  // "disk" or "fixed"
    double disk_center_x_m = 13.5;
    double disk_center_y_m = 0.0;
    double disk_inner_radius_m = 0.0;
    double disk_radius_m = 3.5;
    std::vector<Point> fixed_positions;
    double min_link_distance_m = 1.0;

    // sim
    std::int64_t trials = 10000;
    std::uint64_t seed = 1;
    double gamma_scale = 1.0;

    // run
    RunMode mode = RunMode::Sweep;
    std::vector<int> sweep_n;
    std::vector<double> sweep_alpha;
    std::vector<double> sweep_gamma;
    std::int64_t max_total_trials = 100000000;
    std::string output_path;

    /// SimConfig for one sweep cell.
    SimConfig cell_config(int n, double cell_alpha, double cell_gamma) const;

    /// SimConfig with the spec's own alpha/gamma (selection-frequency runs).
    SimConfig base_config(int n) const;

    std::int64_t total_trials() const;
};

/// Spec with every knob at its default value. Honors WPTRELAY_OUT_DIR for the
/// default output location.
SweepSpec default_spec();

/// Parses flat "section.key = value" text over the defaults.
/// Throws ParseError with line/key diagnostics on malformed input.
SweepSpec parse_config(const std::string& text);

/// Reads and parses a config file; IoError when the file cannot be read.
SweepSpec load_config(const std::string& path);

/// Throws ValidationError naming the violated invariant.
void validate_spec(const SweepSpec& spec);

/// Full resolved configuration in the config-file syntax; feeding it back to
/// load_config reproduces the identical run.
std::string manifest_text(const SweepSpec& spec);

void write_manifest(const SweepSpec& spec, const std::string& path);

} // namespace wptrelay
