#pragma once

#include <cstdint>
#include <vector>

#include "wptrelay/channel.hpp"
#include "wptrelay/mechanism.hpp"
#include "wptrelay/rng.hpp"

namespace wptrelay {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Candidate placement: uniform over an annulus (disk when inner radius is 0)
/// or an explicit list of positions.
struct Placement {
    enum class Kind { Annulus, Fixed };

    Kind kind = Kind::Annulus;
    Point center;
    double r_inner = 0.0;
    double r_outer = 0.0;
    std::vector<Point> positions;

    static Placement disk(Point center, double radius) {
        return Placement{Kind::Annulus, center, 0.0, radius, {}};
    }
    static Placement annulus(Point center, double r_inner, double r_outer) {
        return Placement{Kind::Annulus, center, r_inner, r_outer, {}};
    }
    static Placement fixed(std::vector<Point> positions) {
        return Placement{Kind::Fixed, Point{}, 0.0, 0.0, std::move(positions)};
    }
};

struct SimConfig {
    int n_candidates = 0;
    double d_source = 0.0;  // source-to-AP distance, AP sits at the origin
    Placement placement;
    ChannelParams los;
    ChannelParams nlos;
    LinkBudget budget;
    double alpha = 0.0;
    double a_r = 0.0;
    double gamma_scale = 1.0;       // multiplies both fading stds
    double min_link_distance = 1.0; // clamp keeping the path-loss model valid
    std::int64_t n_trials = 10000;
    std::uint64_t seed = 1;
};

/// Throws ValidationError naming the violated invariant.
void validate_config(const SimConfig& config);

/// One realized world: geometry, channel coefficients, required powers and
/// the candidates' breakeven prices, plus the source-side belief models.
struct Scenario {
    Point q_s;
    std::vector<Point> q;
    double h_s = 0.0;
    std::vector<double> h_si;
    std::vector<double> h_i;
    double p_s = 0.0;
    std::vector<double> p_si;
    std::vector<double> p_i;
    std::vector<double> valuations;
    std::vector<ValuationModel> models;
    std::vector<double> wpt_gains;  // alpha * a_r * h_si per candidate
};

/// All four coordination outcomes for one scenario under truthful bidding.
struct TrialResult {
    AuctionOutcome myerson;
    AuctionOutcome vickrey;
    AuctionOutcome perfect_info;
    AuctionOutcome direct_only;
};

struct MechanismStats {
    double outage_prob = 0.0;
    double mean_power_cond = 0.0;    // source tx power over successful trials
    double mean_power_uncond = 0.0;  // source tx power over all trials
    double mean_harvested = 0.0;
    double mean_surplus = 0.0;
};

struct Metrics {
    MechanismStats myerson;
    MechanismStats vickrey;
    MechanismStats perfect_info;
    MechanismStats direct_only;
    std::vector<double> selection_freq;  // per candidate, winner under myerson
    std::int64_t trial_count = 0;
    std::int64_t error_count = 0;
};

Scenario generate_scenario(const SimConfig& config, RandomStream& rng);

TrialResult run_trial(const Scenario& scenario, const SimConfig& config,
                      const BisectionSpec& spec);

/// Runs n_trials independent (generate_scenario, run_trial) pairs with
/// per-trial streams derived from (seed, trial index) and aggregates.
/// Identical (config, seed) gives bit-identical Metrics on one platform.
/// Throws SimAbortError once more than 0.1% of trials have failed.
Metrics run_experiment(const SimConfig& config);

/// Trial loop shared by run_experiment and the test harnesses; fn is called
/// as fn(trial_index, scenario, result) for every successful trial. Only
/// simulation failures count toward the abort threshold — exceptions thrown
/// by fn itself propagate to the caller.
template <class F>
std::int64_t for_each_trial(const SimConfig& config, F&& fn) {
    validate_config(config);
    const BisectionSpec spec{};
    std::int64_t errors = 0;
    const std::int64_t allowed =
        static_cast<std::int64_t>(0.001 * static_cast<double>(config.n_trials));
    for (std::int64_t t = 0; t < config.n_trials; ++t) {
        RandomStream rng =
            RandomStream::from_seed(config.seed, static_cast<std::uint64_t>(t));
        Scenario scenario;
        TrialResult result;
        bool ok = true;
        try {
            scenario = generate_scenario(config, rng);
            result = run_trial(scenario, config, spec);
        } catch (const std::exception& e) {
            ok = false;
            if (++errors > allowed) {
                throw SimAbortError(std::string("trial failures above 0.1%: ") +
                                    e.what());
            }
        }
        if (ok) {
            fn(t, scenario, result);
        }
    }
    return errors;
}

} // namespace wptrelay
