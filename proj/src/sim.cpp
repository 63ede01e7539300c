#include "wptrelay/sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wptrelay/valuation.hpp"

namespace wptrelay {

namespace {

double distance(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

Point sample_position(const Placement& pl, RandomStream& rng) {
    // Area-uniform over the annulus.
    const double u = rng.uniform01();
    const double r = std::sqrt(pl.r_inner * pl.r_inner +
                               u * (pl.r_outer * pl.r_outer - pl.r_inner * pl.r_inner));
    const double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    return Point{pl.center.x + r * std::cos(theta), pl.center.y + r * std::sin(theta)};
}

AuctionOutcome direct_only_outcome(const AuctionInput& in) {
    AuctionInput no_candidates;
    no_candidates.p_max = in.p_max;
    no_candidates.p_s = in.p_s;
    return run_perfect_info(no_candidates);
}

struct StatsAccumulator {
    std::int64_t outages = 0;
    std::int64_t successes = 0;
    double power_cond_sum = 0.0;
    double power_uncond_sum = 0.0;
    double harvested_sum = 0.0;
    double surplus_sum = 0.0;

    void add(const AuctionOutcome& out) {
        if (out.comm_success) {
            ++successes;
            power_cond_sum += out.source_tx_power;
        } else {
            ++outages;
        }
        power_uncond_sum += out.source_tx_power;
        harvested_sum += out.harvested;
        surplus_sum += out.surplus;
    }

    MechanismStats finalize(std::int64_t trials) const {
        MechanismStats s;
        if (trials == 0) {
            return s;
        }
        const double n = static_cast<double>(trials);
        s.outage_prob = static_cast<double>(outages) / n;
        s.mean_power_cond =
            successes > 0 ? power_cond_sum / static_cast<double>(successes) : 0.0;
        s.mean_power_uncond = power_uncond_sum / n;
        s.mean_harvested = harvested_sum / n;
        s.mean_surplus = surplus_sum / n;
        return s;
    }
};

} // namespace

void validate_config(const SimConfig& config) {
    if (config.n_candidates < 0) {
        throw ValidationError("n_candidates must be >= 0");
    }
    if (!(config.d_source > 0.0)) {
        throw ValidationError("d_source must be positive");
    }
    if (!(config.budget.gamma_th > 0.0) || !(config.budget.noise_power > 0.0) ||
        !(config.budget.p_max > 0.0)) {
        throw ValidationError("link budget entries must be positive");
    }
    if (!(config.los.pl_exponent > 0.0) || !(config.nlos.pl_exponent > 0.0)) {
        throw ValidationError("path-loss exponents must be positive");
    }
    if (config.los.fading_std_db < 0.0 || config.nlos.fading_std_db < 0.0) {
        throw ValidationError("fading stds must be nonnegative");
    }
    if (!(config.gamma_scale > 0.0)) {
        throw ValidationError("gamma_scale must be positive");
    }
    if (config.n_candidates > 0) {
        if (!(config.alpha > 0.0) || config.alpha > 1.0) {
            throw ValidationError("alpha ∈ [0,1] and positive when candidates exist");
        }
        if (!(config.a_r > 0.0)) {
            throw ValidationError("aperture must be positive");
        }
        if (!(config.los.fading_std_db * config.gamma_scale > 0.0)) {
            throw ValidationError(
                "candidate fading std must be positive (degenerate valuation law)");
        }
        if (config.placement.kind == Placement::Kind::Annulus) {
            if (!(config.placement.r_outer > config.placement.r_inner) ||
                config.placement.r_inner < 0.0) {
                throw ValidationError("placement region is degenerate");
            }
        } else if (config.placement.positions.size() <
                   static_cast<std::size_t>(config.n_candidates)) {
            throw ValidationError("fixed placement has fewer positions than candidates");
        }
    }
    if (config.min_link_distance < 0.0) {
        throw ValidationError("min_link_distance must be nonnegative");
    }
    if (config.n_trials < 1) {
        throw ValidationError("n_trials must be >= 1");
    }
}

Scenario generate_scenario(const SimConfig& config, RandomStream& rng) {
    Scenario sc;
    sc.q_s = Point{config.d_source, 0.0};

    ChannelParams los = config.los;
    ChannelParams nlos = config.nlos;
    los.fading_std_db *= config.gamma_scale;
    nlos.fading_std_db *= config.gamma_scale;

    const auto clamp_distance = [&](double d) {
        if (d == 0.0) {
            throw DomainError("generate_scenario: zero link distance");
        }
        return std::max(d, config.min_link_distance);
    };

    sc.h_s = sample_channel(nlos, clamp_distance(config.d_source), rng);
    sc.p_s = required_power(config.budget, sc.h_s);

    const int n = config.n_candidates;
    sc.q.reserve(n);
    const double sigma_ln = n > 0 ? fading_sigma_ln(los.fading_std_db) : 0.0;
    for (int i = 0; i < n; ++i) {
        const Point pos = config.placement.kind == Placement::Kind::Fixed
                              ? config.placement.positions[static_cast<std::size_t>(i)]
                              : sample_position(config.placement, rng);
        const double d_si = clamp_distance(distance(pos, sc.q_s));
        const double d_i = clamp_distance(std::hypot(pos.x, pos.y));

        const double h_si = sample_channel(los, d_si, rng);
        const double h_i = sample_channel(los, d_i, rng);
        const double p_si = required_power(config.budget, h_si);
        const double p_i = required_power(config.budget, h_i);

        sc.q.push_back(pos);
        sc.h_si.push_back(h_si);
        sc.h_i.push_back(h_i);
        sc.p_si.push_back(p_si);
        sc.p_i.push_back(p_i);
        sc.wpt_gains.push_back(config.alpha * config.a_r * h_si);
        sc.valuations.push_back(
            min_inducement_power(p_si, p_i, config.alpha, config.a_r, h_si));
        // The source knows the candidate's position (hence its path loss) and
        // the realized source-candidate channel, but not the candidate-AP fading.
        sc.models.push_back(ValuationModel::from_link(
            p_si, config.budget.gamma_th, config.budget.noise_power,
            path_loss_linear(los, d_i), config.alpha, config.a_r, h_si, sigma_ln));
    }
    return sc;
}

TrialResult run_trial(const Scenario& scenario, const SimConfig& config,
                      const BisectionSpec& spec) {
    AuctionInput in;
    in.p_max = config.budget.p_max;
    in.p_s = scenario.p_s;
    in.bids = scenario.valuations;  // truthful play
    in.models = scenario.models;
    in.wpt_gains = scenario.wpt_gains;

    TrialResult tr;
    tr.myerson = run_myerson(in, spec);
    tr.vickrey = run_vickrey(in);
    tr.perfect_info = run_perfect_info(in);
    tr.direct_only = direct_only_outcome(in);
    return tr;
}

Metrics run_experiment(const SimConfig& config) {
    StatsAccumulator myerson, vickrey, perfect, direct;
    std::vector<std::int64_t> wins(static_cast<std::size_t>(
                                       std::max(config.n_candidates, 0)),
                                   0);
    std::int64_t trials = 0;

    const std::int64_t errors = for_each_trial(
        config, [&](std::int64_t, const Scenario&, const TrialResult& tr) {
            ++trials;
            myerson.add(tr.myerson);
            vickrey.add(tr.vickrey);
            perfect.add(tr.perfect_info);
            direct.add(tr.direct_only);
            if (tr.myerson.winner) {
                ++wins[*tr.myerson.winner];
            }
        });

    Metrics m;
    m.trial_count = trials;
    m.error_count = errors;
    m.myerson = myerson.finalize(trials);
    m.vickrey = vickrey.finalize(trials);
    m.perfect_info = perfect.finalize(trials);
    m.direct_only = direct.finalize(trials);
    m.selection_freq.resize(wins.size());
    for (std::size_t i = 0; i < wins.size(); ++i) {
        m.selection_freq[i] =
            trials > 0 ? static_cast<double>(wins[i]) / static_cast<double>(trials)
                       : 0.0;
    }
    return m;
}

} // namespace wptrelay
