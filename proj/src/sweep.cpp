#include "wptrelay/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace wptrelay {

namespace {

std::string fmt_power(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.8e", v);  // 9 significant digits, watts
    return buf;
}

std::string fmt_prob(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string fmt_param(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_row(std::ostream& out, int n, double alpha, double gamma,
               const char* mechanism, const MechanismStats& st,
               std::int64_t trials, std::uint64_t seed) {
    out << n << ',' << fmt_param(alpha) << ',' << fmt_param(gamma) << ','
        << mechanism << ',' << fmt_prob(st.outage_prob) << ','
        << fmt_power(st.mean_power_cond) << ',' << fmt_power(st.mean_power_uncond)
        << ',' << fmt_power(st.mean_harvested) << ',' << fmt_power(st.mean_surplus)
        << ',' << trials << ',' << seed << '\n';
}

void run_grid_sweep(const SweepSpec& spec, std::ostream& out, bool quiet) {
    out << sweep_csv_header() << '\n';
    for (int n : spec.sweep_n) {
        for (double alpha : spec.sweep_alpha) {
            for (double gamma : spec.sweep_gamma) {
                const SimConfig cell = spec.cell_config(n, alpha, gamma);
                const Metrics m = run_experiment(cell);
                if (!quiet) {
                    std::cerr << "cell n=" << n << " alpha=" << fmt_param(alpha)
                              << " gamma=" << fmt_param(gamma)
                              << " outage(myerson)=" << fmt_prob(m.myerson.outage_prob)
                              << '\n';
                }
                write_row(out, n, alpha, gamma, "myerson", m.myerson, m.trial_count, spec.seed);
                write_row(out, n, alpha, gamma, "vickrey", m.vickrey, m.trial_count, spec.seed);
                write_row(out, n, alpha, gamma, "perfect_info", m.perfect_info, m.trial_count, spec.seed);
                write_row(out, n, alpha, gamma, "direct", m.direct_only, m.trial_count, spec.seed);
            }
        }
    }
}

void run_selection_sweep(const SweepSpec& spec, std::ostream& out, bool quiet) {
    const int n = static_cast<int>(spec.fixed_positions.size());
    out << "gamma,trials,seed";
    for (int i = 1; i <= n; ++i) {
        out << ",freq_" << i;
    }
    out << '\n';
    for (double gamma : spec.sweep_gamma) {
        const SimConfig cell = spec.cell_config(n, spec.alpha, gamma);
        const Metrics m = run_experiment(cell);
        if (!quiet) {
            std::cerr << "selection cell gamma=" << fmt_param(gamma) << '\n';
        }
        out << fmt_param(gamma) << ',' << m.trial_count << ',' << spec.seed;
        for (double f : m.selection_freq) {
            out << ',' << fmt_prob(f);
        }
        out << '\n';
    }
}

} // namespace

std::string sweep_csv_header() {
    return "n,alpha,gamma,mechanism,outage_prob,mean_power_cond_w,"
           "mean_power_uncond_w,mean_harvested_w,mean_surplus_w,trials,seed";
}

void run_sweep(const SweepSpec& spec, bool quiet) {
    validate_spec(spec);
    std::ofstream out(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open output file '" + spec.output_path + "'");
    }
    if (spec.mode == RunMode::Sweep) {
        run_grid_sweep(spec, out, quiet);
    } else {
        run_selection_sweep(spec, out, quiet);
    }
    out.flush();
    if (!out) {
        throw IoError("failed writing output file '" + spec.output_path + "'");
    }
    write_manifest(spec, spec.output_path + ".manifest");
}

} // namespace wptrelay
