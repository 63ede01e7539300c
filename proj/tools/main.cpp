#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wptrelay/sweep.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "wptrelay — reverse-auction relay selection with wireless power transfer"};

    std::string config_path;
    std::string out_path;
    long long trials = -1;
    long long seed = -1;
    std::string mode;
    bool quiet = false;

    app.add_option("--config", config_path, "Config file (flat key = value)");
    app.add_option("--out", out_path, "Output CSV path (overrides output.path)");
    app.add_option("--trials", trials, "Trials per sweep cell (override)");
    app.add_option("--seed", seed, "Base random seed (override)");
    app.add_option("--mode", mode, "Run mode: sweep | selection-freq")
        ->check(CLI::IsMember({"sweep", "selection-freq"}));
    app.add_flag("--quiet", quiet, "Suppress per-cell progress on stderr");

    CLI11_PARSE(app, argc, argv);

    try {
        wptrelay::SweepSpec spec = config_path.empty()
                                       ? wptrelay::default_spec()
                                       : wptrelay::load_config(config_path);
        if (!out_path.empty()) {
            spec.output_path = out_path;
        }
        if (trials >= 0) {
            spec.trials = trials;
        }
        if (seed >= 0) {
            spec.seed = static_cast<std::uint64_t>(seed);
        }
        if (!mode.empty()) {
            spec.mode = mode == "sweep" ? wptrelay::RunMode::Sweep
                                        : wptrelay::RunMode::SelectionFreq;
            if (spec.mode == wptrelay::RunMode::SelectionFreq) {
                spec.placement_kind = "fixed";  // the study needs pinned candidates
            }
        }
        wptrelay::validate_spec(spec);
        wptrelay::run_sweep(spec, quiet);
        if (!quiet) {
            std::cerr << "wrote " << spec.output_path << " and "
                      << spec.output_path << ".manifest\n";
        }
        return 0;
    } catch (const wptrelay::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 1;
    } catch (const wptrelay::ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const wptrelay::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const wptrelay::SimAbortError& e) {
        std::cerr << "simulation aborted: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
