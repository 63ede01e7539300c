#include "wptrelay/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "wptrelay/channel.hpp"

namespace wptrelay {

namespace {

// Aperture values are configured in cm² and used as the cm²-referenced
// coupling coefficient of the harvest model. The channel coefficients of the
// reference path-loss model are aperture-normalized, so no further area
// conversion is applied (see the calibration note in the README).
constexpr double kApertureUnitPerCm2 = 1.0;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

struct RawEntry {
    std::string value;
    int line;
};

std::map<std::string, RawEntry> parse_lines(const std::string& text) {
    std::map<std::string, RawEntry> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'key = value'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw ParseError("line " + std::to_string(lineno) + ": empty key");
        }
        kv[key] = RawEntry{value, lineno};  // later lines win
    }
    return kv;
}

[[noreturn]] void bad_value(const std::string& key, const RawEntry& e,
                            const char* what) {
    throw ParseError("line " + std::to_string(e.line) + ": key '" + key +
                     "': expected " + what + ", got '" + e.value + "'");
}

double to_double(const std::string& key, const RawEntry& e) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(e.value, &pos);
    } catch (const std::exception&) {
        bad_value(key, e, "a number");
    }
    if (pos != e.value.size()) {
        bad_value(key, e, "a number");
    }
    return v;
}

std::int64_t to_int(const std::string& key, const RawEntry& e) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(e.value, &pos);
    } catch (const std::exception&) {
        bad_value(key, e, "an integer");
    }
    if (pos != e.value.size()) {
        bad_value(key, e, "an integer");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        out.push_back(trim(item));
    }
    return out;
}

std::vector<double> to_double_list(const std::string& key, const RawEntry& e) {
    std::vector<double> out;
    for (const auto& item : split(e.value, ',')) {
        if (item.empty()) {
            bad_value(key, e, "a comma-separated list of numbers");
        }
        out.push_back(to_double(key, RawEntry{item, e.line}));
    }
    if (out.empty()) {
        bad_value(key, e, "a comma-separated list of numbers");
    }
    return out;
}

std::vector<int> to_int_list(const std::string& key, const RawEntry& e) {
    std::vector<int> out;
    for (const auto& item : split(e.value, ',')) {
        if (item.empty()) {
            bad_value(key, e, "a comma-separated list of integers");
        }
        out.push_back(static_cast<int>(to_int(key, RawEntry{item, e.line})));
    }
    if (out.empty()) {
        bad_value(key, e, "a comma-separated list of integers");
    }
    return out;
}

// "x1,y1; x2,y2; ..."
std::vector<Point> to_positions(const std::string& key, const RawEntry& e) {
    std::vector<Point> out;
    for (const auto& pair : split(e.value, ';')) {
        if (pair.empty()) {
            continue;
        }
        const auto coords = split(pair, ',');
        if (coords.size() != 2) {
            bad_value(key, e, "semicolon-separated 'x,y' pairs");
        }
        out.push_back(Point{to_double(key, RawEntry{coords[0], e.line}),
                            to_double(key, RawEntry{coords[1], e.line})});
    }
    if (out.empty()) {
        bad_value(key, e, "semicolon-separated 'x,y' pairs");
    }
    return out;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

SimConfig SweepSpec::cell_config(int n, double cell_alpha, double cell_gamma) const {
    SimConfig c;
    c.n_candidates = n;
    c.d_source = d_source_m;
    if (placement_kind == "fixed") {
        c.placement = Placement::fixed(fixed_positions);
    } else {
        c.placement = Placement::annulus(Point{disk_center_x_m, disk_center_y_m},
                                         disk_inner_radius_m, disk_radius_m);
    }
    c.los = los;
    c.nlos = nlos;
    c.budget = LinkBudget{db_to_linear(gamma_th_db),
                          db_to_linear(noise_dbm) * 1e-3,
                          p_max_mw * 1e-3};
    c.alpha = cell_alpha;
    c.a_r = a_r_cm2 * kApertureUnitPerCm2;
    c.gamma_scale = cell_gamma;
    c.min_link_distance = min_link_distance_m;
    c.n_trials = trials;
    c.seed = seed;
    return c;
}

SimConfig SweepSpec::base_config(int n) const {
    return cell_config(n, alpha, gamma_scale);
}

std::int64_t SweepSpec::total_trials() const {
    const std::int64_t cells =
        mode == RunMode::Sweep
            ? static_cast<std::int64_t>(sweep_n.size()) *
                  static_cast<std::int64_t>(sweep_alpha.size()) *
                  static_cast<std::int64_t>(sweep_gamma.size())
            : static_cast<std::int64_t>(sweep_gamma.size());
    return cells * trials;
}

SweepSpec default_spec() {
    SweepSpec s;
    s.sweep_n = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    s.sweep_alpha = {0.1, 0.2, 0.3, 0.4};
    s.sweep_gamma = {0.2, 0.6, 1.0, 1.4};
    // Four spread-out candidates for the selection-frequency study; the first
    // one sits closest to the source and has the cheapest deterministic price.
    s.fixed_positions = {Point{22.0, 1.5}, Point{13.5, 4.0}, Point{8.0, -3.0},
                         Point{16.0, -5.0}};
    const char* out_dir = std::getenv("WPTRELAY_OUT_DIR");
    s.output_path = out_dir != nullptr && *out_dir != '\0'
                        ? std::string(out_dir) + "/results.csv"
                        : std::string("results.csv");
    return s;
}

SweepSpec parse_config(const std::string& text) {
    auto kv = parse_lines(text);
    SweepSpec s = default_spec();

    const auto take = [&kv](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end()) {
            return std::optional<RawEntry>{};
        }
        std::optional<RawEntry> e = it->second;
        kv.erase(it);
        return e;
    };

    if (auto e = take("channel.gamma_th_db")) s.gamma_th_db = to_double("channel.gamma_th_db", *e);
    if (auto e = take("channel.noise_dbm")) s.noise_dbm = to_double("channel.noise_dbm", *e);
    if (auto e = take("channel.p_max_mw")) s.p_max_mw = to_double("channel.p_max_mw", *e);
    if (auto e = take("channel.los.intercept_db")) s.los.pl_intercept_db = to_double("channel.los.intercept_db", *e);
    if (auto e = take("channel.los.exponent")) s.los.pl_exponent = to_double("channel.los.exponent", *e);
    if (auto e = take("channel.los.sigma_db")) s.los.fading_std_db = to_double("channel.los.sigma_db", *e);
    if (auto e = take("channel.nlos.intercept_db")) s.nlos.pl_intercept_db = to_double("channel.nlos.intercept_db", *e);
    if (auto e = take("channel.nlos.exponent")) s.nlos.pl_exponent = to_double("channel.nlos.exponent", *e);
    if (auto e = take("channel.nlos.sigma_db")) s.nlos.fading_std_db = to_double("channel.nlos.sigma_db", *e);
    if (auto e = take("wpt.alpha")) s.alpha = to_double("wpt.alpha", *e);
    if (auto e = take("wpt.a_r_cm2")) s.a_r_cm2 = to_double("wpt.a_r_cm2", *e);
    if (auto e = take("geometry.d_source_m")) s.d_source_m = to_double("geometry.d_source_m", *e);
    if (auto e = take("geometry.placement")) {
        if (e->value != "disk" && e->value != "fixed") {
            bad_value("geometry.placement", *e, "'disk' or 'fixed'");
        }
        s.placement_kind = e->value;
    }
    if (auto e = take("geometry.disk.center_x_m")) s.disk_center_x_m = to_double("geometry.disk.center_x_m", *e);
    if (auto e = take("geometry.disk.center_y_m")) s.disk_center_y_m = to_double("geometry.disk.center_y_m", *e);
    if (auto e = take("geometry.disk.inner_radius_m")) s.disk_inner_radius_m = to_double("geometry.disk.inner_radius_m", *e);
    if (auto e = take("geometry.disk.radius_m")) s.disk_radius_m = to_double("geometry.disk.radius_m", *e);
    if (auto e = take("geometry.fixed.positions")) s.fixed_positions = to_positions("geometry.fixed.positions", *e);
    if (auto e = take("geometry.min_link_distance_m")) s.min_link_distance_m = to_double("geometry.min_link_distance_m", *e);
    if (auto e = take("sim.trials")) s.trials = to_int("sim.trials", *e);
    if (auto e = take("sim.seed")) s.seed = static_cast<std::uint64_t>(to_int("sim.seed", *e));
    if (auto e = take("sim.gamma_scale")) s.gamma_scale = to_double("sim.gamma_scale", *e);
    if (auto e = take("run.mode")) {
        if (e->value == "sweep") {
            s.mode = RunMode::Sweep;
        } else if (e->value == "selection-freq") {
            s.mode = RunMode::SelectionFreq;
        } else {
            bad_value("run.mode", *e, "'sweep' or 'selection-freq'");
        }
    }
    if (auto e = take("sweep.n")) s.sweep_n = to_int_list("sweep.n", *e);
    if (auto e = take("sweep.alpha")) s.sweep_alpha = to_double_list("sweep.alpha", *e);
    if (auto e = take("sweep.gamma")) s.sweep_gamma = to_double_list("sweep.gamma", *e);
    if (auto e = take("sweep.max_total_trials")) s.max_total_trials = to_int("sweep.max_total_trials", *e);
    if (auto e = take("output.path")) s.output_path = e->value;

    if (!kv.empty()) {
        const auto& first = *kv.begin();
        throw ParseError("line " + std::to_string(first.second.line) +
                         ": unknown key '" + first.first + "'");
    }
    return s;
}

SweepSpec load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    SweepSpec s = parse_config(buf.str());
    validate_spec(s);
    return s;
}

void validate_spec(const SweepSpec& s) {
    if (!(s.p_max_mw > 0.0)) {
        throw ValidationError("channel.p_max_mw must be positive");
    }
    if (!(s.los.pl_exponent > 0.0) || !(s.nlos.pl_exponent > 0.0)) {
        throw ValidationError("path-loss exponents must be positive");
    }
    if (s.los.fading_std_db < 0.0 || s.nlos.fading_std_db < 0.0) {
        throw ValidationError("fading sigma_db must be nonnegative");
    }
    if (!(s.alpha > 0.0) || s.alpha > 1.0) {
        throw ValidationError("wpt.alpha: alpha ∈ [0,1] (and nonzero) required");
    }
    for (double a : s.sweep_alpha) {
        if (!(a > 0.0) || a > 1.0) {
            throw ValidationError("sweep.alpha: alpha ∈ [0,1] (and nonzero) required");
        }
    }
    if (!(s.a_r_cm2 > 0.0)) {
        throw ValidationError("wpt.a_r_cm2 must be positive");
    }
    if (!(s.d_source_m > 0.0)) {
        throw ValidationError("geometry.d_source_m must be positive");
    }
    if (s.placement_kind == "disk") {
        if (!(s.disk_radius_m > s.disk_inner_radius_m) || s.disk_inner_radius_m < 0.0) {
            throw ValidationError("geometry.disk radii describe a degenerate region");
        }
    }
    if (s.min_link_distance_m < 0.0) {
        throw ValidationError("geometry.min_link_distance_m must be nonnegative");
    }
    if (s.trials < 1) {
        throw ValidationError("sim.trials must be >= 1");
    }
    if (!(s.gamma_scale > 0.0)) {
        throw ValidationError("sim.gamma_scale must be positive");
    }
    if (s.sweep_n.empty() || s.sweep_alpha.empty() || s.sweep_gamma.empty()) {
        throw ValidationError("sweep lists must be nonempty");
    }
    int max_n = 0;
    for (int n : s.sweep_n) {
        if (n < 0) {
            throw ValidationError("sweep.n entries must be >= 0");
        }
        max_n = std::max(max_n, n);
    }
    for (double g : s.sweep_gamma) {
        if (!(g > 0.0)) {
            throw ValidationError("sweep.gamma entries must be positive");
        }
        if (max_n > 0 && !(s.los.fading_std_db * g > 0.0)) {
            throw ValidationError(
                "candidate fading std must be positive (LoS sigma_db * gamma)");
        }
    }
    if (s.mode == RunMode::Sweep && s.placement_kind == "fixed" &&
        s.fixed_positions.size() < static_cast<std::size_t>(max_n)) {
        throw ValidationError("geometry.fixed.positions has fewer entries than max sweep.n");
    }
    if (s.mode == RunMode::SelectionFreq && s.placement_kind != "fixed") {
        throw ValidationError("selection-freq mode requires geometry.placement = fixed");
    }
    if (s.mode == RunMode::SelectionFreq && s.fixed_positions.empty()) {
        throw ValidationError("selection-freq mode requires fixed positions");
    }
    if (s.output_path.empty()) {
        throw ValidationError("output.path must be nonempty");
    }
    if (s.max_total_trials < 1) {
        throw ValidationError("sweep.max_total_trials must be >= 1");
    }
    if (s.total_trials() > s.max_total_trials) {
        throw ValidationError("sweep cross product exceeds sweep.max_total_trials");
    }
}

std::string manifest_text(const SweepSpec& s) {
    std::ostringstream out;
    out << "# resolved run configuration\n";
    out << "channel.gamma_th_db = " << fmt_double(s.gamma_th_db) << "\n";
    out << "channel.noise_dbm = " << fmt_double(s.noise_dbm) << "\n";
    out << "channel.p_max_mw = " << fmt_double(s.p_max_mw) << "\n";
    out << "channel.los.intercept_db = " << fmt_double(s.los.pl_intercept_db) << "\n";
    out << "channel.los.exponent = " << fmt_double(s.los.pl_exponent) << "\n";
    out << "channel.los.sigma_db = " << fmt_double(s.los.fading_std_db) << "\n";
    out << "channel.nlos.intercept_db = " << fmt_double(s.nlos.pl_intercept_db) << "\n";
    out << "channel.nlos.exponent = " << fmt_double(s.nlos.pl_exponent) << "\n";
    out << "channel.nlos.sigma_db = " << fmt_double(s.nlos.fading_std_db) << "\n";
    out << "wpt.alpha = " << fmt_double(s.alpha) << "\n";
    out << "wpt.a_r_cm2 = " << fmt_double(s.a_r_cm2) << "\n";
    out << "geometry.d_source_m = " << fmt_double(s.d_source_m) << "\n";
    out << "geometry.placement = " << s.placement_kind << "\n";
    out << "geometry.disk.center_x_m = " << fmt_double(s.disk_center_x_m) << "\n";
    out << "geometry.disk.center_y_m = " << fmt_double(s.disk_center_y_m) << "\n";
    out << "geometry.disk.inner_radius_m = " << fmt_double(s.disk_inner_radius_m) << "\n";
    out << "geometry.disk.radius_m = " << fmt_double(s.disk_radius_m) << "\n";
    out << "geometry.fixed.positions = ";
    for (std::size_t i = 0; i < s.fixed_positions.size(); ++i) {
        if (i > 0) {
            out << "; ";
        }
        out << fmt_double(s.fixed_positions[i].x) << ","
            << fmt_double(s.fixed_positions[i].y);
    }
    out << "\n";
    out << "geometry.min_link_distance_m = " << fmt_double(s.min_link_distance_m) << "\n";
    out << "sim.trials = " << s.trials << "\n";
    out << "sim.seed = " << s.seed << "\n";
    out << "sim.gamma_scale = " << fmt_double(s.gamma_scale) << "\n";
    out << "run.mode = " << (s.mode == RunMode::Sweep ? "sweep" : "selection-freq") << "\n";
    out << "sweep.n = ";
    for (std::size_t i = 0; i < s.sweep_n.size(); ++i) {
        out << (i > 0 ? "," : "") << s.sweep_n[i];
    }
    out << "\n";
    out << "sweep.alpha = ";
    for (std::size_t i = 0; i < s.sweep_alpha.size(); ++i) {
        out << (i > 0 ? "," : "") << fmt_double(s.sweep_alpha[i]);
    }
    out << "\n";
    out << "sweep.gamma = ";
    for (std::size_t i = 0; i < s.sweep_gamma.size(); ++i) {
        out << (i > 0 ? "," : "") << fmt_double(s.sweep_gamma[i]);
    }
    out << "\n";
    out << "sweep.max_total_trials = " << s.max_total_trials << "\n";
    out << "output.path = " << s.output_path << "\n";
    return out.str();
}

void write_manifest(const SweepSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write manifest '" + path + "'");
    }
    out << manifest_text(spec);
    if (!out) {
        throw IoError("failed writing manifest '" + path + "'");
    }
}

} // namespace wptrelay
