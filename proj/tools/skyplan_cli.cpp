// SPDX-License-Identifier: Apache-2.0
//
// skyplan: planning calculator for aerial base-station swarms.
// Subcommands:
//   eval      single-point report (power, footprints, capacity, efficiency)
//   sweep     Cartesian parameter sweeps to CSV
//   validate  built-in oracle checks, exit code reflects pass/fail

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skyplan/skyplan.hpp"

namespace {

struct common_flags {
    std::string config_path;
    std::string scheme = "abf";
    std::string method = "analytic";
    std::optional<double> h;
    std::optional<int> n_axis;
    std::optional<int> n_rf;
    std::optional<int> n_d;
    std::optional<int> b_dac;
    std::optional<double> lambda_u;
    std::uint64_t seed = 1;
    long realizations = 1000;
};

void add_common(CLI::App* cmd, common_flags& f) {
    cmd->add_option("--config", f.config_path, "config file (key=value lines)");
    cmd->add_option("--scheme", f.scheme, "abf|hbf")
        ->check(CLI::IsMember({"abf", "hbf"}));
    cmd->add_option("--method", f.method, "analytic|mc")
        ->check(CLI::IsMember({"analytic", "mc"}));
    cmd->add_option("--h", f.h, "altitude [m]");
    cmd->add_option("--n-axis", f.n_axis, "elements per array axis");
    cmd->add_option("--nrf", f.n_rf, "RF chains");
    cmd->add_option("--nd", f.n_d, "simultaneous beams");
    cmd->add_option("--b-dac", f.b_dac, "DAC bits");
    cmd->add_option("--lambda-u", f.lambda_u, "user density [1/m^2]");
    cmd->add_option("--seed", f.seed, "master random seed");
    cmd->add_option("--realizations", f.realizations, "Monte Carlo realizations");
}

skyplan::config load_base(const common_flags& f) {
    skyplan::config c = f.config_path.empty()
                            ? skyplan::config{}
                            : skyplan::load_config_file(f.config_path);
    skyplan::validate(c);
    return c;
}

skyplan::eval_point build_point(const skyplan::config& c, const common_flags& f) {
    const skyplan::scheme_kind scheme = f.scheme == "abf"
                                            ? skyplan::scheme_kind::abf
                                            : skyplan::scheme_kind::hbf;
    skyplan::eval_point p = skyplan::point_from_config(c, scheme);
    if (f.h) p.h = *f.h;
    if (f.n_axis) p.n_axis = *f.n_axis;
    if (f.n_rf) p.n_rf = *f.n_rf;
    if (f.n_d) p.n_d = *f.n_d;
    if (f.b_dac) p.b_dac = *f.b_dac;
    if (f.lambda_u) p.lambda_u = *f.lambda_u;
    // A hybrid run keeps at least as many chains as beams without forcing
    // the user to spell both flags.
    if (p.n_rf < p.n_d && !f.n_rf) p.n_rf = p.n_d;
    return p;
}

int cmd_eval(const common_flags& f, const std::string& csv_path) {
    const skyplan::config base = load_base(f);
    const skyplan::eval_point p = build_point(base, f);
    const auto method = f.method == "analytic" ? skyplan::estimate_method::analytic
                                               : skyplan::estimate_method::monte_carlo;
    const skyplan::eval_result r =
        skyplan::evaluate_point(base, p, method, f.realizations, f.seed);

    const double rad2deg = 180.0 / std::numbers::pi;
    std::printf("scheme            %s\n", p.scheme == skyplan::scheme_kind::abf ? "abf" : "hbf");
    std::printf("altitude          %.6g m\n", p.h);
    std::printf("array             %dx%d (gain %.0f)\n", p.n_axis, p.n_axis,
                static_cast<double>(p.n_axis) * p.n_axis);
    std::printf("n_rf / n_d        %d / %d\n", p.n_rf, p.n_d);
    std::printf("lambda_u          %.6g users/m^2\n", p.lambda_u);
    std::printf("-- footprint --\n");
    std::printf("theta_vb          %.6f deg\n", r.widths.theta_vb * rad2deg);
    std::printf("theta_tb          %.6f deg\n", r.widths.theta_tb * rad2deg);
    std::printf("r_vb              %.6f m\n", r.vb.r_vb);
    if (r.tb) {
        std::printf("r_tb              %.6f m\n", r.tb->r_tb);
        std::printf("ellipse a x b     %.6f x %.6f m\n", r.tb->semi_major,
                    r.tb->semi_minor);
    }
    std::printf("coverage area     %.6f m^2\n", r.s_cov);
    std::printf("-- power --\n");
    std::printf("hover             %.6f W\n", r.power.hover);
    std::printf("pa                %.6f W\n", r.power.pa);
    std::printf("dac               %.6f W\n", r.power.dac);
    std::printf("rf chains         %.6f W\n", r.power.rf_chain);
    std::printf("phase shifters    %.6f W\n", r.power.phase_shifters);
    std::printf("splitters         %.6f W\n", r.power.splitters);
    std::printf("combiners         %.6f W\n", r.power.combiners);
    std::printf("comm total        %.6f W\n", r.power.comm_total);
    std::printf("per-uav total     %.6f W\n", r.power.per_uav_total);
    std::printf("n_uav             %ld\n", r.power.n_uav);
    std::printf("swarm total       %.6f W\n", r.power.swarm_total);
    std::printf("-- capacity --\n");
    std::printf("method            %s\n",
                r.tau.method == skyplan::estimate_method::analytic ? "analytic" : "mc");
    std::printf("tau               %.17g bit/s\n", r.tau.value);
    if (r.tau.method == skyplan::estimate_method::monte_carlo) {
        std::printf("ci95              [%.17g, %.17g] bit/s\n", r.tau.ci_low,
                    r.tau.ci_high);
        std::printf("realizations      %ld (seed %llu)\n", r.tau.realizations,
                    static_cast<unsigned long long>(f.seed));
    }
    std::printf("power efficiency  %.17g bit/s/W\n", r.efficiency);

    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) {
            std::fprintf(stderr, "error: cannot write %s\n", csv_path.c_str());
            return 1;
        }
        out << skyplan::csv_header() << '\n' << skyplan::csv_row(r) << '\n';
    }
    return 0;
}

int cmd_sweep(const common_flags& f, const std::vector<std::string>& sweep_specs,
              const std::string& out_path) {
    const skyplan::config base = load_base(f);
    const skyplan::eval_point origin = build_point(base, f);
    std::vector<skyplan::sweep_axis> axes;
    axes.reserve(sweep_specs.size());
    for (const auto& spec : sweep_specs)
        axes.push_back(skyplan::parse_sweep_axis(spec));
    std::vector<skyplan::eval_point> points = skyplan::expand_sweep(origin, axes);
    // Keep n_rf >= n_d across swept beam counts unless chains are swept too.
    bool sweeps_nrf = false;
    for (const auto& a : axes) sweeps_nrf |= a.key == "n_rf";
    if (!sweeps_nrf && !f.n_rf)
        for (auto& p : points) p.n_rf = std::max(p.n_rf, p.n_d);

    const auto method = f.method == "analytic" ? skyplan::estimate_method::analytic
                                               : skyplan::estimate_method::monte_carlo;
    const std::vector<std::string> rows =
        skyplan::run_sweep(base, points, method, f.realizations, f.seed);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
            return 1;
        }
        out = &file;
    }
    (*out) << skyplan::csv_header() << '\n';
    for (const auto& row : rows) (*out) << row << '\n';
    return 0;
}

int cmd_validate(const common_flags& f, bool quick) {
    const skyplan::config base = load_base(f);
    std::printf("validation run (%s): seed %llu\n", quick ? "quick" : "full",
                static_cast<unsigned long long>(f.seed));
    if (quick)
        std::printf("quick mode: reduced realization counts, statistical "
                    "tolerances loosened accordingly\n");
    const auto checks = skyplan::run_validation(base, quick, f.seed);
    int failures = 0;
    for (const auto& c : checks) {
        const bool informational = c.detail == "informational";
        if (informational) {
            std::printf("INFO %-46s value %.3e\n", c.name.c_str(), c.actual);
            continue;
        }
        std::printf("%s %-46s expected %.6e actual %.6e tol %.3e\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.expected, c.actual,
                    c.tolerance);
        if (!c.pass) ++failures;
    }
    std::printf("%d/%zu checks passed\n",
                static_cast<int>(checks.size()) - failures -
                    1 /* informational line */,
                checks.size() - 1);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planning calculator for aerial base-station swarms"};
    app.require_subcommand(1);

    common_flags eval_flags, sweep_flags, val_flags;
    std::string eval_csv, sweep_out;
    std::vector<std::string> sweep_specs;
    bool quick = false;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one configuration");
    add_common(eval, eval_flags);
    eval->add_option("--csv", eval_csv, "also write the row to this CSV file");

    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep to CSV");
    add_common(sweep, sweep_flags);
    sweep->add_option("--sweep", sweep_specs,
                      "key=start:step:stop (repeatable; scheme=abf:hbf)")
        ->required();
    sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");

    CLI::App* validate = app.add_subcommand("validate", "run built-in checks");
    add_common(validate, val_flags);
    validate->add_flag("--quick", quick, "reduced realization counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_flags, eval_csv);
        if (sweep->parsed()) return cmd_sweep(sweep_flags, sweep_specs, sweep_out);
        if (validate->parsed()) return cmd_validate(val_flags, quick);
    } catch (const skyplan::config_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
