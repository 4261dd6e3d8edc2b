#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsdist/experiments.hpp"

namespace {

using namespace qsdist;

void print_summary(const ResultTable& table) {
    std::printf("%14s %14s %12s %14s %12s\n", table.param_name.c_str(),
                "estimate", "std_error", "oracle", "|diff|");
    double max_diff = 0.0;
    for (const ResultRow& row : table.rows) {
        const double diff = std::abs(row.estimate - row.oracle);
        max_diff = std::max(max_diff, diff);
        std::printf("%14.6f %14.8f %12.6f %14.8f %12.3e\n", row.param,
                    row.estimate, row.std_error, row.oracle, diff);
    }
    std::printf("rows: %zu   max |estimate - oracle| = %.3e\n",
                table.rows.size(), max_diff);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Shot-based simulator experiments: distances between quantum states "
        "and evolution speeds, estimate vs analytic value"};
    app.set_config("--config", "", "Read options from a key=value file");

    std::string experiment;
    app.add_option("--experiment", experiment,
                   "One of: spin-distance, spin-speed, cat-fact-theta, "
                   "cat-fact-phi, ising-distance, ising-speed, hs-mixed")
        ->required();
    int shots = 1024;
    app.add_option("--shots", shots, "Shots per measured value")
        ->check(CLI::PositiveNumber);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Base seed; sweep points derive from it");
    std::string mode = "sampled";
    app.add_option("--mode", mode, "sampled or exact")
        ->check(CLI::IsMember({"sampled", "exact"}));
    std::string distance = "fs";
    app.add_option("--distance", distance,
                   "Distance for pure-state experiments: fs, wootters, minimal")
        ->check(CLI::IsMember({"fs", "wootters", "minimal"}));
    std::string noise = "off";
    app.add_option("--noise", noise,
                   "off, default, or a key=value noise model file");
    double gamma = 1.0;
    app.add_option("--gamma", gamma, "Scale of pure-state metrics");
    double gamma_prime = 1.0;
    app.add_option("--gamma-prime", gamma_prime, "Scale of the mixed metric");
    std::optional<double> start, stop, step;
    app.add_option("--start", start, "Sweep start (default per experiment)");
    app.add_option("--stop", stop, "Sweep stop (inclusive)");
    app.add_option("--step", step, "Sweep step");
    std::vector<double> thetas;
    app.add_option("--thetas", thetas,
                   "Comma-separated theta blocks for cat-fact-phi and "
                   "ising-distance")
        ->delimiter(',');
    std::string out_csv, out_svg, qasm_dir;
    app.add_option("--out", out_csv, "Write the result table as CSV");
    app.add_option("--svg", out_svg, "Write an estimate-vs-analytic plot");
    app.add_option("--qasm-dir", qasm_dir,
                   "Write each sweep point's transpiled circuit(s) here");
    bool quiet = false;
    app.add_flag("--quiet", quiet, "Suppress the stdout summary table");

    CLI11_PARSE(app, argc, argv);

    try {
        ExperimentSpec spec =
            default_experiment_spec(parse_experiment_name(experiment));
        spec.shots = shots;
        spec.seed = seed;
        spec.mode = (mode == "exact") ? RunMode::Exact : RunMode::Sampled;
        if (distance == "wootters") {
            spec.distance = DistanceKind::Wootters;
        } else if (distance == "minimal") {
            spec.distance = DistanceKind::Minimal;
        }
        spec.metric.gamma = gamma;
        spec.metric.gamma_prime = gamma_prime;
        if (start) spec.sweep.start = *start;
        if (stop) spec.sweep.stop = *stop;
        if (step) spec.sweep.step = *step;
        if (!thetas.empty()) spec.theta_values = thetas;
        if (noise == "default") {
            spec.noise = NoiseModel{{0.02}, 0.004, 0.07};
        } else if (noise != "off") {
            spec.noise = load_noise_model(noise);
        }

        const ResultTable table = run_experiment(spec);
        if (!quiet) print_summary(table);
        if (!out_csv.empty()) write_csv(table, out_csv);
        if (!out_svg.empty()) write_svg(table, out_svg);
        if (!qasm_dir.empty()) {
            const auto files = emit_qasm(spec, qasm_dir);
            if (!quiet) {
                std::printf("wrote %zu circuit files to %s\n", files.size(),
                            qasm_dir.c_str());
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
