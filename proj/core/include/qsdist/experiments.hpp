#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsdist/models.hpp"
#include "qsdist/noise.hpp"
#include "qsdist/protocols.hpp"

namespace qsdist {

enum class ExperimentKind {
    SpinDistance,   // distance between two Bloch states vs theta
    SpinSpeed,      // speed of a Bloch state under a static field vs theta
    CatFactTheta,   // cat vs factorized state distance, phi = 0, vs theta
    CatFactPhi,     // cat vs factorized distance vs phi, one block per theta
    IsingDistance,  // distance from t=0 under the Ising chain vs chi
    IsingSpeed,     // Ising chain evolution speed vs theta
    HsMixed,        // mixed-state distance for the worked ensemble pair
};

/// Maps the CLI spelling ("spin-distance", ..., "hs-mixed") to the
/// kind.  Throws std::invalid_argument for unknown names.
ExperimentKind parse_experiment_name(const std::string& name);

std::string experiment_name(ExperimentKind kind);

enum class RunMode { Exact, Sampled };

enum class DistanceKind { FubiniStudy, Wootters, Minimal };

struct SweepRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
};

/// start, start+step, ..., up to stop inclusive (within 1e-9 slack).
std::vector<double> sweep_points(const SweepRange& r);

/// Everything a run needs.  default_experiment_spec fills each
/// experiment's standard sweep grid, theta blocks, and shot budget.
struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::SpinDistance;
    SweepRange sweep;
    std::vector<double> theta_values;  // block parameter where applicable
    int shots = 1024;
    std::uint64_t seed = 0;
    RunMode mode = RunMode::Sampled;
    DistanceKind distance = DistanceKind::FubiniStudy;
    MetricConfig metric;
    std::optional<NoiseModel> noise;
};

ExperimentSpec default_experiment_spec(ExperimentKind kind);

struct ResultRow {
    double param = 0.0;
    double estimate = 0.0;
    double std_error = 0.0;
    double oracle = 0.0;
};

/// Rows in sweep order; multi-block experiments store the blocks
/// consecutively with series_starts marking where each begins.
struct ResultTable {
    std::vector<ResultRow> rows;
    std::vector<std::size_t> series_starts;
    std::string param_name;
};

/// Runs every sweep point (in parallel across worker threads; point k
/// always uses derive_seed(spec.seed, k), so the table is independent
/// of thread count) and pairs each estimate with its analytic value.
ResultTable run_experiment(const ExperimentSpec& spec);

/// CSV with header "param,estimate,std_error,oracle", one row per
/// sweep point, %.10g fields, LF line ends.
void write_csv(const ResultTable& table, const std::string& path);

ResultTable read_csv(const std::string& path);

/// Self-contained SVG: one analytic polyline per block, one marker per
/// measured row, labeled axes.
void write_svg(const ResultTable& table, const std::string& path);

/// Writes the transpiled measurement circuit(s) of every sweep point as
/// OpenQASM 2.0 files under dir; filenames encode the experiment and
/// parameter values.  Returns the paths written.
std::vector<std::string> emit_qasm(const ExperimentSpec& spec,
                                   const std::string& dir);

/// Reads "key=value" lines (readout_flip_prob takes a comma list).
/// Throws std::invalid_argument on unknown keys or bad values.
NoiseModel load_noise_model(const std::string& path);

}  // namespace qsdist
