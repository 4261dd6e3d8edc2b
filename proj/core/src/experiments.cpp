#include "qsdist/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qsdist/qasm.hpp"
#include "qsdist/transpile.hpp"

namespace qsdist {

namespace {

constexpr double pi = std::numbers::pi;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

std::string fmt_g10(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

std::string fmt_fixed(double value, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t nthreads =
        std::min<std::size_t>(count, hw == 0 ? 1 : hw);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

bool has_theta_blocks(ExperimentKind kind) {
    return kind == ExperimentKind::CatFactPhi ||
           kind == ExperimentKind::IsingDistance;
}

bool is_speed_experiment(ExperimentKind kind) {
    return kind == ExperimentKind::SpinSpeed ||
           kind == ExperimentKind::IsingSpeed;
}

double pure_distance(double overlap_value, DistanceKind kind,
                     const MetricConfig& cfg) {
    const OverlapEstimate p{clamp01(overlap_value), 0, 0.0};
    switch (kind) {
        case DistanceKind::FubiniStudy: return fubini_study_distance(p, cfg);
        case DistanceKind::Wootters: return wootters_distance(p, cfg);
        case DistanceKind::Minimal: return minimal_distance(p, cfg);
    }
    throw std::invalid_argument("unknown distance kind");
}

/// Pushes the one-sigma overlap interval through the (monotone
/// decreasing) distance map.
double distance_std_error(const OverlapEstimate& p, DistanceKind kind,
                          const MetricConfig& cfg) {
    if (p.std_error == 0.0) return 0.0;
    const double lo = pure_distance(clamp01(p.value - p.std_error), kind, cfg);
    const double hi = pure_distance(clamp01(p.value + p.std_error), kind, cfg);
    return 0.5 * (lo - hi);
}

OverlapEstimate measured_overlap(const ExperimentSpec& spec, const Circuit& u1,
                                 const Circuit& u2, std::uint64_t seed) {
    if (spec.mode == RunMode::Exact) return overlap(u1, u2, 0, seed);
    if (!spec.noise) return overlap(u1, u2, spec.shots, seed);
    const Circuit basis = transpile_to_basis(concat(u2, adjoint(u1)));
    const MeasurementCounts counts =
        noisy_sample(run(basis), circuit_stats_of(basis), *spec.noise,
                     spec.shots, seed);
    const std::string zeros(static_cast<std::size_t>(basis.n_qubits), '0');
    const auto it = counts.counts.find(zeros);
    const double hits =
        (it == counts.counts.end()) ? 0.0 : static_cast<double>(it->second);
    OverlapEstimate est;
    est.shots = spec.shots;
    est.value = hits / static_cast<double>(spec.shots);
    est.std_error =
        std::sqrt(clamp01(est.value) * clamp01(1.0 - est.value) /
                  static_cast<double>(spec.shots));
    return est;
}

EnergyMoments measured_moments(const ExperimentSpec& spec,
                               const Hamiltonian& ham, const Circuit& prep,
                               std::uint64_t seed) {
    if (spec.mode == RunMode::Exact) return energy_moments(ham, prep, 0, seed);
    if (!spec.noise) return energy_moments(ham, prep, spec.shots, seed);
    const StringMeasureFn measure = [&](const PauliString& s,
                                        std::uint64_t derived) {
        const Circuit basis =
            transpile_to_basis(concat(prep, rotation_circuit_for(s)));
        const MeasurementCounts counts =
            noisy_sample(run(basis), circuit_stats_of(basis), *spec.noise,
                         spec.shots, derived);
        const std::uint64_t mask = support_mask(s);
        double acc = 0.0;
        for (const auto& [bits, count] : counts.counts) {
            const std::size_t idx = index_of_bitstring(bits);
            const double sign = (std::popcount(idx & mask) & 1) ? -1.0 : 1.0;
            acc += sign * static_cast<double>(count);
        }
        ExpectationSample sample;
        sample.value = std::clamp(acc / static_cast<double>(spec.shots), -1.0, 1.0);
        sample.std_error =
            std::sqrt(std::max(0.0, 1.0 - sample.value * sample.value) /
                      static_cast<double>(spec.shots));
        return sample;
    };
    return energy_moments_with(ham, measure, seed);
}

ResultRow speed_row(const ExperimentSpec& spec, const Hamiltonian& ham,
                    const Circuit& prep, double param, double oracle,
                    std::uint64_t seed) {
    const EnergyMoments m = measured_moments(spec, ham, prep, seed);
    const double variance = m.mean_square - m.mean * m.mean;
    const double gamma = spec.metric.gamma;
    ResultRow row;
    row.param = param;
    row.estimate = gamma * std::sqrt(std::max(0.0, variance));
    const double var_se = std::sqrt(
        m.mean_square_std_error * m.mean_square_std_error +
        4.0 * m.mean * m.mean * m.mean_std_error * m.mean_std_error);
    const double lo = gamma * std::sqrt(std::max(0.0, variance - var_se));
    const double hi = gamma * std::sqrt(std::max(0.0, variance + var_se));
    row.std_error = 0.5 * (hi - lo);
    row.oracle = oracle;
    return row;
}

ResultRow overlap_row(const ExperimentSpec& spec, const Circuit& u1,
                      const Circuit& u2, double param, double oracle_overlap,
                      std::uint64_t seed) {
    const OverlapEstimate p = measured_overlap(spec, u1, u2, seed);
    ResultRow row;
    row.param = param;
    row.estimate = pure_distance(p.value, spec.distance, spec.metric);
    row.std_error = distance_std_error(p, spec.distance, spec.metric);
    row.oracle = pure_distance(oracle_overlap, spec.distance, spec.metric);
    return row;
}

/// The two circuits whose squared overlap a distance point measures.
struct OverlapPair {
    Circuit u1;
    Circuit u2;
};

OverlapPair overlap_pair_for(ExperimentKind kind, double series_theta,
                             double param) {
    switch (kind) {
        case ExperimentKind::SpinDistance:
            return {Circuit(1), one_qubit_state_circuit(param, 0.0)};
        case ExperimentKind::CatFactTheta:
            return {cat_state_circuit(5),
                    factorized_state_circuit(5, param, 0.0)};
        case ExperimentKind::CatFactPhi:
            return {cat_state_circuit(5),
                    factorized_state_circuit(5, series_theta, param)};
        case ExperimentKind::IsingDistance: {
            IsingParams ip;
            ip.J = 1.0;
            ip.chi = param;
            ip.theta = series_theta;
            ip.phi = 0.0;
            ip.n_spins = 5;
            return {factorized_state_circuit(5, series_theta, 0.0),
                    ising_evolution_circuit(ip)};
        }
        default:
            throw std::invalid_argument("not an overlap experiment");
    }
}

double oracle_overlap_for(ExperimentKind kind, double series_theta,
                          double param) {
    switch (kind) {
        case ExperimentKind::SpinDistance:
            return spin_overlap_oracle(0.0, 0.0, param, 0.0);
        case ExperimentKind::CatFactTheta:
            return cat_fact_overlap_oracle(param, 0.0);
        case ExperimentKind::CatFactPhi:
            return cat_fact_overlap_oracle(series_theta, param);
        case ExperimentKind::IsingDistance:
            return ising_overlap_oracle(param, series_theta);
        default:
            throw std::invalid_argument("not an overlap experiment");
    }
}

ResultRow run_point(const ExperimentSpec& spec, double series_theta,
                    double param, std::uint64_t seed) {
    switch (spec.kind) {
        case ExperimentKind::SpinDistance:
        case ExperimentKind::CatFactTheta:
        case ExperimentKind::CatFactPhi:
        case ExperimentKind::IsingDistance: {
            const OverlapPair pair = overlap_pair_for(spec.kind, series_theta, param);
            return overlap_row(spec, pair.u1, pair.u2, param,
                               oracle_overlap_for(spec.kind, series_theta, param),
                               seed);
        }
        case ExperimentKind::SpinSpeed: {
            SpinFieldParams fp;
            return speed_row(spec, spin_field_hamiltonian(fp),
                             one_qubit_state_circuit(param, 0.0), param,
                             spin_speed_oracle(param, fp.omega,
                                               spec.metric.gamma),
                             seed);
        }
        case ExperimentKind::IsingSpeed: {
            return speed_row(
                spec, ising_hamiltonian(1.0, 5),
                factorized_state_circuit(5, param, 0.0), param,
                std::sqrt(ising_gtt_oracle(param, 1.0, spec.metric.gamma)),
                seed);
        }
        case ExperimentKind::HsMixed: {
            const HsExamplePair pair = hs_example_ensembles(param);
            OverlapFn fn = [&](const Circuit& a, const Circuit& b,
                               std::uint64_t derived) {
                return measured_overlap(spec, a, b, derived);
            };
            const DistanceEstimate est = hilbert_schmidt_estimate(
                pair.rho1, pair.rho2, spec.metric, fn, seed);
            ResultRow row;
            row.param = param;
            row.estimate = est.value;
            row.std_error = est.std_error;
            row.oracle = hs_example_oracle(param, spec.metric.gamma_prime);
            return row;
        }
    }
    throw std::invalid_argument("run_point: unknown experiment kind");
}

struct Job {
    double series_theta = 0.0;
    double param = 0.0;
};

std::vector<Job> jobs_for(const ExperimentSpec& spec,
                          std::vector<std::size_t>& series_starts) {
    const std::vector<double> params = sweep_points(spec.sweep);
    std::vector<Job> jobs;
    series_starts.clear();
    if (has_theta_blocks(spec.kind)) {
        if (spec.theta_values.empty()) {
            throw std::invalid_argument(
                "run_experiment: theta_values required for this experiment");
        }
        for (double theta : spec.theta_values) {
            series_starts.push_back(jobs.size());
            for (double p : params) jobs.push_back({theta, p});
        }
    } else {
        series_starts.push_back(0);
        for (double p : params) jobs.push_back({0.0, p});
    }
    return jobs;
}

std::string param_name_of(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::CatFactPhi: return "phi";
        case ExperimentKind::IsingDistance: return "chi";
        default: return "theta";
    }
}

}  // namespace

ExperimentKind parse_experiment_name(const std::string& name) {
    if (name == "spin-distance") return ExperimentKind::SpinDistance;
    if (name == "spin-speed") return ExperimentKind::SpinSpeed;
    if (name == "cat-fact-theta") return ExperimentKind::CatFactTheta;
    if (name == "cat-fact-phi") return ExperimentKind::CatFactPhi;
    if (name == "ising-distance") return ExperimentKind::IsingDistance;
    if (name == "ising-speed") return ExperimentKind::IsingSpeed;
    if (name == "hs-mixed") return ExperimentKind::HsMixed;
    throw std::invalid_argument("unknown experiment '" + name + "'");
}

std::string experiment_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::SpinDistance: return "spin-distance";
        case ExperimentKind::SpinSpeed: return "spin-speed";
        case ExperimentKind::CatFactTheta: return "cat-fact-theta";
        case ExperimentKind::CatFactPhi: return "cat-fact-phi";
        case ExperimentKind::IsingDistance: return "ising-distance";
        case ExperimentKind::IsingSpeed: return "ising-speed";
        case ExperimentKind::HsMixed: return "hs-mixed";
    }
    throw std::invalid_argument("unknown experiment kind");
}

std::vector<double> sweep_points(const SweepRange& r) {
    if (!(r.step > 0.0) || !(r.stop >= r.start)) {
        throw std::invalid_argument("sweep_points: need step > 0, stop >= start");
    }
    std::vector<double> points;
    for (int k = 0;; ++k) {
        const double x = r.start + k * r.step;
        if (x > r.stop + 1e-9) break;
        points.push_back(x);
    }
    return points;
}

ExperimentSpec default_experiment_spec(ExperimentKind kind) {
    ExperimentSpec spec;
    spec.kind = kind;
    spec.sweep = {0.0, 2.0 * pi, pi / 20.0};
    if (kind == ExperimentKind::IsingDistance) {
        spec.sweep = {0.0, 4.0 * pi, pi / 10.0};
    }
    if (has_theta_blocks(kind)) {
        spec.theta_values = {pi / 2.0, 3.0 * pi / 8.0, pi / 4.0, pi / 8.0};
    }
    return spec;
}

ResultTable run_experiment(const ExperimentSpec& spec) {
    if (spec.mode == RunMode::Sampled && spec.shots <= 0) {
        throw std::invalid_argument("run_experiment: sampled mode needs shots");
    }
    ResultTable table;
    const std::vector<Job> jobs = jobs_for(spec, table.series_starts);
    table.param_name = param_name_of(spec.kind);
    table.rows.resize(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t j) {
        table.rows[j] = run_point(spec, jobs[j].series_theta, jobs[j].param,
                                  derive_seed(spec.seed, j));
    });
    return table;
}

void write_csv(const ResultTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << "param,estimate,std_error,oracle\n";
    for (const ResultRow& row : table.rows) {
        out << fmt_g10(row.param) << ',' << fmt_g10(row.estimate) << ','
            << fmt_g10(row.std_error) << ',' << fmt_g10(row.oracle) << '\n';
    }
    if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

ResultTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) ||
        line != "param,estimate,std_error,oracle") {
        throw std::invalid_argument("read_csv: bad header in " + path);
    }
    ResultTable table;
    table.param_name = "param";
    table.series_starts = {0};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ResultRow row;
        double* fields[4] = {&row.param, &row.estimate, &row.std_error,
                             &row.oracle};
        std::size_t pos = 0;
        for (int f = 0; f < 4; ++f) {
            const std::size_t comma = line.find(',', pos);
            const std::string cell =
                line.substr(pos, comma == std::string::npos
                                     ? std::string::npos
                                     : comma - pos);
            char* end = nullptr;
            *fields[f] = std::strtod(cell.c_str(), &end);
            if (end != cell.c_str() + cell.size() || cell.empty()) {
                throw std::invalid_argument("read_csv: bad field '" + cell +
                                            "'");
            }
            if (f < 3) {
                if (comma == std::string::npos) {
                    throw std::invalid_argument("read_csv: short row");
                }
                pos = comma + 1;
            } else if (comma != std::string::npos) {
                throw std::invalid_argument("read_csv: extra fields");
            }
        }
        table.rows.push_back(row);
    }
    return table;
}

void write_svg(const ResultTable& table, const std::string& path) {
    if (table.rows.empty()) {
        throw std::invalid_argument("write_svg: empty table");
    }
    constexpr double width = 720.0, height = 480.0;
    constexpr double ml = 70.0, mr = 24.0, mt = 24.0, mb = 56.0;
    double x_min = table.rows.front().param, x_max = x_min;
    double y_min = table.rows.front().estimate, y_max = y_min;
    for (const ResultRow& row : table.rows) {
        x_min = std::min({x_min, row.param});
        x_max = std::max({x_max, row.param});
        y_min = std::min({y_min, row.estimate, row.oracle});
        y_max = std::max({y_max, row.estimate, row.oracle});
    }
    if (x_max - x_min < 1e-12) x_max = x_min + 1.0;
    const double y_pad = std::max(0.05 * (y_max - y_min), 1e-6);
    y_min -= y_pad;
    y_max += y_pad;
    const auto sx = [&](double x) {
        return ml + (x - x_min) / (x_max - x_min) * (width - ml - mr);
    };
    const auto sy = [&](double y) {
        return height - mb - (y - y_min) / (y_max - y_min) * (height - mt - mb);
    };
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
    constexpr std::size_t n_colors = sizeof(kColors) / sizeof(kColors[0]);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\""
        << height << "\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\""
        << width - mr << "\" y2=\"" << height - mb
        << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
        << "\" y2=\"" << height - mb
        << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    for (int tick = 0; tick <= 4; ++tick) {
        const double xv = x_min + (x_max - x_min) * tick / 4.0;
        const double yv = y_min + (y_max - y_min) * tick / 4.0;
        const double xp = sx(xv), yp = sy(yv);
        svg << "<line x1=\"" << fmt_fixed(xp, 2) << "\" y1=\"" << height - mb
            << "\" x2=\"" << fmt_fixed(xp, 2) << "\" y2=\"" << height - mb + 5
            << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << fmt_fixed(xp, 2) << "\" y=\"" << height - mb + 20
            << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333\">"
            << fmt_fixed(xv, 2) << "</text>\n";
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << fmt_fixed(yp, 2)
            << "\" x2=\"" << ml << "\" y2=\"" << fmt_fixed(yp, 2)
            << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << ml - 9 << "\" y=\"" << fmt_fixed(yp + 4, 2)
            << "\" font-size=\"12\" text-anchor=\"end\" fill=\"#333\">"
            << fmt_fixed(yv, 2) << "</text>\n";
    }
    svg << "<text x=\"" << (ml + width - mr) / 2.0 << "\" y=\"" << height - 14
        << "\" font-size=\"14\" text-anchor=\"middle\" fill=\"#333\">"
        << table.param_name << "</text>\n";
    const std::size_t n_series = table.series_starts.size();
    for (std::size_t s = 0; s < n_series; ++s) {
        const std::size_t begin = table.series_starts[s];
        const std::size_t end =
            (s + 1 < n_series) ? table.series_starts[s + 1] : table.rows.size();
        const char* color = kColors[s % n_colors];
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = begin; i < end; ++i) {
            svg << fmt_fixed(sx(table.rows[i].param), 2) << ','
                << fmt_fixed(sy(table.rows[i].oracle), 2) << ' ';
        }
        svg << "\"/>\n";
        for (std::size_t i = begin; i < end; ++i) {
            svg << "<circle cx=\"" << fmt_fixed(sx(table.rows[i].param), 2)
                << "\" cy=\"" << fmt_fixed(sy(table.rows[i].estimate), 2)
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
    }
    svg << "</svg>\n";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_svg: cannot open " + path);
    out << svg.str();
    if (!out) throw std::runtime_error("write_svg: write failed for " + path);
}

std::vector<std::string> emit_qasm(const ExperimentSpec& spec,
                                   const std::string& dir) {
    std::vector<std::size_t> series_starts;
    const std::vector<Job> jobs = jobs_for(spec, series_starts);
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    for (const Job& job : jobs) {
        std::string stem = experiment_name(spec.kind) + "_";
        if (has_theta_blocks(spec.kind)) {
            stem += "theta" + fmt_fixed(job.series_theta, 4) + "_";
        }
        stem += param_name_of(spec.kind) + fmt_fixed(job.param, 4);
        std::vector<std::string> texts;
        if (is_speed_experiment(spec.kind)) {
            const Hamiltonian ham =
                (spec.kind == ExperimentKind::SpinSpeed)
                    ? spin_field_hamiltonian(SpinFieldParams{})
                    : ising_hamiltonian(1.0, 5);
            const Circuit prep =
                (spec.kind == ExperimentKind::SpinSpeed)
                    ? one_qubit_state_circuit(job.param, 0.0)
                    : factorized_state_circuit(5, job.param, 0.0);
            std::set<std::string> seen;
            for (const MomentPlanEntry& entry : moment_plan(ham).entries) {
                if (entry.is_identity) continue;
                const std::string text = export_qasm(transpile_to_basis(
                    concat(prep, rotation_circuit_for(entry.string))));
                if (seen.insert(text).second) texts.push_back(text);
            }
        } else if (spec.kind == ExperimentKind::HsMixed) {
            const HsExamplePair pair = hs_example_ensembles(job.param);
            std::vector<std::pair<Circuit, Circuit>> pairs;
            for (const PureStateEnsemble* rho : {&pair.rho1, &pair.rho2}) {
                const auto& comps = rho->components;
                for (std::size_t a = 0; a < comps.size(); ++a) {
                    for (std::size_t b = a + 1; b < comps.size(); ++b) {
                        pairs.emplace_back(comps[a].prep, comps[b].prep);
                    }
                }
            }
            for (const EnsembleComponent& a : pair.rho1.components) {
                for (const EnsembleComponent& b : pair.rho2.components) {
                    pairs.emplace_back(a.prep, b.prep);
                }
            }
            for (const auto& [u1, u2] : pairs) {
                texts.push_back(export_qasm(
                    transpile_to_basis(concat(u2, adjoint(u1)))));
            }
        } else {
            const OverlapPair pair =
                overlap_pair_for(spec.kind, job.series_theta, job.param);
            texts.push_back(export_qasm(
                transpile_to_basis(concat(pair.u2, adjoint(pair.u1)))));
        }
        for (std::size_t k = 0; k < texts.size(); ++k) {
            std::string name = stem;
            if (texts.size() > 1) name += "_c" + std::to_string(k);
            const std::filesystem::path file =
                std::filesystem::path(dir) / (name + ".qasm");
            std::ofstream out(file, std::ios::binary);
            if (!out) {
                throw std::runtime_error("emit_qasm: cannot open " +
                                         file.string());
            }
            out << texts[k];
            if (!out) {
                throw std::runtime_error("emit_qasm: write failed for " +
                                         file.string());
            }
            written.push_back(file.string());
        }
    }
    return written;
}

NoiseModel load_noise_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_noise_model: cannot open " + path);
    NoiseModel model;
    bool saw_readout = false;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("load_noise_model: bad line '" + line +
                                        "'");
        }
        std::string key = line.substr(start, eq - start);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) {
            key.pop_back();
        }
        std::string value = line.substr(eq + 1);
        auto parse_double = [&](const std::string& text) {
            char* end = nullptr;
            const double v = std::strtod(text.c_str(), &end);
            while (end && (*end == ' ' || *end == '\t')) ++end;
            if (end != text.c_str() + text.size()) {
                throw std::invalid_argument("load_noise_model: bad number '" +
                                            text + "'");
            }
            return v;
        };
        if (key == "readout_flip_prob") {
            model.readout_flip_prob.clear();
            std::size_t pos = 0;
            while (pos <= value.size()) {
                const std::size_t comma = value.find(',', pos);
                const std::string cell =
                    value.substr(pos, comma == std::string::npos
                                          ? std::string::npos
                                          : comma - pos);
                model.readout_flip_prob.push_back(parse_double(cell));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            saw_readout = true;
        } else if (key == "gate_error_prob_1q") {
            model.gate_error_prob_1q = parse_double(value);
        } else if (key == "gate_error_prob_2q") {
            model.gate_error_prob_2q = parse_double(value);
        } else {
            throw std::invalid_argument("load_noise_model: unknown key '" +
                                        key + "'");
        }
    }
    if (!saw_readout) model.readout_flip_prob = {0.0};
    return model;
}

}  // namespace qsdist
