#include "qsdist/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsdist {

namespace {

void check_prob(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(what) +
                                    " must lie in [0, 1], got " +
                                    std::to_string(p));
    }
}

}  // namespace

NoiseModel default_noise_model(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("default_noise_model: bad qubit count");
    }
    NoiseModel m;
    m.readout_flip_prob.assign(static_cast<std::size_t>(n_qubits), 0.02);
    m.gate_error_prob_1q = 0.004;
    m.gate_error_prob_2q = 0.07;
    return m;
}

NoiseModel resolve_noise_model(const NoiseModel& m, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("resolve_noise_model: bad qubit count");
    }
    check_prob(m.gate_error_prob_1q, "gate_error_prob_1q");
    check_prob(m.gate_error_prob_2q, "gate_error_prob_2q");
    for (double p : m.readout_flip_prob) check_prob(p, "readout_flip_prob");
    NoiseModel out = m;
    if (m.readout_flip_prob.size() == 1) {
        out.readout_flip_prob.assign(static_cast<std::size_t>(n_qubits),
                                     m.readout_flip_prob.front());
    } else if (m.readout_flip_prob.size() !=
               static_cast<std::size_t>(n_qubits)) {
        throw std::invalid_argument(
            "resolve_noise_model: readout_flip_prob length is neither 1 nor "
            "n_qubits");
    }
    return out;
}

MeasurementCounts apply_readout_noise(const MeasurementCounts& counts,
                                      const NoiseModel& model,
                                      std::uint64_t seed) {
    if (counts.counts.empty()) {
        throw std::invalid_argument("apply_readout_noise: empty histogram");
    }
    const int n_qubits = static_cast<int>(counts.counts.begin()->first.size());
    const NoiseModel m = resolve_noise_model(model, n_qubits);
    ShotRng rng(seed);
    MeasurementCounts out;
    out.shots = counts.shots;
    out.seed = seed;
    for (const auto& [bits, count] : counts.counts) {
        if (static_cast<int>(bits.size()) != n_qubits) {
            throw std::invalid_argument(
                "apply_readout_noise: inconsistent key widths");
        }
        for (std::uint64_t shot = 0; shot < count; ++shot) {
            std::string flipped = bits;
            for (int q = 0; q < n_qubits; ++q) {
                const double p = m.readout_flip_prob[static_cast<std::size_t>(q)];
                if (p > 0.0 && rng.uniform() < p) {
                    auto& c = flipped[static_cast<std::size_t>(q)];
                    c = (c == '0') ? '1' : '0';
                }
            }
            ++out.counts[flipped];
        }
    }
    return out;
}

MeasurementCounts noisy_sample(const StateVector& state,
                               const CircuitStats& stats,
                               const NoiseModel& model, int shots,
                               std::uint64_t seed) {
    if (shots <= 0) {
        throw std::invalid_argument("noisy_sample: shots must be positive");
    }
    if (stats.n_1q < 0 || stats.n_2q < 0) {
        throw std::invalid_argument("noisy_sample: negative gate counts");
    }
    const NoiseModel m = resolve_noise_model(model, state.n_qubits);
    // Aggregate depolarizing channel: any gate error scrambles the shot.
    const double p_depol =
        1.0 - std::pow(1.0 - m.gate_error_prob_1q, stats.n_1q) *
                  std::pow(1.0 - m.gate_error_prob_2q, stats.n_2q);
    const std::size_t dim = state.dim();
    std::vector<double> cumulative(dim);
    double total = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        total += std::norm(state.amplitudes[i]);
        cumulative[i] = total;
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("noisy_sample: state has zero norm");
    }
    ShotRng rng(seed);
    MeasurementCounts out;
    out.shots = shots;
    out.seed = seed;
    std::map<std::size_t, std::uint64_t> index_counts;
    for (int shot = 0; shot < shots; ++shot) {
        const double u = rng.uniform() * total;
        std::size_t idx = static_cast<std::size_t>(
            std::upper_bound(cumulative.begin(), cumulative.end(), u) -
            cumulative.begin());
        if (idx >= dim) idx = dim - 1;
        if (p_depol > 0.0 && rng.uniform() < p_depol) {
            idx = static_cast<std::size_t>(rng.bits()) & (dim - 1);
        }
        for (int q = 0; q < state.n_qubits; ++q) {
            const double p = m.readout_flip_prob[static_cast<std::size_t>(q)];
            if (p > 0.0 && rng.uniform() < p) {
                idx ^= std::size_t{1} << (state.n_qubits - 1 - q);
            }
        }
        ++index_counts[idx];
    }
    for (const auto& [idx, count] : index_counts) {
        out.counts.emplace(bitstring_of(idx, state.n_qubits), count);
    }
    return out;
}

}  // namespace qsdist
