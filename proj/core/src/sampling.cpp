#include "qsdist/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsdist {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 finalizer over the streams base + k*golden_gamma.
    std::uint64_t x = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

MeasurementCounts sample_counts(const StateVector& state, int shots,
                                std::uint64_t seed) {
    if (shots <= 0) {
        throw std::invalid_argument("sample_counts: shots must be positive");
    }
    const std::size_t dim = state.dim();
    std::vector<double> cumulative(dim);
    double total = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        total += std::norm(state.amplitudes[i]);
        cumulative[i] = total;
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("sample_counts: state has zero norm");
    }
    ShotRng rng(seed);
    MeasurementCounts result;
    result.shots = shots;
    result.seed = seed;
    std::map<std::size_t, std::uint64_t> index_counts;
    for (int shot = 0; shot < shots; ++shot) {
        const double u = rng.uniform() * total;
        std::size_t idx = static_cast<std::size_t>(
            std::upper_bound(cumulative.begin(), cumulative.end(), u) -
            cumulative.begin());
        if (idx >= dim) idx = dim - 1;
        ++index_counts[idx];
    }
    for (const auto& [idx, count] : index_counts) {
        result.counts.emplace(bitstring_of(idx, state.n_qubits), count);
    }
    return result;
}

}  // namespace qsdist
