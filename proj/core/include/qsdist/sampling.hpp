#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "qsdist/state_vector.hpp"

namespace qsdist {

/// Deterministic shot-noise source.  Wraps std::mt19937_64 (whose output
/// sequence the standard pins down exactly) and converts to doubles by
/// hand, so identical seeds give identical streams on every platform.
class ShotRng {
  public:
    explicit ShotRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::uint64_t bits() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

/// Stream-splitting: a stable child seed for the index-th sub-task of a
/// run seeded with base.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Histogram of measured bitstrings from repeated state preparation.
struct MeasurementCounts {
    int shots = 0;
    std::map<std::string, std::uint64_t> counts;  // key: "b0b1...b{n-1}"
    std::uint64_t seed = 0;
};

/// Draws `shots` computational-basis samples from |amplitude|^2 by
/// inverse-CDF lookup.  Throws std::invalid_argument if shots <= 0.
MeasurementCounts sample_counts(const StateVector& state, int shots,
                                std::uint64_t seed);

}  // namespace qsdist
