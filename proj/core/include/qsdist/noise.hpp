#pragma once

#include <cstdint>
#include <vector>

#include "qsdist/sampling.hpp"
#include "qsdist/transpile.hpp"

namespace qsdist {

/// Classical device-noise knobs: per-qubit readout flip probabilities
/// (a single entry broadcasts to every qubit) and per-gate depolarizing
/// error rates for the two basis gate classes.
struct NoiseModel {
    std::vector<double> readout_flip_prob;
    double gate_error_prob_1q = 0.0;
    double gate_error_prob_2q = 0.0;
};

/// Values modelled on published device fidelities: 2% readout error,
/// 0.4% per one-qubit gate, 7% per Cnot.
NoiseModel default_noise_model(int n_qubits);

/// Copy of the model with readout_flip_prob resolved to exactly
/// n_qubits entries.  Throws std::invalid_argument if any probability
/// is outside [0, 1] or the array length is neither 1 nor n_qubits.
NoiseModel resolve_noise_model(const NoiseModel& m, int n_qubits);

/// Flips each bit of each recorded shot independently with its qubit's
/// readout probability.  Total shots are conserved; zero probabilities
/// draw nothing from the stream, so an all-zero model is an exact
/// identity.  Throws std::invalid_argument on bad probabilities.
MeasurementCounts apply_readout_noise(const MeasurementCounts& counts,
                                      const NoiseModel& model,
                                      std::uint64_t seed);

/// Samples like sample_counts, then corrupts each shot: with
/// probability 1 - (1-p1)^n_1q (1-p2)^n_2q the outcome is replaced by a
/// uniform bitstring (the fully depolarized limit), and readout flips
/// are applied on top.  With an all-zero model the draws match
/// sample_counts exactly.
MeasurementCounts noisy_sample(const StateVector& state,
                               const CircuitStats& stats,
                               const NoiseModel& model, int shots,
                               std::uint64_t seed);

}  // namespace qsdist
