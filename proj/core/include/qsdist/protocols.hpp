#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qsdist/circuit.hpp"
#include "qsdist/pauli.hpp"
#include "qsdist/sampling.hpp"

namespace qsdist {

/// Squared-overlap estimate |<psi1|psi2>|^2 with its sampling error.
struct OverlapEstimate {
    double value = 0.0;      // in [0, 1]
    int shots = 0;           // 0 marks an exact (infinite-shot) value
    double std_error = 0.0;  // 0 when exact
};

/// Scale factors of the metrics: gamma for pure-state distances and the
/// evolution speed, gamma_prime for the mixed-state distance.
struct MetricConfig {
    double gamma = 1.0;
    double gamma_prime = 1.0;
};

/// |<psi1|psi2>|^2 measured by running prep2 followed by the adjoint of
/// prep1 and reading the weight of the all-zeros outcome.  shots == 0
/// computes the exact weight; shots > 0 samples it (binomial std_error).
/// Throws std::invalid_argument on width mismatch or negative shots.
OverlapEstimate overlap(const Circuit& prep1, const Circuit& prep2, int shots,
                        std::uint64_t seed);

/// gamma * sqrt(1 - p), from the metric induced by the state-space
/// geometry.  All three take p = |<psi1|psi2>|^2 in [0, 1] and throw
/// std::invalid_argument outside it.
double fubini_study_distance(const OverlapEstimate& p, const MetricConfig& cfg);

/// gamma * arccos(sqrt(p)), the geodesic angle.
double wootters_distance(const OverlapEstimate& p, const MetricConfig& cfg);

/// gamma * sqrt(2 (1 - sqrt(p))), chord length through the embedding.
double minimal_distance(const OverlapEstimate& p, const MetricConfig& cfg);

/// Basis-change circuit that maps each letter's eigenbasis onto the
/// computational one: X gets U(pi/2, pi, pi) (a rotation R with
/// R^dagger Z R = X), Y gets U(pi/2, -pi/2, pi/2), Z and I get nothing.
Circuit rotation_circuit_for(const PauliString& s);

/// <prep| P |prep> via the rotation circuit plus bit-parity readout.
/// shots == 0 is exact; otherwise sampled.  Result lies in [-1, 1].
double expectation(const Circuit& prep, const PauliString& s, int shots,
                   std::uint64_t seed);

/// One measured quantity with its sampling error.
struct ExpectationSample {
    double value = 0.0;
    double std_error = 0.0;
};

/// Measurement schedule for <H> and <H^2>: every product of term pairs
/// is reduced symbolically to a single string, coefficients (including
/// the +-i phases, which cancel exactly for real coefficients) are
/// accumulated per distinct string, and each string appears once.
struct MomentPlanEntry {
    PauliString string;
    bool is_identity = false;
    double mean_coeff = 0.0;    // weight in <H>
    double square_coeff = 0.0;  // weight in <H^2>
};

struct MomentPlan {
    std::vector<MomentPlanEntry> entries;
};

MomentPlan moment_plan(const Hamiltonian& h);

struct EnergyMoments {
    double mean = 0.0;
    double mean_square = 0.0;
    double mean_std_error = 0.0;
    double mean_square_std_error = 0.0;
};

/// Measures every entry of moment_plan(h) on |prep>, reusing one
/// measurement per distinct string for both moments; the identity
/// string contributes exactly 1.  Entry k draws derive_seed(seed, k).
EnergyMoments energy_moments(const Hamiltonian& h, const Circuit& prep,
                             int shots, std::uint64_t seed);

/// Same assembly with a caller-supplied measurement of each non-identity
/// string (takes the string and its derived seed).  Lets a device-noise
/// layer reuse the schedule.
using StringMeasureFn =
    std::function<ExpectationSample(const PauliString&, std::uint64_t)>;

EnergyMoments energy_moments_with(const Hamiltonian& h,
                                  const StringMeasureFn& measure,
                                  std::uint64_t seed);

/// gamma * sqrt(<H^2> - <H>^2): the instantaneous speed ds/dt of
/// |prep> evolving under H, with the variance clamped at zero.
double evolution_speed(const Hamiltonian& h, const Circuit& prep,
                       const MetricConfig& cfg, int shots, std::uint64_t seed);

/// speed * tau, valid because the variance of H is a constant of motion
/// under exp(-iHt); checked on the exactly evolved state at t = 0,
/// tau/2, tau (throws std::runtime_error if the variances disagree).
/// Throws std::invalid_argument for tau < 0.
double path_length(const Hamiltonian& h, const Circuit& prep, double tau,
                   const MetricConfig& cfg);

/// Mixture of pure states, each given by a preparation circuit.
struct EnsembleComponent {
    double weight = 0.0;
    Circuit prep;
};

struct PureStateEnsemble {
    std::vector<EnsembleComponent> components;
};

/// Throws std::invalid_argument unless weights lie in (0, 1], sum to 1
/// within 1e-12, and all preps share one register width.
void validate_ensemble(const PureStateEnsemble& e);

/// gamma_prime * sqrt(tr rho1^2 + tr rho2^2 - 2 tr rho1 rho2), with
/// every trace expanded into pairwise squared overlaps of the ensemble
/// members.  Diagonal purity terms are exact; each distinct pair is
/// measured once (symmetric pairs share the measurement) with
/// consecutive derived seeds, in deterministic order.  The radicand is
/// clamped at zero.
double hilbert_schmidt_distance(const PureStateEnsemble& rho1,
                                const PureStateEnsemble& rho2,
                                const MetricConfig& cfg, int shots,
                                std::uint64_t seed);

/// Estimate form with the error propagated through the radicand
/// (half-width of the one-sigma interval).
struct DistanceEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Caller-supplied pairwise overlap, for injecting device noise.
using OverlapFn = std::function<OverlapEstimate(
    const Circuit&, const Circuit&, std::uint64_t)>;

DistanceEstimate hilbert_schmidt_estimate(const PureStateEnsemble& rho1,
                                          const PureStateEnsemble& rho2,
                                          const MetricConfig& cfg,
                                          const OverlapFn& pair_overlap,
                                          std::uint64_t seed);

}  // namespace qsdist
