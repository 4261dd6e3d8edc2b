#include "qsdist/protocols.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsdist {

namespace {

constexpr double pi = std::numbers::pi;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void check_overlap_arg(const OverlapEstimate& p) {
    if (!(p.value >= 0.0 && p.value <= 1.0)) {
        throw std::invalid_argument("distance: overlap outside [0, 1]");
    }
}

double binomial_std_error(double p, int shots) {
    return std::sqrt(clamp01(p) * clamp01(1.0 - p) /
                     static_cast<double>(shots));
}

std::string letters_key(const PauliString& s) {
    static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
    std::string key(s.letters.size(), 'I');
    for (std::size_t i = 0; i < s.letters.size(); ++i) {
        key[i] = kNames[static_cast<int>(s.letters[i])];
    }
    return key;
}

/// Variance of H with both moments taken on the exact state; used to
/// check conservation along the evolved path.
double exact_gtt(const Hamiltonian& h, const StateVector& psi, double gamma) {
    const StateVector hpsi = apply_hamiltonian(psi, h);
    const double mean = inner_product(psi, hpsi).real();
    const double mean_square = norm_sq(hpsi);
    return gamma * gamma * (mean_square - mean * mean);
}

struct RadicandTerm {
    double coeff = 0.0;  // multiplies the measured squared overlap
    OverlapEstimate estimate;
};

}  // namespace

OverlapEstimate overlap(const Circuit& prep1, const Circuit& prep2, int shots,
                        std::uint64_t seed) {
    if (prep1.n_qubits != prep2.n_qubits) {
        throw std::invalid_argument("overlap: circuit widths differ");
    }
    if (shots < 0) throw std::invalid_argument("overlap: negative shots");
    const Circuit probe = concat(prep2, adjoint(prep1));
    const StateVector state = run(probe);
    OverlapEstimate est;
    est.shots = shots;
    if (shots == 0) {
        est.value = clamp01(std::norm(state.amplitudes[0]));
        est.std_error = 0.0;
        return est;
    }
    const MeasurementCounts counts = sample_counts(state, shots, seed);
    const std::string zeros(static_cast<std::size_t>(state.n_qubits), '0');
    const auto it = counts.counts.find(zeros);
    const double hits =
        (it == counts.counts.end()) ? 0.0 : static_cast<double>(it->second);
    est.value = hits / static_cast<double>(shots);
    est.std_error = binomial_std_error(est.value, shots);
    return est;
}

double fubini_study_distance(const OverlapEstimate& p, const MetricConfig& cfg) {
    check_overlap_arg(p);
    return cfg.gamma * std::sqrt(clamp01(1.0 - p.value));
}

double wootters_distance(const OverlapEstimate& p, const MetricConfig& cfg) {
    check_overlap_arg(p);
    return cfg.gamma * std::acos(std::clamp(std::sqrt(p.value), 0.0, 1.0));
}

double minimal_distance(const OverlapEstimate& p, const MetricConfig& cfg) {
    check_overlap_arg(p);
    const double root = std::clamp(std::sqrt(p.value), 0.0, 1.0);
    return cfg.gamma * std::sqrt(2.0 * (1.0 - root));
}

Circuit rotation_circuit_for(const PauliString& s) {
    Circuit out(s.n_qubits);
    for (int i = 0; i < s.n_qubits; ++i) {
        switch (s.letters[static_cast<std::size_t>(i)]) {
            case Pauli::X:
                out.add(GateOp::u(pi / 2.0, pi, pi, i));
                break;
            case Pauli::Y:
                out.add(GateOp::u(pi / 2.0, -pi / 2.0, pi / 2.0, i));
                break;
            case Pauli::I:
            case Pauli::Z:
                break;
        }
    }
    return out;
}

double expectation(const Circuit& prep, const PauliString& s, int shots,
                   std::uint64_t seed) {
    if (prep.n_qubits != s.n_qubits) {
        throw std::invalid_argument("expectation: register widths differ");
    }
    if (shots < 0) throw std::invalid_argument("expectation: negative shots");
    const StateVector state = apply(run(prep), rotation_circuit_for(s));
    const std::uint64_t mask = support_mask(s);
    if (shots == 0) {
        double acc = 0.0;
        for (std::size_t idx = 0; idx < state.dim(); ++idx) {
            const double sign = (std::popcount(idx & mask) & 1) ? -1.0 : 1.0;
            acc += sign * std::norm(state.amplitudes[idx]);
        }
        return std::clamp(acc, -1.0, 1.0);
    }
    const MeasurementCounts counts = sample_counts(state, shots, seed);
    double acc = 0.0;
    for (const auto& [bits, count] : counts.counts) {
        const std::size_t idx = index_of_bitstring(bits);
        const double sign = (std::popcount(idx & mask) & 1) ? -1.0 : 1.0;
        acc += sign * static_cast<double>(count);
    }
    return std::clamp(acc / static_cast<double>(shots), -1.0, 1.0);
}

MomentPlan moment_plan(const Hamiltonian& h) {
    MomentPlan plan;
    std::map<std::string, std::size_t> seen;
    auto entry_for = [&](const PauliString& s) -> MomentPlanEntry& {
        const std::string key = letters_key(s);
        auto [it, inserted] = seen.emplace(key, plan.entries.size());
        if (inserted) {
            MomentPlanEntry entry;
            entry.string = s;
            entry.is_identity = is_identity_string(s);
            plan.entries.push_back(std::move(entry));
        }
        return plan.entries[it->second];
    };
    for (const HamiltonianTerm& term : h.terms) {
        entry_for(term.string).mean_coeff += term.coeff;
    }
    // <H^2> = sum_{a,b} h_a h_b phase(a,b) <reduced(a,b)>.  The +-i
    // phases pair off between (a,b) and (b,a), so every surviving
    // coefficient is real; the imaginary residue is checked anyway.
    std::map<std::string, cplx> square;
    std::map<std::string, PauliString> strings;
    for (const HamiltonianTerm& ta : h.terms) {
        for (const HamiltonianTerm& tb : h.terms) {
            const StringProduct prod = multiply(ta.string, tb.string);
            const std::string key = letters_key(prod.string);
            square[key] += ta.coeff * tb.coeff * phase_of(prod.phase_pow);
            strings.emplace(key, prod.string);
        }
    }
    const double scale = coeff_norm(h);
    for (const auto& [key, coeff] : square) {
        if (std::abs(coeff.imag()) > 1e-9 * (scale * scale + 1.0)) {
            throw std::runtime_error(
                "moment_plan: imaginary weight survived symbolic reduction");
        }
        if (coeff.real() == 0.0) continue;
        entry_for(strings.at(key)).square_coeff += coeff.real();
    }
    return plan;
}

EnergyMoments energy_moments_with(const Hamiltonian& h,
                                  const StringMeasureFn& measure,
                                  std::uint64_t seed) {
    const MomentPlan plan = moment_plan(h);
    EnergyMoments out;
    double mean_var = 0.0;
    double square_var = 0.0;
    for (std::size_t k = 0; k < plan.entries.size(); ++k) {
        const MomentPlanEntry& entry = plan.entries[k];
        ExpectationSample sample{1.0, 0.0};
        if (!entry.is_identity) {
            sample = measure(entry.string, derive_seed(seed, k));
        }
        out.mean += entry.mean_coeff * sample.value;
        out.mean_square += entry.square_coeff * sample.value;
        mean_var += entry.mean_coeff * entry.mean_coeff * sample.std_error *
                    sample.std_error;
        square_var += entry.square_coeff * entry.square_coeff *
                      sample.std_error * sample.std_error;
    }
    out.mean_std_error = std::sqrt(mean_var);
    out.mean_square_std_error = std::sqrt(square_var);
    return out;
}

EnergyMoments energy_moments(const Hamiltonian& h, const Circuit& prep,
                             int shots, std::uint64_t seed) {
    if (h.n_qubits != prep.n_qubits) {
        throw std::invalid_argument("energy_moments: register widths differ");
    }
    if (shots < 0) throw std::invalid_argument("energy_moments: negative shots");
    const StringMeasureFn measure = [&](const PauliString& s,
                                        std::uint64_t derived) {
        ExpectationSample sample;
        sample.value = expectation(prep, s, shots, derived);
        sample.std_error =
            (shots == 0)
                ? 0.0
                : std::sqrt(std::max(0.0, 1.0 - sample.value * sample.value) /
                            static_cast<double>(shots));
        return sample;
    };
    return energy_moments_with(h, measure, seed);
}

double evolution_speed(const Hamiltonian& h, const Circuit& prep,
                       const MetricConfig& cfg, int shots, std::uint64_t seed) {
    const EnergyMoments m = energy_moments(h, prep, shots, seed);
    const double variance = m.mean_square - m.mean * m.mean;
    return cfg.gamma * std::sqrt(std::max(0.0, variance));
}

double path_length(const Hamiltonian& h, const Circuit& prep, double tau,
                   const MetricConfig& cfg) {
    if (!(tau >= 0.0)) throw std::invalid_argument("path_length: tau < 0");
    const double v = evolution_speed(h, prep, cfg, 0, 0);
    const StateVector psi0 = run(prep);
    const double g0 = exact_gtt(h, psi0, cfg.gamma);
    for (double t : {tau / 2.0, tau}) {
        const double gt = exact_gtt(h, evolve(h, psi0, t), cfg.gamma);
        if (std::abs(gt - g0) > 1e-9 * (std::abs(g0) + 1.0)) {
            throw std::runtime_error(
                "path_length: metric coefficient drifts along the path");
        }
    }
    return v * tau;
}

void validate_ensemble(const PureStateEnsemble& e) {
    if (e.components.empty()) {
        throw std::invalid_argument("ensemble: no components");
    }
    double total = 0.0;
    const int n = e.components.front().prep.n_qubits;
    for (const EnsembleComponent& c : e.components) {
        if (!(c.weight > 0.0 && c.weight <= 1.0)) {
            throw std::invalid_argument("ensemble: weight outside (0, 1]");
        }
        if (c.prep.n_qubits != n) {
            throw std::invalid_argument("ensemble: component widths differ");
        }
        total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("ensemble: weights do not sum to 1");
    }
}

DistanceEstimate hilbert_schmidt_estimate(const PureStateEnsemble& rho1,
                                          const PureStateEnsemble& rho2,
                                          const MetricConfig& cfg,
                                          const OverlapFn& pair_overlap,
                                          std::uint64_t seed) {
    validate_ensemble(rho1);
    validate_ensemble(rho2);
    if (rho1.components.front().prep.n_qubits !=
        rho2.components.front().prep.n_qubits) {
        throw std::invalid_argument("hilbert_schmidt: register widths differ");
    }
    // tr rho^2 and tr rho1 rho2 expand into weighted squared overlaps;
    // same-component terms are exactly 1 and need no measurement, and
    // the (a,b)/(b,a) symmetry lets one measurement serve both orders.
    double radicand = 0.0;
    std::vector<RadicandTerm> measured;
    std::uint64_t pair_index = 0;
    auto measure_pair = [&](const Circuit& a, const Circuit& b, double coeff) {
        RadicandTerm term;
        term.coeff = coeff;
        term.estimate = pair_overlap(a, b, derive_seed(seed, pair_index++));
        radicand += coeff * term.estimate.value;
        measured.push_back(std::move(term));
    };
    for (const PureStateEnsemble* rho : {&rho1, &rho2}) {
        const auto& comps = rho->components;
        for (std::size_t a = 0; a < comps.size(); ++a) {
            radicand += comps[a].weight * comps[a].weight;
            for (std::size_t b = a + 1; b < comps.size(); ++b) {
                measure_pair(comps[a].prep, comps[b].prep,
                             2.0 * comps[a].weight * comps[b].weight);
            }
        }
    }
    for (const EnsembleComponent& a : rho1.components) {
        for (const EnsembleComponent& b : rho2.components) {
            measure_pair(a.prep, b.prep, -2.0 * a.weight * b.weight);
        }
    }
    double radicand_var = 0.0;
    for (const RadicandTerm& term : measured) {
        radicand_var +=
            term.coeff * term.coeff * term.estimate.std_error * term.estimate.std_error;
    }
    const double radicand_se = std::sqrt(radicand_var);
    const double gp = cfg.gamma_prime;
    DistanceEstimate est;
    est.value = gp * std::sqrt(std::max(0.0, radicand));
    const double lo = gp * std::sqrt(std::max(0.0, radicand - radicand_se));
    const double hi = gp * std::sqrt(std::max(0.0, radicand + radicand_se));
    est.std_error = 0.5 * (hi - lo);
    return est;
}

double hilbert_schmidt_distance(const PureStateEnsemble& rho1,
                                const PureStateEnsemble& rho2,
                                const MetricConfig& cfg, int shots,
                                std::uint64_t seed) {
    if (shots < 0) {
        throw std::invalid_argument("hilbert_schmidt: negative shots");
    }
    const OverlapFn pair = [shots](const Circuit& a, const Circuit& b,
                                   std::uint64_t derived) {
        return overlap(a, b, shots, derived);
    };
    return hilbert_schmidt_estimate(rho1, rho2, cfg, pair, seed).value;
}

}  // namespace qsdist
