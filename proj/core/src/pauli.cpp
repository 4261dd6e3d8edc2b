#include "qsdist/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qsdist {

namespace {

void check_width(int n_qubits, std::size_t letters) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("pauli string: bad qubit count");
    }
    if (letters != static_cast<std::size_t>(n_qubits)) {
        throw std::invalid_argument("pauli string: letter count != n_qubits");
    }
}

/// Phase power of i in a*b for single letters, indexed [a][b].
constexpr int kPhasePow[4][4] = {
    {0, 0, 0, 0},  // I*
    {0, 0, 1, 3},  // X*: XY = iZ, XZ = -iY
    {0, 3, 0, 1},  // Y*: YX = -iZ, YZ = iX
    {0, 1, 3, 0},  // Z*: ZX = iY, ZY = -iX
};

}  // namespace

PauliString make_pauli_string(int n_qubits, std::vector<Pauli> letters) {
    check_width(n_qubits, letters.size());
    return PauliString{n_qubits, std::move(letters)};
}

bool is_identity_string(const PauliString& s) {
    for (Pauli p : s.letters) {
        if (p != Pauli::I) return false;
    }
    return true;
}

std::uint64_t support_mask(const PauliString& s) {
    check_width(s.n_qubits, s.letters.size());
    std::uint64_t mask = 0;
    for (int i = 0; i < s.n_qubits; ++i) {
        if (s.letters[static_cast<std::size_t>(i)] != Pauli::I) {
            mask |= std::uint64_t{1} << (s.n_qubits - 1 - i);
        }
    }
    return mask;
}

StringProduct multiply(const PauliString& a, const PauliString& b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("multiply: register widths differ");
    }
    check_width(a.n_qubits, a.letters.size());
    check_width(b.n_qubits, b.letters.size());
    StringProduct out;
    out.string.n_qubits = a.n_qubits;
    out.string.letters.resize(a.letters.size());
    int phase = 0;
    for (std::size_t i = 0; i < a.letters.size(); ++i) {
        const int la = static_cast<int>(a.letters[i]);
        const int lb = static_cast<int>(b.letters[i]);
        phase += kPhasePow[la][lb];
        int lc;
        if (la == 0) {
            lc = lb;
        } else if (lb == 0) {
            lc = la;
        } else if (la == lb) {
            lc = 0;
        } else {
            lc = 6 - la - lb;  // the remaining letter of {X, Y, Z}
        }
        out.string.letters[i] = static_cast<Pauli>(lc);
    }
    out.phase_pow = phase & 3;
    return out;
}

cplx phase_of(int phase_pow) {
    switch (phase_pow & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

Hamiltonian make_hamiltonian(int n_qubits, std::vector<HamiltonianTerm> terms) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("hamiltonian: bad qubit count");
    }
    for (const HamiltonianTerm& term : terms) {
        if (!std::isfinite(term.coeff)) {
            throw std::invalid_argument("hamiltonian: non-finite coefficient");
        }
        if (term.string.n_qubits != n_qubits) {
            throw std::invalid_argument("hamiltonian: term width mismatch");
        }
        check_width(term.string.n_qubits, term.string.letters.size());
    }
    return Hamiltonian{n_qubits, std::move(terms)};
}

double coeff_norm(const Hamiltonian& h) {
    double norm = 0.0;
    for (const HamiltonianTerm& term : h.terms) norm += std::abs(term.coeff);
    return norm;
}

StateVector apply_pauli(const StateVector& state, const PauliString& s) {
    if (s.n_qubits != state.n_qubits) {
        throw std::invalid_argument("apply_pauli: register widths differ");
    }
    check_width(s.n_qubits, s.letters.size());
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    int y_count = 0;
    for (int i = 0; i < s.n_qubits; ++i) {
        const Pauli p = s.letters[static_cast<std::size_t>(i)];
        const std::uint64_t bit = std::uint64_t{1} << (s.n_qubits - 1 - i);
        if (p == Pauli::X || p == Pauli::Y) x_mask |= bit;
        if (p == Pauli::Z || p == Pauli::Y) z_mask |= bit;
        if (p == Pauli::Y) ++y_count;
    }
    const cplx y_phase = phase_of(y_count);
    StateVector out;
    out.n_qubits = state.n_qubits;
    out.amplitudes.resize(state.dim());
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        const double sign =
            (std::popcount(idx & z_mask) & 1) ? -1.0 : 1.0;
        out.amplitudes[idx ^ x_mask] = y_phase * sign * state.amplitudes[idx];
    }
    return out;
}

StateVector apply_hamiltonian(const StateVector& state, const Hamiltonian& h) {
    if (h.n_qubits != state.n_qubits) {
        throw std::invalid_argument("apply_hamiltonian: register widths differ");
    }
    StateVector acc;
    acc.n_qubits = state.n_qubits;
    acc.amplitudes.assign(state.dim(), cplx{0.0, 0.0});
    for (const HamiltonianTerm& term : h.terms) {
        const StateVector part = apply_pauli(state, term.string);
        for (std::size_t i = 0; i < acc.dim(); ++i) {
            acc.amplitudes[i] += term.coeff * part.amplitudes[i];
        }
    }
    return acc;
}

StateVector evolve(const Hamiltonian& h, const StateVector& state, double t) {
    if (h.n_qubits != state.n_qubits) {
        throw std::invalid_argument("evolve: register widths differ");
    }
    if (!std::isfinite(t)) throw std::invalid_argument("evolve: bad time");
    if (t == 0.0 || h.terms.empty()) return state;
    const int steps =
        std::max(1, static_cast<int>(std::ceil(coeff_norm(h) * std::abs(t))));
    const double dt = t / steps;
    StateVector psi = state;
    for (int step = 0; step < steps; ++step) {
        StateVector acc = psi;
        StateVector term = psi;
        for (int k = 1; k <= 64; ++k) {
            StateVector h_term = apply_hamiltonian(term, h);
            const cplx scale = cplx{0.0, -dt} / static_cast<double>(k);
            double term_norm = 0.0;
            for (std::size_t i = 0; i < h_term.dim(); ++i) {
                h_term.amplitudes[i] *= scale;
                term_norm += std::norm(h_term.amplitudes[i]);
            }
            term = std::move(h_term);
            for (std::size_t i = 0; i < acc.dim(); ++i) {
                acc.amplitudes[i] += term.amplitudes[i];
            }
            if (term_norm < 1e-32) break;
            if (k == 64) {
                throw std::runtime_error("evolve: series failed to converge");
            }
        }
        psi = std::move(acc);
    }
    return psi;
}

}  // namespace qsdist
