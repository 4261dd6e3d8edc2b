#include "qsdist/models.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdist {

namespace {

PauliString single_letter(int n_qubits, int site, Pauli letter) {
    std::vector<Pauli> letters(static_cast<std::size_t>(n_qubits), Pauli::I);
    letters[static_cast<std::size_t>(site)] = letter;
    return make_pauli_string(n_qubits, std::move(letters));
}

PauliString zz_bond(int n_qubits, int site) {
    std::vector<Pauli> letters(static_cast<std::size_t>(n_qubits), Pauli::I);
    letters[static_cast<std::size_t>(site)] = Pauli::Z;
    letters[static_cast<std::size_t>(site + 1)] = Pauli::Z;
    return make_pauli_string(n_qubits, std::move(letters));
}

}  // namespace

Hamiltonian spin_field_hamiltonian(const SpinFieldParams& p) {
    const double len =
        std::sqrt(p.n[0] * p.n[0] + p.n[1] * p.n[1] + p.n[2] * p.n[2]);
    if (std::abs(len - 1.0) > 1e-10) {
        throw std::invalid_argument("spin_field_hamiltonian: |n| != 1");
    }
    std::vector<HamiltonianTerm> terms;
    const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (int a = 0; a < 3; ++a) {
        if (p.n[static_cast<std::size_t>(a)] == 0.0) continue;
        terms.push_back({0.5 * p.omega * p.n[static_cast<std::size_t>(a)],
                         single_letter(1, 0, axes[a])});
    }
    if (terms.empty()) {
        throw std::invalid_argument("spin_field_hamiltonian: zero field");
    }
    return make_hamiltonian(1, std::move(terms));
}

Circuit one_qubit_state_circuit(double theta, double phi) {
    Circuit c(1);
    c.add(GateOp::u(theta, phi, 0.0, 0));
    return c;
}

double spin_overlap_oracle(double theta1, double phi1, double theta2,
                           double phi2) {
    // |<psi1|psi2>|^2 = cos^2(a/2) with a the Bloch-sphere angle between
    // the two directions.
    const cplx amp = std::cos(theta1 / 2.0) * std::cos(theta2 / 2.0) +
                     std::sin(theta1 / 2.0) * std::sin(theta2 / 2.0) *
                         std::exp(cplx{0.0, phi2 - phi1});
    return std::norm(amp);
}

double spin_speed_oracle(double theta, double omega, double gamma) {
    return gamma * omega * std::abs(std::sin(theta)) / 2.0;
}

Circuit cat_state_circuit(int n_qubits) {
    if (n_qubits < 2 || n_qubits > kMaxQubits) {
        throw std::out_of_range("cat_state_circuit: n_qubits must be in [2, 20]");
    }
    Circuit c(n_qubits);
    c.add(GateOp::h(0));
    for (int q = 0; q + 1 < n_qubits; ++q) c.add(GateOp::cnot(q, q + 1));
    return c;
}

Circuit factorized_state_circuit(int n_qubits, double theta, double phi) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::out_of_range("factorized_state_circuit: bad qubit count");
    }
    Circuit c(n_qubits);
    for (int q = 0; q < n_qubits; ++q) c.add(GateOp::u(theta, phi, 0.0, q));
    return c;
}

double cat_fact_overlap_oracle(double theta, double phi) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const double c5 = std::pow(c, 5);
    const double s5 = std::pow(s, 5);
    return 0.5 * (c5 * c5 + s5 * s5 + 2.0 * c5 * s5 * std::cos(5.0 * phi));
}

Hamiltonian ising_hamiltonian(double J, int n_spins) {
    if (n_spins < 2 || n_spins > kMaxQubits) {
        throw std::out_of_range("ising_hamiltonian: n_spins must be in [2, 20]");
    }
    std::vector<HamiltonianTerm> terms;
    for (int i = 0; i + 1 < n_spins; ++i) {
        terms.push_back({J / 4.0, zz_bond(n_spins, i)});
    }
    return make_hamiltonian(n_spins, std::move(terms));
}

Circuit ising_evolution_circuit(const IsingParams& p) {
    if (p.n_spins < 2 || p.n_spins > kMaxQubits) {
        throw std::out_of_range("ising_evolution_circuit: bad spin count");
    }
    Circuit c(p.n_spins);
    for (int q = 0; q < p.n_spins; ++q) {
        c.add(GateOp::u(p.theta, p.phi, 0.0, q));
    }
    // One bond unit Cnot * Rz(chi/2) * Cnot equals exp(-i chi/4 Z Z)
    // exactly: the inner Rz acts on the parity of the bond.
    for (int q = 0; q + 1 < p.n_spins; ++q) {
        c.add(GateOp::cnot(q, q + 1));
        c.add(GateOp::rz(p.chi / 2.0, q + 1));
        c.add(GateOp::cnot(q, q + 1));
    }
    return c;
}

double ising_overlap_oracle(double chi, double theta) {
    // Squared overlap of the 5-spin product state with its evolved
    // image, as a polynomial in cos(chi/4), sin(chi/4) and cos(theta).
    const double c = std::cos(chi / 4.0);
    const double s = std::sin(chi / 4.0);
    const double c2 = c * c;
    const double s2 = s * s;
    const double c4 = c2 * c2;
    const double s4 = s2 * s2;
    const double t2 = std::cos(theta) * std::cos(theta);
    const double t4 = t2 * t2;
    const double t6 = t4 * t2;
    const double t8 = t4 * t4;
    return c4 * c4 + s4 * s4 * t4 +
           c4 * s4 * (9.0 * t8 + 2.0 * t6 - 7.0 * t4 + 2.0 * t2) +
           c4 * c2 * s2 * (10.0 * t4 - 6.0 * t2) +
           c2 * s4 * s2 * (4.0 * t8 + 2.0 * t6 - 2.0 * t4);
}

double ising_gtt_oracle(double theta, double J, double gamma) {
    const double c2 = std::cos(theta) * std::cos(theta);
    return gamma * gamma * J * J / 16.0 *
           (4.0 + 6.0 * c2 - 10.0 * c2 * c2);
}

HsExamplePair hs_example_ensembles(double theta) {
    Circuit entangled(5);
    entangled.add(GateOp::u(theta, 0.0, 0.0, 0));
    for (int q = 0; q + 1 < 5; ++q) entangled.add(GateOp::cnot(q, q + 1));

    Circuit all_zero(5);
    Circuit all_one(5);
    for (int q = 0; q < 5; ++q) all_one.add(GateOp::x(q));

    HsExamplePair pair;
    pair.rho1.components.push_back({1.0, entangled});
    pair.rho2.components.push_back({0.25, all_zero});
    pair.rho2.components.push_back({0.75, all_one});
    return pair;
}

double hs_example_oracle(double theta, double gamma_prime) {
    return gamma_prime * std::sqrt(5.0 / 8.0 + std::cos(theta) / 2.0);
}

}  // namespace qsdist
