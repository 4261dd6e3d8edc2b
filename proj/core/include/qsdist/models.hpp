#pragma once

#include <array>

#include "qsdist/circuit.hpp"
#include "qsdist/pauli.hpp"
#include "qsdist/protocols.hpp"

namespace qsdist {

/// Spin-1/2 in a static field along unit vector n: H = (omega/2) n.sigma.
struct SpinFieldParams {
    double omega = 1.0;
    std::array<double, 3> n = {0.0, 0.0, 1.0};
};

/// Throws std::invalid_argument unless |n| = 1 within 1e-10.
Hamiltonian spin_field_hamiltonian(const SpinFieldParams& p);

/// One-qubit Bloch state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>,
/// prepared by U(theta, phi, 0).
Circuit one_qubit_state_circuit(double theta, double phi);

/// |<psi(theta1,phi1)|psi(theta2,phi2)>|^2 in closed form.
double spin_overlap_oracle(double theta1, double phi1, double theta2,
                           double phi2);

/// Speed of a Bloch state at polar angle theta from the field axis:
/// gamma * omega * |sin theta| / 2.
double spin_speed_oracle(double theta, double omega, double gamma);

/// n-qubit GHZ-style superposition (|00...0> + |11...1>)/sqrt(2):
/// Hadamard then a Cnot chain.
Circuit cat_state_circuit(int n_qubits);

/// Product state with every qubit at (theta, phi) on the Bloch sphere.
Circuit factorized_state_circuit(int n_qubits, double theta, double phi);

/// Squared overlap of the 5-qubit cat state with the factorized state:
/// (cos^10(t/2) + sin^10(t/2) + 2 cos^5(t/2) sin^5(t/2) cos(5 phi)) / 2.
double cat_fact_overlap_oracle(double theta, double phi);

/// Nearest-neighbour Ising chain H = (J/4) sum_i Z_i Z_{i+1} (open
/// ends), plus the dimensionless evolution time chi = J t and the
/// initial product state's Bloch angles.
struct IsingParams {
    double J = 1.0;
    double chi = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    int n_spins = 5;
};

Hamiltonian ising_hamiltonian(double J, int n_spins);

/// Factorized preparation followed by exp(-i chi/4 Z_i Z_{i+1}) per
/// bond, each bond compiled as Cnot, Rz(chi/2) on the bond's second
/// qubit, Cnot.
Circuit ising_evolution_circuit(const IsingParams& p);

/// |<psi(0)|psi(chi)>|^2 for the 5-spin chain in closed form
/// (4pi-periodic in chi, independent of phi).
double ising_overlap_oracle(double chi, double theta);

/// Metric coefficient g_tt = gamma^2 (<H^2> - <H>^2) of the 5-spin
/// chain in the factorized state:
/// (gamma^2 J^2 / 16) (4 + 6 cos^2 theta - 10 cos^4 theta).
double ising_gtt_oracle(double theta, double J, double gamma);

/// Worked mixed-state pair on 5 qubits: rho1 is a pure entangled state
/// built from U(theta,0,0) and a Cnot chain; rho2 mixes |00000> and
/// |11111> with weights 1/4 and 3/4.
struct HsExamplePair {
    PureStateEnsemble rho1;
    PureStateEnsemble rho2;
};

HsExamplePair hs_example_ensembles(double theta);

/// Closed-form distance gamma_prime * sqrt(5/8 + cos(theta)/2) for the
/// pair above.
double hs_example_oracle(double theta, double gamma_prime);

}  // namespace qsdist
