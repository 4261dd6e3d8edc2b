#pragma once

#include <cstdint>
#include <vector>

#include "qsdist/state_vector.hpp"

namespace qsdist {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Tensor product of single-qubit Paulis, one letter per qubit.
struct PauliString {
    int n_qubits = 0;
    std::vector<Pauli> letters;
};

PauliString make_pauli_string(int n_qubits, std::vector<Pauli> letters);

bool is_identity_string(const PauliString& s);

/// Bit mask with a 1 at index bit (n-1-i) for every non-identity letter
/// i; (-1)^popcount(index & mask) is the measured eigenvalue of the
/// string's diagonal form for that basis index.
std::uint64_t support_mask(const PauliString& s);

/// Product a*b reduced back to a single string times a phase i^k.
/// Single-letter rules: equal letters square to I with phase +1, and
/// XY = iZ, YZ = iX, ZX = iY (reversed order flips the sign).
struct StringProduct {
    int phase_pow = 0;  // phase = i^phase_pow, phase_pow in {0,1,2,3}
    PauliString string;
};

StringProduct multiply(const PauliString& a, const PauliString& b);

cplx phase_of(int phase_pow);

/// Real linear combination of Pauli strings on a fixed register width.
struct HamiltonianTerm {
    double coeff = 0.0;
    PauliString string;
};

struct Hamiltonian {
    int n_qubits = 0;
    std::vector<HamiltonianTerm> terms;
};

Hamiltonian make_hamiltonian(int n_qubits, std::vector<HamiltonianTerm> terms);

/// Sum of |coeff| over terms; upper-bounds the spectral norm.
double coeff_norm(const Hamiltonian& h);

/// P|state> via bit arithmetic (no dense matrix).
StateVector apply_pauli(const StateVector& state, const PauliString& s);

/// H|state> (not normalized).
StateVector apply_hamiltonian(const StateVector& state, const Hamiltonian& h);

/// exp(-i H t)|state> by scaled-and-squared Taylor summation; step count
/// grows with coeff_norm(h)*|t| so each partial sum converges fast.
StateVector evolve(const Hamiltonian& h, const StateVector& state, double t);

}  // namespace qsdist
