#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qsdist {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 20;

/// Dense state vector over n qubits, 2^n complex amplitudes.
///
/// Basis ordering is big-endian in the qubit index: the basis state
/// |b0 b1 ... b{n-1}>, with b0 the state of qubit 0, lives at amplitude
/// index sum_i b_i * 2^(n-1-i).  Qubit 0 therefore maps to the most
/// significant bit of the index.
struct StateVector {
    int n_qubits = 0;
    std::vector<cplx> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
};

/// |00...0> on n qubits.  Throws std::out_of_range unless 1 <= n <= 20.
StateVector zero_state(int n_qubits);

/// <a|b>.  Throws std::invalid_argument on dimension mismatch.
cplx inner_product(const StateVector& a, const StateVector& b);

double norm_sq(const StateVector& s);

/// Index -> "b0b1...b{n-1}" under the big-endian convention above.
std::string bitstring_of(std::size_t index, int n_qubits);

/// Inverse of bitstring_of.  Throws std::invalid_argument on bad input.
std::size_t index_of_bitstring(const std::string& bits);

}  // namespace qsdist
