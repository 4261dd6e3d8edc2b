#include "qsdist/state_vector.hpp"

#include <stdexcept>

namespace qsdist {

StateVector zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::out_of_range("zero_state: n_qubits must be in [1, 20], got " +
                                std::to_string(n_qubits));
    }
    StateVector s;
    s.n_qubits = n_qubits;
    s.amplitudes.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    s.amplitudes[0] = cplx{1.0, 0.0};
    return s;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits != b.n_qubits || a.dim() != b.dim()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return acc;
}

double norm_sq(const StateVector& s) {
    double acc = 0.0;
    for (const cplx& amp : s.amplitudes) acc += std::norm(amp);
    return acc;
}

std::string bitstring_of(std::size_t index, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::out_of_range("bitstring_of: bad qubit count");
    }
    if (index >= (std::size_t{1} << n_qubits)) {
        throw std::out_of_range("bitstring_of: index out of range");
    }
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int i = 0; i < n_qubits; ++i) {
        if ((index >> (n_qubits - 1 - i)) & 1U) bits[static_cast<std::size_t>(i)] = '1';
    }
    return bits;
}

std::size_t index_of_bitstring(const std::string& bits) {
    if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("index_of_bitstring: bad length");
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("index_of_bitstring: non-binary digit");
        }
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    return index;
}

}  // namespace qsdist
