#pragma once

// Small dense linear algebra used only as an independent cross-check:
// everything here is built from textbook definitions (Kronecker
// products, explicit 2x2 matrices, matrix exponentials of diagonal or
// 2x2 operators) rather than the library's bit-twiddling kernels.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qsdist/circuit.hpp"
#include "qsdist/pauli.hpp"

namespace qsdist::testing {

struct Mat {
    std::size_t dim = 0;
    std::vector<cplx> a;  // row-major dim x dim

    Mat() = default;
    explicit Mat(std::size_t d) : dim(d), a(d * d, cplx{0.0, 0.0}) {}

    cplx& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

Mat identity_mat(std::size_t dim);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_dagger(const Mat& x);
Mat kron(const Mat& x, const Mat& y);
cplx mat_trace(const Mat& x);

/// Explicit 2x2 for one Pauli letter.
Mat pauli_mat(Pauli p);

/// Kronecker product over the string's letters, qubit 0 leftmost.
Mat pauli_string_mat(const PauliString& s);

/// Dense matrix of a whole circuit, built by applying it to each basis
/// state (column by column) through the public apply().
Mat unitary_of(const Circuit& c);

Mat gate_mat2(const GateOp& op);

StateVector mat_vec(const Mat& m, const StateVector& v);

/// exp(-i t/2 n.sigma) from the closed form cos(t/2) I - i sin(t/2) n.sigma.
Mat spin_rotation(double angle, double nx, double ny, double nz);

/// Uniformly random circuit over the full gate vocabulary (Cnot only
/// when n_qubits > 1).
Circuit random_circuit(std::mt19937_64& rng, int n_qubits, int n_ops,
                       bool include_generic = false);

double max_amp_diff(const StateVector& a, const StateVector& b);

/// |tr(A^dagger B)| == dim for unitaries equal up to global phase.
double phase_free_mismatch(const Mat& a, const Mat& b);

}  // namespace qsdist::testing
