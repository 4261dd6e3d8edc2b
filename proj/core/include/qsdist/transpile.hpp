#pragma once

#include "qsdist/circuit.hpp"

namespace qsdist {

/// True for gates the hardware-style basis {Identity, X, SqrtX, Rz, Cnot}
/// accepts directly.
bool is_basis_op(const GateOp& op);

/// Rewrites a circuit over the full gate vocabulary into the basis
/// {Identity, X, SqrtX, Rz, Cnot}, preserving the unitary up to global
/// phase:
///   U(theta,phi,lambda) -> Rz(lambda), SqrtX, Rz(theta-pi), SqrtX,
///                          Rz(phi+pi)                       (5 ops)
///   U with theta = +-pi/2 (mod 2pi, tol 1e-12)
///                       -> Rz(lambda -+ pi/2), SqrtX, Rz(phi +- pi/2)
///                                                          (3 ops)
///   Hadamard = U(pi/2, 0, pi) -> Rz(pi/2), SqrtX, Rz(pi/2)
/// Throws std::invalid_argument for Generic1Q ops.
Circuit transpile_to_basis(const Circuit& circuit);

/// Number of non-Identity ops in a basis circuit.  Throws
/// std::invalid_argument if any op is outside the basis.
int basis_op_count(const Circuit& circuit);

/// Gate totals a device noise model cares about: non-Identity one-qubit
/// ops and Cnot ops.
struct CircuitStats {
    int n_1q = 0;
    int n_2q = 0;
};

CircuitStats circuit_stats_of(const Circuit& circuit);

}  // namespace qsdist
