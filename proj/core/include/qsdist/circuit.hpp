#pragma once

#include <vector>

#include "qsdist/gates.hpp"
#include "qsdist/state_vector.hpp"

namespace qsdist {

/// Ordered list of gates on a fixed-width register.  Ops are applied
/// left to right: run({g1, g2}) computes g2 * g1 * |0...0>.
struct Circuit {
    int n_qubits = 0;
    std::vector<GateOp> ops;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {}

    Circuit& add(const GateOp& op) {
        ops.push_back(op);
        return *this;
    }
};

/// Applies one gate.  Throws std::out_of_range if a qubit index is
/// outside [0, n), std::invalid_argument if control == target.
StateVector apply(StateVector state, const GateOp& op);

StateVector apply(StateVector state, const Circuit& circuit);

/// circuit applied to |0...0>.
StateVector run(const Circuit& circuit);

/// a followed by b.  Throws std::invalid_argument on width mismatch.
Circuit concat(const Circuit& a, const Circuit& b);

/// Circuit for the inverse unitary, with every op mapped back into the
/// same gate vocabulary:
///   Identity -> Identity        X -> X            Hadamard -> Hadamard
///   Cnot -> Cnot                Rz(phi) -> Rz(-phi)
///   U(t,p,l) -> U(t, pi-l, pi-p)
///   SqrtX -> SqrtX, X           (sqrt(X)^dagger = X sqrt(X), exactly)
///   Generic1Q -> Generic1Q with the conjugate transpose
/// The result composed with the original acts as identity up to global
/// phase, and stays transpilable whenever the input was.
Circuit adjoint(const Circuit& circuit);

}  // namespace qsdist
