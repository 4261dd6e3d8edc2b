#include "qsdist/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qsdist {

namespace {

void check_qubit(int qubit, int n_qubits, const char* what) {
    if (qubit < 0 || qubit >= n_qubits) {
        throw std::out_of_range(std::string(what) + " index " +
                                std::to_string(qubit) + " outside register of " +
                                std::to_string(n_qubits));
    }
}

void apply_one_qubit(StateVector& s, const Mat2& m, int qubit) {
    const std::size_t stride = std::size_t{1} << (s.n_qubits - 1 - qubit);
    const std::size_t dim = s.dim();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const cplx a0 = s.amplitudes[i];
            const cplx a1 = s.amplitudes[i + stride];
            s.amplitudes[i] = m[0] * a0 + m[1] * a1;
            s.amplitudes[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void apply_cnot(StateVector& s, int control, int target) {
    const std::size_t cbit = std::size_t{1} << (s.n_qubits - 1 - control);
    const std::size_t tbit = std::size_t{1} << (s.n_qubits - 1 - target);
    const std::size_t dim = s.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(s.amplitudes[i], s.amplitudes[i | tbit]);
        }
    }
}

}  // namespace

StateVector apply(StateVector state, const GateOp& op) {
    if (op.kind == GateKind::Cnot) {
        check_qubit(op.control, state.n_qubits, "control");
        check_qubit(op.target, state.n_qubits, "target");
        if (op.control == op.target) {
            throw std::invalid_argument("cnot: control and target must differ");
        }
        apply_cnot(state, op.control, op.target);
        return state;
    }
    check_qubit(op.target, state.n_qubits, "target");
    if (op.kind == GateKind::Identity) return state;
    apply_one_qubit(state, one_qubit_matrix(op), op.target);
    return state;
}

StateVector apply(StateVector state, const Circuit& circuit) {
    if (circuit.n_qubits != state.n_qubits) {
        throw std::invalid_argument("apply: circuit width does not match state");
    }
    for (const GateOp& op : circuit.ops) state = apply(std::move(state), op);
    return state;
}

StateVector run(const Circuit& circuit) {
    return apply(zero_state(circuit.n_qubits), circuit);
}

Circuit concat(const Circuit& a, const Circuit& b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("concat: circuit widths differ");
    }
    Circuit out(a.n_qubits);
    out.ops.reserve(a.ops.size() + b.ops.size());
    out.ops.insert(out.ops.end(), a.ops.begin(), a.ops.end());
    out.ops.insert(out.ops.end(), b.ops.begin(), b.ops.end());
    return out;
}

Circuit adjoint(const Circuit& circuit) {
    constexpr double pi = std::numbers::pi;
    Circuit out(circuit.n_qubits);
    out.ops.reserve(circuit.ops.size());
    for (auto it = circuit.ops.rbegin(); it != circuit.ops.rend(); ++it) {
        const GateOp& op = *it;
        switch (op.kind) {
            case GateKind::Identity:
            case GateKind::PauliX:
            case GateKind::Hadamard:
            case GateKind::Cnot:
                out.ops.push_back(op);
                break;
            case GateKind::Rz:
                out.ops.push_back(GateOp::rz(-op.phi, op.target));
                break;
            case GateKind::U:
                out.ops.push_back(GateOp::u(op.theta, pi - op.lambda,
                                            pi - op.phi, op.target));
                break;
            case GateKind::SqrtX:
                out.ops.push_back(GateOp::sqrt_x(op.target));
                out.ops.push_back(GateOp::x(op.target));
                break;
            case GateKind::Generic1Q: {
                const Mat2& m = op.matrix;
                const Mat2 dag = {std::conj(m[0]), std::conj(m[2]),
                                  std::conj(m[1]), std::conj(m[3])};
                out.ops.push_back(GateOp::generic(dag, op.target));
                break;
            }
        }
    }
    return out;
}

}  // namespace qsdist
