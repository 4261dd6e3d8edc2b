#include "qsdist/transpile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsdist {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;

double wrap_2pi(double angle) {
    double a = std::fmod(angle, 2.0 * pi);
    if (a < 0.0) a += 2.0 * pi;
    return a;
}

/// Lowers U(theta, phi, lambda) on one qubit into Rz/SqrtX ops, exact up
/// to global phase.  theta congruent to +pi/2 (to -pi/2) collapses the
/// five-op form to three.
void lower_u(double theta, double phi, double lambda, int qubit,
             std::vector<GateOp>& out) {
    const double t = wrap_2pi(theta);
    if (std::abs(t - pi / 2.0) <= kAngleTol) {
        out.push_back(GateOp::rz(lambda - pi / 2.0, qubit));
        out.push_back(GateOp::sqrt_x(qubit));
        out.push_back(GateOp::rz(phi + pi / 2.0, qubit));
        return;
    }
    if (std::abs(t - 3.0 * pi / 2.0) <= kAngleTol) {
        out.push_back(GateOp::rz(lambda + pi / 2.0, qubit));
        out.push_back(GateOp::sqrt_x(qubit));
        out.push_back(GateOp::rz(phi - pi / 2.0, qubit));
        return;
    }
    out.push_back(GateOp::rz(lambda, qubit));
    out.push_back(GateOp::sqrt_x(qubit));
    out.push_back(GateOp::rz(theta - pi, qubit));
    out.push_back(GateOp::sqrt_x(qubit));
    out.push_back(GateOp::rz(phi + pi, qubit));
}

}  // namespace

bool is_basis_op(const GateOp& op) {
    switch (op.kind) {
        case GateKind::Identity:
        case GateKind::PauliX:
        case GateKind::SqrtX:
        case GateKind::Rz:
        case GateKind::Cnot:
            return true;
        default:
            return false;
    }
}

Circuit transpile_to_basis(const Circuit& circuit) {
    Circuit out(circuit.n_qubits);
    for (const GateOp& op : circuit.ops) {
        switch (op.kind) {
            case GateKind::Identity:
            case GateKind::PauliX:
            case GateKind::SqrtX:
            case GateKind::Rz:
            case GateKind::Cnot:
                out.ops.push_back(op);
                break;
            case GateKind::Hadamard:
                lower_u(pi / 2.0, 0.0, pi, op.target, out.ops);
                break;
            case GateKind::U:
                lower_u(op.theta, op.phi, op.lambda, op.target, out.ops);
                break;
            case GateKind::Generic1Q:
                throw std::invalid_argument(
                    "transpile_to_basis: generic matrix gates have no basis "
                    "decomposition here; rebuild them from U ops");
        }
    }
    return out;
}

int basis_op_count(const Circuit& circuit) {
    int count = 0;
    for (const GateOp& op : circuit.ops) {
        if (!is_basis_op(op)) {
            throw std::invalid_argument("basis_op_count: non-basis op present");
        }
        if (op.kind != GateKind::Identity) ++count;
    }
    return count;
}

CircuitStats circuit_stats_of(const Circuit& circuit) {
    CircuitStats stats;
    for (const GateOp& op : circuit.ops) {
        if (op.kind == GateKind::Cnot) {
            ++stats.n_2q;
        } else if (op.kind != GateKind::Identity) {
            ++stats.n_1q;
        }
    }
    return stats;
}

}  // namespace qsdist
