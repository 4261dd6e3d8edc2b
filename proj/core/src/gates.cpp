#include "qsdist/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdist {

namespace {

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 dagger(const Mat2& m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

}  // namespace

GateOp GateOp::identity(int qubit) { return {GateKind::Identity, qubit}; }

GateOp GateOp::x(int qubit) { return {GateKind::PauliX, qubit}; }

GateOp GateOp::sqrt_x(int qubit) { return {GateKind::SqrtX, qubit}; }

GateOp GateOp::rz(double phi, int qubit) {
    GateOp op{GateKind::Rz, qubit};
    op.phi = phi;
    return op;
}

GateOp GateOp::u(double theta, double phi, double lambda, int qubit) {
    GateOp op{GateKind::U, qubit};
    op.theta = theta;
    op.phi = phi;
    op.lambda = lambda;
    return op;
}

GateOp GateOp::h(int qubit) { return {GateKind::Hadamard, qubit}; }

GateOp GateOp::cnot(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("cnot: control and target must differ");
    }
    GateOp op{GateKind::Cnot, target};
    op.control = control;
    return op;
}

GateOp GateOp::generic(const Mat2& m, int qubit) {
    if (!is_unitary(m)) {
        throw std::invalid_argument("generic gate matrix is not unitary");
    }
    GateOp op{GateKind::Generic1Q, qubit};
    op.matrix = m;
    return op;
}

bool is_one_qubit(const GateOp& op) { return op.kind != GateKind::Cnot; }

bool is_unitary(const Mat2& m, double tol) {
    const Mat2 p = mat_mul(dagger(m), m);
    return std::abs(p[0] - cplx{1.0, 0.0}) <= tol && std::abs(p[1]) <= tol &&
           std::abs(p[2]) <= tol && std::abs(p[3] - cplx{1.0, 0.0}) <= tol;
}

Mat2 one_qubit_matrix(const GateOp& op) {
    using namespace std::complex_literals;
    switch (op.kind) {
        case GateKind::Identity:
            return {1.0, 0.0, 0.0, 1.0};
        case GateKind::PauliX:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::SqrtX:
            return {0.5 + 0.5i, 0.5 - 0.5i, 0.5 - 0.5i, 0.5 + 0.5i};
        case GateKind::Rz:
            return {std::exp(-0.5i * op.phi), 0.0, 0.0, std::exp(0.5i * op.phi)};
        case GateKind::U: {
            const double c = std::cos(op.theta / 2.0);
            const double s = std::sin(op.theta / 2.0);
            return {cplx{c, 0.0}, -std::exp(1.0i * op.lambda) * s,
                    std::exp(1.0i * op.phi) * s,
                    std::exp(1.0i * (op.lambda + op.phi)) * c};
        }
        case GateKind::Hadamard: {
            const double r = 1.0 / std::sqrt(2.0);
            return {r, r, r, -r};
        }
        case GateKind::Generic1Q:
            return op.matrix;
        case GateKind::Cnot:
            break;
    }
    throw std::invalid_argument("one_qubit_matrix: op is not one-qubit");
}

std::vector<cplx> gate_matrix(const GateOp& op) {
    if (op.kind == GateKind::Cnot) {
        std::vector<cplx> m(16, cplx{0.0, 0.0});
        m[0 * 4 + 0] = 1.0;
        m[1 * 4 + 1] = 1.0;
        m[2 * 4 + 3] = 1.0;  // |10> <-> |11>
        m[3 * 4 + 2] = 1.0;
        return m;
    }
    const Mat2 m = one_qubit_matrix(op);
    return {m.begin(), m.end()};
}

}  // namespace qsdist
