#pragma once

#include <array>
#include <vector>

#include "qsdist/state_vector.hpp"

namespace qsdist {

enum class GateKind {
    Identity,
    PauliX,
    SqrtX,
    Rz,
    U,
    Hadamard,
    Cnot,
    Generic1Q,
};

using Mat2 = std::array<cplx, 4>;  // row-major 2x2

/// One gate acting on named qubits of a register.
///
/// Angle conventions:
///   Rz(phi)        = diag(exp(-i phi/2), exp(+i phi/2))
///   U(theta,phi,lambda) =
///     [[cos(theta/2),              -exp(i lambda) sin(theta/2)],
///      [exp(i phi) sin(theta/2),    exp(i(lambda+phi)) cos(theta/2)]]
struct GateOp {
    GateKind kind = GateKind::Identity;
    int target = 0;
    int control = -1;  // Cnot only
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;
    Mat2 matrix{};  // Generic1Q only

    static GateOp identity(int qubit);
    static GateOp x(int qubit);
    static GateOp sqrt_x(int qubit);
    static GateOp rz(double phi, int qubit);
    static GateOp u(double theta, double phi, double lambda, int qubit);
    static GateOp h(int qubit);
    static GateOp cnot(int control, int target);
    /// Throws std::invalid_argument unless m is unitary within 1e-10.
    static GateOp generic(const Mat2& m, int qubit);
};

bool is_one_qubit(const GateOp& op);

/// 2x2 matrix of a one-qubit op.  Throws std::invalid_argument for Cnot.
Mat2 one_qubit_matrix(const GateOp& op);

/// Row-major dense matrix: 4 entries for one-qubit ops, 16 for Cnot
/// (basis ordered |control target> = 00,01,10,11).
std::vector<cplx> gate_matrix(const GateOp& op);

bool is_unitary(const Mat2& m, double tol = 1e-10);

}  // namespace qsdist
