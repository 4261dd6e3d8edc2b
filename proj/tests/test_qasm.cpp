#include <doctest.h>

#include <random>

#include "qsdist/models.hpp"
#include "qsdist/qasm.hpp"
#include "qsdist/transpile.hpp"
#include "support/dense.hpp"

using namespace qsdist;
namespace qt = qsdist::testing;

TEST_SUITE("qasm") {

TEST_CASE("header, register and measure lines for an empty circuit") {
    CHECK(export_qasm(Circuit(2)) ==
          "OPENQASM 2.0;\n"
          "include \"qelib1.inc\";\n"
          "qreg q[2];\n"
          "creg c[2];\n"
          "measure q[0] -> c[0];\n"
          "measure q[1] -> c[1];\n");
}

TEST_CASE("each basis op maps to its qelib name") {
    Circuit c(2);
    c.add(GateOp::identity(0))
        .add(GateOp::x(1))
        .add(GateOp::sqrt_x(0))
        .add(GateOp::rz(0.25, 1))
        .add(GateOp::cnot(0, 1));
    const std::string text = export_qasm(c);
    CHECK(text.find("id q[0];\n") != std::string::npos);
    CHECK(text.find("x q[1];\n") != std::string::npos);
    CHECK(text.find("sx q[0];\n") != std::string::npos);
    CHECK(text.find("rz(0.25) q[1];\n") != std::string::npos);
    CHECK(text.find("cx q[0],q[1];\n") != std::string::npos);
}

TEST_CASE("export rejects ops outside the basis") {
    Circuit c(1);
    c.add(GateOp::h(0));
    CHECK_THROWS_AS(export_qasm(c), std::invalid_argument);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_qasm("qreg q[2];\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nx q[7];\n"),
                    std::invalid_argument);
}

TEST_CASE("round trip reproduces ops and bit-exact angles") {
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Circuit basis =
            transpile_to_basis(qt::random_circuit(rng, n, 15));
        const Circuit parsed = parse_qasm(export_qasm(basis));
        REQUIRE(parsed.n_qubits == basis.n_qubits);
        REQUIRE(parsed.ops.size() == basis.ops.size());
        for (std::size_t i = 0; i < basis.ops.size(); ++i) {
            CHECK(parsed.ops[i].kind == basis.ops[i].kind);
            CHECK(parsed.ops[i].target == basis.ops[i].target);
            CHECK(parsed.ops[i].control == basis.ops[i].control);
            CHECK(parsed.ops[i].phi == basis.ops[i].phi);  // bit-exact
        }
    }
}

TEST_CASE("round trip through the transpiled cat-state circuit") {
    const Circuit basis = transpile_to_basis(cat_state_circuit(5));
    const Circuit parsed = parse_qasm(export_qasm(basis));
    CHECK(qt::phase_free_mismatch(qt::unitary_of(parsed),
                                  qt::unitary_of(basis)) < 1e-12);
}

}  // TEST_SUITE
