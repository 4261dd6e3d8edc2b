#include <doctest.h>

#include <cmath>

#include "qsdist/circuit.hpp"
#include "qsdist/state_vector.hpp"

using namespace qsdist;

TEST_SUITE("state_vector") {

TEST_CASE("zero_state puts all weight on index 0") {
    for (int n : {1, 2, 5, 20}) {
        const StateVector s = zero_state(n);
        CHECK(s.n_qubits == n);
        CHECK(s.dim() == (std::size_t{1} << n));
        CHECK(s.amplitudes[0] == cplx{1.0, 0.0});
        CHECK(norm_sq(s) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("zero_state rejects out-of-range widths") {
    CHECK_THROWS_AS(zero_state(0), std::out_of_range);
    CHECK_THROWS_AS(zero_state(-3), std::out_of_range);
    CHECK_THROWS_AS(zero_state(21), std::out_of_range);
}

TEST_CASE("qubit 0 is the most significant index bit") {
    // X on qubit 0 of |000> must land on |100>, index 4.
    StateVector s = apply(zero_state(3), GateOp::x(0));
    CHECK(std::abs(s.amplitudes[4] - cplx{1.0, 0.0}) < 1e-15);
    s = apply(zero_state(3), GateOp::x(2));
    CHECK(std::abs(s.amplitudes[1] - cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("inner_product matches hand values") {
    const StateVector zero = zero_state(1);
    CHECK(inner_product(zero, zero) == cplx{1.0, 0.0});
    const StateVector one = apply(zero_state(1), GateOp::x(0));
    CHECK(std::abs(inner_product(zero, one)) < 1e-15);

    const double theta = 1.234;
    const StateVector rotated =
        apply(zero_state(1), GateOp::u(theta, 0.6, 0.3, 0));
    CHECK(inner_product(zero, rotated).real() ==
          doctest::Approx(std::cos(theta / 2)).epsilon(1e-12));
}

TEST_CASE("inner_product rejects mismatched widths") {
    CHECK_THROWS_AS(inner_product(zero_state(2), zero_state(3)),
                    std::invalid_argument);
}

TEST_CASE("bitstring round trip") {
    CHECK(bitstring_of(4, 3) == "100");
    CHECK(bitstring_of(0, 2) == "00");
    CHECK(bitstring_of(6, 3) == "110");
    CHECK(index_of_bitstring("100") == 4);
    for (std::size_t i = 0; i < 32; ++i) {
        CHECK(index_of_bitstring(bitstring_of(i, 5)) == i);
    }
    CHECK_THROWS_AS(index_of_bitstring("01x"), std::invalid_argument);
    CHECK_THROWS_AS(index_of_bitstring(""), std::invalid_argument);
    CHECK_THROWS_AS(bitstring_of(8, 3), std::out_of_range);
}

}  // TEST_SUITE
