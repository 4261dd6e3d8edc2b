#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qsdist/models.hpp"
#include "qsdist/pauli.hpp"
#include "support/dense.hpp"

using namespace qsdist;
namespace qt = qsdist::testing;

namespace {

constexpr double pi = std::numbers::pi;

PauliString from_chars(const std::string& text) {
    std::vector<Pauli> letters;
    for (char c : text) {
        switch (c) {
            case 'I': letters.push_back(Pauli::I); break;
            case 'X': letters.push_back(Pauli::X); break;
            case 'Y': letters.push_back(Pauli::Y); break;
            case 'Z': letters.push_back(Pauli::Z); break;
            default: REQUIRE(false);
        }
    }
    return make_pauli_string(static_cast<int>(text.size()), std::move(letters));
}

PauliString random_string(std::mt19937_64& rng, int n) {
    std::vector<Pauli> letters;
    for (int i = 0; i < n; ++i) {
        letters.push_back(static_cast<Pauli>(rng() % 4));
    }
    return make_pauli_string(n, std::move(letters));
}

}  // namespace

TEST_SUITE("pauli") {

TEST_CASE("string validation") {
    CHECK_THROWS_AS(make_pauli_string(3, {Pauli::X}), std::invalid_argument);
    CHECK_THROWS_AS(make_pauli_string(0, {}), std::invalid_argument);
    CHECK(is_identity_string(from_chars("III")));
    CHECK_FALSE(is_identity_string(from_chars("IZI")));
}

TEST_CASE("support_mask follows the big-endian layout") {
    CHECK(support_mask(from_chars("ZII")) == 0b100);
    CHECK(support_mask(from_chars("IIZ")) == 0b001);
    CHECK(support_mask(from_chars("XYI")) == 0b110);
}

TEST_CASE("single-letter products carry the cyclic phases") {
    const StringProduct xy = multiply(from_chars("X"), from_chars("Y"));
    CHECK(xy.string.letters[0] == Pauli::Z);
    CHECK(phase_of(xy.phase_pow) == cplx{0.0, 1.0});
    const StringProduct yx = multiply(from_chars("Y"), from_chars("X"));
    CHECK(yx.string.letters[0] == Pauli::Z);
    CHECK(phase_of(yx.phase_pow) == cplx{0.0, -1.0});
    const StringProduct zz = multiply(from_chars("Z"), from_chars("Z"));
    CHECK(zz.string.letters[0] == Pauli::I);
    CHECK(phase_of(zz.phase_pow) == cplx{1.0, 0.0});
}

TEST_CASE("multi-letter products match dense matrix multiplication") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const PauliString a = random_string(rng, n);
        const PauliString b = random_string(rng, n);
        const StringProduct prod = multiply(a, b);
        const qt::Mat dense =
            qt::mat_mul(qt::pauli_string_mat(a), qt::pauli_string_mat(b));
        qt::Mat reduced = qt::pauli_string_mat(prod.string);
        const cplx phase = phase_of(prod.phase_pow);
        double worst = 0.0;
        for (std::size_t i = 0; i < dense.a.size(); ++i) {
            worst = std::max(worst,
                             std::abs(dense.a[i] - phase * reduced.a[i]));
        }
        CHECK(worst == 0.0);  // integer arithmetic on both sides
    }
}

TEST_CASE("apply_pauli matches the dense operator") {
    std::mt19937_64 rng(717);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const PauliString s = random_string(rng, n);
        const StateVector in = run(qt::random_circuit(rng, n, 15));
        const StateVector expect = qt::mat_vec(qt::pauli_string_mat(s), in);
        const StateVector got = apply_pauli(in, s);
        CHECK(qt::max_amp_diff(expect, got) < 1e-12);
    }
}

TEST_CASE("pauli strings square to the identity operator") {
    std::mt19937_64 rng(818);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const PauliString s = random_string(rng, n);
        const StateVector in = run(qt::random_circuit(rng, n, 10));
        const StateVector twice = apply_pauli(apply_pauli(in, s), s);
        CHECK(qt::max_amp_diff(in, twice) < 1e-12);
    }
}

TEST_CASE("hamiltonian validation") {
    CHECK_THROWS_AS(
        make_hamiltonian(2, {{std::nan(""), from_chars("ZZ")}}),
        std::invalid_argument);
    CHECK_THROWS_AS(make_hamiltonian(2, {{1.0, from_chars("Z")}}),
                    std::invalid_argument);
    const Hamiltonian h =
        make_hamiltonian(2, {{0.5, from_chars("ZZ")}, {-0.25, from_chars("XI")}});
    CHECK(coeff_norm(h) == doctest::Approx(0.75));
}

TEST_CASE("apply_hamiltonian is the weighted sum of string actions") {
    const Hamiltonian h =
        make_hamiltonian(2, {{0.5, from_chars("ZZ")}, {0.25, from_chars("XX")}});
    std::mt19937_64 rng(111);
    const StateVector in = run(qt::random_circuit(rng, 2, 12));
    qt::Mat dense(4);
    for (const auto& term : h.terms) {
        const qt::Mat part = qt::pauli_string_mat(term.string);
        for (std::size_t i = 0; i < dense.a.size(); ++i) {
            dense.a[i] += term.coeff * part.a[i];
        }
    }
    CHECK(qt::max_amp_diff(qt::mat_vec(dense, in), apply_hamiltonian(in, h)) <
          1e-12);
}

TEST_CASE("evolve matches the closed-form spin rotation") {
    // H = (omega/2) n.sigma gives exp(-iHt) = the Bloch rotation by
    // angle omega*t about n.
    const double omega = 1.7;
    const std::array<double, 3> axis = {0.6, 0.0, 0.8};
    const Hamiltonian h = spin_field_hamiltonian({omega, axis});
    std::mt19937_64 rng(222);
    for (double t : {0.0, 0.3, 1.9, -2.4}) {
        const StateVector in = run(qt::random_circuit(rng, 1, 8));
        const qt::Mat rot =
            qt::spin_rotation(omega * t, axis[0], axis[1], axis[2]);
        CHECK(qt::max_amp_diff(qt::mat_vec(rot, in), evolve(h, in, t)) < 1e-12);
    }
}

TEST_CASE("evolve matches the diagonal exponential of the chain") {
    // Every term is Z-diagonal, so exp(-iHt) multiplies each basis
    // amplitude by a phase computed from its spin pattern.
    const double J = 1.3;
    const int n = 4;
    const Hamiltonian h = ising_hamiltonian(J, n);
    std::mt19937_64 rng(333);
    const StateVector in = run(qt::random_circuit(rng, n, 20));
    const double t = 2.2;
    StateVector expect = in;
    for (std::size_t idx = 0; idx < in.dim(); ++idx) {
        double energy = 0.0;
        for (int q = 0; q + 1 < n; ++q) {
            const int za = ((idx >> (n - 1 - q)) & 1) ? -1 : 1;
            const int zb = ((idx >> (n - 2 - q)) & 1) ? -1 : 1;
            energy += J / 4.0 * za * zb;
        }
        expect.amplitudes[idx] *= std::exp(cplx{0.0, -energy * t});
    }
    CHECK(qt::max_amp_diff(expect, evolve(h, in, t)) < 1e-10);
}

TEST_CASE("evolution preserves the norm") {
    const Hamiltonian h = ising_hamiltonian(2.0, 5);
    const StateVector psi = run(factorized_state_circuit(5, 1.1, 0.4));
    const StateVector out = evolve(h, psi, 7.5);
    CHECK(std::abs(norm_sq(out) - 1.0) < 1e-12);
}

}  // TEST_SUITE
