#include <random>

#include "doctest.h"
#include "oneway/pauli.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace oneway;
using testutil::pauli_matrix;

namespace {
const Site q1{1, 0, 0};
const Site q2{2, 0, 0};
}  // namespace

TEST_CASE("single-qubit products track phases") {
    auto x1 = PauliProduct::single(q1, Axis::X);
    auto z1 = PauliProduct::single(q1, Axis::Z);
    auto p = multiply(x1, z1);
    // X*Z = -iY
    CHECK(p.phase_exp() == 3);
    Axis a;
    REQUIRE(p.axis_at(q1, &a));
    CHECK(a == Axis::Y);

    CHECK(multiply(x1, x1) == PauliProduct::identity());
    CHECK(multiply(x1, PauliProduct::identity()) == x1);
}

TEST_CASE("chain correlation operators multiply like matrices") {
    // K1*K2 on a 2-site chain: (X1 Z2)(Z1 X2) = (-iY1)(+iY2) = +Y1 Y2,
    // frozen from the 4x4 matrix oracle, re-derived here.
    auto k1 = multiply(PauliProduct::single(q1, Axis::X), PauliProduct::single(q2, Axis::Z));
    auto k2 = multiply(PauliProduct::single(q1, Axis::Z), PauliProduct::single(q2, Axis::X));
    auto prod = multiply(k1, k2);

    std::vector<Site> order = {q1, q2};
    auto lhs = oracle::mul(pauli_matrix(k1, order), pauli_matrix(k2, order));
    CHECK(oracle::max_abs_diff(lhs, pauli_matrix(prod, order)) < 1e-14);

    auto yy = multiply(PauliProduct::single(q1, Axis::Y), PauliProduct::single(q2, Axis::Y));
    CHECK(prod == yy);
}

TEST_CASE("commutation predicate") {
    auto k1 = multiply(PauliProduct::single(q1, Axis::X), PauliProduct::single(q2, Axis::Z));
    auto k2 = multiply(PauliProduct::single(q1, Axis::Z), PauliProduct::single(q2, Axis::X));
    CHECK(commutes(k1, k2));
    CHECK_FALSE(commutes(PauliProduct::single(q1, Axis::X), PauliProduct::single(q1, Axis::Z)));
    CHECK(commutes(PauliProduct::single(q1, Axis::X), PauliProduct::single(q2, Axis::Z)));
}

TEST_CASE("commutation agrees with the dense commutator") {
    std::mt19937_64 rng(7);
    std::vector<Site> sites = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
    for (int it = 0; it < 200; ++it) {
        auto p = testutil::random_pauli(rng, sites).with_phase_exp(0);
        auto q = testutil::random_pauli(rng, sites).with_phase_exp(0);
        bool dense = oracle::commutator_zero(pauli_matrix(p, sites), pauli_matrix(q, sites), 1e-12);
        CHECK(commutes(p, q) == dense);
    }
}

TEST_CASE("conjugation by named gates") {
    Site a{0, 0, 0}, b{1, 0, 0};
    auto xa = PauliProduct::single(a, Axis::X);

    SUBCASE("CZ maps X_a to X_a Z_b") {
        auto got = conjugate(CliffordGate::cz(a, b), xa);
        auto want = multiply(PauliProduct::single(a, Axis::X), PauliProduct::single(b, Axis::Z));
        CHECK(got == want);
    }
    SUBCASE("CNOT copies X from control to target") {
        auto got = conjugate(CliffordGate::cnot(a, b), xa);
        auto want = multiply(PauliProduct::single(a, Axis::X), PauliProduct::single(b, Axis::X));
        CHECK(got == want);
    }
    SUBCASE("H exchanges X and Z") {
        CHECK(conjugate(CliffordGate::h(a), xa) == PauliProduct::single(a, Axis::Z));
        CHECK(conjugate(CliffordGate::h(a), PauliProduct::single(a, Axis::Z)) ==
              PauliProduct::single(a, Axis::X));
    }
    SUBCASE("S sends X to Y") {
        CHECK(conjugate(CliffordGate::s(a), xa) == PauliProduct::single(a, Axis::Y));
        CHECK(conjugate(CliffordGate::s(a), PauliProduct::single(a, Axis::Z)) ==
              PauliProduct::single(a, Axis::Z));
    }
}

TEST_CASE("conjugation is a group homomorphism") {
    std::mt19937_64 rng(11);
    std::vector<Site> sites = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}};
    std::vector<CliffordGate> gates = {
        CliffordGate::h(sites[0]),          CliffordGate::s(sites[1]),
        CliffordGate::cz(sites[0], sites[2]), CliffordGate::cnot(sites[1], sites[3]),
        CliffordGate::x(sites[2]),          CliffordGate::z(sites[3]),
    };
    for (int it = 0; it < 200; ++it) {
        auto p = testutil::random_pauli(rng, sites);
        auto q = testutil::random_pauli(rng, sites);
        const auto& g = gates[rng() % gates.size()];
        CHECK(conjugate(g, multiply(p, q)) == multiply(conjugate(g, p), conjugate(g, q)));
    }
}

TEST_CASE("propagation identities hold as dense matrix identities") {
    // Every conjugation table entry for CNOT, CZ, H and the pi/2-phase gate,
    // checked as a 2x2 / 4x4 identity: U P = (U P U^dag) U.
    Site a{0, 0, 0}, b{1, 0, 0};
    std::vector<Site> two = {a, b};
    std::vector<Site> one = {a};

    auto check_gate = [&](const CliffordGate& g, const oracle::Mat& u, bool twoq) {
        const auto& order = twoq ? two : one;
        std::vector<PauliProduct> inputs;
        for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
            inputs.push_back(PauliProduct::single(a, ax));
            if (twoq) {
                inputs.push_back(PauliProduct::single(b, ax));
            }
        }
        for (const auto& p : inputs) {
            auto conj = conjugate(g, p);
            auto lhs = oracle::mul(u, pauli_matrix(p, order));
            auto rhs = oracle::mul(pauli_matrix(conj, order), u);
            CHECK(oracle::max_abs_diff(lhs, rhs) < 1e-12);
        }
    };

    check_gate(CliffordGate::cnot(a, b), oracle::cnot(), true);
    check_gate(CliffordGate::cz(a, b), oracle::cz(), true);
    check_gate(CliffordGate::h(a), oracle::hadamard(), false);
    check_gate(CliffordGate::s(a), oracle::phase_s(), false);
}

TEST_CASE("textual rendering") {
    auto p = multiply(PauliProduct::single({1, 2, 0}, Axis::X),
                      PauliProduct::single({2, 2, 0}, Axis::Z));
    CHECK(p.str() == "+X(1,2) Z(2,2)");
    CHECK(p.with_phase_exp(2).str() == "-X(1,2) Z(2,2)");
    CHECK(PauliProduct::identity().str() == "+1");
    CHECK(PauliProduct::single({0, 0, 0}, Axis::Y, 1).str() == "+iY(0,0)");
}
