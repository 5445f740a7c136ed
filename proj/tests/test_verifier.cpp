#include <cmath>

#include "doctest.h"
#include "oneway/gates.hpp"
#include "oneway/tableau.hpp"
#include "oneway/verifier.hpp"

using namespace oneway;

namespace {

Site cs(int x) {
    return Site{x, 1, 0};
}

OraclePolicy quick_policy() {
    OraclePolicy p;
    p.max_exhaustive = 64;
    p.samples = 24;
    p.random_inputs = 2;
    p.seed = 77;
    return p;
}

}  // namespace

TEST_CASE("identity wire claims carry the printed signs") {
    auto p = gates::identity_wire();
    // X1 X3 has eigenvalue +1 regardless of the branch; Z1 Z3 flips with s2.
    for (int s = 0; s < 2; ++s) {
        std::vector<Site> sv(p.cluster.sites.begin(), p.cluster.sites.end());
        std::vector<Edge> ev(p.cluster.edges.begin(), p.cluster.edges.end());
        auto t = StabilizerTableau::from_graph(sv, ev, {});
        t.measure(cs(1), Axis::X, s, nullptr);
        auto xx = multiply(PauliProduct::single(cs(0), Axis::X),
                           PauliProduct::single(cs(2), Axis::X));
        auto zz = multiply(PauliProduct::single(cs(0), Axis::Z),
                           PauliProduct::single(cs(2), Axis::Z));
        CHECK(t.expected_eigenvalue(xx) == Eigenvalue::Plus);
        CHECK(t.expected_eigenvalue(zz) == (s ? Eigenvalue::Minus : Eigenvalue::Plus));

        auto rep = check_theorem1(p, {{cs(1), s}});
        CHECK(rep.failures == 0);
    }
}

TEST_CASE("x-rotation passes the criterion on every branch") {
    auto p = gates::rot_x(0.83);
    for (int s = 0; s < 2; ++s) {
        auto rep = check_theorem1(p, {{cs(1), s}});
        CHECK(rep.failures == 0);
    }
    auto rep = verify_pattern(p, quick_policy());
    CHECK(rep.pass());
}

TEST_CASE("cnot15 claim signs match the printed correlation parities") {
    auto p = gates::cnot15();
    auto rep = verify_pattern(p, quick_policy());
    CHECK(rep.pass());
}

TEST_CASE("chain gates verify") {
    for (auto maker :
         {+[] { return gates::hadamard(); }, +[] { return gates::phase_s(); },
          +[] { return gates::rot_z(1.1); }, +[] { return gates::rot_euler(0.6, -0.9, 0.35); },
          +[] { return gates::identity_wire(); }, +[] { return gates::wire(4); }}) {
        auto rep = verify_pattern(maker(), quick_policy());
        CHECK(rep.pass());
    }
}

TEST_CASE("hadamard oracle over all Y branches") {
    auto p = gates::hadamard();
    OraclePolicy policy;
    policy.max_exhaustive = 4096;  // 2^4 branches, fully enumerated
    policy.random_inputs = 3;
    auto rep = oracle_equivalence(p, policy);
    CHECK(rep.failures == 0);
    CHECK(rep.branches_checked == 16);
}

TEST_CASE("square gates verify") {
    SUBCASE("swap2") {
        auto rep = verify_pattern(gates::swap_n(2), quick_policy());
        CHECK(rep.pass());
    }
    SUBCASE("swap3") {
        auto p = gates::swap_n(3);
        OraclePolicy policy = quick_policy();
        policy.samples = 10;
        auto rep = verify_pattern(p, policy);
        CHECK(rep.pass());
    }
    SUBCASE("hamiltonian z2") {
        auto rep = verify_pattern(gates::hamiltonian_zn(2, 0.77), quick_policy());
        CHECK(rep.pass());
    }
    SUBCASE("controlled phase") {
        auto rep = verify_pattern(gates::controlled_phase(M_PI / 3), quick_policy());
        CHECK(rep.pass());
    }
    SUBCASE("controlled phase at pi is the Clifford point") {
        auto p = gates::controlled_phase(M_PI);
        auto rep = verify_pattern(p, quick_policy());
        CHECK(rep.pass());
    }
}

TEST_CASE("a corrupted pattern fails verification") {
    auto p = gates::rot_x(0.83);
    p.bases[cs(1)].sign.constant ^= 1;  // flip the angle sign
    auto rep = verify_pattern(p, quick_policy());
    CHECK_FALSE(rep.pass());

    auto q = gates::cnot15();
    q.byp_z[0].constant ^= 1;  // corrupt a byproduct bit
    auto rep2 = verify_pattern(q, quick_policy());
    CHECK_FALSE(rep2.pass());

    auto r = gates::hadamard();
    r.bases[cs(2)] = MeasurementBasis::pauli(BasisKind::X);  // flip a basis kind
    auto rep3 = verify_pattern(r, quick_policy());
    CHECK_FALSE(rep3.pass());
}
