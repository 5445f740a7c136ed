#include <cmath>

#include "doctest.h"
#include "oneway/gates.hpp"
#include "oneway/verifier.hpp"

using namespace oneway;

namespace {

Site cs(int x) {
    return Site{x, 1, 0};
}

ParityExpression pe(std::initializer_list<Site> sites, int c = 0) {
    return ParityExpression::of(sites, c);
}

}  // namespace

TEST_CASE("identity wire structure and byproduct") {
    auto p = gates::identity_wire();
    CHECK(p.cluster.sites.size() == 3);
    CHECK(p.byp_x[0] == pe({cs(1)}));
    CHECK(p.byp_z[0] == pe({cs(0)}));
    // All-zero outcomes give the identity byproduct; s1 alone gives Z; both
    // bits set give X and Z (XZ up to phase).
    std::map<Site, int> all0 = {{cs(0), 0}, {cs(1), 0}};
    CHECK(p.byp_x[0].eval(all0) == 0);
    CHECK(p.byp_z[0].eval(all0) == 0);
    std::map<Site, int> s1 = {{cs(0), 1}, {cs(1), 0}};
    CHECK(p.byp_x[0].eval(s1) == 0);
    CHECK(p.byp_z[0].eval(s1) == 1);
    std::map<Site, int> both = {{cs(0), 1}, {cs(1), 1}};
    CHECK(p.byp_x[0].eval(both) == 1);
    CHECK(p.byp_z[0].eval(both) == 1);

    auto derived = derive_byproduct_spec(p);
    CHECK(derived.x == p.byp_x);
    CHECK(derived.z == p.byp_z);
}

TEST_CASE("chain gates: derived byproducts match the printed tables") {
    for (auto maker : {+[] { return gates::hadamard(); }, +[] { return gates::phase_s(); },
                       +[] { return gates::rot_x(0.7); }, +[] { return gates::rot_z(0.4); },
                       +[] { return gates::rot_euler(0.3, 0.9, -0.2); }}) {
        auto p = maker();
        auto derived = derive_byproduct_spec(p);
        CHECK(derived.x == p.byp_x);
        CHECK(derived.z == p.byp_z);
    }
}

TEST_CASE("euler pattern wiring follows the five-qubit procedure") {
    auto p = gates::rot_euler(0.3, 0.9, -0.2);
    CHECK(p.bases.at(cs(1)).sign == pe({cs(0)}, 1));
    CHECK(p.bases.at(cs(2)).sign == pe({cs(1)}, 1));
    CHECK(p.bases.at(cs(3)).sign == pe({cs(0), cs(2)}, 1));
    // All-zero branch realizes the identity byproduct.
    std::map<Site, int> all0;
    for (int x = 0; x <= 3; ++x) {
        all0[cs(x)] = 0;
    }
    CHECK(p.byp_x[0].eval(all0) == 0);
    CHECK(p.byp_z[0].eval(all0) == 0);
}

TEST_CASE("phase gate carries the constant z flip") {
    auto p = gates::phase_s();
    CHECK(p.byp_z[0].constant == 1);
    std::map<Site, int> all0;
    for (int x = 0; x <= 3; ++x) {
        all0[cs(x)] = 0;
    }
    CHECK(p.byp_z[0].eval(all0) == 1);
    CHECK(p.byp_x[0].eval(all0) == 0);
}

TEST_CASE("cnot15 reproduces the printed byproduct lines") {
    auto p = gates::cnot15();
    auto c = [](int x) { return Site{x, 3, 0}; };
    auto t = [](int x) { return Site{x, 1, 0}; };
    Site bridge{3, 2, 0};
    CHECK(p.cluster.sites.size() == 15);
    CHECK(p.byp_x[0] == pe({c(1), c(2), c(4), c(5)}));
    CHECK(p.byp_x[1] == pe({c(1), c(2), bridge, t(1), t(3), t(5)}));
    CHECK(p.byp_z[0] == pe({c(0), c(2), c(3), c(4), bridge, t(0), t(2)}, 1));
    CHECK(p.byp_z[1] == pe({t(0), t(2), t(4)}));

    auto derived = derive_byproduct_spec(p);
    CHECK(derived.x == p.byp_x);
    CHECK(derived.z == p.byp_z);

    // The all-zero branch leaves exactly the constant sigma_z on the control.
    std::map<Site, int> all0;
    for (const auto& s : p.measured_sites()) {
        all0[s] = 0;
    }
    CHECK(p.byp_x[0].eval(all0) == 0);
    CHECK(p.byp_x[1].eval(all0) == 0);
    CHECK(p.byp_z[0].eval(all0) == 1);
    CHECK(p.byp_z[1].eval(all0) == 0);
}

TEST_CASE("swap squares expose the printed anti-diagonal parity") {
    auto p = gates::swap_n(4);
    CHECK(p.cluster.sites.size() == 7 * 7 + 8);
    // Wire 3 enters at row 1; its x-claim runs up the staircase, and after
    // the reversal its z exponent lands on wire 0.
    ParityExpression want = pe({Site{0, 1, 0}, Site{1, 2, 0}, Site{2, 3, 0}, Site{3, 4, 0},
                                Site{4, 5, 0}, Site{5, 6, 0}, Site{6, 7, 0}});
    CHECK(p.byp_z[0] == want);

    SUBCASE("n=1 collapses to the plain wire") {
        auto w = gates::swap_n(1);
        CHECK(w.cluster.sites.size() == 3);
        CHECK(w.claims.gates.empty());
    }
}
