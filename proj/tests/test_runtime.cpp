#include <cmath>
#include <set>

#include "doctest.h"
#include "oneway/gates.hpp"
#include "oneway/runtime.hpp"

using namespace oneway;

TEST_CASE("schedules") {
    SUBCASE("cnot15 runs in a single round") {
        auto s = build_schedule(gates::cnot15());
        CHECK(s.num_rounds() == 1);
        CHECK(s.rounds[0].size() == 13);
    }
    SUBCASE("the Euler rotation needs four rounds") {
        auto s = build_schedule(gates::rot_euler(0.1, 0.2, 0.3));
        REQUIRE(s.num_rounds() == 4);
        for (int t = 0; t < 4; ++t) {
            REQUIRE(s.rounds[t].size() == 1);
            CHECK(s.rounds[t][0] == Site{t, 1, 0});
        }
    }
    SUBCASE("carry takes the trivial round plus one adaptive round") {
        auto s = build_schedule(gates::carry());
        CHECK(s.num_rounds() == 2);
    }
    SUBCASE("hamiltonian z4 is a two-round pattern") {
        CHECK(build_schedule(gates::hamiltonian_zn(4, 0.3)).num_rounds() == 2);
    }
}

TEST_CASE("executing the identity wire matches Z measurement of the input") {
    auto p = gates::identity_wire();
    // |+> input: uniform results either way; |0> and |1>: deterministic.
    for (char in : {'0', '1'}) {
        for (uint64_t seed = 0; seed < 8; ++seed) {
            ExecuteOptions o;
            o.input = std::string(1, in);
            o.seed = seed;
            auto rec = execute(p, o);
            CHECK(rec.results[0] == in - '0');
        }
    }
}

TEST_CASE("engines agree branch by branch") {
    auto p = gates::rot_euler(0.3, 1.1, -0.4);
    auto measured = p.measured_sites();
    for (int bits = 0; bits < (1 << measured.size()); ++bits) {
        std::map<Site, int> forced;
        for (size_t i = 0; i < measured.size(); ++i) {
            forced[measured[i]] = (bits >> i) & 1;
        }
        // Fix the readout too so the records are comparable.
        for (int w = 0; w < p.num_wires(); ++w) {
            forced[p.output_site(w)] = 0;
        }
        ExecuteOptions o;
        o.forced = forced;
        o.input = "0";
        RunRecord a, b;
        bool a_ok = true, b_ok = true;
        try {
            o.engine = Engine::Auto;
            a = execute(p, o);
        } catch (const ForcedOutcomeImpossible&) {
            a_ok = false;
        }
        try {
            o.engine = Engine::Dense;
            b = execute(p, o);
        } catch (const ForcedOutcomeImpossible&) {
            b_ok = false;
        }
        CHECK(a_ok == b_ok);
        if (a_ok && b_ok) {
            CHECK(a.results == b.results);
            CHECK(a.outcomes == b.outcomes);
        }
    }
}

TEST_CASE("adder(2) adds deterministically on every sampled branch") {
    auto p = gates::adder(2);
    // wire order: a0 b0 t1 b1 a1; result bits c0 = wire 1, c1 = wire 3.
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            std::string input(5, '+');
            input[0] = '0' + ((a >> 0) & 1);
            input[4] = '0' + ((a >> 1) & 1);
            input[1] = '0' + ((b >> 0) & 1);
            input[3] = '0' + ((b >> 1) & 1);
            input[2] = '0';
            for (uint64_t seed = 1; seed <= 3; ++seed) {
                ExecuteOptions o;
                o.input = input;
                o.seed = seed * 77 + a * 4 + b;
                auto rec = execute(p, o);
                int c = rec.results[1] | (rec.results[3] << 1);
                CHECK(c == (a + b) % 4);
            }
        }
    }
}

TEST_CASE("split execution bounds the window and matches the full run") {
    auto p = gates::wire(30);
    std::map<Site, int> forced;
    std::mt19937_64 rng(9);
    for (const auto& s : p.measured_sites()) {
        forced[s] = static_cast<int>(rng() & 1);
    }
    forced[p.output_site(0)] = 0;
    ExecuteOptions o;
    o.forced = forced;
    auto full = execute(p, o);
    auto split = execute_split(p, 6, o);
    CHECK(split.peak_window <= 6);
    CHECK(split.results == full.results);
    CHECK(split.outcomes == full.outcomes);

    SUBCASE("a window of cluster size degenerates to the plain dense run") {
        auto wide = execute_split(p, 64, o);
        CHECK(wide.results == full.results);
    }
    SUBCASE("an unachievable window is reported") {
        CHECK_THROWS(execute_split(p, 1, o));
    }
}

TEST_CASE("resource reports") {
    auto cnot = gates::cnot15();
    auto r = resource_report(cnot);
    CHECK(r.s == 15);
    CHECK(r.o == 13);
    CHECK(r.t == 1);
    CHECK(r.pass());

    auto qft2 = gates::qft(2);
    auto rq = resource_report(qft2);
    CHECK(rq.t == 2);
    CHECK(rq.pass());

    auto ad = resource_report(gates::adder(2));
    CHECK(ad.t == 2);
    CHECK(ad.pass());
}

TEST_CASE("reduce leaves a graph state that reproduces the post-round state") {
    auto p = gates::rot_euler(0.2, 0.4, 0.6);
    ExecuteOptions o;
    o.seed = 4;
    auto red = reduce_to_graph(p, o);
    CHECK(red.graph.vertices.size() == 4);  // 5-chain minus the one trivial site
}
