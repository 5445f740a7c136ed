#include <random>

#include "doctest.h"
#include "oneway/dense.hpp"
#include "oneway/tableau.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace oneway;

namespace {
const double R2 = 1 / std::sqrt(2.0);
}

TEST_CASE("attach builds tensor products in (new,old) order") {
    DenseState st;
    st.attach({0, 0, 0}, QubitInit::plus());
    CHECK(st.amplitudes()[0] == cd(R2, 0));
    CHECK(st.amplitudes()[1] == cd(R2, 0));

    st.attach({1, 0, 0}, QubitInit::one());
    // New site owns the least significant bit: (0,1/sqrt2,0,1/sqrt2).
    REQUIRE(st.amplitudes().size() == 4);
    CHECK(std::abs(st.amplitudes()[0]) < 1e-15);
    CHECK(std::abs(st.amplitudes()[1] - cd(R2, 0)) < 1e-15);
    CHECK(std::abs(st.amplitudes()[2]) < 1e-15);
    CHECK(std::abs(st.amplitudes()[3] - cd(R2, 0)) < 1e-15);
}

TEST_CASE("attach preserves the norm for arbitrary pairs") {
    DenseState st;
    st.attach({0, 0, 0}, QubitInit::pair(cd(0.6, 0), cd(0, 0.8)));
    CHECK(st.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS(st.attach({0, 0, 0}, QubitInit::plus()));
}

TEST_CASE("CZ on |+>|+> gives the 2-chain cluster state") {
    DenseState st;
    st.attach({1, 0, 0}, QubitInit::plus());
    st.attach({2, 0, 0}, QubitInit::plus());
    st.apply_cz({1, 0, 0}, {2, 0, 0});
    auto amps = st.amplitudes_in_order({{1, 0, 0}, {2, 0, 0}});
    CHECK(oracle::vecs_equal_up_to_phase({{0.5, 0}, {0.5, 0}, {0.5, 0}, {-0.5, 0}}, amps, 1e-12));

    SUBCASE("CZ twice is the identity") {
        st.apply_cz({1, 0, 0}, {2, 0, 0});
        auto a2 = st.amplitudes_in_order({{1, 0, 0}, {2, 0, 0}});
        for (auto& a : a2) {
            CHECK(a.real() == doctest::Approx(0.5).epsilon(1e-12));
        }
    }
}

TEST_CASE("CZ leaves |0>|psi> unchanged") {
    DenseState st;
    st.attach({0, 0, 0}, QubitInit::zero());
    st.attach({1, 0, 0}, QubitInit::pair(cd(0.6, 0), cd(0.8, 0)));
    auto before = st.amplitudes();
    st.apply_cz({0, 0, 0}, {1, 0, 0});
    CHECK(oracle::vec_distance(before, st.amplitudes()) < 1e-15);
}

TEST_CASE("measure_xy at angle 0 on |+> is deterministic") {
    DenseState st;
    st.attach({0, 0, 0}, QubitInit::plus());
    std::mt19937_64 rng(1);
    int s = st.measure_xy({0, 0, 0}, 0.0, std::nullopt, &rng);
    CHECK(s == 0);
    CHECK(st.num_active() == 0);
    CHECK_THROWS(([&] {
        DenseState st2;
        st2.attach({0, 0, 0}, QubitInit::plus());
        st2.measure_xy({0, 0, 0}, 0.0, 1, nullptr);
    })());
}

TEST_CASE("measuring the first qubit of a 2-chain teleports") {
    // Residual state after an X measurement on qubit 1 of the 2-chain is
    // H (byproduct) |+>, cross-checked against the tableau engine.
    for (int s = 0; s < 2; ++s) {
        DenseState st;
        st.attach({1, 0, 0}, QubitInit::plus());
        st.attach({2, 0, 0}, QubitInit::plus());
        st.apply_cz({1, 0, 0}, {2, 0, 0});
        int got = st.measure_xy({1, 0, 0}, 0.0, s, nullptr);
        CHECK(got == s);

        auto t = StabilizerTableau::from_graph({{1, 0, 0}, {2, 0, 0}},
                                               {{{1, 0, 0}, {2, 0, 0}}}, {});
        std::mt19937_64 rng(0);
        t.measure({1, 0, 0}, Axis::X, s, &rng);
        t.discard({1, 0, 0});
        auto want = tableau_dense_state(t, {{2, 0, 0}});
        CHECK(oracle::vecs_equal_up_to_phase(want, st.amplitudes(), 1e-12));
    }
}

TEST_CASE("xy measurement at pi/2 equals a sigma_y measurement") {
    // Compare against measurePauli(Y) on a 3-chain cluster, both branches.
    for (int s = 0; s < 2; ++s) {
        DenseState st;
        std::vector<Site> sites = {{1, 0, 0}, {2, 0, 0}, {3, 0, 0}};
        for (const auto& q : sites) {
            st.attach(q, QubitInit::plus());
        }
        st.apply_cz(sites[0], sites[1]);
        st.apply_cz(sites[1], sites[2]);
        st.measure_xy(sites[1], M_PI / 2, s, nullptr);

        auto t = StabilizerTableau::from_graph(
            sites, {{sites[0], sites[1]}, {sites[1], sites[2]}}, {});
        t.measure(sites[1], Axis::Y, s, nullptr);
        t.discard(sites[1]);
        auto want = tableau_dense_state(t, {sites[0], sites[2]});
        auto got = st.amplitudes_in_order({sites[0], sites[2]});
        CHECK(oracle::vecs_equal_up_to_phase(want, got, 1e-12));
    }
}

TEST_CASE("measure_z basics") {
    DenseState st;
    st.attach({0, 0, 0}, QubitInit::zero());
    CHECK(st.measure_z({0, 0, 0}, std::nullopt, nullptr) == 0);

    DenseState st2;
    st2.attach({0, 0, 0}, QubitInit::plus());
    std::mt19937_64 rng(42);
    int zeros = 0;
    for (int i = 0; i < 200; ++i) {
        DenseState s3 = st2;
        zeros += 1 - s3.measure_z({0, 0, 0}, std::nullopt, &rng);
    }
    CHECK(zeros > 60);
    CHECK(zeros < 140);
}

TEST_CASE("norm stays put over long random sequences") {
    std::mt19937_64 rng(9);
    DenseState st;
    std::vector<Site> active;
    int counter = 0;
    for (int step = 0; step < 1000; ++step) {
        if (active.size() < 2 || (active.size() < 10 && rng() % 3 == 0)) {
            Site s{counter++, 0, 0};
            st.attach(s, QubitInit::plus());
            active.push_back(s);
        } else if (rng() % 4 == 0) {
            Site victim = active[rng() % active.size()];
            st.measure_xy(victim, 0.3 * static_cast<double>(rng() % 10), std::nullopt, &rng);
            active.erase(std::find(active.begin(), active.end(), victim));
        } else {
            Site a = active[rng() % active.size()];
            Site b = active[rng() % active.size()];
            if (!(a == b)) {
                st.apply_cz(a, b);
            }
        }
        CHECK(std::abs(st.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("windowed executor keeps a 1D sweep narrow") {
    std::set<Site> sites;
    std::set<std::pair<Site, Site>> edges;
    for (int i = 0; i < 5; ++i) {
        sites.insert({i, 0, 0});
        if (i) {
            edges.insert({{i - 1, 0, 0}, {i, 0, 0}});
        }
    }
    WindowedExecutor ex(sites, edges, 0);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
        ex.measure_xy({i, 0, 0}, 0.0, std::nullopt, &rng);
    }
    CHECK(ex.peak_active() <= 3);
}

TEST_CASE("windowed equals monolithic on a small cluster, branch by branch") {
    // 2x3 grid, all X measurements except the last column.
    std::set<Site> sites;
    std::set<std::pair<Site, Site>> edges;
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 2; ++y) {
            sites.insert({x, y, 0});
            if (x) {
                edges.insert({{x - 1, y, 0}, {x, y, 0}});
            }
            if (y) {
                edges.insert({{x, y - 1, 0}, {x, y, 0}});
            }
        }
    }
    std::vector<Site> to_measure = {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}};
    std::vector<Site> outputs = {{2, 0, 0}, {2, 1, 0}};
    for (int branch = 0; branch < 16; ++branch) {
        // Monolithic: attach everything first.
        DenseState mono;
        for (const auto& s : sites) {
            mono.attach(s, QubitInit::plus());
        }
        for (const auto& [a, b] : edges) {
            mono.apply_cz(a, b);
        }
        for (size_t k = 0; k < to_measure.size(); ++k) {
            mono.measure_xy(to_measure[k], 0.0, (branch >> k) & 1, nullptr);
        }

        WindowedExecutor ex(sites, edges, 0);
        for (size_t k = 0; k < to_measure.size(); ++k) {
            ex.measure_xy(to_measure[k], 0.0, (branch >> k) & 1, nullptr);
        }
        for (const auto& o : outputs) {
            ex.ensure_attached(o);
        }
        auto a = mono.amplitudes_in_order(outputs);
        auto b = ex.state().amplitudes_in_order(outputs);
        CHECK(oracle::vecs_equal_up_to_phase(a, b, 1e-10));
        CHECK(ex.peak_active() < 6);
    }
}
