#include <random>

#include "doctest.h"
#include "oneway/cluster.hpp"
#include "oneway/tableau.hpp"

using namespace oneway;

TEST_CASE("lattice counts") {
    auto chain = lattice_block(5, 1);
    CHECK(chain.sites.size() == 5);
    CHECK(chain.edges.size() == 4);

    // a x b grid has 2ab - a - b edges.
    auto block = lattice_block(5, 3);
    CHECK(block.sites.size() == 15);
    CHECK(block.edges.size() == 22);

    auto dot = lattice_block(1, 1);
    CHECK(dot.sites.size() == 1);
    CHECK(dot.edges.empty());

    CHECK_THROWS(lattice_cluster({{0, 0, 0}, {2, 0, 0}}));  // disconnected
}

TEST_CASE("removing the middle of a 3-chain") {
    auto c = lattice_block(3, 1);
    auto red = remove_redundant(c, {{1, 0, 0}}, {{{1, 0, 0}, 1}}, false);
    CHECK(red.cluster.sites.size() == 2);
    CHECK(red.cluster.edges.empty());
    CHECK(red.cluster.kappa_at({0, 0, 0}) == 1);
    CHECK(red.cluster.kappa_at({2, 0, 0}) == 1);
    CHECK(red.z_corrections.at({0, 0, 0}) == 1);
    CHECK(red.z_corrections.at({2, 0, 0}) == 1);

    SUBCASE("absorbing kappa resets the bits but keeps the corrections") {
        auto red2 = remove_redundant(c, {{1, 0, 0}}, {{{1, 0, 0}, 1}}, true);
        CHECK(red2.cluster.kappa_at({0, 0, 0}) == 0);
        CHECK(red2.z_corrections.at({0, 0, 0}) == 1);
    }
}

TEST_CASE("removing nothing is the identity") {
    auto c = lattice_block(2, 2);
    auto red = remove_redundant(c, {}, {});
    CHECK(red.cluster.sites == c.sites);
    CHECK(red.cluster.edges == c.edges);
}

TEST_CASE("removing a corner with outcome 0 keeps kappa") {
    auto c = lattice_block(2, 2);
    auto red = remove_redundant(c, {{1, 1, 0}}, {{{1, 1, 0}, 0}}, false);
    CHECK(red.cluster.sites.size() == 3);
    CHECK(red.cluster.edges.size() == 2);
    for (const auto& s : red.cluster.sites) {
        CHECK(red.cluster.kappa_at(s) == 0);
    }
}

TEST_CASE("removal refuses wire endpoints") {
    auto c = lattice_block(3, 1);
    c.roles[{0, 0, 0}] = Role::Input;
    c.roles[{2, 0, 0}] = Role::Output;
    c.wires = {{{0, 0, 0}, {2, 0, 0}}};
    CHECK_THROWS(remove_redundant(c, {{0, 0, 0}}, {{{0, 0, 0}, 0}}));
}

TEST_CASE("redundant removal commutes with Z measurements on the tableau") {
    // Z-measuring the same sites on the tableau of the full cluster yields
    // the same stabilizer group as building the reduced cluster directly.
    std::mt19937_64 rng(21);
    std::vector<Cluster> shapes = {lattice_block(4, 1), lattice_block(3, 2), lattice_block(2, 2),
                                   lattice_block(5, 2)};
    for (const auto& c : shapes) {
        std::vector<Site> victims;
        for (const auto& s : c.sites) {
            if (rng() % 3 == 0 && victims.size() + 2 < c.sites.size()) {
                victims.push_back(s);
            }
        }
        int nbranches = 1 << victims.size();
        for (int branch = 0; branch < nbranches; ++branch) {
            std::map<Site, int> outcomes;
            for (size_t i = 0; i < victims.size(); ++i) {
                outcomes[victims[i]] = (branch >> i) & 1;
            }
            std::vector<Site> sv(c.sites.begin(), c.sites.end());
            std::vector<Edge> ev(c.edges.begin(), c.edges.end());
            auto t = StabilizerTableau::from_graph(sv, ev, {});
            for (const auto& v : victims) {
                t.measure(v, Axis::Z, outcomes.at(v), nullptr);
                t.discard(v);
            }
            auto red = remove_redundant(c, std::set<Site>(victims.begin(), victims.end()),
                                        outcomes, false);
            std::vector<Site> rs(red.cluster.sites.begin(), red.cluster.sites.end());
            std::vector<Edge> re(red.cluster.edges.begin(), red.cluster.edges.end());
            auto want = StabilizerTableau::from_graph(rs, re, red.cluster.kappa);
            CHECK(t.same_group(want));
        }
    }
}

namespace {

// Two 3-chains sharing the middle site: O(g1) = I(g2) = (2,0,0).
Decomposition two_gate_chain() {
    Decomposition d;
    d.parent = lattice_block(5, 1);
    SubclusterSpec g1{"g1", {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}},
                      {{0, 0, 0}}, {{2, 0, 0}},
                      {make_edge({0, 0, 0}, {1, 0, 0}), make_edge({1, 0, 0}, {2, 0, 0})}};
    SubclusterSpec g2{"g2", {{2, 0, 0}, {3, 0, 0}, {4, 0, 0}},
                      {{2, 0, 0}}, {{4, 0, 0}},
                      {make_edge({2, 0, 0}, {3, 0, 0}), make_edge({3, 0, 0}, {4, 0, 0})}};
    d.gates = {g1, g2};
    return d;
}

}  // namespace

TEST_CASE("the two-gate chain split validates") {
    auto rep = validate_decomposition(two_gate_chain());
    CHECK(rep.pass());
    // Manual enumeration of the same predicates.
    CHECK(rep.constraints.size() == 8);
}

TEST_CASE("a crossing edge assigned to neither subcluster fails edge cover") {
    // Two 2x2 blocks side by side; the edges between the columns x=1 and
    // x=2 can be included in neither induced subgraph.
    Decomposition d;
    d.parent = lattice_block(4, 2);
    auto block_edges = [&](int x0) {
        std::set<Edge> e;
        for (const auto& edge : d.parent.edges) {
            if (edge.first.x >= x0 && edge.first.x <= x0 + 1 && edge.second.x >= x0 &&
                edge.second.x <= x0 + 1) {
                e.insert(edge);
            }
        }
        return e;
    };
    SubclusterSpec g1{"g1", {}, {{0, 0, 0}, {0, 1, 0}}, {{1, 0, 0}, {1, 1, 0}}, block_edges(0)};
    SubclusterSpec g2{"g2", {}, {{2, 0, 0}, {2, 1, 0}}, {{3, 0, 0}, {3, 1, 0}}, block_edges(2)};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            g1.members.insert({x, y, 0});
            g2.members.insert({x + 2, y, 0});
        }
    }
    d.gates = {g1, g2};
    auto rep = validate_decomposition(d);
    CHECK_FALSE(rep.pass());
    bool edge_cover_failed = false;
    for (const auto& c : rep.constraints) {
        if (c.name == "edge-cover") {
            edge_cover_failed = !c.pass;
        }
    }
    CHECK(edge_cover_failed);
}

TEST_CASE("overlapping bodies violate the induced-subgraph convention") {
    // Two overlapping subclusters on a 3-chain whose edge split disobeys the
    // induced assignment: the shared edge is claimed by g1 only, yet both
    // member sets contain its endpoints.
    Decomposition d;
    d.parent = lattice_block(3, 1);
    SubclusterSpec g1{"g1", {{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}}, {{1, 0, 0}},
                      {make_edge({0, 0, 0}, {1, 0, 0})}};
    SubclusterSpec g2{"g2", {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, {{1, 0, 0}}, {{2, 0, 0}},
                      {make_edge({1, 0, 0}, {2, 0, 0})}};
    d.gates = {g1, g2};
    auto rep = validate_decomposition(d);
    CHECK_FALSE(rep.pass());
    bool induced_failed = false;
    for (const auto& c : rep.constraints) {
        if (c.name == "induced-subgraph" && !c.pass) {
            induced_failed = true;
        }
    }
    CHECK(induced_failed);
}

TEST_CASE("translation and mirroring preserve structure") {
    auto c = lattice_block(3, 2);
    auto t = c.translated(5, -1);
    CHECK(t.sites.size() == c.sites.size());
    CHECK(t.edges.size() == c.edges.size());
    CHECK(t.has_site({5, -1, 0}));
    auto m = c.mirrored_y(1);
    CHECK(m.sites == c.sites);  // symmetric block
}
