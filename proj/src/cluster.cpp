// Copyright 2026 the oneway simulator authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oneway/cluster.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace oneway {

const char* role_name(Role r) {
    switch (r) {
        case Role::Input:
            return "input";
        case Role::Body:
            return "body";
        case Role::Output:
            return "output";
        case Role::Redundant:
            return "redundant";
    }
    return "?";
}

Role parse_role(const std::string& name) {
    if (name == "input") {
        return Role::Input;
    }
    if (name == "body") {
        return Role::Body;
    }
    if (name == "output") {
        return Role::Output;
    }
    if (name == "redundant") {
        return Role::Redundant;
    }
    throw std::invalid_argument("bad role: " + name);
}

Edge make_edge(Site a, Site b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

Role Cluster::role(Site s) const {
    auto it = roles.find(s);
    return it == roles.end() ? Role::Body : it->second;
}

int Cluster::kappa_at(Site s) const {
    auto it = kappa.find(s);
    return it == kappa.end() ? 0 : (it->second & 1);
}

std::vector<Site> Cluster::neighbors(Site s) const {
    std::vector<Site> out;
    for (const auto& [a, b] : edges) {
        if (a == s) {
            out.push_back(b);
        } else if (b == s) {
            out.push_back(a);
        }
    }
    return out;
}

std::map<Site, std::vector<Site>> Cluster::adjacency() const {
    std::map<Site, std::vector<Site>> adj;
    for (const auto& s : sites) {
        adj[s];
    }
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::vector<Site> Cluster::sites_with_role(Role r) const {
    std::vector<Site> out;
    for (const auto& s : sites) {
        if (role(s) == r) {
            out.push_back(s);
        }
    }
    return out;
}

Cluster Cluster::translated(int dx, int dy, int dz) const {
    Cluster out;
    for (const auto& s : sites) {
        out.sites.insert(s.shifted(dx, dy, dz));
    }
    for (const auto& [a, b] : edges) {
        out.edges.insert(make_edge(a.shifted(dx, dy, dz), b.shifted(dx, dy, dz)));
    }
    for (const auto& [s, k] : kappa) {
        out.kappa[s.shifted(dx, dy, dz)] = k;
    }
    for (const auto& [s, r] : roles) {
        out.roles[s.shifted(dx, dy, dz)] = r;
    }
    for (const auto& [in, outp] : wires) {
        out.wires.push_back({in.shifted(dx, dy, dz), outp.shifted(dx, dy, dz)});
    }
    return out;
}

Cluster Cluster::mirrored_y(int y_sum) const {
    auto flip = [y_sum](Site s) { return Site{s.x, y_sum - s.y, s.z}; };
    Cluster out;
    for (const auto& s : sites) {
        out.sites.insert(flip(s));
    }
    for (const auto& [a, b] : edges) {
        out.edges.insert(make_edge(flip(a), flip(b)));
    }
    for (const auto& [s, k] : kappa) {
        out.kappa[flip(s)] = k;
    }
    for (const auto& [s, r] : roles) {
        out.roles[flip(s)] = r;
    }
    for (const auto& [in, outp] : wires) {
        out.wires.push_back({flip(in), flip(outp)});
    }
    return out;
}

void Cluster::check() const {
    for (const auto& [a, b] : edges) {
        if (!has_site(a) || !has_site(b)) {
            throw std::logic_error("edge endpoint outside the cluster");
        }
        if (a == b) {
            throw std::logic_error("self-loop edge");
        }
    }
    auto ins = sites_with_role(Role::Input);
    auto outs = sites_with_role(Role::Output);
    if (!wires.empty()) {
        if (ins.size() != wires.size() || outs.size() != wires.size()) {
            throw std::logic_error("|C_I| and |C_O| must equal the wire count");
        }
        for (const auto& [in, out] : wires) {
            if (role(in) != Role::Input || role(out) != Role::Output) {
                throw std::logic_error("wire endpoints must carry input/output roles");
            }
        }
    }
    for (const auto& [s, r] : roles) {
        (void)r;
        if (!has_site(s)) {
            throw std::logic_error("role on a non-site");
        }
    }
}

namespace {

bool adjacent_sites(Site a, Site b) {
    int d = std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
    return d == 1;
}

void require_connected(const Cluster& c) {
    if (c.sites.empty()) {
        throw std::invalid_argument("empty cluster shape");
    }
    auto adj = c.adjacency();
    std::set<Site> seen;
    std::deque<Site> queue = {*c.sites.begin()};
    seen.insert(*c.sites.begin());
    while (!queue.empty()) {
        Site s = queue.front();
        queue.pop_front();
        for (const auto& r : adj[s]) {
            if (seen.insert(r).second) {
                queue.push_back(r);
            }
        }
    }
    if (seen.size() != c.sites.size()) {
        throw std::invalid_argument("cluster shape is not connected");
    }
}

}  // namespace

Cluster lattice_cluster(const std::set<Site>& shape) {
    Cluster c;
    c.sites = shape;
    for (const auto& a : shape) {
        for (const auto& b : shape) {
            if (a < b && adjacent_sites(a, b)) {
                c.edges.insert(make_edge(a, b));
            }
        }
    }
    require_connected(c);
    return c;
}

Cluster lattice_block(int nx, int ny, int nz) {
    if (nx <= 0 || ny <= 0 || nz <= 0) {
        throw std::invalid_argument("block extents must be positive");
    }
    std::set<Site> shape;
    for (int x = 0; x < nx; ++x) {
        for (int y = 0; y < ny; ++y) {
            for (int z = 0; z < nz; ++z) {
                shape.insert({x, y, z});
            }
        }
    }
    return lattice_cluster(shape);
}

ReducedCluster remove_redundant(const Cluster& c, const std::set<Site>& redundant,
                                const std::map<Site, int>& outcomes, bool absorb_kappa) {
    for (const auto& s : redundant) {
        if (!c.has_site(s)) {
            throw std::invalid_argument("redundant site " + s.pretty() + " not in the cluster");
        }
        if (c.role(s) == Role::Input || c.role(s) == Role::Output) {
            throw std::invalid_argument("cannot remove wire endpoint " + s.pretty());
        }
    }
    ReducedCluster out;
    out.kappa_absorbed = absorb_kappa;
    Cluster& n = out.cluster;
    for (const auto& s : c.sites) {
        if (!redundant.count(s)) {
            n.sites.insert(s);
        }
    }
    for (const auto& [a, b] : c.edges) {
        if (!redundant.count(a) && !redundant.count(b)) {
            n.edges.insert({a, b});
        }
    }
    for (const auto& [s, r] : c.roles) {
        if (!redundant.count(s)) {
            n.roles[s] = r;
        }
    }
    n.wires = c.wires;
    for (const auto& s : n.sites) {
        int k = c.kappa_at(s);
        for (const auto& nb : c.neighbors(s)) {
            if (redundant.count(nb)) {
                auto it = outcomes.find(nb);
                if (it == outcomes.end()) {
                    throw std::invalid_argument("missing outcome for removed site " + nb.pretty());
                }
                k ^= it->second & 1;
            }
        }
        out.z_corrections[s] = k;
        if (!absorb_kappa && k) {
            n.kappa[s] = k;
        }
    }
    return out;
}

bool DecompositionReport::pass() const {
    for (const auto& c : constraints) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

std::string DecompositionReport::str() const {
    std::ostringstream os;
    for (const auto& c : constraints) {
        os << (c.pass ? "pass" : "FAIL") << ' ' << c.name;
        if (!c.detail.empty()) {
            os << ": " << c.detail;
        }
        os << '\n';
    }
    os << (pass() ? "decomposition ok" : "decomposition rejected") << '\n';
    return os.str();
}

DecompositionReport validate_decomposition(const Decomposition& d) {
    DecompositionReport rep;
    auto add = [&rep](const std::string& name, bool pass, const std::string& detail) {
        rep.constraints.push_back({name, pass, pass ? "" : detail});
    };

    // Vertex cover.
    {
        std::set<Site> covered;
        for (const auto& g : d.gates) {
            covered.insert(g.members.begin(), g.members.end());
        }
        std::string missing;
        bool extra_ok = true;
        for (const auto& s : covered) {
            if (!d.parent.has_site(s)) {
                extra_ok = false;
                missing = "subcluster vertex " + s.pretty() + " is not in the cluster";
                break;
            }
        }
        for (const auto& s : d.parent.sites) {
            if (!covered.count(s)) {
                missing = "vertex " + s.pretty() + " belongs to no subcluster";
                break;
            }
        }
        add("vertex-cover", extra_ok && covered.size() >= d.parent.sites.size() && missing.empty(),
            missing);
    }

    // Edge cover.
    {
        std::set<Edge> covered;
        for (const auto& g : d.gates) {
            for (const auto& e : g.edges) {
                covered.insert(make_edge(e.first, e.second));
            }
        }
        std::string detail;
        bool ok = true;
        for (const auto& e : d.parent.edges) {
            if (!covered.count(e)) {
                ok = false;
                detail = "edge " + e.first.pretty() + "-" + e.second.pretty() +
                         " belongs to no subcluster";
                break;
            }
        }
        for (const auto& e : covered) {
            if (!d.parent.edges.count(e)) {
                ok = false;
                detail = "edge " + e.first.pretty() + "-" + e.second.pretty() +
                         " is not a cluster edge";
                break;
            }
        }
        add("edge-cover", ok, detail);
    }

    // Edge disjointness.
    {
        std::map<Edge, int> owner;
        std::string detail;
        bool ok = true;
        for (size_t i = 0; i < d.gates.size(); ++i) {
            for (const auto& e : d.gates[i].edges) {
                Edge key = make_edge(e.first, e.second);
                auto [it, fresh] = owner.emplace(key, static_cast<int>(i));
                if (!fresh) {
                    ok = false;
                    detail = "edge " + key.first.pretty() + "-" + key.second.pretty() +
                             " owned by two subclusters";
                }
            }
        }
        add("edge-disjoint", ok, detail);
    }

    // Edge endpoints inside their subcluster.
    {
        bool ok = true;
        std::string detail;
        for (const auto& g : d.gates) {
            for (const auto& e : g.edges) {
                if (!g.members.count(e.first) || !g.members.count(e.second)) {
                    ok = false;
                    detail = "edge " + e.first.pretty() + "-" + e.second.pretty() +
                             " leaves subcluster " + g.name;
                }
            }
        }
        add("edge-endpoints", ok, detail);
    }

    // Induced-subgraph convention: every parent edge inside a member set
    // must belong to that subcluster's edge set.
    {
        bool ok = true;
        std::string detail;
        for (const auto& g : d.gates) {
            for (const auto& e : d.parent.edges) {
                if (g.members.count(e.first) && g.members.count(e.second) &&
                    !g.edges.count(e)) {
                    ok = false;
                    detail = "subcluster " + g.name + " is not induced: misses edge " +
                             e.first.pretty() + "-" + e.second.pretty();
                }
            }
        }
        add("induced-subgraph", ok, detail);
    }

    // Input and output sections carry no internal edges.
    {
        bool ok = true;
        std::string detail;
        for (const auto& g : d.gates) {
            for (const auto& e : d.parent.edges) {
                bool in_in = g.inputs.count(e.first) && g.inputs.count(e.second);
                bool out_out = g.outputs.count(e.first) && g.outputs.count(e.second);
                if (in_in || out_out) {
                    ok = false;
                    detail = "subcluster " + g.name + " has an edge inside its " +
                             (in_in ? "input" : "output") + " section";
                }
            }
        }
        add("io-edge-free", ok, detail);
    }

    // Unique input/output ownership.
    {
        bool ok = true;
        std::string detail;
        std::map<Site, int> in_owner, out_owner;
        for (size_t i = 0; i < d.gates.size(); ++i) {
            for (const auto& s : d.gates[i].inputs) {
                if (!in_owner.emplace(s, static_cast<int>(i)).second) {
                    ok = false;
                    detail = "site " + s.pretty() + " is the input of two gates";
                }
            }
            for (const auto& s : d.gates[i].outputs) {
                if (!out_owner.emplace(s, static_cast<int>(i)).second) {
                    ok = false;
                    detail = "site " + s.pretty() + " is the output of two gates";
                }
            }
        }
        add("unique-io", ok, detail);
    }

    // Removing all input/output vertices disintegrates the graph into the
    // per-gate bodies, mutually disconnected.
    {
        std::set<Site> io;
        for (const auto& g : d.gates) {
            io.insert(g.inputs.begin(), g.inputs.end());
            io.insert(g.outputs.begin(), g.outputs.end());
        }
        std::map<Site, int> body_owner;
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < d.gates.size(); ++i) {
            for (const auto& s : d.gates[i].members) {
                if (io.count(s)) {
                    continue;
                }
                if (!body_owner.emplace(s, static_cast<int>(i)).second) {
                    ok = false;
                    detail = "body site " + s.pretty() + " shared by two gates";
                }
            }
        }
        if (ok) {
            for (const auto& e : d.parent.edges) {
                if (io.count(e.first) || io.count(e.second)) {
                    continue;
                }
                auto a = body_owner.find(e.first);
                auto b = body_owner.find(e.second);
                if (a == body_owner.end() || b == body_owner.end()) {
                    continue;  // caught by vertex-cover
                }
                if (a->second != b->second) {
                    ok = false;
                    detail = "edge " + e.first.pretty() + "-" + e.second.pretty() +
                             " connects two gate bodies";
                }
            }
        }
        add("disconnected-bodies", ok, detail);
    }

    return rep;
}

}  // namespace oneway
