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

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "oneway/site.hpp"

namespace oneway {

enum class Role : uint8_t { Input, Body, Output, Redundant };

const char* role_name(Role r);
Role parse_role(const std::string& name);

using Edge = std::pair<Site, Site>;

Edge make_edge(Site a, Site b);

// Cluster and graph geometry: sites with edges, per-site kappa bits, roles
// partitioning the cluster into input/body/output/redundant sections, and
// the logical wires (input site, output site) per logical qubit.
struct Cluster {
    std::set<Site> sites;
    std::set<Edge> edges;
    std::map<Site, int> kappa;  // absent => 0
    std::map<Site, Role> roles; // absent => Body
    std::vector<std::pair<Site, Site>> wires;

    bool has_site(Site s) const { return sites.count(s) != 0; }
    bool has_edge(Site a, Site b) const { return edges.count(make_edge(a, b)) != 0; }
    Role role(Site s) const;
    int kappa_at(Site s) const;
    std::vector<Site> neighbors(Site s) const;
    std::map<Site, std::vector<Site>> adjacency() const;

    std::vector<Site> sites_with_role(Role r) const;
    int num_wires() const { return static_cast<int>(wires.size()); }

    Cluster translated(int dx, int dy, int dz = 0) const;
    Cluster mirrored_y(int y_sum) const;  // y -> y_sum - y

    // Validates the role partition, wire endpoints and edge endpoints.
    void check() const;
};

// Connected subset of the simple cubic lattice: nearest-neighbor edges are
// implied by the site set.
Cluster lattice_cluster(const std::set<Site>& shape);
// Full block of size nx x ny x nz anchored at the origin.
Cluster lattice_block(int nx, int ny, int nz = 1);

struct ReducedCluster {
    Cluster cluster;
    // Z-correction each surviving site would absorb (the kappa' bits), also
    // reported when they have been normalized away.
    std::map<Site, int> z_corrections;
    bool kappa_absorbed;
};

// Z-measures the redundant sites out of the cluster. With absorb_kappa the
// resulting kappa' bits are normalized to zero and reported separately.
ReducedCluster remove_redundant(const Cluster& c, const std::set<Site>& redundant,
                                const std::map<Site, int>& outcomes, bool absorb_kappa = true);

// One gate's share of a decomposition.
struct SubclusterSpec {
    std::string name;
    std::set<Site> members;
    std::set<Site> inputs;
    std::set<Site> outputs;
    std::set<Edge> edges;
};

struct Decomposition {
    Cluster parent;
    std::vector<SubclusterSpec> gates;
};

struct ConstraintResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct DecompositionReport {
    std::vector<ConstraintResult> constraints;
    bool pass() const;
    std::string str() const;
};

// Checks vertex cover, edge cover, edge disjointness, edge endpoints,
// the induced-subgraph convention, edge-free input/output sections, unique
// input/output ownership, and disintegration into disconnected gate bodies.
// Reports, never throws.
DecompositionReport validate_decomposition(const Decomposition& d);

}  // namespace oneway
