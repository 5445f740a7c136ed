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

#include "oneway/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oneway {

int ParityExpression::eval(const std::map<Site, int>& outcomes) const {
    int acc = constant;
    for (const auto& s : deps) {
        auto it = outcomes.find(s);
        if (it == outcomes.end()) {
            throw std::invalid_argument("missing outcome for site " + s.pretty());
        }
        acc ^= it->second & 1;
    }
    return acc;
}

ParityExpression& ParityExpression::operator^=(const ParityExpression& other) {
    constant ^= other.constant;
    for (const auto& s : other.deps) {
        auto [it, fresh] = deps.insert(s);
        if (!fresh) {
            deps.erase(it);
        }
    }
    return *this;
}

ParityExpression operator^(ParityExpression a, const ParityExpression& b) {
    a ^= b;
    return a;
}

void ParityExpression::substitute(Site s, int bit) {
    auto it = deps.find(s);
    if (it != deps.end()) {
        deps.erase(it);
        constant ^= bit & 1;
    }
}

std::string ParityExpression::str() const {
    std::ostringstream os;
    os << constant;
    for (const auto& s : deps) {
        os << "+s" << s.pretty();
    }
    return os.str();
}

ParityExpression ParityExpression::of(std::initializer_list<Site> sites, int bit) {
    ParityExpression e;
    e.constant = bit & 1;
    for (const auto& s : sites) {
        e ^= ParityExpression{0, {s}};
    }
    return e;
}

const char* basis_kind_name(BasisKind k) {
    switch (k) {
        case BasisKind::X:
            return "X";
        case BasisKind::Y:
            return "Y";
        case BasisKind::Z:
            return "Z";
        case BasisKind::XYPlane:
            return "XY";
    }
    return "?";
}

bool AngleSensitivity::trivial() const {
    for (auto b : xcoef) {
        if (b) {
            return false;
        }
    }
    for (auto b : zcoef) {
        if (b) {
            return false;
        }
    }
    return true;
}

AngleSensitivity AngleSensitivity::x_rotation(int wire, int num_wires) {
    AngleSensitivity s;
    s.xcoef.assign(num_wires, 0);
    s.zcoef.assign(num_wires, 0);
    s.zcoef[wire] = 1;
    return s;
}

AngleSensitivity AngleSensitivity::z_rotation(const std::vector<int>& wires, int num_wires) {
    AngleSensitivity s;
    s.xcoef.assign(num_wires, 0);
    s.zcoef.assign(num_wires, 0);
    for (int w : wires) {
        s.xcoef[w] ^= 1;
    }
    return s;
}

double MeasurementBasis::effective_angle(const std::map<Site, int>& outcomes) const {
    if (kind != BasisKind::XYPlane) {
        throw std::logic_error("effective_angle on a Pauli basis");
    }
    return sign.eval(outcomes) ? -base_angle : base_angle;
}

MeasurementBasis MeasurementBasis::pauli(BasisKind k) {
    MeasurementBasis b;
    b.kind = k;
    return b;
}

MeasurementBasis MeasurementBasis::xy(double base_angle, ParityExpression sign,
                                      AngleSensitivity sens) {
    MeasurementBasis b;
    b.kind = BasisKind::XYPlane;
    b.base_angle = base_angle;
    b.sign = std::move(sign);
    b.sensitivity = std::move(sens);
    return b;
}

bool MeasurementBasis::operator==(const MeasurementBasis& other) const {
    return kind == other.kind && base_angle == other.base_angle && sign == other.sign &&
           post == other.post && sensitivity == other.sensitivity;
}

std::vector<int> MeasurementPattern::wire_permutation() const {
    auto outs = output_sites();
    // Top-to-bottom: descending y, then ascending x, z.
    std::sort(outs.begin(), outs.end(), [](const Site& a, const Site& b) {
        if (a.y != b.y) {
            return a.y > b.y;
        }
        return a < b;
    });
    std::vector<int> perm(num_wires(), -1);
    for (int w = 0; w < num_wires(); ++w) {
        for (size_t p = 0; p < outs.size(); ++p) {
            if (outs[p] == output_site(w)) {
                perm[w] = static_cast<int>(p);
            }
        }
    }
    return perm;
}

std::vector<Site> MeasurementPattern::measured_sites() const {
    std::vector<Site> out;
    for (const auto& s : cluster.sites) {
        Role r = cluster.role(s);
        if (r == Role::Input || r == Role::Body) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<Site> MeasurementPattern::output_sites() const {
    return cluster.sites_with_role(Role::Output);
}

std::vector<Site> MeasurementPattern::pauli_round_sites() const {
    std::vector<Site> out;
    for (const auto& [s, b] : bases) {
        if (b.is_pauli()) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<Site> MeasurementPattern::tilted_sites() const {
    std::vector<Site> out;
    for (const auto& [s, b] : bases) {
        if (!b.is_pauli()) {
            out.push_back(s);
        }
    }
    return out;
}

std::map<Site, std::set<Site>> MeasurementPattern::forward_cones() const {
    std::map<Site, std::set<Site>> fc;
    for (const auto& s : cluster.sites) {
        fc[s];
    }
    for (const auto& [q, b] : bases) {
        for (const auto& p : b.sign.deps) {
            fc[p].insert(q);
        }
        for (const auto& p : b.post.deps) {
            fc[p].insert(q);
        }
    }
    return fc;
}

void MeasurementPattern::check() const {
    cluster.check();
    for (const auto& s : cluster.sites) {
        Role r = cluster.role(s);
        bool has_basis = bases.count(s) != 0;
        if ((r == Role::Input || r == Role::Body) && !has_basis) {
            throw std::logic_error("measured site " + s.pretty() + " has no basis");
        }
        if (r == Role::Output && has_basis) {
            throw std::logic_error("output site " + s.pretty() + " carries a basis");
        }
    }
    for (const auto& [s, b] : bases) {
        if (!cluster.has_site(s)) {
            throw std::logic_error("basis on non-site " + s.pretty());
        }
        if (b.is_pauli() && (!b.sign.deps.empty() || b.sign.constant)) {
            throw std::logic_error("Pauli basis with sign dependencies at " + s.pretty());
        }
        for (const auto& d : b.sign.deps) {
            auto it = bases.find(d);
            if (it == bases.end()) {
                throw std::logic_error("dependency on unmeasured site " + d.pretty());
            }
        }
    }
    // No Pauli-measured site appears in any forward cone, and the
    // dependency relation is acyclic.
    auto fc = forward_cones();
    for (const auto& [p, cone] : fc) {
        for (const auto& q : cone) {
            if (bases.at(q).is_pauli()) {
                throw std::logic_error("Pauli-measured site " + q.pretty() +
                                       " sits in a forward cone");
            }
        }
    }
    std::map<Site, int> state;  // 0 new, 1 visiting, 2 done
    std::vector<std::pair<Site, bool>> stack;
    for (const auto& [s, b] : bases) {
        if (state[s]) {
            continue;
        }
        stack.push_back({s, false});
        while (!stack.empty()) {
            auto [cur, expanded] = stack.back();
            stack.pop_back();
            if (expanded) {
                state[cur] = 2;
                continue;
            }
            if (state[cur] == 1) {
                continue;
            }
            if (state[cur] == 2) {
                continue;
            }
            state[cur] = 1;
            stack.push_back({cur, true});
            for (const auto& d : bases.at(cur).sign.deps) {
                if (state[d] == 1) {
                    throw std::logic_error("dependency cycle through " + d.pretty());
                }
                if (state[d] == 0) {
                    stack.push_back({d, false});
                }
            }
        }
    }
    if (static_cast<int>(byp_x.size()) != num_wires() ||
        static_cast<int>(byp_z.size()) != num_wires()) {
        throw std::logic_error("byproduct table width mismatch");
    }
    if (claims.num_qubits != num_wires()) {
        throw std::logic_error("claims circuit width mismatch");
    }
}

namespace {

// Relabels circuit qubits; SWAPN is rewritten into explicit pair swaps when
// the mapping is not the identity on its span.
Circuit relabel_circuit(const Circuit& c, const std::vector<int>& map, int out_width) {
    Circuit out(out_width);
    for (const auto& g : c.gates) {
        if (g.kind == CircuitGate::Kind::SWAPN) {
            int k = g.qubits[0];
            bool trivial = true;
            for (int i = 0; i < k; ++i) {
                trivial = trivial && map[i] == i;
            }
            if (trivial && k <= out_width) {
                out.gates.push_back(g);
            } else {
                for (int i = 0; i < k / 2; ++i) {
                    out.swap2(map[i], map[k - 1 - i]);
                }
            }
            continue;
        }
        CircuitGate ng = g;
        for (auto& q : ng.qubits) {
            q = map[q];
        }
        out.gates.push_back(ng);
    }
    return out;
}

}  // namespace

MeasurementPattern compose_patterns(const MeasurementPattern& g1, const MeasurementPattern& g2) {
    const int n = g1.num_wires();
    if (g2.num_wires() != n) {
        throw std::invalid_argument("patterns must process the same number of logical qubits");
    }

    // Work out the translation gluing g2's inputs onto g1's outputs.
    auto outs = g1.output_sites();
    auto g2ins = g2.cluster.sites_with_role(Role::Input);
    if (outs.size() != g2ins.size()) {
        throw std::invalid_argument("output/input section size mismatch");
    }
    std::sort(outs.begin(), outs.end());
    std::sort(g2ins.begin(), g2ins.end());
    Site d{outs[0].x - g2ins[0].x, outs[0].y - g2ins[0].y, outs[0].z - g2ins[0].z};
    for (size_t i = 0; i < outs.size(); ++i) {
        if (g2ins[i].shifted(d.x, d.y, d.z) != outs[i]) {
            throw std::invalid_argument("gluing requires a rigid translation of g2");
        }
    }
    MeasurementPattern t2;
    t2.cluster = g2.cluster.translated(d.x, d.y, d.z);
    for (const auto& [s, b] : g2.bases) {
        MeasurementBasis nb = b;
        ParityExpression sign;
        sign.constant = b.sign.constant;
        for (const auto& dep : b.sign.deps) {
            sign.deps.insert(dep.shifted(d.x, d.y, d.z));
        }
        nb.sign = sign;
        ParityExpression post;
        post.constant = b.post.constant;
        for (const auto& dep : b.post.deps) {
            post.deps.insert(dep.shifted(d.x, d.y, d.z));
        }
        nb.post = post;
        t2.bases[s.shifted(d.x, d.y, d.z)] = nb;
    }
    t2.byp_x = g2.byp_x;
    t2.byp_z = g2.byp_z;
    for (auto* table : {&t2.byp_x, &t2.byp_z}) {
        for (auto& e : *table) {
            ParityExpression ne;
            ne.constant = e.constant;
            for (const auto& dep : e.deps) {
                ne.deps.insert(dep.shifted(d.x, d.y, d.z));
            }
            e = ne;
        }
    }
    t2.claims = g2.claims;

    // Wire pairing: composite wire w continues as t2's wire v where t2's
    // input site equals g1's output site for w. w_of[v] = w.
    std::vector<int> v_of(n, -1), w_of(n, -1);
    for (int w = 0; w < n; ++w) {
        Site join = g1.output_site(w);
        for (int v = 0; v < n; ++v) {
            if (g2.input_site(v).shifted(d.x, d.y, d.z) == join) {
                v_of[w] = v;
                w_of[v] = w;
            }
        }
        if (v_of[w] < 0) {
            throw std::invalid_argument("no g2 wire continues composite wire " +
                                        std::to_string(w));
        }
    }

    MeasurementPattern out;
    // Cluster union with the interface demoted to body.
    out.cluster.sites = g1.cluster.sites;
    out.cluster.sites.insert(t2.cluster.sites.begin(), t2.cluster.sites.end());
    out.cluster.edges = g1.cluster.edges;
    for (const auto& e : t2.cluster.edges) {
        if (out.cluster.edges.count(e)) {
            throw std::invalid_argument("edge sets of the composed patterns overlap");
        }
        out.cluster.edges.insert(e);
    }
    for (const auto& [s, k] : g1.cluster.kappa) {
        if (k) {
            out.cluster.kappa[s] = k;
        }
    }
    for (const auto& [s, k] : t2.cluster.kappa) {
        if (k) {
            out.cluster.kappa[s] = k;
        }
    }
    for (const auto& s : out.cluster.sites) {
        Role r = Role::Body;
        if (g1.cluster.has_site(s) && g1.cluster.role(s) == Role::Input) {
            r = Role::Input;
        } else if (t2.cluster.has_site(s) && t2.cluster.role(s) == Role::Output) {
            r = Role::Output;
        }
        if (r != Role::Body) {
            out.cluster.roles[s] = r;
        }
    }
    for (int w = 0; w < n; ++w) {
        out.cluster.wires.push_back({g1.input_site(w), t2.cluster.wires[v_of[w]].second});
    }

    // Bases: g1's stay; the interface and t2's body take t2's bases, with
    // adaptive angles additionally flipped by g1's accumulated byproduct.
    out.bases = g1.bases;
    for (const auto& [s, b] : t2.bases) {
        MeasurementBasis nb = b;
        if (b.kind == BasisKind::XYPlane && !b.sensitivity.trivial()) {
            ParityExpression flip;
            for (int v = 0; v < n; ++v) {
                if (v < static_cast<int>(b.sensitivity.xcoef.size()) && b.sensitivity.xcoef[v]) {
                    flip ^= g1.byp_x[w_of[v]];
                }
                if (v < static_cast<int>(b.sensitivity.zcoef.size()) && b.sensitivity.zcoef[v]) {
                    flip ^= g1.byp_z[w_of[v]];
                }
            }
            nb.sign ^= flip;
        }
        if (out.bases.count(s)) {
            throw std::invalid_argument("measured sections of the composed patterns overlap");
        }
        out.bases[s] = nb;
    }

    // Byproduct: push g1's table through g2's claims, then xor g2's own.
    std::vector<ParityExpression> xs(n), zs(n);
    for (int v = 0; v < n; ++v) {
        xs[v] = g1.byp_x[w_of[v]];
        zs[v] = g1.byp_z[w_of[v]];
    }
    for (const auto& g : t2.claims.gates) {
        propagate_bits(xs, zs, g);
    }
    out.byp_x.resize(n);
    out.byp_z.resize(n);
    for (int w = 0; w < n; ++w) {
        out.byp_x[w] = xs[v_of[w]] ^ t2.byp_x[v_of[w]];
        out.byp_z[w] = zs[v_of[w]] ^ t2.byp_z[v_of[w]];
    }

    // Claims: g1's circuit then g2's with wires relabeled back to composite
    // numbering.
    out.claims = Circuit(n);
    out.claims.gates = g1.claims.gates;
    Circuit c2 = relabel_circuit(t2.claims, w_of, n);
    out.claims.gates.insert(out.claims.gates.end(), c2.gates.begin(), c2.gates.end());

    // Sensitivities of t2's sites must be re-expressed over the composite
    // input cut: the coefficient of (type, w) is t2's form evaluated on the
    // image of the unit byproduct after it crossed g1's claimed circuit.
    for (const auto& [s, b] : t2.bases) {
        if (b.kind != BasisKind::XYPlane || b.sensitivity.trivial()) {
            continue;
        }
        AngleSensitivity ns;
        ns.xcoef.assign(n, 0);
        ns.zcoef.assign(n, 0);
        for (int w = 0; w < n; ++w) {
            for (int type = 0; type < 2; ++type) {
                std::vector<uint8_t> ux(n, 0), uz(n, 0);
                (type == 0 ? ux : uz)[w] = 1;
                for (const auto& g : g1.claims.gates) {
                    propagate_bits(ux, uz, g);
                }
                // Re-index to t2 wire numbering.
                int coef = 0;
                for (int v = 0; v < n; ++v) {
                    coef ^= b.sensitivity.xcoef[v] & ux[w_of[v]];
                    coef ^= b.sensitivity.zcoef[v] & uz[w_of[v]];
                }
                if (type == 0) {
                    ns.xcoef[w] = static_cast<uint8_t>(coef);
                } else {
                    ns.zcoef[w] = static_cast<uint8_t>(coef);
                }
            }
        }
        out.bases.at(s).sensitivity = ns;
    }

    out.check();
    return out;
}

MeasurementPattern stack_patterns(const std::vector<MeasurementPattern>& parts) {
    if (parts.empty()) {
        throw std::invalid_argument("nothing to stack");
    }
    MeasurementPattern out;
    int total_wires = 0;
    for (const auto& p : parts) {
        total_wires += p.num_wires();
    }
    out.claims = Circuit(total_wires);
    out.byp_x.resize(total_wires);
    out.byp_z.resize(total_wires);
    int offset = 0;
    for (const auto& p : parts) {
        for (const auto& s : p.cluster.sites) {
            if (!out.cluster.sites.insert(s).second) {
                throw std::invalid_argument("stacked patterns share site " + s.pretty());
            }
        }
        out.cluster.edges.insert(p.cluster.edges.begin(), p.cluster.edges.end());
        for (const auto& [s, k] : p.cluster.kappa) {
            if (k) {
                out.cluster.kappa[s] = k;
            }
        }
        for (const auto& [s, r] : p.cluster.roles) {
            out.cluster.roles[s] = r;
        }
        out.cluster.wires.insert(out.cluster.wires.end(), p.cluster.wires.begin(),
                                 p.cluster.wires.end());
        for (const auto& [s, b] : p.bases) {
            MeasurementBasis nb = b;
            if (!b.sensitivity.trivial()) {
                AngleSensitivity ns;
                ns.xcoef.assign(total_wires, 0);
                ns.zcoef.assign(total_wires, 0);
                for (int v = 0; v < p.num_wires(); ++v) {
                    ns.xcoef[offset + v] = b.sensitivity.xcoef[v];
                    ns.zcoef[offset + v] = b.sensitivity.zcoef[v];
                }
                nb.sensitivity = ns;
            }
            out.bases[s] = nb;
        }
        for (int v = 0; v < p.num_wires(); ++v) {
            out.byp_x[offset + v] = p.byp_x[v];
            out.byp_z[offset + v] = p.byp_z[v];
        }
        std::vector<int> map(p.num_wires());
        for (int v = 0; v < p.num_wires(); ++v) {
            map[v] = offset + v;
        }
        Circuit c = relabel_circuit(p.claims, map, total_wires);
        out.claims.gates.insert(out.claims.gates.end(), c.gates.begin(), c.gates.end());
        offset += p.num_wires();
    }
    out.check();
    return out;
}

MeasurementPattern elide_x_pair(const MeasurementPattern& p, Site a, Site b,
                                bool allow_junction) {
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("cannot remove pair " + a.pretty() + "," + b.pretty() +
                                     ": " + why);
    };
    if (!p.cluster.has_edge(a, b)) {
        throw bad("not adjacent");
    }
    for (Site s : {a, b}) {
        auto it = p.bases.find(s);
        if (it == p.bases.end() || it->second.kind != BasisKind::X) {
            throw bad("not an X measurement");
        }
        if (p.cluster.role(s) != Role::Body) {
            throw bad("not a body site");
        }
        if (p.cluster.kappa_at(s) != 0) {
            throw bad("kappa not normalized");
        }
    }
    auto na = p.cluster.neighbors(a);
    auto nb = p.cluster.neighbors(b);
    if (na.size() != 2) {
        throw bad("first site is not wire-interior");
    }
    if (!allow_junction && nb.size() != 2) {
        throw bad("second site is not wire-interior");
    }
    Site left = na[0] == b ? na[1] : na[0];
    std::vector<Site> rights;
    for (const auto& r : nb) {
        if (!(r == a)) {
            rights.push_back(r);
        }
    }
    if (rights.empty()) {
        throw bad("second site dangles");
    }

    MeasurementPattern out = p;
    out.cluster.sites.erase(a);
    out.cluster.sites.erase(b);
    out.cluster.roles.erase(a);
    out.cluster.roles.erase(b);
    out.cluster.kappa.erase(a);
    out.cluster.kappa.erase(b);
    std::set<Edge> edges;
    for (const auto& e : p.cluster.edges) {
        if (e.first == a || e.second == a || e.first == b || e.second == b) {
            continue;
        }
        edges.insert(e);
    }
    for (const auto& r : rights) {
        Edge e = make_edge(left, r);
        auto [it, fresh] = edges.insert(e);
        if (!fresh) {
            edges.erase(it);
        }
    }
    out.cluster.edges = std::move(edges);
    out.bases.erase(a);
    out.bases.erase(b);
    for (auto& [s, basis] : out.bases) {
        basis.sign.substitute(a, 0);
        basis.sign.substitute(b, 0);
        basis.post.substitute(a, 0);
        basis.post.substitute(b, 0);
    }
    for (auto* table : {&out.byp_x, &out.byp_z}) {
        for (auto& e : *table) {
            e.substitute(a, 0);
            e.substitute(b, 0);
        }
    }
    out.check();
    return out;
}

MeasurementPattern elide_x_pairs(const MeasurementPattern& p, bool allow_junction) {
    MeasurementPattern cur = p;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& e : cur.cluster.edges) {
            for (auto [a, b] : {std::pair{e.first, e.second}, std::pair{e.second, e.first}}) {
                try {
                    cur = elide_x_pair(cur, a, b, allow_junction);
                    progress = true;
                    break;
                } catch (const std::invalid_argument&) {
                }
            }
            if (progress) {
                break;
            }
        }
    }
    return cur;
}

std::vector<Site> topological_measurement_order(const MeasurementPattern& p) {
    std::vector<Site> order;
    std::map<Site, int> level;
    for (const auto& [s, b] : p.bases) {
        if (b.is_pauli()) {
            level[s] = 0;
            order.push_back(s);
        }
    }
    // Adaptive sites layered greedily over their dependencies.
    std::vector<Site> pending;
    for (const auto& [s, b] : p.bases) {
        if (!b.is_pauli()) {
            pending.push_back(s);
        }
    }
    int round = 0;
    while (!pending.empty()) {
        ++round;
        std::vector<Site> now, later;
        for (const auto& s : pending) {
            bool ready = true;
            for (const auto& d : p.bases.at(s).sign.deps) {
                if (!level.count(d)) {
                    ready = false;
                    break;
                }
            }
            (ready ? now : later).push_back(s);
        }
        if (now.empty()) {
            throw std::logic_error("dependency cycle among adaptive measurements");
        }
        for (const auto& s : now) {
            level[s] = round;
            order.push_back(s);
        }
        pending = std::move(later);
    }
    return order;
}

std::vector<Site> window_measurement_order(const MeasurementPattern& p) {
    std::set<Site> pending;
    for (const auto& [s, b] : p.bases) {
        (void)b;
        pending.insert(s);
    }
    std::set<Site> done;
    std::vector<Site> order;
    while (!pending.empty()) {
        Site pick{};
        bool found = false;
        for (const auto& s : pending) {
            bool ready = true;
            for (const auto& d : p.bases.at(s).sign.deps) {
                if (!done.count(d)) {
                    ready = false;
                    break;
                }
            }
            if (ready) {
                pick = s;
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::logic_error("dependency cycle among adaptive measurements");
        }
        pending.erase(pick);
        done.insert(pick);
        order.push_back(pick);
    }
    return order;
}

PauliAngle classify_angle(double phi, double tol) {
    double t = std::fmod(phi, 2 * M_PI);
    if (t < 0) {
        t += 2 * M_PI;
    }
    auto near = [&](double x) { return std::abs(t - x) < tol; };
    if (near(0) || near(2 * M_PI)) {
        return {true, Axis::X, 0};
    }
    if (near(M_PI / 2)) {
        return {true, Axis::Y, 0};
    }
    if (near(M_PI)) {
        return {true, Axis::X, 1};
    }
    if (near(3 * M_PI / 2)) {
        return {true, Axis::Y, 1};
    }
    return {};
}

Decomposition composition_decomposition(const MeasurementPattern& g1,
                                        const MeasurementPattern& g2,
                                        const MeasurementPattern& combined) {
    (void)g2;
    Decomposition d;
    d.parent = combined.cluster;
    SubclusterSpec s1{"g1", {}, {}, {}, g1.cluster.edges};
    s1.members = g1.cluster.sites;
    for (const auto& s : g1.cluster.sites_with_role(Role::Input)) {
        s1.inputs.insert(s);
    }
    for (const auto& s : g1.cluster.sites_with_role(Role::Output)) {
        s1.outputs.insert(s);
    }
    SubclusterSpec s2{"g2", {}, {}, {}, {}};
    for (const auto& s : combined.cluster.sites) {
        if (!g1.cluster.has_site(s)) {
            s2.members.insert(s);
        }
    }
    for (const auto& s : s1.outputs) {
        s2.members.insert(s);
        s2.inputs.insert(s);
    }
    for (const auto& e : combined.cluster.edges) {
        if (!g1.cluster.edges.count(e)) {
            s2.edges.insert(e);
        }
    }
    for (const auto& [in, outp] : combined.cluster.wires) {
        (void)in;
        s2.outputs.insert(outp);
    }
    d.gates = {s1, s2};
    return d;
}

}  // namespace oneway
