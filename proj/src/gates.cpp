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

#include "oneway/gates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "oneway/correlation.hpp"
#include "oneway/verifier.hpp"

namespace oneway::gates {

namespace {

Site chain_site(int x) {
    return Site{x, 1, 0};
}

// Chain skeleton on row y=1: input at x=0, output at x=length.
MeasurementPattern chain_skeleton(int length) {
    MeasurementPattern p;
    for (int x = 0; x <= length; ++x) {
        p.cluster.sites.insert(chain_site(x));
        if (x) {
            p.cluster.edges.insert(make_edge(chain_site(x - 1), chain_site(x)));
        }
    }
    p.cluster.roles[chain_site(0)] = Role::Input;
    p.cluster.roles[chain_site(length)] = Role::Output;
    p.cluster.wires = {{chain_site(0), chain_site(length)}};
    p.claims = Circuit(1);
    p.byp_x.resize(1);
    p.byp_z.resize(1);
    return p;
}

int row_of(int reg, int k) {
    return 2 * (k - reg) - 1;
}

}  // namespace

MeasurementPattern identity_wire() {
    auto p = chain_skeleton(2);
    p.bases[chain_site(0)] = MeasurementBasis::pauli(BasisKind::X);
    p.bases[chain_site(1)] = MeasurementBasis::pauli(BasisKind::X);
    p.byp_x[0] = ParityExpression::of({chain_site(1)});
    p.byp_z[0] = ParityExpression::of({chain_site(0)});
    p.check();
    return p;
}

MeasurementPattern wire(int length) {
    if (length < 2 || length % 2) {
        throw std::invalid_argument("wire length must be a positive even edge count");
    }
    auto p = chain_skeleton(length);
    for (int x = 0; x < length; ++x) {
        p.bases[chain_site(x)] = MeasurementBasis::pauli(BasisKind::X);
    }
    install_derived_byproduct(p);
    p.check();
    return p;
}

MeasurementPattern rot_x(double xi) {
    auto p = chain_skeleton(2);
    p.bases[chain_site(0)] = MeasurementBasis::pauli(BasisKind::X);
    p.bases[chain_site(1)] = MeasurementBasis::xy(
        xi, ParityExpression::of({chain_site(0)}, 1), AngleSensitivity::x_rotation(0, 1));
    p.byp_x[0] = ParityExpression::of({chain_site(1)});
    p.byp_z[0] = ParityExpression::of({chain_site(0)});
    p.claims.rx(0, xi);
    p.check();
    return p;
}

MeasurementPattern rot_z(double eta) {
    auto p = chain_skeleton(4);
    p.bases[chain_site(0)] = MeasurementBasis::pauli(BasisKind::X);
    p.bases[chain_site(1)] = MeasurementBasis::pauli(BasisKind::X);
    p.bases[chain_site(2)] = MeasurementBasis::xy(
        eta, ParityExpression::of({chain_site(1)}, 1), AngleSensitivity::z_rotation({0}, 1));
    p.bases[chain_site(3)] = MeasurementBasis::pauli(BasisKind::X);
    p.byp_x[0] = ParityExpression::of({chain_site(1), chain_site(3)});
    p.byp_z[0] = ParityExpression::of({chain_site(0), chain_site(2)});
    p.claims.rz(0, eta);
    p.check();
    return p;
}

MeasurementPattern rot_euler(double xi, double eta, double zeta) {
    auto p = chain_skeleton(4);
    p.bases[chain_site(0)] = MeasurementBasis::pauli(BasisKind::X);
    p.bases[chain_site(1)] = MeasurementBasis::xy(
        xi, ParityExpression::of({chain_site(0)}, 1), AngleSensitivity::x_rotation(0, 1));
    p.bases[chain_site(2)] = MeasurementBasis::xy(
        eta, ParityExpression::of({chain_site(1)}, 1), AngleSensitivity::z_rotation({0}, 1));
    p.bases[chain_site(3)] = MeasurementBasis::xy(
        zeta, ParityExpression::of({chain_site(0), chain_site(2)}, 1),
        AngleSensitivity::x_rotation(0, 1));
    p.byp_x[0] = ParityExpression::of({chain_site(1), chain_site(3)});
    p.byp_z[0] = ParityExpression::of({chain_site(0), chain_site(2)});
    p.claims.rx(0, xi).rz(0, eta).rx(0, zeta);
    p.check();
    return p;
}

MeasurementPattern hadamard() {
    auto p = chain_skeleton(4);
    p.bases[chain_site(0)] = MeasurementBasis::pauli(BasisKind::X);
    for (int x = 1; x <= 3; ++x) {
        p.bases[chain_site(x)] = MeasurementBasis::pauli(BasisKind::Y);
    }
    p.byp_x[0] = ParityExpression::of({chain_site(0), chain_site(2), chain_site(3)});
    p.byp_z[0] = ParityExpression::of({chain_site(1), chain_site(2)});
    p.claims.h(0);
    p.check();
    return p;
}

MeasurementPattern phase_s() {
    auto p = chain_skeleton(4);
    p.bases[chain_site(0)] = MeasurementBasis::pauli(BasisKind::X);
    p.bases[chain_site(1)] = MeasurementBasis::pauli(BasisKind::X);
    p.bases[chain_site(2)] = MeasurementBasis::pauli(BasisKind::Y);
    p.bases[chain_site(3)] = MeasurementBasis::pauli(BasisKind::X);
    p.byp_x[0] = ParityExpression::of({chain_site(1), chain_site(3)});
    p.byp_z[0] = ParityExpression::of({chain_site(0), chain_site(1), chain_site(2)}, 1);
    p.claims.s(0);
    p.check();
    return p;
}

MeasurementPattern cnot15(bool control_on_top) {
    MeasurementPattern p;
    // Control wire on row 3 (sites x=0..6), bridge at (3,2), target on row 1.
    auto c = [](int x) { return Site{x, 3, 0}; };
    auto t = [](int x) { return Site{x, 1, 0}; };
    Site bridge{3, 2, 0};
    for (int x = 0; x <= 6; ++x) {
        p.cluster.sites.insert(c(x));
        p.cluster.sites.insert(t(x));
        if (x) {
            p.cluster.edges.insert(make_edge(c(x - 1), c(x)));
            p.cluster.edges.insert(make_edge(t(x - 1), t(x)));
        }
    }
    p.cluster.sites.insert(bridge);
    p.cluster.edges.insert(make_edge(c(3), bridge));
    p.cluster.edges.insert(make_edge(t(3), bridge));
    p.cluster.roles[c(0)] = Role::Input;
    p.cluster.roles[t(0)] = Role::Input;
    p.cluster.roles[c(6)] = Role::Output;
    p.cluster.roles[t(6)] = Role::Output;
    p.cluster.wires = {{c(0), c(6)}, {t(0), t(6)}};

    // Qubits 1, 9, 10, 11, 13, 14 in the X eigenbasis; 2-6, 8 and 12 in Y.
    for (Site s : {c(0), t(0), t(1), t(2), t(4), t(5)}) {
        p.bases[s] = MeasurementBasis::pauli(BasisKind::X);
    }
    for (Site s : {c(1), c(2), c(3), c(4), c(5), bridge, t(3)}) {
        p.bases[s] = MeasurementBasis::pauli(BasisKind::Y);
    }

    p.byp_x.resize(2);
    p.byp_z.resize(2);
    // gamma_x(c) = s2+s3+s5+s6, gamma_x(t) = s2+s3+s8+s10+s12+s14,
    // gamma_z(c) = s1+s3+s4+s5+s8+s9+s11+1, gamma_z(t) = s9+s11+s13.
    p.byp_x[0] = ParityExpression::of({c(1), c(2), c(4), c(5)});
    p.byp_x[1] = ParityExpression::of({c(1), c(2), bridge, t(1), t(3), t(5)});
    p.byp_z[0] = ParityExpression::of({c(0), c(2), c(3), c(4), bridge, t(0), t(2)}, 1);
    p.byp_z[1] = ParityExpression::of({t(0), t(2), t(4)});
    p.claims = Circuit(2);
    p.claims.cnot(0, 1);
    p.check();
    if (!control_on_top) {
        MeasurementPattern m;
        m.cluster = p.cluster.mirrored_y(4);
        std::swap(m.cluster.wires[0], m.cluster.wires[1]);
        for (const auto& [s, b] : p.bases) {
            m.bases[Site{s.x, 4 - s.y, s.z}] = b;
        }
        auto flip_expr = [](const ParityExpression& e) {
            ParityExpression out;
            out.constant = e.constant;
            for (const auto& s : e.deps) {
                out.deps.insert(Site{s.x, 4 - s.y, s.z});
            }
            return out;
        };
        // Wire 0 stays the top row, which now carries the target.
        m.byp_x = {flip_expr(p.byp_x[1]), flip_expr(p.byp_x[0])};
        m.byp_z = {flip_expr(p.byp_z[1]), flip_expr(p.byp_z[0])};
        m.claims = Circuit(2);
        m.claims.cnot(1, 0);
        m.check();
        return m;
    }
    return p;
}

namespace {

// A rotation exp(-i phi Z_R) hosted by one tilted square site.
struct SquareRotation {
    std::vector<int> registers;  // top-to-bottom register indices
    double phi;
    Site preferred{INT32_MIN, 0, 0};
};

// Builds the (2n-1)^2 square with inputs/outputs on the odd rows, X
// measurements everywhere except the chosen rotation sites, the reversal in
// the claims, and the byproduct derived from the correlations. Rotations
// that no site of the full square can carry get interior coupler sites
// (even rows) removed until the needed correlation exists; the two-wire
// phase gate, for example, loses the coupler next to its output column.
MeasurementPattern square_gate(int n, const std::vector<SquareRotation>& rotations) {
    if (n < 1) {
        throw std::invalid_argument("square gates need at least one wire");
    }
    if (n == 1) {
        if (!rotations.empty()) {
            // exp(-i phi Z) on a single wire is a plain z-rotation.
            throw std::invalid_argument("one-wire rotations use the chain patterns");
        }
        return identity_wire();
    }
    MeasurementPattern p;
    const int side = 2 * n - 1;
    for (int x = 1; x <= side; ++x) {
        for (int y = 1; y <= side; ++y) {
            p.cluster.sites.insert({x, y, 0});
            if (x > 1) {
                p.cluster.edges.insert(make_edge({x - 1, y, 0}, {x, y, 0}));
            }
            if (y > 1) {
                p.cluster.edges.insert(make_edge({x, y - 1, 0}, {x, y, 0}));
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        int y = row_of(v, n);
        Site in{0, y, 0}, out{2 * n, y, 0};
        p.cluster.sites.insert(in);
        p.cluster.sites.insert(out);
        p.cluster.edges.insert(make_edge(in, {1, y, 0}));
        p.cluster.edges.insert(make_edge({side, y, 0}, out));
        p.cluster.roles[in] = Role::Input;
        p.cluster.roles[out] = Role::Output;
        p.cluster.wires.push_back({in, out});
    }

    // Claims: the reversal, then the rotations (decomposed into the gate
    // catalog with CNOT ladders).
    p.claims = Circuit(n);
    p.claims.swapn(n);
    for (const auto& r : rotations) {
        std::vector<int> regs = r.registers;
        std::sort(regs.begin(), regs.end());
        for (size_t i = 0; i + 1 < regs.size(); ++i) {
            p.claims.cnot(regs[i], regs[i + 1]);
        }
        p.claims.rz(regs.back(), 2 * r.phi);
        for (size_t i = regs.size() - 1; i >= 1; --i) {
            p.claims.cnot(regs[i - 1], regs[i]);
        }
    }

    std::set<Site> chosen;
    std::vector<Site> rotation_site(rotations.size());

    auto remove_coupler = [&](Site h) {
        p.cluster.sites.erase(h);
        std::set<Edge> kept;
        for (const auto& e : p.cluster.edges) {
            if (!(e.first == h) && !(e.second == h)) {
                kept.insert(e);
            }
        }
        p.cluster.edges = std::move(kept);
    };
    if (!rotations.empty()) {
        // Rotation squares shed the vertical couplers of the last body
        // column; the output correlations of the hosted rotations need the
        // column before the outputs uncoupled.
        for (int y = 2; y < side; y += 2) {
            remove_coupler(Site{side, y, 0});
        }
    }

    auto measured_x_sites = [&]() {
        std::map<Site, Axis> flex;
        for (const auto& s : p.cluster.sites) {
            if (p.cluster.role(s) != Role::Output && !chosen.count(s)) {
                flex[s] = Axis::X;
            }
        }
        return flex;
    };
    auto body_flexible = [&]() {
        auto flex = measured_x_sites();
        for (int v = 0; v < n; ++v) {
            flex.erase(p.input_site(v));
        }
        return flex;
    };
    auto rotation_feasible = [&](const SquareRotation& r, Site q) {
        if (chosen.count(q) || !p.cluster.has_site(q) || p.cluster.role(q) != Role::Body) {
            return false;
        }
        std::map<Site, Axis> pinned;
        pinned[q] = Axis::Z;
        for (int reg : r.registers) {
            pinned[Site{2 * n, row_of(reg, n), 0}] = Axis::Z;
        }
        auto flexible = measured_x_sites();
        flexible.erase(q);
        return solve_correlation(p.cluster, pinned, flexible).found;
    };
    auto wires_feasible = [&]() {
        for (int w = 0; w < n; ++w) {
            std::map<Site, Axis> pinned_z;
            pinned_z[p.input_site(w)] = Axis::Z;
            pinned_z[p.output_site(n - 1 - w)] = Axis::Z;
            if (!solve_correlation(p.cluster, pinned_z, body_flexible()).found) {
                return false;
            }
            std::map<Site, Axis> pinned_x;
            pinned_x[p.input_site(w)] = Axis::X;
            pinned_x[p.output_site(n - 1 - w)] = Axis::X;
            auto flex = body_flexible();
            for (const auto& c : chosen) {
                flex[c] = Axis::X;
            }
            if (!solve_correlation(p.cluster, pinned_x, flex).found) {
                return false;
            }
        }
        return true;
    };
    for (size_t k = 0; k < rotations.size(); ++k) {
        const auto& r = rotations[k];
        bool has_pref = r.preferred.x != INT32_MIN;
        auto find_host = [&]() -> Site {
            if (has_pref && rotation_feasible(r, r.preferred)) {
                return r.preferred;
            }
            for (const auto& s : p.cluster.sites) {
                if (rotation_feasible(r, s)) {
                    return s;
                }
            }
            return Site{INT32_MIN, 0, 0};
        };
        Site got = find_host();
        if (got.x == INT32_MIN) {
            // Remove an interior coupler to open up the correlation.
            std::vector<Site> couplers;
            for (const auto& s : p.cluster.sites) {
                if (p.cluster.role(s) == Role::Body && s.y % 2 == 0 && !chosen.count(s)) {
                    couplers.push_back(s);
                }
            }
            for (const auto& h : couplers) {
                auto saved_sites = p.cluster.sites;
                auto saved_edges = p.cluster.edges;
                remove_coupler(h);
                got = find_host();
                bool ok = got.x != INT32_MIN && wires_feasible();
                for (size_t j = 0; ok && j < k; ++j) {
                    ok = [&] {
                        chosen.erase(rotation_site[j]);
                        bool still = rotation_feasible(rotations[j], rotation_site[j]);
                        chosen.insert(rotation_site[j]);
                        return still;
                    }();
                }
                if (ok) {
                    break;
                }
                p.cluster.sites = std::move(saved_sites);
                p.cluster.edges = std::move(saved_edges);
                got = Site{INT32_MIN, 0, 0};
            }
        }
        if (got.x == INT32_MIN) {
            throw std::runtime_error("no square site can host the requested rotation");
        }
        rotation_site[k] = got;
        chosen.insert(got);
    }

    for (const auto& s : p.cluster.sites) {
        if (p.cluster.role(s) != Role::Output) {
            p.bases[s] = MeasurementBasis::pauli(BasisKind::X);
        }
    }

    // Final solves with the complete tilted set pinned to identity: the
    // per-wire z claims (for the angle adaptation) and then the rotations.
    std::vector<ParityExpression> lambda_z(n);
    for (int w = 0; w < n; ++w) {
        std::map<Site, Axis> pinned;
        pinned[p.input_site(w)] = Axis::Z;
        pinned[p.output_site(n - 1 - w)] = Axis::Z;
        auto solve = solve_correlation(p.cluster, pinned, body_flexible());
        if (!solve.found) {
            throw std::runtime_error("square z-claim has no correlation");
        }
        lambda_z[w] = solve.lambda;
    }
    for (size_t k = 0; k < rotations.size(); ++k) {
        const auto& r = rotations[k];
        Site q = rotation_site[k];
        std::map<Site, Axis> pinned;
        pinned[q] = Axis::Z;
        for (int reg : r.registers) {
            pinned[Site{2 * n, row_of(reg, n), 0}] = Axis::Z;
        }
        auto flexible = measured_x_sites();
        auto solve = solve_correlation(p.cluster, pinned, flexible);
        if (!solve.found) {
            throw std::runtime_error("rotation site lost its correlation");
        }
        ParityExpression sign = solve.lambda;
        sign.constant ^= 1;
        std::vector<int> pre;  // registers before the reversal
        for (int reg : r.registers) {
            sign ^= lambda_z[n - 1 - reg];
            pre.push_back(n - 1 - reg);
        }
        double base = 2 * r.phi;
        if (base < 0) {
            base = -base;
            sign.constant ^= 1;
        }
        p.bases[q] = MeasurementBasis::xy(base, sign, AngleSensitivity::z_rotation(pre, n));
    }
    install_derived_byproduct(p);
    p.check();
    return p;
}

}  // namespace

MeasurementPattern swap_n(int n) {
    auto p = square_gate(n, {});
    if (n >= 2) {
        p.net.present = true;
        p.net.s_qln = n;
        p.net.t_qln = 1;
        p.net.o_qln = 1 + n;
    }
    return p;
}

MeasurementPattern hamiltonian_zn(int n, double phi) {
    if (n < 2) {
        throw std::invalid_argument("the Hamiltonian simulator needs at least two wires");
    }
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) {
        all[i] = i;
    }
    SquareRotation rot{all, phi, Site{n - 1, n, 0}};
    auto p = square_gate(n, {rot});
    p.net.present = true;
    p.net.s_qln = n;
    p.net.t_qln = 2;
    p.net.o_qln = 2 + n;
    return p;
}

MeasurementPattern controlled_phase(double theta) {
    // U_CPG[theta] = e^{i theta/4} U_zz[-theta/2] U_z^(0)[theta/2]
    // U_z^(1)[theta/2], together with the two-wire reversal.
    std::vector<SquareRotation> rots = {
        {{0, 1}, -theta / 4, Site{1, 2, 0}},
        {{1}, theta / 4, Site{2, 1, 0}},
        {{0}, theta / 4, Site{2, 3, 0}},
    };
    auto p = square_gate(2, rots);
    // The canonical claim: reversal then the controlled phase.
    Circuit claims(2);
    claims.swapn(2).cphase(0, 1, theta);
    p.claims = claims;
    install_derived_byproduct(p);
    p.check();
    p.net.present = true;
    p.net.s_qln = 2;
    p.net.t_qln = 2;
    p.net.o_qln = 4;
    return p;
}

MeasurementPattern place_block(const MeasurementPattern& block, int top_wire, int total_wires,
                               int x0) {
    int k = block.num_wires();
    // Block register v (local row 2(k-v)-1) lands on global wire top_wire+v
    // (row 2(total-top_wire-v)-1): a rigid translation.
    int dy = 2 * (total_wires - top_wire - k);
    MeasurementPattern out;
    out.cluster = block.cluster.translated(x0, dy);
    for (const auto& [s, b] : block.bases) {
        MeasurementBasis nb = b;
        ParityExpression sign;
        sign.constant = b.sign.constant;
        for (const auto& d : b.sign.deps) {
            sign.deps.insert(d.shifted(x0, dy));
        }
        nb.sign = sign;
        out.bases[s.shifted(x0, dy)] = nb;
    }
    out.byp_x = block.byp_x;
    out.byp_z = block.byp_z;
    for (auto* table : {&out.byp_x, &out.byp_z}) {
        for (auto& e : *table) {
            ParityExpression ne;
            ne.constant = e.constant;
            for (const auto& d : e.deps) {
                ne.deps.insert(d.shifted(x0, dy));
            }
            e = ne;
        }
    }
    out.claims = block.claims;
    out.net = block.net;
    return out;
}

namespace {

int block_length(const MeasurementPattern& p) {
    int lo = INT32_MAX, hi = INT32_MIN;
    for (const auto& s : p.cluster.sites) {
        lo = std::min(lo, s.x);
        hi = std::max(hi, s.x);
    }
    return hi - lo;
}

struct Placement {
    MeasurementPattern block;
    int top_wire;
};

// One column: gate blocks on disjoint wire ranges, identity fill elsewhere,
// everything padded to the widest block.
MeasurementPattern build_column(int n_wires, std::vector<Placement> placements, int x0) {
    int width = 2;
    for (const auto& pl : placements) {
        width = std::max(width, block_length(pl.block));
    }
    std::vector<uint8_t> covered(n_wires, 0);
    for (auto& pl : placements) {
        if (block_length(pl.block) < width) {
            // Pad with plain wire to the column width.
            pl.block = compose_patterns(
                pl.block, [&] {
                    std::vector<MeasurementPattern> fills;
                    for (int v = 0; v < pl.block.num_wires(); ++v) {
                        fills.push_back(place_block(wire(width - block_length(pl.block)), v,
                                                    pl.block.num_wires(),
                                                    block_length(pl.block)));
                    }
                    auto f = stack_patterns(fills);
                    return f;
                }());
        }
        for (int v = 0; v < pl.block.num_wires(); ++v) {
            covered[pl.top_wire + v] = 1;
        }
    }
    for (int w = 0; w < n_wires; ++w) {
        if (!covered[w]) {
            placements.push_back({wire(width), w});
        }
    }
    std::sort(placements.begin(), placements.end(),
              [](const Placement& a, const Placement& b) { return a.top_wire < b.top_wire; });
    std::vector<MeasurementPattern> parts;
    for (const auto& pl : placements) {
        parts.push_back(place_block(pl.block, pl.top_wire, n_wires, x0));
    }
    return stack_patterns(parts);
}

MeasurementPattern compose_columns(std::vector<MeasurementPattern> columns) {
    MeasurementPattern acc = columns.front();
    for (size_t i = 1; i < columns.size(); ++i) {
        acc = compose_patterns(acc, columns[i]);
    }
    return acc;
}

}  // namespace

namespace {

// A two-wire square carrying exactly one pair rotation exp(-i phi Z Z),
// together with the inherent reversal.
MeasurementPattern pair_square(double phi) {
    return square_gate(2, {{{0, 1}, phi, Site{1, 2, 0}}});
}

}  // namespace

MeasurementPattern toffoli_phase(double phi) {
    // The first square hosts every rotation of the decomposition whose
    // registers sit on contiguous rows once the reversal is folded in; the
    // remaining control-target pair is reached by crossing the target past
    // the middle wire and pairing on adjacent rows. Contents after the
    // first square are reversed, the crossings restore the original order,
    // so the claim is the bare Toffoli phase gate.
    auto rev3 = [](const std::vector<int>& regs) {
        std::vector<int> out;
        for (int r : regs) {
            out.push_back(2 - r);
        }
        return out;
    };
    std::vector<SquareRotation> first = {
        {rev3({0, 1, 2}), phi / 8},
        {rev3({0, 1}), -phi / 8},
        {rev3({1, 2}), -phi / 8},
        {rev3({0}), phi / 8},
        {rev3({1}), phi / 8},
        {rev3({2}), phi / 8},
    };
    std::vector<MeasurementPattern> columns;
    columns.push_back(square_gate(3, first));
    // Contents now (t, c2, c1) top to bottom; plain swap squares do the
    // routing so no stray phases appear.
    columns.push_back(build_column(3, {{swap_n(2), 0}}, 0));              // (c2, t, c1)
    columns.push_back(build_column(3, {{pair_square(-phi / 8), 1}}, 0));  // (c2, c1, t)
    columns.push_back(build_column(3, {{swap_n(2), 0}}, 0));              // (c1, c2, t)
    auto p = compose_columns(columns);
    Circuit claims(3);
    claims.toffphase(0, 1, 2, phi);
    p.claims = claims;
    install_derived_byproduct(p);
    p.check();
    p.net.present = true;
    p.net.s_qln = 3;
    p.net.t_qln = 2;
    p.net.o_qln = 2 + 3;
    return p;
}

MeasurementPattern carry() {
    // Target on register 3 (bottom row), controls on 0..2. The first square
    // hosts the four- and three-register rotations, the target pair with the
    // control on register 2 and all singles; the target then crosses past
    // the remaining controls, pairing with each on adjacent rows, and the
    // final crossings restore the register order.
    auto rev4 = [](const std::vector<int>& regs) {
        std::vector<int> out;
        for (int r : regs) {
            out.push_back(3 - r);
        }
        return out;
    };
    const double e = M_PI / 8;  // the eighth-turn building block
    std::vector<SquareRotation> first = {
        {rev4({0, 1, 2, 3}), -e},  // exp(+i pi/8 ZZZZ)
        {rev4({0, 1, 2}), e},      // exp(-i pi/8 ZZZ) on the controls
        {rev4({2, 3}), e},         // exp(-i pi/8 Z_t Z_c)
        {rev4({3}), -2 * e},       // exp(+i pi/4 Z_t)
        {rev4({2}), -e},
        {rev4({1}), -e},
        {rev4({0}), -e},
    };
    std::vector<MeasurementPattern> columns;
    columns.push_back(square_gate(4, first));
    // Contents now (t, q2, q1, q0) top to bottom; plain swap squares route
    // the target past the remaining controls.
    columns.push_back(build_column(4, {{swap_n(2), 1}}, 0));       // (t, q1, q2, q0)
    columns.push_back(build_column(4, {{pair_square(e), 0}}, 0));  // (q1, t, q2, q0)
    columns.push_back(build_column(4, {{swap_n(2), 2}}, 0));       // (q1, t, q0, q2)
    columns.push_back(build_column(4, {{pair_square(e), 1}}, 0));  // (q1, q0, t, q2)
    columns.push_back(build_column(4, {{swap_n(2), 0}}, 0));       // (q0, q1, t, q2)
    columns.push_back(build_column(4, {{swap_n(2), 2}}, 0));       // (q0, q1, q2, t)
    auto p = compose_columns(columns);
    Circuit claims(4);
    claims.carry(0, 1, 2, 3);
    p.claims = claims;
    install_derived_byproduct(p);
    p.check();
    p.net.present = true;
    p.net.s_qln = 4;
    p.net.t_qln = 2;
    p.net.o_qln = 2 + 4;
    return p;
}

MeasurementPattern diagonal_square(int n,
                                   const std::vector<std::pair<std::vector<int>, double>>& rotations) {
    std::vector<SquareRotation> rots;
    for (const auto& [regs, phi] : rotations) {
        rots.push_back({regs, phi});
    }
    return square_gate(n, rots);
}

MeasurementPattern distant_cnot(int separation) {
    if (separation < 0) {
        throw std::invalid_argument("separation must be nonnegative");
    }
    if (separation == 0) {
        return cnot15();
    }
    const int n = separation + 2;
    std::vector<MeasurementPattern> columns;
    // Bubble the target upward with pi-phase crossings, CNOT, cross back.
    for (int step = 0; step < separation; ++step) {
        int pair_top = n - 2 - step;
        columns.push_back(build_column(n, {{controlled_phase(M_PI), pair_top}}, 0));
    }
    columns.push_back(build_column(n, {{cnot15(), 0}}, 0));
    for (int step = separation - 1; step >= 0; --step) {
        int pair_top = n - 2 - step;
        columns.push_back(build_column(n, {{controlled_phase(M_PI), pair_top}}, 0));
    }
    auto p = compose_columns(columns);
    p.net.present = true;
    p.net.s_qln = n;
    p.net.t_qln = p.claims.depth();
    p.net.o_qln = static_cast<double>(p.claims.gates.size()) + n;
    return p;
}

MeasurementPattern qft(int n) {
    if (n < 1) {
        throw std::invalid_argument("qft needs at least one wire");
    }
    if (n == 1) {
        auto p = hadamard();
        p.net.present = true;
        p.net.s_qln = 1;
        p.net.t_qln = 1;
        p.net.o_qln = 2;
        return p;
    }
    std::vector<MeasurementPattern> columns;
    for (int round = 0; round < n; ++round) {
        columns.push_back(build_column(n, {{hadamard(), 0}}, 0));
        for (int step = 0; step + round + 1 < n; ++step) {
            double theta = 2 * M_PI / std::pow(2.0, step + 2);
            columns.push_back(build_column(n, {{controlled_phase(theta), step}}, 0));
        }
    }
    auto composed = compose_columns(columns);
    auto p = elide_x_pairs(composed, true);
    p.net.present = true;
    p.net.s_qln = n;
    p.net.t_qln = 2.0 * n;
    p.net.o_qln = n * (n + 1) / 2.0 + n;
    return p;
}

MeasurementPattern adder(int n) {
    if (n < 2) {
        throw std::invalid_argument("the adder is built for n >= 2");
    }
    // Wire order (top to bottom): a0 b0 t1 b1 a1 t2 b2 a2 ... t_{n-1} b_{n-1} a_{n-1}.
    const int wires = 2 + 3 * (n - 1);
    auto a_wire = [&](int i) { return i == 0 ? 0 : 2 + 3 * (i - 1) + 2; };
    auto b_wire = [&](int i) { return i == 0 ? 1 : 2 + 3 * (i - 1) + 1; };
    auto t_wire = [&](int i) { return 2 + 3 * (i - 1); };  // i >= 1

    std::vector<MeasurementPattern> columns;
    // Carry chain: t_1 = a0 b0, then t_{i+1} = maj(a_i, b_i, t_i).
    columns.push_back(build_column(wires, {{hadamard(), t_wire(1)}}, 0));
    columns.push_back(
        build_column(wires, {{toffoli_phase(M_PI), a_wire(0)}}, 0));  // wires a0,b0,t1
    columns.push_back(build_column(wires, {{hadamard(), t_wire(1)}}, 0));
    for (int i = 1; i + 1 <= n - 1; ++i) {
        // Block on wires t_i, b_i, a_i, t_{i+1} with the target at the bottom.
        columns.push_back(build_column(wires, {{hadamard(), t_wire(i + 1)}}, 0));
        columns.push_back(build_column(wires, {{carry(), t_wire(i)}}, 0));
        columns.push_back(build_column(wires, {{hadamard(), t_wire(i + 1)}}, 0));
    }
    // Sums: b_i ^= a_i (and the carry below the first bit).
    columns.push_back(build_column(wires, {{cnot15(), a_wire(0)}}, 0));  // a0 -> b0
    for (int i = 1; i <= n - 1; ++i) {
        columns.push_back(build_column(wires, {{cnot15(), t_wire(i)}}, 0));       // t_i -> b_i
        columns.push_back(build_column(wires, {{cnot15(false), b_wire(i)}}, 0));  // a_i -> b_i
    }
    auto p = compose_columns(columns);
    p.net.present = true;
    p.net.s_qln = wires;
    p.net.t_qln = p.claims.depth();
    p.net.o_qln = static_cast<double>(p.claims.gates.size()) + wires;
    return p;
}

MeasurementPattern compile_network(const Circuit& network) {
    const int n = network.num_qubits;
    // Greedy layering; a gate block occupies the whole wire interval it
    // spans on the cluster.
    auto span = [](const CircuitGate& g) {
        int lo = g.qubits.front(), hi = g.qubits.front();
        for (int q : g.qubits) {
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
        return std::pair{lo, hi};
    };
    std::vector<std::vector<CircuitGate>> layers;
    std::vector<int> busy_until(n, 0);
    for (const auto& g : network.gates) {
        if (g.kind != CircuitGate::Kind::CNOT && g.kind != CircuitGate::Kind::H &&
            g.kind != CircuitGate::Kind::S) {
            throw std::invalid_argument("compile_network handles H, S and CNOT gates");
        }
        auto [lo, hi] = span(g);
        int level = 0;
        for (int q = lo; q <= hi; ++q) {
            level = std::max(level, busy_until[q]);
        }
        for (int q = lo; q <= hi; ++q) {
            busy_until[q] = level + 1;
        }
        if (static_cast<size_t>(level) >= layers.size()) {
            layers.resize(level + 1);
        }
        layers[level].push_back(g);
    }

    std::vector<MeasurementPattern> columns;
    for (const auto& layer : layers) {
        std::vector<Placement> placements;
        for (const auto& g : layer) {
            switch (g.kind) {
                case CircuitGate::Kind::H:
                    placements.push_back({hadamard(), g.qubits[0]});
                    break;
                case CircuitGate::Kind::S:
                    placements.push_back({phase_s(), g.qubits[0]});
                    break;
                case CircuitGate::Kind::CNOT: {
                    int c = g.qubits[0], t = g.qubits[1];
                    if (t == c + 1) {
                        placements.push_back({cnot15(true), c});
                    } else if (c == t + 1) {
                        placements.push_back({cnot15(false), t});
                    } else {
                        placements.push_back(
                            {distant_cnot(std::abs(t - c) - 1), std::min(c, t)});
                        if (t < c) {
                            throw std::invalid_argument(
                                "distant CNOT with the control below is not in the catalog");
                        }
                    }
                    break;
                }
                default:
                    break;
            }
        }
        columns.push_back(build_column(n, std::move(placements), 0));
    }
    if (columns.empty()) {
        std::vector<Placement> none;
        columns.push_back(build_column(n, std::move(none), 0));
    }
    return compose_columns(columns);
}

}  // namespace oneway::gates
