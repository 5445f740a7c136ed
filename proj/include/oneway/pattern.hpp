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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oneway/circuit.hpp"
#include "oneway/cluster.hpp"
#include "oneway/pauli.hpp"

namespace oneway {

// constant xor (xor of the outcome bits of the dep sites).
struct ParityExpression {
    int constant = 0;
    std::set<Site> deps;

    int eval(const std::map<Site, int>& outcomes) const;
    ParityExpression& operator^=(const ParityExpression& other);
    // Sets a removed site's outcome to the given constant bit.
    void substitute(Site s, int bit);
    bool operator==(const ParityExpression& other) const = default;
    std::string str() const;

    static ParityExpression constant_bit(int bit) { return {bit & 1, {}}; }
    static ParityExpression of(std::initializer_list<Site> sites, int bit = 0);
};

ParityExpression operator^(ParityExpression a, const ParityExpression& b);

enum class BasisKind : uint8_t { X, Y, Z, XYPlane };

const char* basis_kind_name(BasisKind k);

// How an incoming byproduct operator at the owning pattern's input cut
// modifies this measurement's angle sign (XYPlane bases only): the sign
// flips by xor_w (xcoef_w * x_w + zcoef_w * z_w). An x-type rotation on wire
// w flips with z_w, a z-type rotation over a wire set flips with the xor of
// the x bits over that set.
struct AngleSensitivity {
    std::vector<uint8_t> xcoef, zcoef;

    bool trivial() const;
    static AngleSensitivity none() { return {}; }
    static AngleSensitivity x_rotation(int wire, int num_wires);
    static AngleSensitivity z_rotation(const std::vector<int>& wires, int num_wires);
    bool operator==(const AngleSensitivity&) const = default;
};

struct MeasurementBasis {
    BasisKind kind = BasisKind::X;
    double base_angle = 0;    // XYPlane only; stored pre-negation
    ParityExpression sign;    // effective angle = (-1)^{sign} * base_angle
    ParityExpression post;    // reserved for lambda-style corrections
    AngleSensitivity sensitivity;

    bool is_pauli() const { return kind != BasisKind::XYPlane; }
    double effective_angle(const std::map<Site, int>& outcomes) const;

    static MeasurementBasis pauli(BasisKind k);
    static MeasurementBasis xy(double base_angle, ParityExpression sign,
                               AngleSensitivity sens = {});
    bool operator==(const MeasurementBasis& other) const;
};

struct NetworkMeta {
    bool present = false;
    double s_qln = 0, t_qln = 0, o_qln = 0;
};

// A measurement pattern: the cluster, per-site bases with adaptive sign
// dependencies, the accumulated byproduct operator per logical wire (output
// side, as parity expressions over outcome bits), and the claimed reference
// circuit used for verification.
struct MeasurementPattern {
    Cluster cluster;
    std::map<Site, MeasurementBasis> bases;
    // Per logical wire: exponents of sigma_x / sigma_z in the byproduct that
    // multiplies the claimed circuit from the left (output side).
    std::vector<ParityExpression> byp_x, byp_z;
    Circuit claims;
    NetworkMeta net;

    int num_wires() const { return cluster.num_wires(); }
    Site input_site(int wire) const { return cluster.wires.at(wire).first; }
    Site output_site(int wire) const { return cluster.wires.at(wire).second; }
    // Output position (top-to-bottom output column index) where wire exits.
    std::vector<int> wire_permutation() const;

    std::vector<Site> measured_sites() const;  // C_I + C_M, site order
    std::vector<Site> output_sites() const;    // C_O, site order
    std::vector<Site> pauli_round_sites() const;
    std::vector<Site> tilted_sites() const;

    // fc(p): sites whose measurement basis depends on p's outcome.
    std::map<Site, std::set<Site>> forward_cones() const;

    // Structural invariants: bases cover C_I and C_M and nothing else, Pauli
    // sites carry no dependencies and sit in no forward cone, dependencies
    // are acyclic and point at measured sites.
    void check() const;
};

// Patching two patterns together: g2 is translated so that its input sites
// coincide with g1's output sites (wire by wire), roles are recomputed, g2's
// adaptive angles inherit g1's byproduct and the byproduct expressions are
// propagated through g2's claimed circuit and combined.
MeasurementPattern compose_patterns(const MeasurementPattern& g1, const MeasurementPattern& g2);

// Stacks patterns on disjoint wire rows into one layer (no gluing).
MeasurementPattern stack_patterns(const std::vector<MeasurementPattern>& parts);

// Removes one adjacent pair of X-measured wire qubits (a, b), joining a's
// other neighbor to b's other neighbors; byproduct expressions are rewritten
// with the removed outcomes set to zero. Throws if the pair is not eligible.
// allow_junction permits b to have extra neighbors (the construction used by
// the Fourier-transform layout); plain wires need none.
MeasurementPattern elide_x_pair(const MeasurementPattern& p, Site a, Site b,
                                bool allow_junction = false);

// Applies elide_x_pair greedily until no eligible pair remains.
MeasurementPattern elide_x_pairs(const MeasurementPattern& p, bool allow_junction = false);

// The decomposition induced by a composition step (for validation).
Decomposition composition_decomposition(const MeasurementPattern& g1,
                                        const MeasurementPattern& g2,
                                        const MeasurementPattern& combined);

// A measurement order respecting the adaptive dependencies: Pauli-basis
// sites first (site order), then adaptive sites layer by layer.
std::vector<Site> topological_measurement_order(const MeasurementPattern& p);

// A dependency-respecting order that keeps the dense window narrow: always
// the left-most site whose dependencies are already measured.
std::vector<Site> window_measurement_order(const MeasurementPattern& p);

// Recognizes x-y-plane angles that coincide with a Pauli eigenbasis: the
// basis B(phi) at 0, pi/2, pi, -pi/2 is the X / Y eigenbasis up to an
// outcome relabeling (flip).
struct PauliAngle {
    bool is_pauli = false;
    Axis axis = Axis::X;
    int flip = 0;
};
PauliAngle classify_angle(double phi, double tol = 1e-12);

}  // namespace oneway
