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

#include <complex>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oneway/pauli.hpp"

namespace oneway {

enum class Eigenvalue { Plus, Minus, Indeterminate };

// A graph, kappa bits and per-vertex local Cliffords such that applying the
// local Cliffords to the graph state reproduces the described state.
// Local Cliffords are words over {H, S} applied left to right ("I" = none).
struct GraphStateDescription {
    std::vector<Site> vertices;
    std::vector<std::pair<Site, Site>> edges;
    std::map<Site, int> kappa;
    std::map<Site, std::string> local_cliffords;
};

// Exact simulation of stabilizer states: n commuting, independent signed
// Pauli generators (binary X|Z matrix plus sign bits).
class StabilizerTableau {
  public:
    StabilizerTableau() = default;

    // Tableau whose a-th generator is (-1)^{kappa_a} X_a (x) prod_{b in nbgh(a)} Z_b.
    static StabilizerTableau from_graph(const std::vector<Site>& vertices,
                                        const std::vector<std::pair<Site, Site>>& edges,
                                        const std::map<Site, int>& kappa);

    // Generators must be independent, commuting, Hermitian and supported on `sites`.
    static StabilizerTableau from_generators(const std::vector<Site>& sites,
                                             const std::vector<PauliProduct>& generators);

    int num_qubits() const { return static_cast<int>(sites_.size()); }
    const std::vector<Site>& sites() const { return sites_; }
    bool has_site(Site s) const { return index_.count(s) != 0; }

    PauliProduct generator(int row) const;
    std::vector<PauliProduct> generators() const;

    // Conjugates every generator; Clifford gates only.
    void apply(const CliffordGate& g);
    // Conjugation by a Hermitian Pauli product: flips signs of anticommuting rows.
    void apply_pauli(const PauliProduct& p);
    // Applies a local-Clifford word ("HS", "I", ...) at one site, left to right.
    void apply_local_word(Site q, const std::string& word);

    // Single-qubit Pauli measurement. Deterministic observables leave the
    // state unchanged and ignore the RNG; otherwise the outcome is sampled
    // (or forced) and the anticommuting-generator replacement is applied.
    // Forcing an outcome that contradicts a deterministic one throws.
    int measure(Site s, Axis axis, std::optional<int> forced, std::mt19937_64* rng);

    // Sign if +-p is in the stabilizer group (by symplectic reduction).
    Eigenvalue expected_eigenvalue(const PauliProduct& p) const;

    // Removes a site that is in a product eigenstate (measured earlier).
    void discard(Site s);

    // Canonical generating set: row-reduced with column order by site label.
    std::vector<PauliProduct> canonical_generators() const;
    // True iff both tableaus describe the same stabilizer group.
    bool same_group(const StabilizerTableau& other) const;

    // Residual graph state after the Pauli round, with local Cliffords drawn
    // from <H, S>; canonical under site-label pivoting. Verified internally
    // by tableau equality after conjugation.
    GraphStateDescription extract_graph_state() const;

    // Invariant checks (commutation, independence); throws on violation.
    void check() const;

    std::string str() const;

  private:
    struct Row {
        std::vector<uint8_t> x, z;
        int sign = 0;  // (-1)^sign
    };

    std::vector<Site> sites_;
    std::map<Site, int> index_;
    std::vector<Row> rows_;

    int col(Site s) const;
    void row_multiply(Row& dst, const Row& src) const;  // dst *= src
    PauliProduct row_to_pauli(const Row& r) const;
    Row pauli_to_row(const PauliProduct& p) const;
    bool row_anticommutes_at(const Row& r, int c, int ox, int oz) const;
    static std::vector<Row> reduced_rows(std::vector<Row> rows, size_t cols);

    friend std::vector<std::complex<double>> tableau_dense_state(const StabilizerTableau&,
                                                                 const std::vector<Site>&);
};

// Exact dense rendering of the stabilizer state in the given site order
// (amplitude index bit of site_order[i] is bit (k-1-i)).
std::vector<std::complex<double>> tableau_dense_state(const StabilizerTableau& t,
                                                      const std::vector<Site>& site_order);

// Canonical shortest word over {H,S} realizing the same single-qubit
// Clifford (mod phase) as `word`.
std::string canonical_local_word(const std::string& word);
// Word whose action is the inverse (mod phase).
std::string invert_local_word(const std::string& word);

}  // namespace oneway
