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
#include <set>
#include <vector>

#include "oneway/pauli.hpp"

namespace oneway {

using cd = std::complex<double>;

struct QubitInit {
    // |+>, |0>, |1> or an arbitrary normalized amplitude pair.
    static QubitInit plus() { return {cd(1 / std::sqrt(2.0), 0), cd(1 / std::sqrt(2.0), 0)}; }
    static QubitInit zero() { return {cd(1, 0), cd(0, 0)}; }
    static QubitInit one() { return {cd(0, 0), cd(1, 0)}; }
    static QubitInit pair(cd a, cd b) { return {a, b}; }
    cd a0, a1;
};

// Dense amplitude simulation over an active window of named sites. The
// newest site is appended last and owns the least significant index bit;
// measured sites are contracted immediately.
class DenseState {
  public:
    DenseState() { amps_ = {cd(1, 0)}; }

    int num_active() const { return static_cast<int>(active_.size()); }
    const std::vector<Site>& active_sites() const { return active_; }
    bool is_active(Site s) const;
    const std::vector<cd>& amplitudes() const { return amps_; }

    void attach(Site s, const QubitInit& init);
    // Tensor-extends by several sites at once carrying a joint state
    // (amplitude index bit of sites[i] is bit (k-1-i) within the block).
    void attach_joint(const std::vector<Site>& sites, const std::vector<cd>& amps);

    void apply_cz(Site a, Site b);
    void apply_1q(Site s, const cd m00, const cd m01, const cd m10, const cd m11);
    void apply_pauli(const PauliProduct& p);
    void apply_circuit_gate_h(Site s);
    void apply_circuit_gate_s(Site s);

    // Measurement in the x-y-plane basis {(|0>+e^{i phi}|1>)/sqrt2,
    // (|0>-e^{i phi}|1>)/sqrt2}; outcome 0 means the first state. The site
    // leaves the active set. Forcing an outcome of probability < 1e-12 throws.
    int measure_xy(Site s, double phi, std::optional<int> forced, std::mt19937_64* rng);
    // Computational-basis measurement.
    int measure_z(Site s, std::optional<int> forced, std::mt19937_64* rng);
    int measure_axis(Site s, Axis axis, std::optional<int> forced, std::mt19937_64* rng);

    double norm() const;
    void renormalize();

    // Amplitudes re-ordered so site order[i] owns bit (k-1-i).
    std::vector<cd> amplitudes_in_order(const std::vector<Site>& order) const;

    // Debug dump: "site-order: ..." header then index/real/imag lines.
    std::string dump() const;

  private:
    std::vector<Site> active_;
    std::vector<cd> amps_;

    int bit_of(Site s) const;  // bit position within the index
    int pos_of(Site s) const;  // position in active_
    void contract(Site s, int kept_value, double keep_prob, cd amp_weight_0, cd amp_weight_1);
};

// |<a|b>| with b's amplitudes permuted into a's site order.
double fidelity_abs(const DenseState& a, const DenseState& b);

// Overlap of two raw amplitude vectors.
cd inner_product(const std::vector<cd>& a, const std::vector<cd>& b);
// True when a and b agree up to a single global phase, within tol (2-norm).
bool states_equal_up_to_phase(const std::vector<cd>& a, const std::vector<cd>& b, double tol);

// Applies a signed Pauli product to raw amplitudes ordered by `order`.
void apply_pauli_dense(std::vector<cd>& amps, const std::vector<Site>& order,
                       const PauliProduct& p);

// The executor of the split-execution scheme: entangles just in time and
// measures eagerly so only the closed neighborhood of progress is dense.
class WindowedExecutor {
  public:
    WindowedExecutor(std::set<Site> sites, std::set<std::pair<Site, Site>> edges, int max_window);

    // Inputs carry a joint state; every other site is created in |+>.
    void load_joint_input(const std::vector<Site>& input_sites, const std::vector<cd>& amps);

    // Attaches the target's closed neighborhood as required, then measures.
    int measure_xy(Site s, double phi, std::optional<int> forced, std::mt19937_64* rng);
    int measure_z(Site s, std::optional<int> forced, std::mt19937_64* rng);
    int measure_axis(Site s, Axis axis, std::optional<int> forced, std::mt19937_64* rng);

    // Ensures a site is attached and its edges to attached sites applied.
    void ensure_attached(Site s);

    bool measured(Site s) const { return measured_.count(s) != 0; }
    int peak_active() const { return peak_; }
    DenseState& state() { return state_; }
    const DenseState& state() const { return state_; }

  private:
    std::set<Site> sites_;
    std::map<Site, std::vector<Site>> adj_;
    std::set<std::pair<Site, Site>> edges_applied_;
    std::set<Site> attached_;
    std::set<Site> measured_;
    DenseState state_;
    int max_window_;
    int peak_ = 0;

    void prepare_for_measurement(Site s);
    void note_window();
};

}  // namespace oneway
