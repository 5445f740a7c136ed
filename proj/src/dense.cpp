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

#include "oneway/dense.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oneway {

namespace {
constexpr double kForceTol = 1e-12;
constexpr int kMaxDenseQubits = 26;
}  // namespace

bool DenseState::is_active(Site s) const {
    return std::find(active_.begin(), active_.end(), s) != active_.end();
}

int DenseState::pos_of(Site s) const {
    for (size_t i = 0; i < active_.size(); ++i) {
        if (active_[i] == s) {
            return static_cast<int>(i);
        }
    }
    throw std::invalid_argument("site " + s.pretty() + " is not active");
}

int DenseState::bit_of(Site s) const {
    return static_cast<int>(active_.size()) - 1 - pos_of(s);
}

void DenseState::attach(Site s, const QubitInit& init) {
    if (is_active(s)) {
        throw std::invalid_argument("site " + s.pretty() + " already active");
    }
    if (num_active() + 1 > kMaxDenseQubits) {
        throw std::runtime_error("dense window exceeded " + std::to_string(kMaxDenseQubits) +
                                 " qubits");
    }
    std::vector<cd> next(amps_.size() * 2);
    for (size_t i = 0; i < amps_.size(); ++i) {
        next[2 * i] = amps_[i] * init.a0;
        next[2 * i + 1] = amps_[i] * init.a1;
    }
    amps_.swap(next);
    active_.push_back(s);
}

void DenseState::attach_joint(const std::vector<Site>& sites, const std::vector<cd>& amps) {
    if (amps.size() != (size_t{1} << sites.size())) {
        throw std::invalid_argument("joint amplitude count mismatch");
    }
    for (const auto& s : sites) {
        if (is_active(s)) {
            throw std::invalid_argument("site " + s.pretty() + " already active");
        }
    }
    if (num_active() + static_cast<int>(sites.size()) > kMaxDenseQubits) {
        throw std::runtime_error("dense window exceeded " + std::to_string(kMaxDenseQubits) +
                                 " qubits");
    }
    std::vector<cd> next(amps_.size() * amps.size());
    for (size_t i = 0; i < amps_.size(); ++i) {
        for (size_t j = 0; j < amps.size(); ++j) {
            next[i * amps.size() + j] = amps_[i] * amps[j];
        }
    }
    amps_.swap(next);
    active_.insert(active_.end(), sites.begin(), sites.end());
}

void DenseState::apply_cz(Site a, Site b) {
    int ba = bit_of(a), bb = bit_of(b);
    const size_t ma = size_t{1} << ba, mb = size_t{1} << bb;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if ((i & ma) && (i & mb)) {
            amps_[i] = -amps_[i];
        }
    }
}

void DenseState::apply_1q(Site s, const cd m00, const cd m01, const cd m10, const cd m11) {
    const size_t m = size_t{1} << bit_of(s);
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & m) {
            continue;
        }
        cd a0 = amps_[i], a1 = amps_[i | m];
        amps_[i] = m00 * a0 + m01 * a1;
        amps_[i | m] = m10 * a0 + m11 * a1;
    }
}

void DenseState::apply_circuit_gate_h(Site s) {
    const double r = 1 / std::sqrt(2.0);
    apply_1q(s, r, r, r, -r);
}

void DenseState::apply_circuit_gate_s(Site s) {
    // U_z[pi/2] = exp(-i pi sigma_z / 4), phases fixed mod global phase.
    apply_1q(s, cd(1, 0), 0, 0, cd(0, 1));
}

void DenseState::apply_pauli(const PauliProduct& p) {
    static const cd IPOW[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    for (const auto& [site, axis] : p.factors()) {
        switch (axis) {
            case Axis::X:
                apply_1q(site, 0, 1, 1, 0);
                break;
            case Axis::Y:
                apply_1q(site, 0, cd(0, -1), cd(0, 1), 0);
                break;
            case Axis::Z:
                apply_1q(site, 1, 0, 0, -1);
                break;
        }
    }
    cd ph = IPOW[p.phase_exp()];
    if (ph != cd(1, 0)) {
        for (auto& a : amps_) {
            a *= ph;
        }
    }
}

void DenseState::contract(Site s, int kept_value, double keep_prob, cd w0, cd w1) {
    const int b = bit_of(s);
    const size_t m = size_t{1} << b;
    std::vector<cd> next(amps_.size() / 2);
    const double inv = 1.0 / std::sqrt(keep_prob);
    // Index layout: high | bit b | low. Collapse the chosen component.
    for (size_t i = 0; i < amps_.size(); ++i) {
        size_t low = i & (m - 1);
        size_t high = (i >> (b + 1)) << b;
        size_t j = high | low;
        if (((i >> b) & 1) == 0) {
            next[j] += w0 * amps_[i] * inv;
        } else {
            next[j] += w1 * amps_[i] * inv;
        }
    }
    (void)kept_value;
    amps_.swap(next);
    active_.erase(active_.begin() + pos_of(s));
}

int DenseState::measure_xy(Site s, double phi, std::optional<int> forced, std::mt19937_64* rng) {
    const int b = bit_of(s);
    const size_t m = size_t{1} << b;
    // P(s=0) = || (<0| + e^{-i phi}<1|)/sqrt2 |psi> ||^2
    const cd e = std::exp(cd(0, -phi));
    double p0 = 0;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & m) {
            continue;
        }
        p0 += std::norm((amps_[i] + e * amps_[i | m]) / std::sqrt(2.0));
    }
    int outcome;
    if (forced.has_value()) {
        outcome = *forced & 1;
        double p = outcome == 0 ? p0 : 1.0 - p0;
        if (p < kForceTol) {
            throw ForcedOutcomeImpossible("forced outcome has probability below 1e-12");
        }
    } else if (p0 >= 1.0 - kForceTol) {
        outcome = 0;
    } else if (p0 <= kForceTol) {
        outcome = 1;
    } else {
        if (rng == nullptr) {
            throw std::invalid_argument("random outcome requested without an RNG");
        }
        std::uniform_real_distribution<double> u(0.0, 1.0);
        outcome = u(*rng) < p0 ? 0 : 1;
    }
    const double sgn = outcome == 0 ? 1.0 : -1.0;
    const double prob = outcome == 0 ? p0 : 1.0 - p0;
    // <s_phi| component: (a0 + (-1)^s e^{-i phi} a1)/sqrt2
    contract(s, outcome, prob, cd(1 / std::sqrt(2.0), 0), sgn * e / std::sqrt(2.0));
    return outcome;
}

int DenseState::measure_z(Site s, std::optional<int> forced, std::mt19937_64* rng) {
    const int b = bit_of(s);
    const size_t m = size_t{1} << b;
    double p0 = 0;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (!(i & m)) {
            p0 += std::norm(amps_[i]);
        }
    }
    int outcome;
    if (forced.has_value()) {
        outcome = *forced & 1;
        double p = outcome == 0 ? p0 : 1.0 - p0;
        if (p < kForceTol) {
            throw ForcedOutcomeImpossible("forced outcome has probability below 1e-12");
        }
    } else if (p0 >= 1.0 - kForceTol) {
        outcome = 0;
    } else if (p0 <= kForceTol) {
        outcome = 1;
    } else {
        if (rng == nullptr) {
            throw std::invalid_argument("random outcome requested without an RNG");
        }
        std::uniform_real_distribution<double> u(0.0, 1.0);
        outcome = u(*rng) < p0 ? 0 : 1;
    }
    const double prob = outcome == 0 ? p0 : 1.0 - p0;
    if (outcome == 0) {
        contract(s, outcome, prob, 1, 0);
    } else {
        contract(s, outcome, prob, 0, 1);
    }
    return outcome;
}

int DenseState::measure_axis(Site s, Axis axis, std::optional<int> forced, std::mt19937_64* rng) {
    switch (axis) {
        case Axis::X:
            return measure_xy(s, 0.0, forced, rng);
        case Axis::Y:
            return measure_xy(s, M_PI / 2, forced, rng);
        case Axis::Z:
            return measure_z(s, forced, rng);
    }
    throw std::invalid_argument("bad axis");
}

double DenseState::norm() const {
    double n2 = 0;
    for (const auto& a : amps_) {
        n2 += std::norm(a);
    }
    return std::sqrt(n2);
}

void DenseState::renormalize() {
    double n = norm();
    if (n <= 0) {
        throw std::logic_error("renormalize on zero state");
    }
    for (auto& a : amps_) {
        a /= n;
    }
}

std::vector<cd> DenseState::amplitudes_in_order(const std::vector<Site>& order) const {
    if (order.size() != active_.size()) {
        throw std::invalid_argument("site order size mismatch");
    }
    const size_t n = order.size();
    std::vector<int> src_bit(n);
    for (size_t i = 0; i < n; ++i) {
        src_bit[i] = bit_of(order[i]);
    }
    std::vector<cd> out(amps_.size());
    for (size_t i = 0; i < amps_.size(); ++i) {
        size_t j = 0;
        for (size_t k = 0; k < n; ++k) {
            if ((i >> src_bit[k]) & 1) {
                j |= size_t{1} << (n - 1 - k);
            }
        }
        out[j] = amps_[i];
    }
    return out;
}

std::string DenseState::dump() const {
    std::ostringstream os;
    os << "site-order:";
    for (const auto& s : active_) {
        os << ' ' << s.label();
    }
    os << '\n';
    for (size_t i = 0; i < amps_.size(); ++i) {
        os << i << ' ' << amps_[i].real() << ' ' << amps_[i].imag() << '\n';
    }
    return os.str();
}

cd inner_product(const std::vector<cd>& a, const std::vector<cd>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    cd acc(0, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity_abs(const DenseState& a, const DenseState& b) {
    auto bb = b.amplitudes_in_order(a.active_sites());
    return std::abs(inner_product(a.amplitudes(), bb));
}

bool states_equal_up_to_phase(const std::vector<cd>& a, const std::vector<cd>& b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    cd ip = inner_product(a, b);
    double phase_mag = std::abs(ip);
    if (phase_mag < 1e-15) {
        return false;
    }
    cd phase = ip / phase_mag;
    double err2 = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        err2 += std::norm(b[i] - phase * a[i]);
    }
    return std::sqrt(err2) <= tol;
}

void apply_pauli_dense(std::vector<cd>& amps, const std::vector<Site>& order,
                       const PauliProduct& p) {
    static const cd IPOW[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    const size_t n = order.size();
    size_t flip = 0;
    std::vector<int> zmask_bits;
    int phase0 = p.phase_exp();
    for (const auto& [site, axis] : p.factors()) {
        size_t k = 0;
        while (k < n && order[k] != site) {
            ++k;
        }
        if (k == n) {
            throw std::invalid_argument("pauli acts outside the register");
        }
        int bit = static_cast<int>(n - 1 - k);
        if (axis != Axis::Z) {
            flip |= size_t{1} << bit;
        }
        if (axis != Axis::X) {
            zmask_bits.push_back(bit);
        }
        if (axis == Axis::Y) {
            phase0 += 1;  // Y = i X Z
        }
    }
    std::vector<cd> out(amps.size());
    for (size_t i = 0; i < amps.size(); ++i) {
        int phase = phase0;
        for (int zb : zmask_bits) {
            if ((i >> zb) & 1) {
                phase += 2;
            }
        }
        out[i ^ flip] = IPOW[((phase % 4) + 4) % 4] * amps[i];
    }
    amps.swap(out);
}

WindowedExecutor::WindowedExecutor(std::set<Site> sites, std::set<std::pair<Site, Site>> edges,
                                   int max_window)
    : sites_(std::move(sites)), max_window_(max_window) {
    for (const auto& [a, b] : edges) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
}

void WindowedExecutor::note_window() {
    peak_ = std::max(peak_, state_.num_active());
    if (max_window_ > 0 && state_.num_active() > max_window_) {
        throw std::runtime_error("active window exceeded the requested bound of " +
                                 std::to_string(max_window_));
    }
}

void WindowedExecutor::load_joint_input(const std::vector<Site>& input_sites,
                                        const std::vector<cd>& amps) {
    state_.attach_joint(input_sites, amps);
    for (const auto& s : input_sites) {
        attached_.insert(s);
    }
    // Edges among the inputs apply immediately.
    for (const auto& s : input_sites) {
        for (const auto& r : adj_[s]) {
            if (attached_.count(r)) {
                auto key = std::minmax(s, r);
                if (edges_applied_.insert({key.first, key.second}).second) {
                    state_.apply_cz(s, r);
                }
            }
        }
    }
    note_window();
}

void WindowedExecutor::ensure_attached(Site s) {
    if (!sites_.count(s)) {
        throw std::invalid_argument("site " + s.pretty() + " is not in the cluster");
    }
    if (measured_.count(s)) {
        throw std::runtime_error("site " + s.pretty() + " already measured");
    }
    if (attached_.count(s)) {
        return;
    }
    state_.attach(s, QubitInit::plus());
    attached_.insert(s);
    for (const auto& r : adj_[s]) {
        if (attached_.count(r) && !measured_.count(r)) {
            auto key = std::minmax(s, r);
            if (edges_applied_.insert({key.first, key.second}).second) {
                state_.apply_cz(s, r);
            }
        }
    }
    note_window();
}

void WindowedExecutor::prepare_for_measurement(Site s) {
    ensure_attached(s);
    for (const auto& r : adj_[s]) {
        if (!measured_.count(r)) {
            ensure_attached(r);
        }
    }
    // All edges incident to s are now applied: edges to measured neighbors
    // were applied before those neighbors were measured, the rest at attach.
}

int WindowedExecutor::measure_xy(Site s, double phi, std::optional<int> forced,
                                 std::mt19937_64* rng) {
    prepare_for_measurement(s);
    int outcome = state_.measure_xy(s, phi, forced, rng);
    measured_.insert(s);
    return outcome;
}

int WindowedExecutor::measure_z(Site s, std::optional<int> forced, std::mt19937_64* rng) {
    prepare_for_measurement(s);
    int outcome = state_.measure_z(s, forced, rng);
    measured_.insert(s);
    return outcome;
}

int WindowedExecutor::measure_axis(Site s, Axis axis, std::optional<int> forced,
                                   std::mt19937_64* rng) {
    prepare_for_measurement(s);
    int outcome = state_.measure_axis(s, axis, forced, rng);
    measured_.insert(s);
    return outcome;
}

}  // namespace oneway
