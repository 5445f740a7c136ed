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

#include "oneway/runtime.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "oneway/dense.hpp"

namespace oneway {

Schedule build_schedule(const MeasurementPattern& p) {
    p.check();
    Schedule s;
    // Pauli-basis sites form Q_0; adaptive sites go to the earliest round
    // after all of their dependencies.
    std::vector<Site> pending;
    for (const auto& [site, basis] : p.bases) {
        if (basis.is_pauli()) {
            s.round_of[site] = 0;
        } else {
            pending.push_back(site);
        }
    }
    bool progress = true;
    while (!pending.empty() && progress) {
        progress = false;
        std::vector<Site> later;
        for (const auto& site : pending) {
            int level = 0;
            bool ready = true;
            for (const auto& d : p.bases.at(site).sign.deps) {
                auto it = s.round_of.find(d);
                if (it == s.round_of.end()) {
                    ready = false;
                    break;
                }
                level = std::max(level, it->second);
            }
            if (ready) {
                s.round_of[site] = std::max(1, level + 1);
                progress = true;
            } else {
                later.push_back(site);
            }
        }
        pending = std::move(later);
    }
    if (!pending.empty()) {
        throw std::invalid_argument("dependency cycle in the measurement pattern");
    }
    int tmax = 0;
    for (const auto& [site, r] : s.round_of) {
        (void)site;
        tmax = std::max(tmax, r);
    }
    s.rounds.assign(tmax + 1, {});
    for (const auto& [site, r] : s.round_of) {
        s.rounds[r].push_back(site);
    }
    for (auto& round : s.rounds) {
        std::sort(round.begin(), round.end());
    }
    return s;
}

std::string Schedule::str() const {
    std::ostringstream os;
    for (size_t t = 0; t < rounds.size(); ++t) {
        os << "Q" << t << ":";
        for (const auto& site : rounds[t]) {
            os << ' ' << site.label();
        }
        os << '\n';
    }
    return os.str();
}

bool ResourceReport::pass() const {
    for (const auto& c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

std::string ResourceReport::str() const {
    std::ostringstream os;
    os << "resources S=" << s << " O=" << o << " T=" << t << '\n';
    for (const auto& c : checks) {
        os << "bound " << c.name << ": " << c.lhs << " <= " << c.rhs << ' '
           << (c.pass ? "pass" : "FAIL") << '\n';
    }
    return os.str();
}

ResourceReport resource_report(const MeasurementPattern& p) {
    ResourceReport r;
    r.s = static_cast<int>(p.cluster.sites.size());
    r.o = static_cast<int>(p.measured_sites().size());
    r.t = build_schedule(p).num_rounds();
    auto add = [&r](const std::string& name, double lhs, double rhs) {
        r.checks.push_back({name, lhs, rhs, lhs <= rhs + 1e-9});
    };
    add("O<=S", r.o, r.s);
    if (p.net.present) {
        add("T<=3Tqln", r.t, 3 * p.net.t_qln);
        add("S<=24Sqln^2Tqln", r.s, 24 * p.net.s_qln * p.net.s_qln * p.net.t_qln);
        add("S<=24OqlnSqln", r.s, 24 * p.net.o_qln * p.net.s_qln);
        add("O<=24OqlnSqln", r.o, 24 * p.net.o_qln * p.net.s_qln);
    }
    return r;
}

namespace {

struct OutcomeSource {
    const std::map<Site, int>* forced;
    std::mt19937_64 rng;

    std::optional<int> forced_bit(Site s) const {
        auto it = forced->find(s);
        if (it == forced->end()) {
            return std::nullopt;
        }
        return it->second & 1;
    }
};

QubitInit input_init(char c) {
    switch (c) {
        case '+':
            return QubitInit::plus();
        case '0':
            return QubitInit::zero();
        case '1':
            return QubitInit::one();
    }
    throw std::invalid_argument("input characters must be '+', '0' or '1'");
}

std::string effective_input(const MeasurementPattern& p, const ExecuteOptions& o) {
    if (o.input.empty()) {
        return std::string(p.num_wires(), '+');
    }
    if (static_cast<int>(o.input.size()) != p.num_wires()) {
        throw std::invalid_argument("input length must match the wire count");
    }
    return o.input;
}

// Finalizes the record: info flow from the byproduct spec, readout
// reinterpretation, resources.
void finish_record(const MeasurementPattern& p, RunRecord& rec) {
    const int n = p.num_wires();
    rec.info_flow = InfoFlowVector(n);
    std::vector<int> raw(n);
    for (int w = 0; w < n; ++w) {
        rec.info_flow.x[w] = static_cast<uint8_t>(p.byp_x[w].eval(rec.outcomes));
        rec.info_flow.z[w] = static_cast<uint8_t>(p.byp_z[w].eval(rec.outcomes));
        raw[w] = rec.raw_readout.at(p.output_site(w));
    }
    rec.results = reinterpret_readout(raw, rec.info_flow);
    rec.resources = resource_report(p);
    rec.rounds = rec.resources.t;
}

RunRecord execute_dense(const MeasurementPattern& p, const ExecuteOptions& options,
                        int max_window) {
    RunRecord rec;
    rec.seed = options.seed;
    OutcomeSource src{&options.forced, std::mt19937_64(options.seed)};
    std::string input = effective_input(p, options);

    WindowedExecutor ex(p.cluster.sites, p.cluster.edges, max_window);
    {
        std::vector<Site> in_sites;
        std::vector<cd> amps = {cd(1, 0)};
        for (int w = 0; w < p.num_wires(); ++w) {
            in_sites.push_back(p.input_site(w));
            QubitInit init = input_init(input[w]);
            std::vector<cd> next(amps.size() * 2);
            for (size_t i = 0; i < amps.size(); ++i) {
                next[2 * i] = amps[i] * init.a0;
                next[2 * i + 1] = amps[i] * init.a1;
            }
            amps.swap(next);
        }
        ex.load_joint_input(in_sites, amps);
    }
    auto order = window_measurement_order(p);
    for (const auto& site : order) {
        const auto& basis = p.bases.at(site);
        int outcome;
        if (basis.is_pauli()) {
            Axis ax = basis.kind == BasisKind::X   ? Axis::X
                      : basis.kind == BasisKind::Y ? Axis::Y
                                                   : Axis::Z;
            outcome = ex.measure_axis(site, ax, src.forced_bit(site), &src.rng);
        } else {
            double phi = basis.effective_angle(rec.outcomes);
            outcome = ex.measure_xy(site, phi, src.forced_bit(site), &src.rng);
        }
        rec.outcomes[site] = outcome;
    }
    for (int w = 0; w < p.num_wires(); ++w) {
        Site out = p.output_site(w);
        int s = ex.measure_z(out, src.forced_bit(out), &src.rng);
        rec.raw_readout[out] = s;
    }
    rec.peak_window = ex.peak_active();
    finish_record(p, rec);
    return rec;
}

// Initial tableau of Scheme 1: inputs prepared per the input string, body
// and outputs in |+>, then the entangling operation over every edge.
StabilizerTableau entangled_tableau(const MeasurementPattern& p, const std::string& input) {
    std::vector<Site> sites(p.cluster.sites.begin(), p.cluster.sites.end());
    std::vector<PauliProduct> gens;
    std::map<Site, char> in_char;
    for (int w = 0; w < p.num_wires(); ++w) {
        in_char[p.input_site(w)] = input[w];
    }
    for (const auto& s : sites) {
        auto it = in_char.find(s);
        char c = it == in_char.end() ? '+' : it->second;
        switch (c) {
            case '+':
                gens.push_back(PauliProduct::single(s, Axis::X, p.cluster.kappa_at(s) ? 2 : 0));
                break;
            case '0':
                gens.push_back(PauliProduct::single(s, Axis::Z));
                break;
            case '1':
                gens.push_back(PauliProduct::single(s, Axis::Z, 2));
                break;
        }
    }
    auto t = StabilizerTableau::from_generators(sites, gens);
    for (const auto& [a, b] : p.cluster.edges) {
        t.apply(CliffordGate::cz(a, b));
    }
    return t;
}

// The basis actually measured for an adaptive site whose base angle sits on
// a Pauli axis: the eigenbasis is outcome-independent, only the outcome
// label flips with the sign parity.
struct EffectivePauli {
    bool usable = false;
    Axis axis = Axis::X;
    int flip_const = 0;            // flip when the sign parity is this value
    ParityExpression sign;
};

EffectivePauli effective_pauli_basis(const MeasurementBasis& b) {
    EffectivePauli out;
    if (b.is_pauli()) {
        out.usable = true;
        out.axis = b.kind == BasisKind::X ? Axis::X : b.kind == BasisKind::Y ? Axis::Y : Axis::Z;
        out.sign = ParityExpression{};
        return out;
    }
    auto plus = classify_angle(b.base_angle);
    auto minus = classify_angle(-b.base_angle);
    if (!plus.is_pauli || !minus.is_pauli || plus.axis != minus.axis) {
        return out;
    }
    out.usable = true;
    out.axis = plus.axis;
    out.sign = b.sign;
    // raw outcome flips by plus.flip when sign evaluates 0, minus.flip when 1.
    out.flip_const = plus.flip;
    // If the two labels differ, the flip depends on the parity itself.
    if (plus.flip != minus.flip) {
        out.sign.constant ^= 0;  // handled below via xor with parity
        out.usable = true;
    }
    return out;
}

RunRecord execute_auto(const MeasurementPattern& p, const ExecuteOptions& options,
                       bool allow_dense) {
    RunRecord rec;
    rec.seed = options.seed;
    OutcomeSource src{&options.forced, std::mt19937_64(options.seed)};
    std::string input = effective_input(p, options);
    auto t = entangled_tableau(p, input);

    // Phase A: every site whose measured eigenbasis is outcome-independent
    // runs on the tableau. Raw outcomes of adaptive Pauli-angle sites are
    // relabeled once their dependencies are known.
    std::vector<Site> deferred;
    std::map<Site, std::pair<int, EffectivePauli>> raw_bits;
    for (const auto& s : p.measured_sites()) {
        const auto& basis = p.bases.at(s);
        auto ep = effective_pauli_basis(basis);
        if (!ep.usable) {
            deferred.push_back(s);
            continue;
        }
        std::optional<int> forced = src.forced_bit(s);
        // A forced bit constrains the logical outcome; for adaptive labels
        // the raw bit needs the parity, known only later, so sample raw and
        // fix the logical value afterwards unless the basis is plain Pauli.
        if (basis.is_pauli()) {
            int outcome = t.measure(s, ep.axis, forced, &src.rng);
            t.discard(s);
            rec.outcomes[s] = outcome;
        } else {
            int raw;
            if (forced.has_value()) {
                // Logical outcome forced; raw = logical ^ flip(parity), and
                // the parity depends only on other sites, so defer the
                // translation: measure raw forced once the parity is known.
                // Dependencies are measured in earlier rounds, but within
                // phase A ordering is by site; resolve lazily instead.
                raw = -1;
            } else {
                raw = t.measure(s, ep.axis, std::nullopt, &src.rng);
                t.discard(s);
            }
            raw_bits[s] = {raw, ep};
        }
    }
    // Resolve adaptive Pauli-angle outcomes in dependency order.
    {
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& [s, entry] : raw_bits) {
                if (rec.outcomes.count(s)) {
                    continue;
                }
                const auto& basis = p.bases.at(s);
                bool ready = true;
                for (const auto& d : basis.sign.deps) {
                    if (!rec.outcomes.count(d)) {
                        ready = false;
                        break;
                    }
                }
                if (!ready) {
                    continue;
                }
                double phi = basis.effective_angle(rec.outcomes);
                auto cls = classify_angle(phi);
                if (entry.first < 0) {
                    // Forced logical outcome: translate to a raw bit now.
                    int logical = *src.forced_bit(s);
                    int raw = logical ^ cls.flip;
                    t.measure(s, cls.axis, raw, nullptr);
                    t.discard(s);
                    rec.outcomes[s] = logical;
                } else {
                    rec.outcomes[s] = entry.first ^ cls.flip;
                }
                progress = true;
            }
        }
        for (const auto& [s, entry] : raw_bits) {
            (void)entry;
            if (!rec.outcomes.count(s)) {
                throw std::logic_error("unresolved adaptive outcome at " + s.pretty());
            }
        }
    }

    if (deferred.empty()) {
        for (int w = 0; w < p.num_wires(); ++w) {
            Site out = p.output_site(w);
            int s = t.measure(out, Axis::Z, src.forced_bit(out), &src.rng);
            t.discard(out);
            rec.raw_readout[out] = s;
        }
        rec.peak_window = 0;
        finish_record(p, rec);
        return rec;
    }
    if (!allow_dense) {
        throw std::runtime_error("pattern needs tilted measurements; the tableau engine "
                                 "cannot run it");
    }

    // Phase B: hand off the residual state densely and measure the
    // genuinely tilted sites in dependency order.
    std::vector<Site> remaining = t.sites();
    auto amps = tableau_dense_state(t, remaining);
    DenseState st;
    st.attach_joint(remaining, amps);
    rec.peak_window = st.num_active();

    std::set<Site> left(deferred.begin(), deferred.end());
    while (!left.empty()) {
        Site pick{};
        bool found = false;
        for (const auto& s : left) {
            bool ready = true;
            for (const auto& d : p.bases.at(s).sign.deps) {
                if (!rec.outcomes.count(d)) {
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
            throw std::logic_error("deadlock among tilted measurements");
        }
        double phi = p.bases.at(pick).effective_angle(rec.outcomes);
        int outcome = st.measure_xy(pick, phi, src.forced_bit(pick), &src.rng);
        rec.outcomes[pick] = outcome;
        left.erase(pick);
    }
    for (int w = 0; w < p.num_wires(); ++w) {
        Site out = p.output_site(w);
        int s = st.measure_z(out, src.forced_bit(out), &src.rng);
        rec.raw_readout[out] = s;
    }
    finish_record(p, rec);
    return rec;
}

}  // namespace

RunRecord execute(const MeasurementPattern& p, const ExecuteOptions& options) {
    p.check();
    switch (options.engine) {
        case Engine::Tableau:
            return execute_auto(p, options, false);
        case Engine::Dense:
            return execute_dense(p, options, options.max_window);
        case Engine::Auto:
            return execute_auto(p, options, true);
    }
    throw std::invalid_argument("bad engine");
}

RunRecord execute_split(const MeasurementPattern& p, int max_window,
                        const ExecuteOptions& options) {
    p.check();
    if (max_window <= 0) {
        throw std::invalid_argument("the window bound must be positive");
    }
    ExecuteOptions o = options;
    o.max_window = max_window;
    return execute_dense(p, o, max_window);
}

ReduceResult reduce_to_graph(const MeasurementPattern& p, const ExecuteOptions& options) {
    p.check();
    ReduceResult out;
    OutcomeSource src{&options.forced, std::mt19937_64(options.seed)};
    auto t = entangled_tableau(p, effective_input(p, options));
    auto schedule = build_schedule(p);
    for (const auto& s : schedule.rounds[0]) {
        const auto& basis = p.bases.at(s);
        Axis ax = basis.kind == BasisKind::X   ? Axis::X
                  : basis.kind == BasisKind::Y ? Axis::Y
                                               : Axis::Z;
        out.outcomes[s] = t.measure(s, ax, src.forced_bit(s), &src.rng);
        t.discard(s);
    }
    out.graph = t.extract_graph_state();
    return out;
}

std::string RunRecord::str() const {
    std::ostringstream os;
    for (const auto& [site, s] : outcomes) {
        os << "outcome " << site.x << ' ' << site.y << ' ' << site.z << ' ' << s << '\n';
    }
    for (const auto& [site, s] : raw_readout) {
        os << "outcome " << site.x << ' ' << site.y << ' ' << site.z << ' ' << s << '\n';
    }
    for (int w = 0; w < info_flow.num_qubits(); ++w) {
        os << "iflow wire=" << w << " x=" << int(info_flow.x[w]) << " z=" << int(info_flow.z[w])
           << '\n';
    }
    for (size_t w = 0; w < results.size(); ++w) {
        os << "result " << w << ' ' << results[w] << '\n';
    }
    os << "resources S=" << resources.s << " O=" << resources.o << " T=" << resources.t << '\n';
    return os.str();
}

}  // namespace oneway
