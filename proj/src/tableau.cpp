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

#include "oneway/tableau.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>

namespace oneway {

namespace {

// Exponent of i picked up when multiplying single-qubit Paulis (x1,z1)*(x2,z2)
// in the convention Y = (1,1).
int phase_g(int x1, int z1, int x2, int z2) {
    if (x1 == 0 && z1 == 0) {
        return 0;
    }
    if (x1 == 1 && z1 == 1) {
        return z2 - x2;
    }
    if (x1 == 1) {
        return z2 * (2 * x2 - 1);
    }
    return x2 * (1 - 2 * z2);
}

struct ObsBits {
    int x, z;
};

ObsBits obs_bits(Axis a) {
    switch (a) {
        case Axis::X:
            return {1, 0};
        case Axis::Y:
            return {1, 1};
        case Axis::Z:
            return {0, 1};
    }
    return {0, 0};
}

}  // namespace

int StabilizerTableau::col(Site s) const {
    auto it = index_.find(s);
    if (it == index_.end()) {
        throw std::invalid_argument("site " + s.pretty() + " not in register");
    }
    return it->second;
}

void StabilizerTableau::row_multiply(Row& dst, const Row& src) const {
    int phase = 2 * dst.sign + 2 * src.sign;
    const size_t n = dst.x.size();
    for (size_t j = 0; j < n; ++j) {
        phase += phase_g(dst.x[j], dst.z[j], src.x[j], src.z[j]);
        dst.x[j] ^= src.x[j];
        dst.z[j] ^= src.z[j];
    }
    phase = ((phase % 4) + 4) % 4;
    if (phase % 2 != 0) {
        throw std::logic_error("row product left the Hermitian sector");
    }
    dst.sign = phase / 2;
}

PauliProduct StabilizerTableau::row_to_pauli(const Row& r) const {
    PauliProduct p;
    for (size_t j = 0; j < sites_.size(); ++j) {
        if (r.x[j] || r.z[j]) {
            Axis a = r.x[j] ? (r.z[j] ? Axis::Y : Axis::X) : Axis::Z;
            p = multiply(p, PauliProduct::single(sites_[j], a));
        }
    }
    return p.with_phase_exp(2 * r.sign);
}

StabilizerTableau::Row StabilizerTableau::pauli_to_row(const PauliProduct& p) const {
    Row r;
    r.x.assign(sites_.size(), 0);
    r.z.assign(sites_.size(), 0);
    r.sign = p.sign_bit();
    for (const auto& [site, axis] : p.factors()) {
        int c = col(site);
        ObsBits b = obs_bits(axis);
        r.x[c] = static_cast<uint8_t>(b.x);
        r.z[c] = static_cast<uint8_t>(b.z);
    }
    return r;
}

bool StabilizerTableau::row_anticommutes_at(const Row& r, int c, int ox, int oz) const {
    return ((r.x[c] & oz) ^ (r.z[c] & ox)) != 0;
}

StabilizerTableau StabilizerTableau::from_graph(const std::vector<Site>& vertices,
                                                const std::vector<std::pair<Site, Site>>& edges,
                                                const std::map<Site, int>& kappa) {
    StabilizerTableau t;
    t.sites_ = vertices;
    std::sort(t.sites_.begin(), t.sites_.end());
    for (size_t i = 0; i < t.sites_.size(); ++i) {
        if (!t.index_.emplace(t.sites_[i], static_cast<int>(i)).second) {
            throw std::invalid_argument("duplicate vertex");
        }
    }
    const size_t n = t.sites_.size();
    t.rows_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        t.rows_[i].x.assign(n, 0);
        t.rows_[i].z.assign(n, 0);
        t.rows_[i].x[i] = 1;
        auto it = kappa.find(t.sites_[i]);
        t.rows_[i].sign = (it != kappa.end() && (it->second & 1)) ? 1 : 0;
    }
    for (const auto& [a, b] : edges) {
        if (a == b) {
            throw std::invalid_argument("self-loop edge");
        }
        int ca = t.col(a), cb = t.col(b);
        t.rows_[ca].z[cb] = 1;
        t.rows_[cb].z[ca] = 1;
    }
    return t;
}

StabilizerTableau StabilizerTableau::from_generators(const std::vector<Site>& sites,
                                                     const std::vector<PauliProduct>& generators) {
    StabilizerTableau t;
    t.sites_ = sites;
    std::sort(t.sites_.begin(), t.sites_.end());
    for (size_t i = 0; i < t.sites_.size(); ++i) {
        t.index_.emplace(t.sites_[i], static_cast<int>(i));
    }
    if (generators.size() != t.sites_.size()) {
        throw std::invalid_argument("need exactly one generator per qubit");
    }
    for (const auto& g : generators) {
        t.rows_.push_back(t.pauli_to_row(g));
    }
    t.check();
    return t;
}

PauliProduct StabilizerTableau::generator(int row) const {
    return row_to_pauli(rows_.at(row));
}

std::vector<PauliProduct> StabilizerTableau::generators() const {
    std::vector<PauliProduct> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        out.push_back(row_to_pauli(r));
    }
    return out;
}

void StabilizerTableau::apply(const CliffordGate& g) {
    if (g.kind() == GateKind::Identity) {
        return;
    }
    int a = col(g.a());
    int b = g.two_qubit() ? col(g.b()) : a;
    if (g.two_qubit() && a == b) {
        throw std::invalid_argument("two-qubit gate needs distinct sites");
    }
    for (auto& r : rows_) {
        switch (g.kind()) {
            case GateKind::H:
                r.sign ^= r.x[a] & r.z[a];
                std::swap(r.x[a], r.z[a]);
                break;
            case GateKind::S:
                r.sign ^= r.x[a] & r.z[a];
                r.z[a] ^= r.x[a];
                break;
            case GateKind::X:
                r.sign ^= r.z[a];
                break;
            case GateKind::Y:
                r.sign ^= r.x[a] ^ r.z[a];
                break;
            case GateKind::Z:
                r.sign ^= r.x[a];
                break;
            case GateKind::CZ:
                r.sign ^= r.x[a] & r.x[b] & (r.z[a] ^ r.z[b]);
                r.z[a] ^= r.x[b];
                r.z[b] ^= r.x[a];
                break;
            case GateKind::CNOT:
                r.sign ^= r.x[a] & r.z[b] & (r.x[b] ^ r.z[a] ^ 1);
                r.x[b] ^= r.x[a];
                r.z[a] ^= r.z[b];
                break;
            case GateKind::Identity:
                break;
        }
    }
}

void StabilizerTableau::apply_pauli(const PauliProduct& p) {
    Row pr = pauli_to_row(p);
    for (auto& r : rows_) {
        int anti = 0;
        for (size_t j = 0; j < sites_.size(); ++j) {
            anti ^= (r.x[j] & pr.z[j]) ^ (r.z[j] & pr.x[j]);
        }
        r.sign ^= anti;
    }
}

void StabilizerTableau::apply_local_word(Site q, const std::string& word) {
    for (char c : word) {
        if (c == 'H') {
            apply(CliffordGate::h(q));
        } else if (c == 'S') {
            apply(CliffordGate::s(q));
        } else if (c == 'I') {
            // no-op
        } else {
            throw std::invalid_argument("bad local-Clifford letter: " + std::string(1, c));
        }
    }
}

int StabilizerTableau::measure(Site s, Axis axis, std::optional<int> forced, std::mt19937_64* rng) {
    int c = col(s);
    ObsBits ob = obs_bits(axis);
    int pivot = -1;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (row_anticommutes_at(rows_[i], c, ob.x, ob.z)) {
            pivot = static_cast<int>(i);
            break;
        }
    }
    if (pivot >= 0) {
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (static_cast<int>(i) != pivot && row_anticommutes_at(rows_[i], c, ob.x, ob.z)) {
                row_multiply(rows_[i], rows_[pivot]);
            }
        }
        int outcome;
        if (forced.has_value()) {
            outcome = *forced & 1;
        } else {
            if (rng == nullptr) {
                throw std::invalid_argument("random outcome requested without an RNG");
            }
            outcome = static_cast<int>((*rng)() & 1u);
        }
        Row& pr = rows_[pivot];
        std::fill(pr.x.begin(), pr.x.end(), 0);
        std::fill(pr.z.begin(), pr.z.end(), 0);
        pr.x[c] = static_cast<uint8_t>(ob.x);
        pr.z[c] = static_cast<uint8_t>(ob.z);
        pr.sign = outcome;
        return outcome;
    }

    // Deterministic: the observable (up to sign) lies in the group. Express
    // it as a product of generators and canonicalize that product into a
    // single row so the site can be discarded afterwards.
    std::vector<Row> work = rows_;
    std::vector<std::vector<int>> combo(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
        combo[i] = {static_cast<int>(i)};
    }
    const size_t n = sites_.size();
    size_t rank = 0;
    for (size_t jcol = 0; jcol < 2 * n && rank < work.size(); ++jcol) {
        size_t j = jcol / 2;
        bool use_x = (jcol % 2) == 0;
        size_t found = work.size();
        for (size_t i = rank; i < work.size(); ++i) {
            if ((use_x ? work[i].x[j] : work[i].z[j]) != 0) {
                found = i;
                break;
            }
        }
        if (found == work.size()) {
            continue;
        }
        std::swap(work[rank], work[found]);
        std::swap(combo[rank], combo[found]);
        for (size_t i = 0; i < work.size(); ++i) {
            if (i != rank && (use_x ? work[i].x[j] : work[i].z[j]) != 0) {
                row_multiply(work[i], work[rank]);
                combo[i].insert(combo[i].end(), combo[rank].begin(), combo[rank].end());
            }
        }
        ++rank;
    }
    Row target;
    target.x.assign(n, 0);
    target.z.assign(n, 0);
    target.x[c] = static_cast<uint8_t>(ob.x);
    target.z[c] = static_cast<uint8_t>(ob.z);
    target.sign = 0;
    std::vector<int> members;
    for (size_t i = 0; i < rank; ++i) {
        // Leading column of work[i].
        size_t lead = 2 * n;
        for (size_t jcol = 0; jcol < 2 * n; ++jcol) {
            size_t j = jcol / 2;
            if ((jcol % 2 == 0 ? work[i].x[j] : work[i].z[j]) != 0) {
                lead = jcol;
                break;
            }
        }
        if (lead == 2 * n) {
            continue;
        }
        size_t j = lead / 2;
        int bit = (lead % 2 == 0) ? target.x[j] : target.z[j];
        if (bit) {
            row_multiply(target, work[i]);
            members.insert(members.end(), combo[i].begin(), combo[i].end());
        }
    }
    bool residual = false;
    for (size_t j = 0; j < n; ++j) {
        residual = residual || target.x[j] || target.z[j];
    }
    if (residual) {
        throw std::logic_error("measurement neither deterministic nor random");
    }
    // target now equals obs * (product of members); product = (-1)^{sign'} obs
    // with sign' = target.sign (obs had sign 0; multiplication is involutive
    // on the bit part). The outcome equals that relative sign.
    std::map<int, int> count;
    for (int m : members) {
        count[m] ^= 1;
    }
    std::vector<int> subset;
    for (const auto& [m, parity] : count) {
        if (parity) {
            subset.push_back(m);
        }
    }
    Row prod;
    prod.x.assign(n, 0);
    prod.z.assign(n, 0);
    prod.sign = 0;
    for (int m : subset) {
        row_multiply(prod, rows_[m]);
    }
    int outcome = prod.sign;  // prod == (-1)^{outcome} * obs
    if (forced.has_value() && (*forced & 1) != outcome) {
        throw ForcedOutcomeImpossible("forced outcome contradicts a deterministic measurement");
    }
    if (!subset.empty()) {
        int dst = subset.front();
        for (size_t k = 1; k < subset.size(); ++k) {
            row_multiply(rows_[dst], rows_[subset[k]]);
        }
    }
    return outcome;
}

Eigenvalue StabilizerTableau::expected_eigenvalue(const PauliProduct& p) const {
    if (!p.is_hermitian()) {
        throw std::invalid_argument("expected_eigenvalue needs a Hermitian product");
    }
    Row target = pauli_to_row(p);
    // Group members commute with every generator.
    for (const auto& r : rows_) {
        int anti = 0;
        for (size_t j = 0; j < sites_.size(); ++j) {
            anti ^= (r.x[j] & target.z[j]) ^ (r.z[j] & target.x[j]);
        }
        if (anti) {
            return Eigenvalue::Indeterminate;
        }
    }
    std::vector<Row> work = rows_;
    const size_t n = sites_.size();
    size_t rank = 0;
    for (size_t jcol = 0; jcol < 2 * n && rank < work.size(); ++jcol) {
        size_t j = jcol / 2;
        bool use_x = (jcol % 2) == 0;
        size_t found = work.size();
        for (size_t i = rank; i < work.size(); ++i) {
            if ((use_x ? work[i].x[j] : work[i].z[j]) != 0) {
                found = i;
                break;
            }
        }
        if (found == work.size()) {
            continue;
        }
        std::swap(work[rank], work[found]);
        for (size_t i = 0; i < work.size(); ++i) {
            if (i != rank && (use_x ? work[i].x[j] : work[i].z[j]) != 0) {
                row_multiply(work[i], work[rank]);
            }
        }
        if ((use_x ? target.x[j] : target.z[j]) != 0) {
            row_multiply(target, work[rank]);
        }
        ++rank;
    }
    for (size_t j = 0; j < n; ++j) {
        if (target.x[j] || target.z[j]) {
            return Eigenvalue::Indeterminate;
        }
    }
    // target = p * (combo); combo = (-1)^{target.sign - p.sign ...}: the
    // accumulated sign already folds p's own sign in.
    return target.sign == 0 ? Eigenvalue::Plus : Eigenvalue::Minus;
}

void StabilizerTableau::discard(Site s) {
    int c = col(s);
    std::vector<int> touching;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].x[c] || rows_[i].z[c]) {
            touching.push_back(static_cast<int>(i));
        }
    }
    if (touching.empty()) {
        throw std::logic_error("discard: no generator fixes site " + s.pretty());
    }
    // Prefer a pivot already supported on {c} alone.
    int pivot = touching.front();
    for (int i : touching) {
        bool pure = true;
        for (size_t j = 0; j < sites_.size(); ++j) {
            if (j != static_cast<size_t>(c) && (rows_[i].x[j] || rows_[i].z[j])) {
                pure = false;
                break;
            }
        }
        if (pure) {
            pivot = i;
            break;
        }
    }
    for (int i : touching) {
        if (i == pivot) {
            continue;
        }
        if (rows_[i].x[c] != rows_[pivot].x[c] || rows_[i].z[c] != rows_[pivot].z[c]) {
            throw std::logic_error("discard: site " + s.pretty() + " is still entangled");
        }
        row_multiply(rows_[i], rows_[pivot]);
    }
    for (size_t j = 0; j < sites_.size(); ++j) {
        if (j != static_cast<size_t>(c) && (rows_[pivot].x[j] || rows_[pivot].z[j])) {
            throw std::logic_error("discard: site " + s.pretty() + " is still entangled");
        }
    }
    rows_.erase(rows_.begin() + pivot);
    for (auto& r : rows_) {
        r.x.erase(r.x.begin() + c);
        r.z.erase(r.z.begin() + c);
    }
    sites_.erase(sites_.begin() + c);
    index_.clear();
    for (size_t i = 0; i < sites_.size(); ++i) {
        index_.emplace(sites_[i], static_cast<int>(i));
    }
}

std::vector<StabilizerTableau::Row> StabilizerTableau::reduced_rows(std::vector<Row> rows,
                                                                    size_t cols) {
    // cols = number of qubits; column order x0,z0,x1,z1,...
    StabilizerTableau scratch;  // for row_multiply only
    size_t rank = 0;
    for (size_t jcol = 0; jcol < 2 * cols && rank < rows.size(); ++jcol) {
        size_t j = jcol / 2;
        bool use_x = (jcol % 2) == 0;
        size_t found = rows.size();
        for (size_t i = rank; i < rows.size(); ++i) {
            if ((use_x ? rows[i].x[j] : rows[i].z[j]) != 0) {
                found = i;
                break;
            }
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[found]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i != rank && (use_x ? rows[i].x[j] : rows[i].z[j]) != 0) {
                scratch.row_multiply(rows[i], rows[rank]);
            }
        }
        ++rank;
    }
    return rows;
}

std::vector<PauliProduct> StabilizerTableau::canonical_generators() const {
    std::vector<Row> rows = reduced_rows(rows_, sites_.size());
    std::vector<PauliProduct> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        out.push_back(row_to_pauli(r));
    }
    return out;
}

bool StabilizerTableau::same_group(const StabilizerTableau& other) const {
    if (sites_ != other.sites_) {
        return false;
    }
    return canonical_generators() == other.canonical_generators();
}

void StabilizerTableau::check() const {
    const size_t n = sites_.size();
    if (rows_.size() != n) {
        throw std::logic_error("tableau is not square");
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = i + 1; k < n; ++k) {
            int anti = 0;
            for (size_t j = 0; j < n; ++j) {
                anti ^= (rows_[i].x[j] & rows_[k].z[j]) ^ (rows_[i].z[j] & rows_[k].x[j]);
            }
            if (anti) {
                throw std::logic_error("generators do not commute");
            }
        }
    }
    std::vector<Row> red = reduced_rows(rows_, n);
    for (const auto& r : red) {
        bool zero = true;
        for (size_t j = 0; j < n; ++j) {
            zero = zero && !r.x[j] && !r.z[j];
        }
        if (zero) {
            throw std::logic_error("generators are not independent");
        }
    }
}

std::string StabilizerTableau::str() const {
    std::ostringstream os;
    for (const auto& r : rows_) {
        os << row_to_pauli(r).str() << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Local-Clifford words.

namespace {

struct AxisImage {
    Axis axis;
    int sign;  // 0 => +, 1 => -
};

struct LocalAction {
    AxisImage x, z;

    bool operator<(const LocalAction& o) const {
        auto key = [](const LocalAction& a) {
            return std::tuple(static_cast<int>(a.x.axis), a.x.sign, static_cast<int>(a.z.axis),
                              a.z.sign);
        };
        return key(*this) < key(o);
    }
};

AxisImage letter_image(char letter, Axis a) {
    if (letter == 'H') {
        switch (a) {
            case Axis::X:
                return {Axis::Z, 0};
            case Axis::Y:
                return {Axis::Y, 1};
            case Axis::Z:
                return {Axis::X, 0};
        }
    }
    if (letter == 'S') {
        switch (a) {
            case Axis::X:
                return {Axis::Y, 0};
            case Axis::Y:
                return {Axis::X, 1};
            case Axis::Z:
                return {Axis::Z, 0};
        }
    }
    throw std::invalid_argument("bad local-Clifford letter");
}

LocalAction apply_letter(const LocalAction& act, char letter) {
    LocalAction out = act;
    AxisImage ix = letter_image(letter, act.x.axis);
    out.x = {ix.axis, act.x.sign ^ ix.sign};
    AxisImage iz = letter_image(letter, act.z.axis);
    out.z = {iz.axis, act.z.sign ^ iz.sign};
    return out;
}

LocalAction word_action(const std::string& word) {
    LocalAction act{{Axis::X, 0}, {Axis::Z, 0}};
    for (char c : word) {
        if (c == 'I') {
            continue;
        }
        act = apply_letter(act, c);
    }
    return act;
}

const std::map<LocalAction, std::string>& canonical_table() {
    static const std::map<LocalAction, std::string> table = [] {
        std::map<LocalAction, std::string> t;
        std::vector<std::string> frontier = {""};
        t.emplace(word_action(""), "");
        while (t.size() < 24 && !frontier.empty()) {
            std::vector<std::string> next;
            for (const auto& w : frontier) {
                for (char c : {'H', 'S'}) {
                    std::string w2 = w + c;
                    LocalAction a = word_action(w2);
                    if (t.emplace(a, w2).second) {
                        next.push_back(w2);
                    }
                }
            }
            frontier = std::move(next);
        }
        return t;
    }();
    return table;
}

}  // namespace

std::string canonical_local_word(const std::string& word) {
    const auto& t = canonical_table();
    std::string w = t.at(word_action(word));
    return w.empty() ? "I" : w;
}

std::string invert_local_word(const std::string& word) {
    std::string inv;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == 'H') {
            inv += 'H';
        } else if (*it == 'S') {
            inv += "SSS";
        } else if (*it == 'I') {
            // skip
        } else {
            throw std::invalid_argument("bad local-Clifford letter");
        }
    }
    return canonical_local_word(inv);
}

GraphStateDescription StabilizerTableau::extract_graph_state() const {
    StabilizerTableau t = *this;
    const size_t n = t.sites_.size();
    std::map<Site, std::string> applied;

    auto eliminate_x = [&]() {
        size_t rank = 0;
        for (size_t j = 0; j < n && rank < n; ++j) {
            size_t found = n;
            for (size_t i = rank; i < n; ++i) {
                if (t.rows_[i].x[j]) {
                    found = i;
                    break;
                }
            }
            if (found == n) {
                continue;
            }
            std::swap(t.rows_[rank], t.rows_[found]);
            for (size_t i = 0; i < n; ++i) {
                if (i != rank && t.rows_[i].x[j]) {
                    t.row_multiply(t.rows_[i], t.rows_[rank]);
                }
            }
            ++rank;
        }
        return rank;
    };

    size_t rank = eliminate_x();
    if (rank < n) {
        // Columns without an X pivot get a Hadamard; this always completes
        // the rank because the tableau has full symplectic rank.
        std::vector<uint8_t> has_pivot(n, 0);
        for (size_t r = 0; r < rank; ++r) {
            for (size_t j = 0; j < n; ++j) {
                if (t.rows_[r].x[j]) {
                    has_pivot[j] = 1;
                    break;
                }
            }
        }
        for (size_t j = 0; j < n; ++j) {
            if (!has_pivot[j]) {
                t.apply(CliffordGate::h(t.sites_[j]));
                applied[t.sites_[j]] += 'H';
            }
        }
        rank = eliminate_x();
        if (rank < n) {
            throw std::logic_error("graph extraction failed to reach full X rank");
        }
    }
    // X block is the identity now (full reduction in pivot-column order).
    for (size_t j = 0; j < n; ++j) {
        if (t.rows_[j].z[j]) {
            t.apply(CliffordGate::s(t.sites_[j]));
            applied[t.sites_[j]] += 'S';
        }
    }

    GraphStateDescription g;
    g.vertices = t.sites_;
    for (size_t i = 0; i < n; ++i) {
        if (!t.rows_[i].x[i]) {
            throw std::logic_error("graph extraction lost its X pivots");
        }
        for (size_t j = i + 1; j < n; ++j) {
            if (t.rows_[i].z[j] != t.rows_[j].z[i]) {
                throw std::logic_error("graph extraction adjacency is not symmetric");
            }
            if (t.rows_[i].z[j]) {
                g.edges.emplace_back(t.sites_[i], t.sites_[j]);
            }
        }
        if (t.rows_[i].z[i]) {
            throw std::logic_error("graph extraction left a Z on the diagonal");
        }
        g.kappa[t.sites_[i]] = t.rows_[i].sign;
    }
    for (const auto& s : g.vertices) {
        auto it = applied.find(s);
        g.local_cliffords[s] = canonical_local_word(it == applied.end() ? "" : invert_local_word(it->second));
    }

    // Internal verification: conjugating the graph tableau by the local
    // Cliffords must reproduce the input stabilizer group exactly.
    StabilizerTableau check_t = from_graph(g.vertices, g.edges, g.kappa);
    for (const auto& [site, word] : g.local_cliffords) {
        check_t.apply_local_word(site, word);
    }
    if (!check_t.same_group(*this)) {
        throw std::logic_error("graph extraction round-trip failed");
    }
    return g;
}

std::vector<std::complex<double>> tableau_dense_state(const StabilizerTableau& t,
                                                      const std::vector<Site>& site_order) {
    using cd = std::complex<double>;
    const size_t n = t.sites().size();
    if (site_order.size() != n) {
        throw std::invalid_argument("site order must cover the register");
    }
    std::vector<int> perm(n);  // perm[i] = tableau column of site_order[i]
    for (size_t i = 0; i < n; ++i) {
        perm[i] = t.col(site_order[i]);
    }
    if (n > 26) {
        throw std::invalid_argument("dense rendering capped at 26 qubits");
    }

    // Reduce so that Z-only rows are explicit.
    struct BitRow {
        std::vector<uint8_t> x, z;
        int sign;
    };
    std::vector<BitRow> rows;
    for (const auto& gp : t.generators()) {
        BitRow r;
        r.x.assign(n, 0);
        r.z.assign(n, 0);
        r.sign = gp.sign_bit();
        for (const auto& [site, axis] : gp.factors()) {
            size_t i = 0;
            while (site_order[i] != site) {
                ++i;
            }
            if (axis != Axis::Z) {
                r.x[i] = 1;
            }
            if (axis != Axis::X) {
                r.z[i] = 1;
            }
        }
        rows.push_back(std::move(r));
    }
    auto mul = [&](BitRow& dst, const BitRow& src) {
        int phase = 2 * dst.sign + 2 * src.sign;
        for (size_t j = 0; j < n; ++j) {
            phase += phase_g(dst.x[j], dst.z[j], src.x[j], src.z[j]);
            dst.x[j] ^= src.x[j];
            dst.z[j] ^= src.z[j];
        }
        dst.sign = (((phase % 4) + 4) % 4) / 2;
    };
    // RREF on the X block.
    size_t rank = 0;
    for (size_t j = 0; j < n && rank < n; ++j) {
        size_t found = n;
        for (size_t i = rank; i < n; ++i) {
            if (rows[i].x[j]) {
                found = i;
                break;
            }
        }
        if (found == n) {
            continue;
        }
        std::swap(rows[rank], rows[found]);
        for (size_t i = 0; i < n; ++i) {
            if (i != rank && rows[i].x[j]) {
                mul(rows[i], rows[rank]);
            }
        }
        ++rank;
    }
    // Solve the Z-only constraints for a seed basis state x0.
    std::vector<BitRow> zrows(rows.begin() + rank, rows.end());
    std::vector<uint8_t> x0(n, 0);
    {
        size_t zr = 0;
        std::vector<int> pivot_of_row;
        for (size_t j = 0; j < n && zr < zrows.size(); ++j) {
            size_t found = zrows.size();
            for (size_t i = zr; i < zrows.size(); ++i) {
                if (zrows[i].z[j]) {
                    found = i;
                    break;
                }
            }
            if (found == zrows.size()) {
                continue;
            }
            std::swap(zrows[zr], zrows[found]);
            for (size_t i = 0; i < zrows.size(); ++i) {
                if (i != zr && zrows[i].z[j]) {
                    mul(zrows[i], zrows[zr]);
                }
            }
            pivot_of_row.push_back(static_cast<int>(j));
            ++zr;
        }
        for (size_t i = 0; i < pivot_of_row.size(); ++i) {
            // Row i: Z_S with sign s; need sum_{j in S} x0_j = s with free
            // variables already fixed to 0.
            int acc = zrows[i].sign;
            for (size_t j = 0; j < n; ++j) {
                if (zrows[i].z[j] && static_cast<int>(j) != pivot_of_row[i]) {
                    acc ^= x0[j];
                }
            }
            x0[pivot_of_row[i]] = static_cast<uint8_t>(acc);
        }
    }
    const size_t dim = size_t{1} << n;
    std::vector<cd> amps(dim, cd(0, 0));
    size_t idx0 = 0;
    for (size_t i = 0; i < n; ++i) {
        if (x0[i]) {
            idx0 |= size_t{1} << (n - 1 - i);
        }
    }
    amps[idx0] = 1.0;
    // Apply (1 + g)/2 for every X-pivot row, then normalize.
    static const cd IPOW[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    for (size_t r = 0; r < rank; ++r) {
        const BitRow& g = rows[r];
        std::vector<cd> next(dim, cd(0, 0));
        size_t flip = 0;
        int ybits = 0;
        for (size_t j = 0; j < n; ++j) {
            if (g.x[j]) {
                flip |= size_t{1} << (n - 1 - j);
            }
            if (g.x[j] && g.z[j]) {
                ++ybits;
            }
        }
        for (size_t idx = 0; idx < dim; ++idx) {
            if (amps[idx] == cd(0, 0)) {
                continue;
            }
            // g|idx> = phase * |idx ^ flip>; phase from signs, Z bits on set
            // positions, and i per Y.
            int phase = 2 * g.sign + ybits;  // Y = i * X * Z convention
            for (size_t j = 0; j < n; ++j) {
                if (g.z[j] && ((idx >> (n - 1 - j)) & 1)) {
                    phase += 2;
                }
            }
            next[idx] += amps[idx];
            next[idx ^ flip] += IPOW[((phase % 4) + 4) % 4] * amps[idx];
        }
        amps.swap(next);
    }
    double norm2 = 0;
    for (const auto& a : amps) {
        norm2 += std::norm(a);
    }
    if (norm2 <= 0) {
        throw std::logic_error("dense rendering produced the zero vector");
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) {
        a *= inv;
    }
    return amps;
}

}  // namespace oneway
