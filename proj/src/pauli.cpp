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

#include "oneway/pauli.hpp"

#include <sstream>
#include <stdexcept>

namespace oneway {

std::string Site::label() const {
    std::ostringstream os;
    os << x << ':' << y << ':' << z;
    return os.str();
}

std::string Site::pretty() const {
    std::ostringstream os;
    os << '(' << x << ',' << y;
    if (z != 0) {
        os << ',' << z;
    }
    os << ')';
    return os.str();
}

Site Site::parse_label(const std::string& text) {
    Site s;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> s.x >> c1 >> s.y >> c2 >> s.z) || c1 != ':' || c2 != ':') {
        throw std::invalid_argument("bad site label: " + text);
    }
    return s;
}

char axis_char(Axis a) {
    switch (a) {
        case Axis::X:
            return 'X';
        case Axis::Y:
            return 'Y';
        case Axis::Z:
            return 'Z';
    }
    return '?';
}

PauliProduct PauliProduct::single(Site s, Axis a, int phase_exp) {
    PauliProduct p;
    p.factors_[s] = a;
    p.phase_ = ((phase_exp % 4) + 4) % 4;
    return p;
}

int PauliProduct::sign_bit() const {
    if (phase_ == 0) {
        return 0;
    }
    if (phase_ == 2) {
        return 1;
    }
    throw std::logic_error("sign_bit on non-Hermitian phase i^" + std::to_string(phase_));
}

bool PauliProduct::axis_at(Site s, Axis* out) const {
    auto it = factors_.find(s);
    if (it == factors_.end()) {
        return false;
    }
    *out = it->second;
    return true;
}

PauliProduct PauliProduct::with_phase_exp(int phase_exp) const {
    PauliProduct p = *this;
    p.phase_ = ((phase_exp % 4) + 4) % 4;
    return p;
}

PauliProduct PauliProduct::adjoint() const {
    // Hermitian factors; only the phase conjugates.
    PauliProduct p = *this;
    p.phase_ = (4 - phase_) % 4;
    return p;
}

std::string PauliProduct::str() const {
    static const char* phase_names[4] = {"+", "+i", "-", "-i"};
    std::string out = phase_names[phase_];
    if (factors_.empty()) {
        out += "1";
        return out;
    }
    bool first = true;
    for (const auto& [site, axis] : factors_) {
        if (!first) {
            out += ' ';
        }
        first = false;
        out += axis_char(axis);
        out += site.pretty();
    }
    return out;
}

namespace {

// Single-qubit product a*b: resulting axis (or identity) and phase exponent.
// X*Z = -iY and cyclic relatives.
struct AxisProduct {
    bool identity;
    Axis axis;
    int phase_exp;
};

AxisProduct axis_multiply(Axis a, Axis b) {
    if (a == b) {
        return {true, Axis::X, 0};
    }
    auto third = [](Axis p, Axis q) {
        return static_cast<Axis>(3 - static_cast<int>(p) - static_cast<int>(q));
    };
    // XY=iZ, YZ=iX, ZX=iY; reversed order picks up -i.
    int ia = static_cast<int>(a), ib = static_cast<int>(b);
    bool forward = (ib == (ia + 1) % 3);
    return {false, third(a, b), forward ? 1 : 3};
}

}  // namespace

PauliProduct multiply(const PauliProduct& a, const PauliProduct& b) {
    PauliProduct out;
    out.phase_ = (a.phase_ + b.phase_) % 4;
    out.factors_ = a.factors_;
    for (const auto& [site, axis] : b.factors_) {
        auto it = out.factors_.find(site);
        if (it == out.factors_.end()) {
            out.factors_[site] = axis;
            continue;
        }
        AxisProduct prod = axis_multiply(it->second, axis);
        out.phase_ = (out.phase_ + prod.phase_exp) % 4;
        if (prod.identity) {
            out.factors_.erase(it);
        } else {
            it->second = prod.axis;
        }
    }
    return out;
}

bool commutes(const PauliProduct& a, const PauliProduct& b) {
    int anti = 0;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    // Walk the smaller map.
    const auto& small = fa.size() <= fb.size() ? fa : fb;
    const auto& big = fa.size() <= fb.size() ? fb : fa;
    for (const auto& [site, axis] : small) {
        auto it = big.find(site);
        if (it != big.end() && it->second != axis) {
            anti ^= 1;
        }
    }
    return anti == 0;
}

namespace {

struct Bits {
    int x = 0;
    int z = 0;
};

Bits axis_bits(bool present, Axis a) {
    if (!present) {
        return {0, 0};
    }
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

bool bits_to_axis(Bits b, Axis* out) {
    if (b.x == 0 && b.z == 0) {
        return false;
    }
    *out = b.x ? (b.z ? Axis::Y : Axis::X) : Axis::Z;
    return true;
}

}  // namespace

PauliProduct CliffordGate::conjugate(const PauliProduct& p) const {
    if (kind_ == GateKind::Identity) {
        return p;
    }
    Axis ax = Axis::X;
    bool has_a = p.axis_at(a_, &ax);
    Bits pa = axis_bits(has_a, ax);
    bool has_b = p.axis_at(b_, &ax);
    Bits pb = axis_bits(has_b, ax);
    int r = 0;
    switch (kind_) {
        case GateKind::H:
            r ^= pa.x & pa.z;
            std::swap(pa.x, pa.z);
            break;
        case GateKind::S:
            r ^= pa.x & pa.z;
            pa.z ^= pa.x;
            break;
        case GateKind::X:
            r ^= pa.z;
            break;
        case GateKind::Y:
            r ^= pa.x ^ pa.z;
            break;
        case GateKind::Z:
            r ^= pa.x;
            break;
        case GateKind::CZ:
            r ^= pa.x & pb.x & (pa.z ^ pb.z);
            pa.z ^= pb.x;
            pb.z ^= pa.x;
            break;
        case GateKind::CNOT:
            r ^= pa.x & pb.z & (pb.x ^ pa.z ^ 1);
            pb.x ^= pa.x;
            pa.z ^= pb.z;
            break;
        case GateKind::Identity:
            break;
    }
    PauliProduct out = p;
    out.phase_ = (out.phase_ + 2 * r) % 4;
    out.factors_.erase(a_);
    out.factors_.erase(b_);
    if (bits_to_axis(pa, &ax)) {
        out.factors_[a_] = ax;
    }
    if (two_qubit() && bits_to_axis(pb, &ax)) {
        out.factors_[b_] = ax;
    }
    return out;
}

PauliProduct conjugate(const CliffordGate& g, const PauliProduct& p) {
    return g.conjugate(p);
}

}  // namespace oneway
