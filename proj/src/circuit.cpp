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

#include "oneway/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oneway {

using cd = std::complex<double>;

bool CircuitGate::is_clifford() const {
    switch (kind) {
        case Kind::H:
        case Kind::S:
        case Kind::CNOT:
        case Kind::CZ:
        case Kind::SWAPN:
        case Kind::CARRY:
            // CARRY is not Clifford; handled below.
            return kind != Kind::CARRY;
        case Kind::RX:
        case Kind::RZ: {
            double a = std::fmod(std::abs(angle), 2 * M_PI);
            double q = a / (M_PI / 2);
            return std::abs(q - std::round(q)) < 1e-12;
        }
        case Kind::CPHASE:
        case Kind::TOFFPHASE:
            return false;
    }
    return false;
}

bool CircuitGate::is_diagonal() const {
    switch (kind) {
        case Kind::RZ:
        case Kind::CPHASE:
        case Kind::TOFFPHASE:
        case Kind::CARRY:
        case Kind::CZ:
            return true;
        default:
            return false;
    }
}

std::string CircuitGate::str() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind) {
        case Kind::H:
            os << "H " << qubits[0];
            break;
        case Kind::S:
            os << "S " << qubits[0];
            break;
        case Kind::CNOT:
            os << "CNOT " << qubits[0] << ' ' << qubits[1];
            break;
        case Kind::CZ:
            os << "CZ " << qubits[0] << ' ' << qubits[1];
            break;
        case Kind::RX:
            os << "RX " << qubits[0] << ' ' << angle;
            break;
        case Kind::RZ:
            os << "RZ " << qubits[0] << ' ' << angle;
            break;
        case Kind::CPHASE:
            os << "CPHASE " << qubits[0] << ' ' << qubits[1] << ' ' << angle;
            break;
        case Kind::TOFFPHASE:
            os << "TOFFPHASE " << qubits[0] << ' ' << qubits[1] << ' ' << qubits[2] << ' '
               << angle;
            break;
        case Kind::CARRY:
            os << "CARRY " << qubits[0] << ' ' << qubits[1] << ' ' << qubits[2] << ' '
               << qubits[3];
            break;
        case Kind::SWAPN:
            os << "SWAPN " << qubits[0];
            break;
    }
    return os.str();
}

Circuit& Circuit::h(int q) {
    gates.push_back({CircuitGate::Kind::H, {q}, 0});
    return *this;
}
Circuit& Circuit::s(int q) {
    gates.push_back({CircuitGate::Kind::S, {q}, 0});
    return *this;
}
Circuit& Circuit::cnot(int c, int t) {
    gates.push_back({CircuitGate::Kind::CNOT, {c, t}, 0});
    return *this;
}
Circuit& Circuit::cz(int a, int b) {
    gates.push_back({CircuitGate::Kind::CZ, {a, b}, 0});
    return *this;
}
Circuit& Circuit::rx(int q, double angle) {
    gates.push_back({CircuitGate::Kind::RX, {q}, angle});
    return *this;
}
Circuit& Circuit::rz(int q, double angle) {
    gates.push_back({CircuitGate::Kind::RZ, {q}, angle});
    return *this;
}
Circuit& Circuit::cphase(int a, int b, double angle) {
    gates.push_back({CircuitGate::Kind::CPHASE, {a, b}, angle});
    return *this;
}
Circuit& Circuit::toffphase(int a, int b, int c, double angle) {
    gates.push_back({CircuitGate::Kind::TOFFPHASE, {a, b, c}, angle});
    return *this;
}
Circuit& Circuit::carry(int c1, int c2, int c3, int t) {
    gates.push_back({CircuitGate::Kind::CARRY, {c1, c2, c3, t}, 0});
    return *this;
}
Circuit& Circuit::swapn(int k) {
    gates.push_back({CircuitGate::Kind::SWAPN, {k}, 0});
    return *this;
}
Circuit& Circuit::swap2(int a, int b) {
    return cnot(a, b).cnot(b, a).cnot(a, b);
}

Circuit Circuit::then(const Circuit& next) const {
    Circuit out = *this;
    out.gates.insert(out.gates.end(), next.gates.begin(), next.gates.end());
    return out;
}

bool Circuit::all_clifford() const {
    for (const auto& g : gates) {
        if (!g.is_clifford()) {
            return false;
        }
    }
    return true;
}

int Circuit::depth() const {
    std::vector<int> busy_until(num_qubits, 0);
    int depth = 0;
    for (const auto& g : gates) {
        std::vector<int> qs = g.qubits;
        if (g.kind == CircuitGate::Kind::SWAPN) {
            qs.clear();
            for (int i = 0; i < g.qubits[0]; ++i) {
                qs.push_back(i);
            }
        }
        int level = 0;
        for (int q : qs) {
            level = std::max(level, busy_until[q]);
        }
        ++level;
        for (int q : qs) {
            busy_until[q] = level;
        }
        depth = std::max(depth, level);
    }
    return depth;
}

Circuit Circuit::inverse() const {
    // Phase-exact adjoint: S^dag is spelled S S S so that C * C.inverse()
    // is the identity matrix, not merely the identity mod phase.
    Circuit out(num_qubits);
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        CircuitGate g = *it;
        switch (g.kind) {
            case CircuitGate::Kind::S:
                out.s(g.qubits[0]).s(g.qubits[0]).s(g.qubits[0]);
                continue;
            case CircuitGate::Kind::RX:
            case CircuitGate::Kind::RZ:
            case CircuitGate::Kind::CPHASE:
            case CircuitGate::Kind::TOFFPHASE:
                g.angle = -g.angle;
                break;
            default:
                break;  // H, CNOT, CZ, CARRY, SWAPN are involutions
        }
        out.gates.push_back(g);
    }
    return out;
}

std::string Circuit::str() const {
    std::ostringstream os;
    for (const auto& g : gates) {
        os << g.str() << '\n';
    }
    return os.str();
}

Circuit Circuit::parse(const std::string& text, int num_qubits) {
    Circuit c(num_qubits);
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) {
            continue;
        }
        auto need_ints = [&](int k) {
            std::vector<int> v(k);
            for (int i = 0; i < k; ++i) {
                if (!(ls >> v[i])) {
                    throw std::invalid_argument("circuit line " + std::to_string(line_no) +
                                                ": expected qubit index");
                }
            }
            return v;
        };
        auto need_angle = [&]() {
            double a;
            if (!(ls >> a)) {
                throw std::invalid_argument("circuit line " + std::to_string(line_no) +
                                            ": expected angle");
            }
            return a;
        };
        if (op == "H") {
            auto q = need_ints(1);
            c.h(q[0]);
        } else if (op == "S") {
            auto q = need_ints(1);
            c.s(q[0]);
        } else if (op == "CNOT") {
            auto q = need_ints(2);
            c.cnot(q[0], q[1]);
        } else if (op == "CZ") {
            auto q = need_ints(2);
            c.cz(q[0], q[1]);
        } else if (op == "RX") {
            auto q = need_ints(1);
            c.rx(q[0], need_angle());
        } else if (op == "RZ") {
            auto q = need_ints(1);
            c.rz(q[0], need_angle());
        } else if (op == "CPHASE") {
            auto q = need_ints(2);
            c.cphase(q[0], q[1], need_angle());
        } else if (op == "TOFFPHASE") {
            auto q = need_ints(3);
            c.toffphase(q[0], q[1], q[2], need_angle());
        } else if (op == "CARRY") {
            auto q = need_ints(4);
            c.carry(q[0], q[1], q[2], q[3]);
        } else if (op == "SWAPN") {
            auto q = need_ints(1);
            c.swapn(q[0]);
        } else {
            throw std::invalid_argument("circuit line " + std::to_string(line_no) +
                                        ": unknown gate " + op);
        }
        for (int q : c.gates.back().qubits) {
            if (c.gates.back().kind == CircuitGate::Kind::SWAPN
                    ? (q < 1 || q > num_qubits)
                    : (q < 0 || q >= num_qubits)) {
                throw std::invalid_argument("circuit line " + std::to_string(line_no) +
                                            ": qubit out of range");
            }
        }
    }
    return c;
}

namespace {

inline int bit_at(size_t idx, int n, int q) {
    return static_cast<int>((idx >> (n - 1 - q)) & 1);
}

void apply_1q_dense(std::vector<cd>& amps, int n, int q, cd m00, cd m01, cd m10, cd m11) {
    const size_t m = size_t{1} << (n - 1 - q);
    for (size_t i = 0; i < amps.size(); ++i) {
        if (i & m) {
            continue;
        }
        cd a0 = amps[i], a1 = amps[i | m];
        amps[i] = m00 * a0 + m01 * a1;
        amps[i | m] = m10 * a0 + m11 * a1;
    }
}

}  // namespace

void apply_circuit_dense(std::vector<cd>& amps, int n, const Circuit& circuit) {
    if (amps.size() != (size_t{1} << n)) {
        throw std::invalid_argument("dimension mismatch");
    }
    const double r = 1 / std::sqrt(2.0);
    for (const auto& g : circuit.gates) {
        switch (g.kind) {
            case CircuitGate::Kind::H:
                apply_1q_dense(amps, n, g.qubits[0], r, r, r, -r);
                break;
            case CircuitGate::Kind::S:
                apply_1q_dense(amps, n, g.qubits[0], 1, 0, 0, cd(0, 1));
                break;
            case CircuitGate::Kind::RX: {
                double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
                apply_1q_dense(amps, n, g.qubits[0], c, cd(0, -s), cd(0, -s), c);
                break;
            }
            case CircuitGate::Kind::RZ:
                apply_1q_dense(amps, n, g.qubits[0], std::exp(cd(0, -g.angle / 2)), 0, 0,
                               std::exp(cd(0, g.angle / 2)));
                break;
            case CircuitGate::Kind::CNOT: {
                const size_t mc = size_t{1} << (n - 1 - g.qubits[0]);
                const size_t mt = size_t{1} << (n - 1 - g.qubits[1]);
                for (size_t i = 0; i < amps.size(); ++i) {
                    if ((i & mc) && !(i & mt)) {
                        std::swap(amps[i], amps[i | mt]);
                    }
                }
                break;
            }
            case CircuitGate::Kind::CZ: {
                const size_t ma = size_t{1} << (n - 1 - g.qubits[0]);
                const size_t mb = size_t{1} << (n - 1 - g.qubits[1]);
                for (size_t i = 0; i < amps.size(); ++i) {
                    if ((i & ma) && (i & mb)) {
                        amps[i] = -amps[i];
                    }
                }
                break;
            }
            case CircuitGate::Kind::CPHASE: {
                const cd ph = std::exp(cd(0, g.angle));
                for (size_t i = 0; i < amps.size(); ++i) {
                    if (bit_at(i, n, g.qubits[0]) && bit_at(i, n, g.qubits[1])) {
                        amps[i] *= ph;
                    }
                }
                break;
            }
            case CircuitGate::Kind::TOFFPHASE: {
                const cd ph = std::exp(cd(0, g.angle));
                for (size_t i = 0; i < amps.size(); ++i) {
                    if (bit_at(i, n, g.qubits[0]) && bit_at(i, n, g.qubits[1]) &&
                        bit_at(i, n, g.qubits[2])) {
                        amps[i] *= ph;
                    }
                }
                break;
            }
            case CircuitGate::Kind::CARRY: {
                // Phase-flip on the target when at least two controls are set.
                for (size_t i = 0; i < amps.size(); ++i) {
                    int w = bit_at(i, n, g.qubits[0]) + bit_at(i, n, g.qubits[1]) +
                            bit_at(i, n, g.qubits[2]);
                    if (w >= 2 && bit_at(i, n, g.qubits[3])) {
                        amps[i] = -amps[i];
                    }
                }
                break;
            }
            case CircuitGate::Kind::SWAPN: {
                const int k = g.qubits[0];
                std::vector<cd> out(amps.size());
                for (size_t i = 0; i < amps.size(); ++i) {
                    size_t j = i;
                    for (int q = 0; q < k; ++q) {
                        int src = bit_at(i, n, q);
                        int dstq = k - 1 - q;
                        size_t mask = size_t{1} << (n - 1 - dstq);
                        j = (j & ~mask) | (static_cast<size_t>(src) << (n - 1 - dstq));
                    }
                    out[j] = amps[i];
                }
                amps.swap(out);
                break;
            }
        }
    }
}

}  // namespace oneway
