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

#include "oneway/byproduct.hpp"

#include <sstream>
#include <stdexcept>

namespace oneway {

ByproductOperator& ByproductOperator::operator^=(const ByproductOperator& o) {
    if (o.num_qubits() != num_qubits()) {
        throw std::invalid_argument("byproduct width mismatch");
    }
    for (int i = 0; i < num_qubits(); ++i) {
        x[i] ^= o.x[i];
        z[i] ^= o.z[i];
    }
    return *this;
}

ByproductOperator operator^(ByproductOperator a, const ByproductOperator& b) {
    a ^= b;
    return a;
}

bool ByproductOperator::identity() const {
    for (int i = 0; i < num_qubits(); ++i) {
        if (x[i] || z[i]) {
            return false;
        }
    }
    return true;
}

std::string ByproductOperator::str() const {
    std::ostringstream os;
    for (int i = 0; i < num_qubits(); ++i) {
        if (i) {
            os << ' ';
        }
        os << "x" << i << "=" << int(x[i]) << " z" << i << "=" << int(z[i]);
    }
    return os.str();
}

ByproductOperator propagate_through_clifford(const ByproductOperator& u, const GateDesc& gate) {
    ByproductOperator out = u;
    switch (gate.kind) {
        case GateDesc::Kind::CNOT:
            out.x[gate.b] ^= u.x[gate.a];
            out.z[gate.a] ^= u.z[gate.b];
            break;
        case GateDesc::Kind::H:
            std::swap(out.x[gate.a], out.z[gate.a]);
            break;
        case GateDesc::Kind::S:
            out.z[gate.a] ^= u.x[gate.a];
            break;
    }
    return out;
}

EulerAngles modify_rotation(int x_bit, int z_bit, const EulerAngles& e) {
    EulerAngles out = e;
    if (x_bit) {
        out.eta = -out.eta;
    }
    if (z_bit) {
        out.xi = -out.xi;
        out.zeta = -out.zeta;
    }
    return out;
}

std::vector<int> reinterpret_readout(const std::vector<int>& raw, const ByproductOperator& u) {
    if (raw.size() != static_cast<size_t>(u.num_qubits())) {
        throw std::invalid_argument("readout width mismatch");
    }
    std::vector<int> out(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        out[i] = (raw[i] ^ u.x[i]) & 1;
    }
    return out;
}

SwappedByproduct swap_gate_and_byproduct(const Circuit& claimed, const ByproductOperator& u) {
    if (u.num_qubits() != claimed.num_qubits) {
        throw std::invalid_argument("byproduct width mismatch");
    }
    SwappedByproduct out;
    out.modified = Circuit(claimed.num_qubits);
    std::vector<uint8_t> xs = u.x, zs = u.z;
    for (const auto& g : claimed.gates) {
        CircuitGate mod = g;
        switch (g.kind) {
            case CircuitGate::Kind::RX:
                if (zs[g.qubits[0]]) {
                    mod.angle = -mod.angle;
                }
                break;
            case CircuitGate::Kind::RZ:
                if (xs[g.qubits[0]]) {
                    mod.angle = -mod.angle;
                }
                break;
            case CircuitGate::Kind::CPHASE:
            case CircuitGate::Kind::TOFFPHASE:
            case CircuitGate::Kind::CARRY:
                for (int q : g.qubits) {
                    if (xs[q]) {
                        throw std::invalid_argument(
                            "an x byproduct hit a multi-qubit diagonal gate; rewrite it as "
                            "elementary rotations first");
                    }
                }
                break;
            default:
                break;
        }
        propagate_bits(xs, zs, g);
        out.modified.gates.push_back(mod);
    }
    out.u = ByproductOperator(claimed.num_qubits);
    out.u.x = xs;
    out.u.z = zs;
    return out;
}

}  // namespace oneway
