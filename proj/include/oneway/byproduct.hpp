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

#include <string>
#include <vector>

#include "oneway/circuit.hpp"

namespace oneway {

// Byproduct operator over n logical qubits: prod_i sigma_x^{x_i} sigma_z^{z_i},
// phases dropped by convention. Composition is bitwise xor.
struct ByproductOperator {
    std::vector<uint8_t> x, z;

    ByproductOperator() = default;
    explicit ByproductOperator(int n) : x(n, 0), z(n, 0) {}
    int num_qubits() const { return static_cast<int>(x.size()); }

    ByproductOperator& operator^=(const ByproductOperator& o);
    bool identity() const;
    bool operator==(const ByproductOperator&) const = default;
    std::string str() const;
};

ByproductOperator operator^(ByproductOperator a, const ByproductOperator& b);

// The 2n-bit running byproduct record at the current cut.
using InfoFlowVector = ByproductOperator;

struct GateDesc {
    enum class Kind { CNOT, H, S };
    Kind kind;
    int a = 0, b = 0;  // b used by CNOT (target)
};

// Conjugates the byproduct under a Clifford gate; the gate stays unchanged.
ByproductOperator propagate_through_clifford(const ByproductOperator& u, const GateDesc& gate);

struct EulerAngles {
    double xi, eta, zeta;
    bool operator==(const EulerAngles&) const = default;
};

// Propagating a byproduct past U_Rot[xi,eta,zeta] leaves the byproduct alone
// and flips angles: the x bit flips eta, the z bit flips xi and zeta.
EulerAngles modify_rotation(int x_bit, int z_bit, const EulerAngles& e);

// s'_i = s_i xor x_i; z bits are irrelevant for a Z readout.
std::vector<int> reinterpret_readout(const std::vector<int>& raw, const ByproductOperator& u);

struct SwappedByproduct {
    ByproductOperator u;   // moved to the left of the circuit
    Circuit modified;      // rotations with flipped angles
};

// Rewrites claimedU * u as u' * U': Clifford gates conjugate the bits, RX/RZ
// rotations keep the bits and flip their angles, diagonal multi-qubit gates
// commute with z bits (an x bit hitting one is rejected: the modified gate
// would leave the catalog).
SwappedByproduct swap_gate_and_byproduct(const Circuit& claimed, const ByproductOperator& u);

}  // namespace oneway
