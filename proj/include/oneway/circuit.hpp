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
#include <string>
#include <vector>

namespace oneway {

// Reference circuits claimed by measurement patterns. One gate per line in
// the text form: H q | S q | CNOT c t | CZ a b | RX q angle | RZ q angle |
// CPHASE a b angle | TOFFPHASE a b c angle | CARRY c1 c2 c3 t | SWAPN k.
struct CircuitGate {
    enum class Kind { H, S, CNOT, CZ, RX, RZ, CPHASE, TOFFPHASE, CARRY, SWAPN };
    Kind kind;
    std::vector<int> qubits;
    double angle = 0;

    bool is_clifford() const;
    bool is_diagonal() const;
    std::string str() const;
};

struct Circuit {
    int num_qubits = 0;
    std::vector<CircuitGate> gates;

    Circuit() = default;
    explicit Circuit(int n) : num_qubits(n) {}

    Circuit& h(int q);
    Circuit& s(int q);
    Circuit& cnot(int c, int t);
    Circuit& cz(int a, int b);
    Circuit& rx(int q, double angle);
    Circuit& rz(int q, double angle);
    Circuit& cphase(int a, int b, double angle);
    Circuit& toffphase(int a, int b, int c, double angle);
    Circuit& carry(int c1, int c2, int c3, int t);
    Circuit& swapn(int k);
    // Adjacent-pair swap spelled with three CNOTs (stays in the gate set).
    Circuit& swap2(int a, int b);

    Circuit then(const Circuit& next) const;
    bool all_clifford() const;
    // Minimal number of layers of non-overlapping gates.
    int depth() const;
    // The adjoint circuit (S is rewritten as RZ(-pi/2); equal mod phase).
    Circuit inverse() const;

    std::string str() const;
    static Circuit parse(const std::string& text, int num_qubits);
};

// Applies the circuit to a dense state; qubit i owns amplitude bit
// (n-1-i). Thrown-together evaluation for claim checking, not a simulator.
void apply_circuit_dense(std::vector<std::complex<double>>& amps, int num_qubits,
                         const Circuit& circuit);

// Propagates per-wire Pauli bits through the circuit: Clifford gates
// conjugate the bits, rotations and diagonal gates leave them unchanged,
// SWAPN permutes wires. B needs operator^= (GF(2) addition).
template <typename B>
void propagate_bits(std::vector<B>& xs, std::vector<B>& zs, const CircuitGate& g) {
    switch (g.kind) {
        case CircuitGate::Kind::H:
            std::swap(xs[g.qubits[0]], zs[g.qubits[0]]);
            break;
        case CircuitGate::Kind::S:
            zs[g.qubits[0]] ^= xs[g.qubits[0]];
            break;
        case CircuitGate::Kind::CNOT:
            xs[g.qubits[1]] ^= xs[g.qubits[0]];
            zs[g.qubits[0]] ^= zs[g.qubits[1]];
            break;
        case CircuitGate::Kind::CZ:
            zs[g.qubits[0]] ^= xs[g.qubits[1]];
            zs[g.qubits[1]] ^= xs[g.qubits[0]];
            break;
        case CircuitGate::Kind::SWAPN: {
            int k = g.qubits[0];
            std::reverse(xs.begin(), xs.begin() + k);
            std::reverse(zs.begin(), zs.begin() + k);
            break;
        }
        case CircuitGate::Kind::RX:
        case CircuitGate::Kind::RZ:
        case CircuitGate::Kind::CPHASE:
        case CircuitGate::Kind::TOFFPHASE:
        case CircuitGate::Kind::CARRY:
            break;
    }
}

}  // namespace oneway
