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

#include "oneway/pattern.hpp"

namespace oneway::gates {

// Single-wire chains. Wire rows sit at odd y; a k-wire gate block spans
// x = 0..L with inputs at x = 0 and outputs at x = L, register v (top to
// bottom) on row y = 2(k - v) - 1.
MeasurementPattern identity_wire();
MeasurementPattern wire(int length);  // even edge count >= 2
MeasurementPattern rot_x(double xi);
MeasurementPattern rot_z(double eta);
MeasurementPattern rot_euler(double xi, double eta, double zeta);
MeasurementPattern hadamard();
MeasurementPattern phase_s();

// The 15-qubit CNOT block; wire 0 = control (top), wire 1 = target. The
// mirrored variant puts the control on the bottom row.
MeasurementPattern cnot15(bool control_on_top = true);

// Square patterns: the n-wire reversal and the diagonal-rotation gates
// realized on it.
MeasurementPattern swap_n(int n);
// exp(-i phi Z...Z) on n wires, together with the square's reversal.
MeasurementPattern hamiltonian_zn(int n, double phi);
// U_CPG[theta] together with the two-wire reversal.
MeasurementPattern controlled_phase(double theta);
// Toffoli phase gate (three wires, no net reversal).
MeasurementPattern toffoli_phase(double phi);
// Three controls (registers 0..2), one target (register 3).
MeasurementPattern carry();

// The generalized-rotation square: hosts exp(-i phi Z_R) factors for the
// given register sets together with the n-wire reversal.
MeasurementPattern diagonal_square(int n,
                                   const std::vector<std::pair<std::vector<int>, double>>& rotations);

// CNOT between wire 0 and the wire `separation` logical qubits below it,
// built from crossing sub-patterns and the neighbor CNOT.
MeasurementPattern distant_cnot(int separation);

// Composed circuits.
MeasurementPattern qft(int n);
MeasurementPattern adder(int n);

// Compiles an H/S/CNOT network into one composed pattern (layered greedily;
// every layer becomes one column of gate blocks plus identity fill).
MeasurementPattern compile_network(const Circuit& network);

// Places a gate block so its wire v lands on global wire (top_wire + v) of a
// circuit with total_wires rows, starting at column x0.
MeasurementPattern place_block(const MeasurementPattern& block, int top_wire, int total_wires,
                               int x0);

}  // namespace oneway::gates
