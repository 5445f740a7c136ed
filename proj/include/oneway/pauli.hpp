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

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "oneway/site.hpp"

namespace oneway {

// Thrown when a forced measurement outcome has no probability mass: the
// requested branch does not exist.
struct ForcedOutcomeImpossible : std::runtime_error {
    explicit ForcedOutcomeImpossible(const std::string& what) : std::runtime_error(what) {}
};

enum class Axis : uint8_t { X, Y, Z };

char axis_char(Axis a);

// A signed tensor product of one-qubit Pauli operators over named sites.
// Sites absent from the map carry identity. The phase is an element of
// {+1, -1, +i, -i}, stored as an exponent of i modulo 4. Stabilizer work
// only needs +-1 but intermediate products (Y = iXZ) require the full group.
//
// Values are immutable in spirit: all operations return new products.
class PauliProduct {
  public:
    PauliProduct() = default;

    static PauliProduct single(Site s, Axis a, int phase_exp = 0);
    static PauliProduct identity() { return PauliProduct(); }

    // i^phase_exp, exponent mod 4.
    int phase_exp() const { return phase_; }
    bool is_hermitian() const { return phase_ % 2 == 0; }
    // Sign bit of a Hermitian product: 0 for +1, 1 for -1. Throws on +-i.
    int sign_bit() const;

    const std::map<Site, Axis>& factors() const { return factors_; }
    bool is_identity_support() const { return factors_.empty(); }
    bool acts_on(Site s) const { return factors_.count(s) != 0; }
    // Axis at a site; identity reported via has=false.
    bool axis_at(Site s, Axis* out) const;

    PauliProduct with_phase_exp(int phase_exp) const;
    PauliProduct adjoint() const;

    bool operator==(const PauliProduct& other) const = default;

    // Equality of the unsigned tensor-product part.
    bool same_support(const PauliProduct& other) const { return factors_ == other.factors_; }

    // Textual rendering: "+X(1,2) Z(2,2)" -- sign, then axis(site) terms
    // sorted by site. Identity renders as "+1".
    std::string str() const;

  private:
    std::map<Site, Axis> factors_;
    int phase_ = 0;

    friend PauliProduct multiply(const PauliProduct& a, const PauliProduct& b);
    friend class CliffordGate;
};

// The operator product a*b with tracked phase.
PauliProduct multiply(const PauliProduct& a, const PauliProduct& b);

// 1 iff ab = ba; equals the parity of anticommuting single-qubit pairs.
bool commutes(const PauliProduct& a, const PauliProduct& b);

enum class GateKind : uint8_t { H, S, CZ, CNOT, X, Y, Z, Identity };

// One- and two-qubit Clifford gates; conjugation maps PauliProducts to
// PauliProducts with sign +-1.
class CliffordGate {
  public:
    static CliffordGate h(Site q) { return {GateKind::H, q, q}; }
    static CliffordGate s(Site q) { return {GateKind::S, q, q}; }
    static CliffordGate x(Site q) { return {GateKind::X, q, q}; }
    static CliffordGate y(Site q) { return {GateKind::Y, q, q}; }
    static CliffordGate z(Site q) { return {GateKind::Z, q, q}; }
    static CliffordGate cz(Site a, Site b) { return {GateKind::CZ, a, b}; }
    static CliffordGate cnot(Site control, Site target) { return {GateKind::CNOT, control, target}; }
    static CliffordGate identity(Site q) { return {GateKind::Identity, q, q}; }

    GateKind kind() const { return kind_; }
    Site a() const { return a_; }
    Site b() const { return b_; }
    bool two_qubit() const { return kind_ == GateKind::CZ || kind_ == GateKind::CNOT; }

    // g p g^dagger.
    PauliProduct conjugate(const PauliProduct& p) const;

  private:
    CliffordGate(GateKind kind, Site a, Site b) : kind_(kind), a_(a), b_(b) {}
    GateKind kind_;
    Site a_, b_;
};

PauliProduct conjugate(const CliffordGate& g, const PauliProduct& p);

}  // namespace oneway
