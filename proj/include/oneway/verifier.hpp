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
#include <optional>
#include <string>
#include <vector>

#include "oneway/pattern.hpp"
#include "oneway/pauli.hpp"

namespace oneway {

struct ByproductSpec {
    std::vector<ParityExpression> x, z;  // output side, per logical wire
};

// Derives the byproduct spec from cluster-state correlations: for Clifford
// claims the correlation targets come from exact Pauli conjugation, for
// diagonal-rotation claims from the bit-image route, in both cases solved
// over products of basic correlation operators.
ByproductSpec derive_byproduct_spec(const MeasurementPattern& p);
// Convenience: installs the derived spec into the pattern.
void install_derived_byproduct(MeasurementPattern& p);

// One claim check within one branch.
struct ClaimResult {
    int wire;
    char axis;  // 'x' or 'z'
    std::string branch;
    bool pass;
    double residual;
};

struct VerificationReport {
    std::vector<ClaimResult> claims;
    int branches_checked = 0;
    int failures = 0;
    std::string note;
    bool pass() const { return failures == 0 && !claims.empty(); }
    std::string str() const;
};

// The correlation criterion for one branch: builds the projected cluster
// state, checks the 2n eigenvalue equations including the predicted signs,
// and compares the induced byproduct with the pattern's spec under both
// operator orderings. The branch assigns outcomes to the body sites.
VerificationReport check_theorem1(const MeasurementPattern& p,
                                  const std::map<Site, int>& branch);

struct OraclePolicy {
    bool exhaustive_if_small = true;
    int max_exhaustive = 4096;  // branch count bound for exhaustive mode
    int samples = 256;
    uint64_t seed = 0;
    int random_inputs = 3;
    double tolerance = 1e-9;  // 1 - fidelity
};

// Runs the pattern on the dense windowed engine for each input in the
// computational basis, |+...+>, and a few random states, strips the
// byproduct operator and compares against the claimed circuit, demanding a
// branch-independent common global phase across the basis inputs.
VerificationReport oracle_equivalence(const MeasurementPattern& p, const OraclePolicy& policy);

// Both checks with the policy's branch selection.
VerificationReport verify_pattern(const MeasurementPattern& p, const OraclePolicy& policy);

}  // namespace oneway
