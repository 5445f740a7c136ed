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
#include <set>

#include "oneway/cluster.hpp"
#include "oneway/pattern.hpp"
#include "oneway/pauli.hpp"

namespace oneway {

// A product of basic correlation operators K^(a) matching a requested
// shape, together with the parity expression its eigenvalue picks up once
// the flexible (measured) sites are projected out.
struct CorrelationSolve {
    bool found = false;
    PauliProduct op;         // the full signed stabilizer element
    std::set<Site> centers;  // the K^(a) factors that enter
    // op = (-1)^{lambda.constant} * (target tensor product), and each
    // measured support site adds its outcome bit.
    ParityExpression lambda;
};

// Searches the stabilizer group of the cluster state for an element that
// carries exactly the pinned Paulis, carries either identity or the given
// axis on each flexible site, and identity everywhere else. Deterministic
// (free choices resolved to zero in site order).
CorrelationSolve solve_correlation(const Cluster& cluster, const std::map<Site, Axis>& pinned,
                                   const std::map<Site, Axis>& flexible);

}  // namespace oneway
