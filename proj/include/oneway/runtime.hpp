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

#include "oneway/byproduct.hpp"
#include "oneway/pattern.hpp"
#include "oneway/tableau.hpp"

namespace oneway {

// Measurement rounds: Q_0 holds every trivially-measured site, later rounds
// the adaptive measurements, each site as early as its dependencies allow.
struct Schedule {
    std::vector<std::vector<Site>> rounds;
    std::map<Site, int> round_of;

    int num_rounds() const { return static_cast<int>(rounds.size()); }
    std::string str() const;
};

Schedule build_schedule(const MeasurementPattern& p);

enum class Engine { Auto, Tableau, Dense };

struct ExecuteOptions {
    Engine engine = Engine::Auto;
    uint64_t seed = 0;
    // Forced outcomes for branch enumeration; missing sites are sampled.
    std::map<Site, int> forced;
    // One character per wire: '+', '0' or '1'.
    std::string input;
    // Cap on simultaneously active dense qubits (0 = engine default).
    int max_window = 0;
};

struct ResourceCheck {
    std::string name;
    double lhs, rhs;
    bool pass;
};

struct ResourceReport {
    int s = 0, o = 0, t = 0;
    std::vector<ResourceCheck> checks;  // present when network metadata exists
    bool pass() const;
    std::string str() const;
};

ResourceReport resource_report(const MeasurementPattern& p);

struct RunRecord {
    uint64_t seed = 0;
    std::map<Site, int> outcomes;      // logical outcomes, every measured site
    std::map<Site, int> raw_readout;   // Z readout of the output sites
    InfoFlowVector info_flow;          // final accumulated byproduct
    std::vector<int> results;          // reinterpreted readout per wire
    ResourceReport resources;
    int rounds = 0;
    int peak_window = 0;

    std::string str() const;
};

// Runs the pattern end to end: adaptive angles from earlier outcomes, the
// information flow vector accumulated from the byproduct spec, output sites
// read out in the Z basis and reinterpreted.
RunRecord execute(const MeasurementPattern& p, const ExecuteOptions& options);

// Split execution: dense simulation where only the active window of qubits
// is ever materialized; throws when the requested window cannot be met.
RunRecord execute_split(const MeasurementPattern& p, int max_window,
                        const ExecuteOptions& options = {});

// Runs the trivial round on the tableau and extracts the residual graph
// state of everything left unmeasured.
struct ReduceResult {
    std::map<Site, int> outcomes;
    GraphStateDescription graph;
};
ReduceResult reduce_to_graph(const MeasurementPattern& p, const ExecuteOptions& options);

}  // namespace oneway
