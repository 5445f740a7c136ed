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

#include "oneway/cluster.hpp"
#include "oneway/pattern.hpp"
#include "oneway/tableau.hpp"

namespace oneway {

// All formats are line oriented UTF-8 with '#' comments.
//
// Cluster:   site x y z role kappa | edge x1 y1 z1 x2 y2 z2
//            | wire i in: x y z out: x y z
// Pattern:   cluster inline ... endcluster, then
//            measure x y z kind [angle=phi] [deps=x:y:z,...] [offset=0|1]
//                [sensx=w,...] [sensz=w,...]
//            byproduct wire=i axis=x|z const=0|1 [deps=x:y:z,...]
//            network S=.. T=.. O=..
//            claims inline ... endclaims (circuit lines)
// Graph:     vertex x:y:z kappa 0|1 lc NAME | edge x:y:z x:y:z
// Decomposition: cluster inline ... endcluster, then per gate
//            gate NAME / member x y z / gin x y z / gout x y z /
//            gedge x1 y1 z1 x2 y2 z2 / endgate

std::string render_cluster(const Cluster& c);
Cluster parse_cluster(const std::string& text);

std::string render_pattern(const MeasurementPattern& p);
MeasurementPattern parse_pattern(const std::string& text);

std::string render_graph_state(const GraphStateDescription& g);

std::string render_decomposition(const Decomposition& d);
Decomposition parse_decomposition(const std::string& text);

// ASCII grid of the pattern: '.' vacant, X/Y/Z Pauli bases, 'A' adaptive,
// 'I'/'O' input and output roles.
std::string render_ascii(const MeasurementPattern& p);

}  // namespace oneway
