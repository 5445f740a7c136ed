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

#include <compare>
#include <cstdint>
#include <string>

namespace oneway {

// A qubit site. Sites are lattice coordinates even in 1D/2D (unused
// components stay zero), so patterns can be copied verbatim from figures.
// Sites are labels, never positional indices.
struct Site {
    int x = 0;
    int y = 0;
    int z = 0;

    constexpr Site() = default;
    constexpr Site(int x_, int y_, int z_ = 0) : x(x_), y(y_), z(z_) {}

    auto operator<=>(const Site&) const = default;

    Site shifted(int dx, int dy, int dz = 0) const { return Site{x + dx, y + dy, z + dz}; }

    // Compact label used in deps lists and graph-state files: "x:y:z".
    std::string label() const;
    // Label with the z component omitted when zero: "(x,y)" or "(x,y,z)".
    std::string pretty() const;

    static Site parse_label(const std::string& text);
};

}  // namespace oneway
