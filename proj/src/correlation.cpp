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

#include "oneway/correlation.hpp"

#include <stdexcept>
#include <vector>

namespace oneway {

namespace {

struct AxisBits {
    int x, z;
};

AxisBits bits_of(Axis a) {
    switch (a) {
        case Axis::X:
            return {1, 0};
        case Axis::Y:
            return {1, 1};
        case Axis::Z:
            return {0, 1};
    }
    return {0, 0};
}

}  // namespace

CorrelationSolve solve_correlation(const Cluster& cluster, const std::map<Site, Axis>& pinned,
                                   const std::map<Site, Axis>& flexible) {
    CorrelationSolve out;
    std::vector<Site> sites(cluster.sites.begin(), cluster.sites.end());
    const int n = static_cast<int>(sites.size());
    std::map<Site, int> idx;
    for (int i = 0; i < n; ++i) {
        idx[sites[i]] = i;
    }
    for (const auto& [s, a] : pinned) {
        (void)a;
        if (!idx.count(s)) {
            throw std::invalid_argument("pinned site " + s.pretty() + " not in the cluster");
        }
        if (flexible.count(s)) {
            throw std::invalid_argument("site " + s.pretty() + " both pinned and flexible");
        }
    }

    // The generator K^(a) has X exactly at a and Z on the neighbors of a, so
    // the x bit of the product at site s equals the coefficient c_s, and the
    // z bit is the adjacency image of c. Pinned and identity sites therefore
    // fix their own coefficient outright.
    std::vector<int> coef(n, -1);  // -1 = unknown
    for (int i = 0; i < n; ++i) {
        const Site& s = sites[i];
        auto itp = pinned.find(s);
        if (itp != pinned.end()) {
            coef[i] = bits_of(itp->second).x;
            continue;
        }
        auto itf = flexible.find(s);
        if (itf == flexible.end()) {
            coef[i] = 0;  // identity required
        } else if (bits_of(itf->second).x == 0) {
            coef[i] = 0;  // flexible Z: x bit must vanish
        }
    }
    std::vector<int> unknowns;
    std::vector<int> unknown_pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (coef[i] < 0) {
            unknown_pos[i] = static_cast<int>(unknowns.size());
            unknowns.push_back(i);
        }
    }

    auto adj = cluster.adjacency();
    // Equations: one per site whose z bit is constrained.
    //   pinned s:      sum_{a~s} c_a = z(target)
    //   identity s:    sum_{a~s} c_a = 0
    //   flexible X s:  sum_{a~s} c_a = 0
    //   flexible Y s:  sum_{a~s} c_a = c_s
    //   flexible Z s:  free
    const int m = static_cast<int>(unknowns.size());
    std::vector<std::vector<uint8_t>> rows;
    std::vector<uint8_t> rhs;
    for (int i = 0; i < n; ++i) {
        const Site& s = sites[i];
        std::vector<uint8_t> row(m, 0);
        int c = 0;
        auto itf = flexible.find(s);
        bool constrained = true;
        if (itf != flexible.end()) {
            AxisBits b = bits_of(itf->second);
            if (b.x == 0 && b.z == 1) {
                constrained = false;  // flexible Z
            } else if (b.x == 1 && b.z == 1) {
                // flexible Y: z bit equals x bit (= c_s)
                if (coef[i] >= 0) {
                    c ^= coef[i];
                } else {
                    row[unknown_pos[i]] ^= 1;
                }
            }
            // flexible X: z bit must vanish (c stays 0)
        } else {
            auto itp = pinned.find(s);
            if (itp != pinned.end()) {
                c ^= bits_of(itp->second).z;
            }
        }
        if (!constrained) {
            continue;
        }
        for (const auto& nb : adj[s]) {
            int j = idx.at(nb);
            if (coef[j] >= 0) {
                c ^= coef[j];
            } else {
                row[unknown_pos[j]] ^= 1;
            }
        }
        rows.push_back(std::move(row));
        rhs.push_back(static_cast<uint8_t>(c));
    }

    // Gaussian elimination; free unknowns resolve to zero.
    std::vector<int> pivot_row_of_col(m, -1);
    size_t rank = 0;
    for (int col = 0; col < m && rank < rows.size(); ++col) {
        size_t found = rows.size();
        for (size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][col]) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[found]);
        std::swap(rhs[rank], rhs[found]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][col]) {
                for (int k = 0; k < m; ++k) {
                    rows[r][k] ^= rows[rank][k];
                }
                rhs[r] ^= rhs[rank];
            }
        }
        pivot_row_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r) {
        if (rhs[r]) {
            return out;  // inconsistent
        }
    }
    std::vector<int> sol(m, 0);
    for (int col = 0; col < m; ++col) {
        if (pivot_row_of_col[col] >= 0) {
            sol[col] = rhs[pivot_row_of_col[col]];
        }
    }
    for (int i = 0; i < n; ++i) {
        if (coef[i] < 0) {
            coef[i] = sol[unknown_pos[i]];
        }
    }

    // Build the product and double-check the shape and the eigenvalue parity.
    PauliProduct op;
    for (int i = 0; i < n; ++i) {
        if (!coef[i]) {
            continue;
        }
        PauliProduct k = PauliProduct::single(sites[i], Axis::X,
                                              cluster.kappa_at(sites[i]) ? 2 : 0);
        for (const auto& nb : adj[sites[i]]) {
            k = multiply(k, PauliProduct::single(nb, Axis::Z));
        }
        op = multiply(op, k);
        out.centers.insert(sites[i]);
    }
    for (const auto& [s, a] : pinned) {
        Axis got;
        if (!op.axis_at(s, &got) || got != a) {
            return out;  // shape mismatch (should not happen if consistent)
        }
    }
    ParityExpression lambda;
    lambda.constant = op.sign_bit();
    for (const auto& [s, a] : flexible) {
        Axis got;
        if (op.axis_at(s, &got)) {
            if (got != a) {
                return out;
            }
            lambda ^= ParityExpression{0, {s}};
        }
    }
    for (const auto& [s, axis] : op.factors()) {
        (void)axis;
        if (!pinned.count(s) && !flexible.count(s)) {
            return out;  // stray support
        }
    }
    out.op = op;
    out.lambda = lambda;
    out.found = true;
    return out;
}

}  // namespace oneway
