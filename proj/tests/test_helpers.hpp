// Shared helpers for the unit suites.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "oneway/pauli.hpp"
#include "oracle.hpp"

namespace testutil {

// Dense matrix of a PauliProduct over an explicit site order (site i owns
// bit n-1-i), built with the naive oracle only.
inline oracle::Mat pauli_matrix(const oneway::PauliProduct& p,
                                const std::vector<oneway::Site>& order) {
    oracle::Mat m = oracle::identity(1);
    for (const auto& s : order) {
        oneway::Axis a;
        char c = p.axis_at(s, &a) ? oneway::axis_char(a) : 'I';
        m = oracle::kron(m, oracle::pauli(c));
    }
    static const oracle::cd IPOW[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return oracle::scale(IPOW[p.phase_exp()], m);
}

inline oneway::PauliProduct random_pauli(std::mt19937_64& rng,
                                         const std::vector<oneway::Site>& sites) {
    oneway::PauliProduct p;
    for (const auto& s : sites) {
        switch (rng() % 4) {
            case 0:
                break;
            case 1:
                p = multiply(p, oneway::PauliProduct::single(s, oneway::Axis::X));
                break;
            case 2:
                p = multiply(p, oneway::PauliProduct::single(s, oneway::Axis::Y));
                break;
            case 3:
                p = multiply(p, oneway::PauliProduct::single(s, oneway::Axis::Z));
                break;
        }
    }
    return p.with_phase_exp(static_cast<int>(rng() % 4));
}

}  // namespace testutil
