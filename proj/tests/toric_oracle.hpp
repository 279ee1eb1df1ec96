// Copyright 2026 The qmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>

#include "qmagic/toric.hpp"

namespace qmagic::testing {

// Per-edge (Z, X) exponents of a route, accumulated directly from its steps.
inline std::map<int, std::pair<i64, i64>> route_exponents(AnyonType t, const AnyonRoute &r, i64 q) {
    std::map<int, std::pair<i64, i64>> out;
    for (auto [e, s] : r.primal.steps) out[e].first = mod(out[e].first + t.a * s, q);
    for (auto [e, s] : r.dual.steps) out[e].second = mod(out[e].second + t.b * s, q);
    return out;
}

inline std::map<int, std::pair<i64, i64>> subtract(std::map<int, std::pair<i64, i64>> x,
                                                   const std::map<int, std::pair<i64, i64>> &y, i64 q) {
    for (auto [e, zx] : y) {
        x[e].first = mod(x[e].first - zx.first, q);
        x[e].second = mod(x[e].second - zx.second, q);
    }
    return x;
}

// Symplectic crossing number sum_e (z_P x_Q - x_P z_Q).
inline i64 crossing_number(const std::map<int, std::pair<i64, i64>> &P, const std::map<int, std::pair<i64, i64>> &Q,
                           i64 q) {
    i64 k = 0;
    for (auto [e, zx] : P) {
        auto it = Q.find(e);
        if (it == Q.end()) continue;
        k += zx.first * it->second.second - zx.second * it->second.first;
    }
    return mod(k, q);
}

// Exponent predicted by crossing the closed V loop with the lower W string.
inline i64 crossing_oracle_exponent(const SMatrixLayout &L, AnyonType t1, AnyonType t2, i64 q) {
    auto loop = subtract(route_exponents(t1, L.v_lower, q), route_exponents(t1, L.v_upper, q), q);
    return crossing_number(loop, route_exponents(t2, L.w_lower, q), q);
}

}  // namespace qmagic::testing
