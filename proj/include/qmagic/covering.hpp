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

#include <optional>
#include <vector>

#include "qmagic/ring.hpp"
#include "qmagic/stabilizer.hpp"

namespace qmagic {

// Phase-free maximal isotropic subgroups of Z_q^{2n}; each member has n generators (a | b).
struct CoverFamily {
    i64 q = 2;
    int n = 1;
    std::vector<std::vector<std::vector<i64>>> members;
};

CoverFamily cover_prime_power(i64 p, int r, int n);
CoverFamily cover_composite(i64 q, int n);

// q^n * prod_j (1 + p_j^{-n}), as an exact integer.
i64 cover_size_formula(i64 q, int n);

struct CoverReport {
    bool pass = false;
    bool covers = false;
    bool members_ok = false;
    bool size_ok = false;
    i64 size = 0;
    i64 expected_size = 0;
    std::optional<std::vector<i64>> uncovered;  // witness vector when coverage fails
    std::optional<std::size_t> bad_member;      // first non-isotropic or wrong-order member
};

CoverReport verify_cover(const CoverFamily &c, i64 budget = 1 << 22);

// Index of the member designated by the covering argument for a prime-power cover:
// write (x, y) = p^k (x0, y0); E_t with t = y0 / x0 if x0 is a unit, else F_s with s = x0 / y0.
std::size_t designated_member(const CoverFamily &c, const std::vector<i64> &v);

StabilizerGroup cover_member_group(const CoverFamily &c, std::size_t idx);

double lr_upper_bound(int n, i64 q);

}  // namespace qmagic
