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

#include "qmagic/common.hpp"

namespace qmagic {

// Echelon basis of the integer lattice spanned by a set of rows together with q*Z^N.
// Equivalently, a canonical generating set for a subgroup of Z_q^N.
// Row i has pivot column pivots[i] with pivot entry dividing q and zeros to its left;
// entries above each pivot are reduced modulo the pivot, so the form is unique.
struct ModLattice {
    i64 q = 2;
    int N = 0;
    std::vector<std::vector<i64>> rows;
    std::vector<int> pivots;

    // Size of the subgroup of Z_q^N.
    i64 subgroup_order() const;
    // Reduces v by the basis; the result is zero iff v is in the subgroup.
    std::vector<i64> reduce(std::vector<i64> v) const;
    bool contains(const std::vector<i64> &v) const;
    bool operator==(const ModLattice &o) const { return q == o.q && N == o.N && rows == o.rows; }
};

ModLattice hermite_mod(const std::vector<std::vector<i64>> &rows, int N, i64 q);

// Generators of { x in Z_q^k : sum_i x_i rows[i] restricted to `cols` == 0 mod q }.
// rows are vectors of length N and cols selects which coordinates must vanish.
std::vector<std::vector<i64>> kernel_mod(const std::vector<std::vector<i64>> &rows, const std::vector<int> &cols,
                                         i64 q);

// Finds x in Z_q^k with sum_i x_i rows[i] == target (mod q), or nullopt.
std::optional<std::vector<i64>> solve_left_mod(const std::vector<std::vector<i64>> &rows,
                                               const std::vector<i64> &target, i64 q);

}  // namespace qmagic
