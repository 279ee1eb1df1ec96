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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qmagic/lattice.hpp"

using namespace qmagic;

namespace {

// Closure of a generating set in Z_q^N by repeated addition.
std::set<std::vector<i64>> closure(const std::vector<std::vector<i64>> &gens, int N, i64 q) {
    std::set<std::vector<i64>> seen{std::vector<i64>(N, 0)};
    std::vector<std::vector<i64>> frontier{std::vector<i64>(N, 0)};
    while (!frontier.empty()) {
        std::vector<std::vector<i64>> next;
        for (const auto &v : frontier) {
            for (const auto &g : gens) {
                std::vector<i64> w(N);
                for (int i = 0; i < N; ++i) w[i] = (v[i] + g[i]) % q;
                if (seen.insert(w).second) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

std::vector<std::vector<i64>> random_rows(std::mt19937_64 &rng, int k, int N, i64 q) {
    std::uniform_int_distribution<i64> d(0, q - 1);
    std::vector<std::vector<i64>> rows(k, std::vector<i64>(N));
    for (auto &r : rows) {
        for (auto &x : r) x = d(rng);
    }
    return rows;
}

}  // namespace

TEST(Lattice, OrderAndMembershipMatchClosure) {
    std::mt19937_64 rng(1);
    for (i64 q : {2, 3, 4, 6, 8, 9, 12}) {
        for (int rep = 0; rep < 10; ++rep) {
            int N = 3;
            auto rows = random_rows(rng, 1 + rep % 3, N, q);
            if (q >= 8) {
                for (auto &r : rows) {
                    for (auto &x : r) x = (x / 2) * 2;
                }
            }
            ModLattice L = hermite_mod(rows, N, q);
            auto span = closure(rows, N, q);
            EXPECT_EQ(L.subgroup_order(), static_cast<i64>(span.size()));
            std::uniform_int_distribution<i64> d(0, q - 1);
            for (int t = 0; t < 30; ++t) {
                std::vector<i64> v(N);
                for (auto &x : v) x = d(rng);
                EXPECT_EQ(L.contains(v), span.count(v) == 1);
            }
            EXPECT_EQ(hermite_mod(L.rows, N, q), L);
        }
    }
}

TEST(Lattice, KernelMatchesBruteForce) {
    std::mt19937_64 rng(2);
    for (i64 q : {4, 6}) {
        auto rows = random_rows(rng, 3, 2, q);
        auto ker = kernel_mod(rows, {0, 1}, q);
        auto span = closure(ker, 3, q);
        std::set<std::vector<i64>> brute;
        for (i64 x0 = 0; x0 < q; ++x0) {
            for (i64 x1 = 0; x1 < q; ++x1) {
                for (i64 x2 = 0; x2 < q; ++x2) {
                    bool zero = true;
                    for (int c = 0; c < 2; ++c) zero = zero && mod(x0 * rows[0][c] + x1 * rows[1][c] + x2 * rows[2][c], q) == 0;
                    if (zero) brute.insert({x0, x1, x2});
                }
            }
        }
        EXPECT_EQ(span, brute);
    }
}

TEST(Lattice, SolveLeft) {
    std::mt19937_64 rng(3);
    for (i64 q : {2, 4, 6, 9}) {
        for (int rep = 0; rep < 20; ++rep) {
            auto rows = random_rows(rng, 2, 3, q);
            auto span = closure(rows, 3, q);
            std::uniform_int_distribution<i64> d(0, q - 1);
            std::vector<i64> t{d(rng), d(rng), d(rng)};
            auto x = solve_left_mod(rows, t, q);
            EXPECT_EQ(x.has_value(), span.count(t) == 1);
            if (x) {
                for (int c = 0; c < 3; ++c) EXPECT_EQ(mod((*x)[0] * rows[0][c] + (*x)[1] * rows[1][c], q), t[c]);
            }
        }
    }
}
