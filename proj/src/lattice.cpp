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

#include "qmagic/lattice.hpp"

#include <algorithm>
#include <tuple>

namespace qmagic {

namespace {

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
std::tuple<i64, i64, i64> ext_gcd(i64 a, i64 b) {
    i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i64 qt = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - qt * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

bool is_zero(const std::vector<i64> &v) {
    return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

void axpy(std::vector<i64> &y, i64 f, const std::vector<i64> &x, i64 q) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod(y[i] + f * x[i], q);
}

}  // namespace

ModLattice hermite_mod(const std::vector<std::vector<i64>> &input, int N, i64 q) {
    ModLattice L;
    L.q = q;
    L.N = N;
    std::vector<std::vector<i64>> pending;
    for (const auto &r : input) {
        std::vector<i64> v(N);
        for (int i = 0; i < N; ++i) v[i] = mod(r[i], q);
        if (!is_zero(v)) pending.push_back(std::move(v));
    }
    for (int col = 0; col < N; ++col) {
        std::vector<i64> pivot;
        std::vector<std::vector<i64>> rest;
        for (auto &r : pending) {
            if (r[col] == 0) {
                rest.push_back(std::move(r));
                continue;
            }
            if (pivot.empty()) {
                pivot = std::move(r);
                continue;
            }
            // Unimodular 2x2 step clearing r[col] against the pivot.
            auto [g, s, t] = ext_gcd(pivot[col], r[col]);
            i64 ap = pivot[col] / g, br = r[col] / g;
            std::vector<i64> np(N), nr(N);
            for (int i = 0; i < N; ++i) {
                np[i] = mod(s * pivot[i] + t * r[i], q);
                nr[i] = mod(br * pivot[i] - ap * r[i], q);
            }
            pivot = std::move(np);
            if (!is_zero(nr)) rest.push_back(std::move(nr));
        }
        if (!pivot.empty()) {
            auto [g, s, t] = ext_gcd(pivot[col], q);
            (void)t;
            std::vector<i64> annihilated(N);
            for (int i = 0; i < N; ++i) annihilated[i] = mod((q / g) * pivot[i], q);
            for (int i = 0; i < N; ++i) pivot[i] = mod(s * pivot[i], q);
            if (!is_zero(annihilated)) rest.push_back(std::move(annihilated));
            L.rows.push_back(std::move(pivot));
            L.pivots.push_back(col);
        }
        pending = std::move(rest);
    }
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t j = 0; j < L.rows.size(); ++j) {
        int pc = L.pivots[j];
        i64 g = L.rows[j][pc];
        for (std::size_t i = 0; i < j; ++i) {
            i64 f = L.rows[i][pc] / g;
            if (f != 0) axpy(L.rows[i], -f, L.rows[j], q);
        }
    }
    return L;
}

i64 ModLattice::subgroup_order() const {
    i64 ord = 1;
    for (std::size_t j = 0; j < rows.size(); ++j) ord *= q / rows[j][pivots[j]];
    return ord;
}

std::vector<i64> ModLattice::reduce(std::vector<i64> v) const {
    for (auto &x : v) x = mod(x, q);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        int pc = pivots[j];
        i64 g = rows[j][pc];
        if (v[pc] % g != 0) continue;
        i64 f = v[pc] / g;
        if (f != 0) axpy(v, -f, rows[j], q);
    }
    return v;
}

bool ModLattice::contains(const std::vector<i64> &v) const { return is_zero(reduce(v)); }

std::vector<std::vector<i64>> kernel_mod(const std::vector<std::vector<i64>> &rows, const std::vector<int> &cols,
                                         i64 q) {
    const int k = static_cast<int>(rows.size());
    const int m = static_cast<int>(cols.size());
    std::vector<std::vector<i64>> aug;
    for (int i = 0; i < k; ++i) {
        std::vector<i64> r(m + k, 0);
        for (int j = 0; j < m; ++j) r[j] = rows[i][cols[j]];
        r[m + i] = 1;
        aug.push_back(std::move(r));
    }
    ModLattice L = hermite_mod(aug, m + k, q);
    std::vector<std::vector<i64>> out;
    for (std::size_t j = 0; j < L.rows.size(); ++j) {
        if (L.pivots[j] < m) continue;
        out.emplace_back(L.rows[j].begin() + m, L.rows[j].end());
    }
    return out;
}

std::optional<std::vector<i64>> solve_left_mod(const std::vector<std::vector<i64>> &rows,
                                               const std::vector<i64> &target, i64 q) {
    const int k = static_cast<int>(rows.size());
    const int N = static_cast<int>(target.size());
    std::vector<std::vector<i64>> aug;
    for (int i = 0; i < k; ++i) {
        std::vector<i64> r(N + k, 0);
        for (int j = 0; j < N; ++j) r[j] = rows[i][j];
        r[N + i] = 1;
        aug.push_back(std::move(r));
    }
    ModLattice L = hermite_mod(aug, N + k, q);
    std::vector<i64> v(N + k, 0);
    for (int j = 0; j < N; ++j) v[j] = mod(target[j], q);
    for (std::size_t j = 0; j < L.rows.size(); ++j) {
        int pc = L.pivots[j];
        if (pc >= N) break;
        i64 g = L.rows[j][pc];
        if (v[pc] % g != 0) return std::nullopt;
        axpy(v, -(v[pc] / g), L.rows[j], q);
    }
    for (int j = 0; j < N; ++j) {
        if (v[j] != 0) return std::nullopt;
    }
    std::vector<i64> x(k);
    for (int i = 0; i < k; ++i) x[i] = mod(-v[N + i], q);
    return x;
}

}  // namespace qmagic
