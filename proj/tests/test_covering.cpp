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

#include <cmath>
#include <set>

#include "qmagic/covering.hpp"

using namespace qmagic;

namespace {

using VecSet = std::set<std::vector<i64>>;

// Brute-force span of a member: all Z_q-combinations of its generators.
VecSet span(const std::vector<std::vector<i64>> &gens, i64 q) {
    VecSet out;
    out.insert(std::vector<i64>(gens.empty() ? 0 : gens[0].size(), 0));
    for (const auto &g : gens) {
        VecSet next;
        for (const auto &v : out) {
            std::vector<i64> w = v;
            for (i64 k = 0; k < q; ++k) {
                next.insert(w);
                for (std::size_t i = 0; i < w.size(); ++i) w[i] = (w[i] + g[i]) % q;
            }
        }
        out = next;
    }
    return out;
}

std::vector<std::vector<i64>> all_vectors(int len, i64 q) {
    std::vector<std::vector<i64>> out;
    i64 total = 1;
    for (int i = 0; i < len; ++i) total *= q;
    for (i64 idx = 0; idx < total; ++idx) {
        std::vector<i64> v(len);
        i64 t = idx;
        for (auto &x : v) {
            x = t % q;
            t /= q;
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST(Cover, QubitMembersAreZXY) {
    CoverFamily c = cover_prime_power(2, 1, 1);
    ASSERT_EQ(c.members.size(), 3u);
    std::set<VecSet> got;
    for (const auto &m : c.members) got.insert(span(m, 2));
    std::set<VecSet> want = {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {{0, 0}, {1, 1}}};
    EXPECT_EQ(got, want);
}

TEST(Cover, MemberCounts) {
    EXPECT_EQ(cover_prime_power(2, 1, 1).members.size(), 3u);
    EXPECT_EQ(cover_prime_power(3, 1, 2).members.size(), 10u);
    EXPECT_EQ(cover_prime_power(2, 2, 1).members.size(), 6u);
    EXPECT_EQ(cover_composite(6, 1).members.size(), 12u);
    EXPECT_EQ(cover_composite(2, 2).members.size(), 5u);
    EXPECT_EQ(cover_size_formula(6, 1), 12);
    EXPECT_EQ(cover_size_formula(12, 1), 6 * 4);
}

TEST(Cover, InvalidPrime) {
    try {
        cover_prime_power(4, 1, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidPrime);
    }
}

TEST(Cover, PrimeReducesToPrimePower) {
    CoverFamily a = cover_composite(5, 1), b = cover_prime_power(5, 1, 1);
    EXPECT_EQ(a.members, b.members);
}

TEST(Cover, VerifyPassesForSmallFamilies) {
    struct Case {
        i64 p;
        int r, n;
    };
    for (Case k : {Case{2, 1, 1}, Case{2, 1, 2}, Case{2, 1, 3}, Case{3, 1, 1}, Case{3, 1, 2}, Case{2, 2, 1},
                   Case{2, 2, 2}, Case{2, 3, 1}, Case{3, 2, 1}, Case{5, 1, 1}, Case{5, 1, 2}, Case{7, 1, 1}}) {
        CoverFamily c = cover_prime_power(k.p, k.r, k.n);
        CoverReport rep = verify_cover(c);
        EXPECT_TRUE(rep.pass) << k.p << " " << k.r << " " << k.n;
        EXPECT_EQ(rep.size, ipow(k.p, k.n * k.r) + ipow(k.p, k.n * (k.r - 1)));
    }
    for (auto [q, n] : std::vector<std::pair<i64, int>>{{6, 1}, {6, 2}, {10, 1}, {12, 1}, {2, 2}}) {
        EXPECT_TRUE(verify_cover(cover_composite(q, n)).pass) << q << " " << n;
    }
}

TEST(Cover, IndependentUnionOracle) {
    for (auto [q, n] : std::vector<std::pair<i64, int>>{{6, 1}, {4, 1}, {2, 2}, {3, 2}}) {
        CoverFamily c = cover_composite(q, n);
        VecSet all;
        std::set<VecSet> distinct;
        for (const auto &m : c.members) {
            VecSet s = span(m, q);
            EXPECT_EQ(static_cast<i64>(s.size()), ipow(q, n));
            for (const auto &x : s) {
                for (const auto &y : s) {
                    i64 w = 0;
                    for (int i = 0; i < n; ++i) w += x[i] * y[n + i] - x[n + i] * y[i];
                    EXPECT_EQ(mod(w, q), 0);
                }
            }
            all.insert(s.begin(), s.end());
            distinct.insert(s);
        }
        EXPECT_EQ(static_cast<i64>(all.size()), ipow(q, 2 * n));
        EXPECT_EQ(distinct.size(), c.members.size());
    }
}

TEST(Cover, DeletedMemberFailsWithWitness) {
    CoverFamily c = cover_prime_power(2, 1, 2);
    c.members.erase(c.members.begin() + 2);
    CoverReport rep = verify_cover(c);
    EXPECT_FALSE(rep.pass);
    EXPECT_FALSE(rep.covers);
    EXPECT_FALSE(rep.size_ok);
    ASSERT_TRUE(rep.uncovered.has_value());
    for (const auto &m : c.members) EXPECT_EQ(span(m, 2).count(*rep.uncovered), 0u);
}

TEST(Cover, CorruptMemberIsReported) {
    CoverFamily c = cover_composite(6, 1);
    c.members[3][0] = {1, 0};
    c.members[3].push_back({0, 1});
    CoverReport rep = verify_cover(c);
    EXPECT_FALSE(rep.members_ok);
    ASSERT_TRUE(rep.bad_member.has_value());
    EXPECT_EQ(*rep.bad_member, 3u);
}

TEST(Cover, DesignatedMemberContainsVector) {
    for (auto [q, n] : std::vector<std::pair<i64, int>>{{2, 1}, {2, 2}, {3, 2}, {4, 1}, {4, 2}, {8, 1}, {9, 1}, {6, 1},
                                                        {12, 1}}) {
        CoverFamily c = cover_composite(q, n);
        std::vector<VecSet> spans;
        for (const auto &m : c.members) spans.push_back(span(m, q));
        for (const auto &v : all_vectors(2 * n, q)) {
            std::size_t idx = designated_member(c, v);
            ASSERT_LT(idx, c.members.size());
            EXPECT_EQ(spans[idx].count(v), 1u) << "q=" << q << " n=" << n;
        }
    }
}

TEST(Cover, MembersLiftToStabilizerGroups) {
    for (auto [q, n] : std::vector<std::pair<i64, int>>{{2, 2}, {4, 1}, {6, 1}, {3, 2}}) {
        CoverFamily c = cover_composite(q, n);
        for (std::size_t i = 0; i < c.members.size(); ++i) {
            StabilizerGroup S = cover_member_group(c, i);
            EXPECT_EQ(S.order, ipow(q, n));
            for (const auto &g : S.generators) EXPECT_EQ(pauli_power(g, order(g)).c, 0);
        }
    }
}

TEST(Cover, LrUpperBound) {
    set_log_base(2);
    EXPECT_NEAR(lr_upper_bound(1, 2), 1.25, 1e-12);
    EXPECT_NEAR(lr_upper_bound(2, 3), (2 + 1.0 / 8) * std::log2(3.0), 1e-12);
    EXPECT_LT(lr_upper_bound(1, 2), lr_upper_bound(2, 2));
    EXPECT_LT(lr_upper_bound(2, 2), lr_upper_bound(2, 3));
}

TEST(Cover, BudgetExceeded) {
    CoverFamily c = cover_prime_power(2, 1, 3);
    EXPECT_THROW(verify_cover(c, 10), Error);
}
