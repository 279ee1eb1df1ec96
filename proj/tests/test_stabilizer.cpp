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

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "qmagic/stabilizer.hpp"

using namespace qmagic;
using qmagic::testing::random_independent_tableau;

namespace {

PauliLabel Z(int n, i64 q, int s, i64 e = 1) { return pauli_single(n, q, s, e, 0); }
PauliLabel X(int n, i64 q, int s, i64 e = 1) { return pauli_single(n, q, s, 0, e); }

PauliLabel times(const PauliLabel &P, const PauliLabel &Q) { return compose(P, Q); }

std::vector<PauliLabel> all_labels(int n, i64 q) {
    std::vector<PauliLabel> out;
    i64 total = ipow(q, 2 * n);
    for (i64 idx = 0; idx < total; ++idx) {
        std::vector<i64> v(2 * n);
        i64 t = idx;
        for (auto &x : v) {
            x = t % q;
            t /= q;
        }
        out.push_back(pauli_from_vector(n, q, v));
    }
    return out;
}

void add_ray(std::vector<Vec> &rays, const Vec &v) {
    for (const auto &r : rays) {
        if (std::abs(r.dot(v)) > 1 - 1e-8) return;
    }
    rays.push_back(v.normalized());
}

// Pure stabilizer states as joint eigenvectors of commuting Pauli pairs, found with a dense eigensolver.
std::vector<Vec> brute_force_pure_states(int n, i64 q) {
    std::vector<Vec> rays;
    auto labels = all_labels(n, q);
    for (const auto &P : labels) {
        for (const auto &Q : labels) {
            if (commutation_exponent(P, Q) != 0) continue;
            Mat M = to_dense(P) + std::sqrt(2.0) * std::numbers::e * to_dense(Q);
            Eigen::ComplexEigenSolver<Mat> es(M);
            const auto &vals = es.eigenvalues();
            for (int i = 0; i < vals.size(); ++i) {
                bool simple = true;
                for (int j = 0; j < vals.size(); ++j) simple = simple && (i == j || std::abs(vals[i] - vals[j]) > 1e-6);
                if (simple) add_ray(rays, es.eigenvectors().col(i));
            }
        }
    }
    return rays;
}

}  // namespace

TEST(Validate, Examples) {
    EXPECT_EQ(validate({Z(1, 2, 0)}, 1, 2).order, 2);
    auto bell = validate({times(X(2, 2, 0), X(2, 2, 1)), times(Z(2, 2, 0), Z(2, 2, 1))}, 2, 2);
    EXPECT_EQ(bell.order, 4);
    EXPECT_TRUE(bell.independent);
    PauliLabel minusZ = with_phase(Z(1, 2, 0), 2);
    try {
        validate({Z(1, 2, 0), minusZ}, 1, 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InconsistentPhase);
    }
    try {
        validate({Z(1, 2, 0), X(1, 2, 0)}, 1, 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoncommutingPair);
    }
    // ZX squares to -I for qubits, so it needs the phase i.
    EXPECT_THROW(validate({times(Z(1, 2, 0), X(1, 2, 0))}, 1, 2), Error);
    EXPECT_EQ(validate({with_phase(times(Z(1, 2, 0), X(1, 2, 0)), 1)}, 1, 2).order, 2);
    auto dep = validate({Z(1, 4, 0), Z(1, 4, 0, 2)}, 1, 4);
    EXPECT_EQ(dep.order, 4);
    EXPECT_FALSE(dep.independent);
}

TEST(Membership, Examples) {
    auto S = validate({Z(1, 2, 0)}, 1, 2);
    EXPECT_EQ(member(S, Z(1, 2, 0)), Membership::PhaseMatch);
    EXPECT_EQ(member(S, with_phase(Z(1, 2, 0), 2)), Membership::UpToPhase);
    EXPECT_EQ(member(S, X(1, 2, 0)), Membership::Absent);
    EXPECT_EQ(group_order(S), 2);
}

TEST(SupportedSubgroup, Examples) {
    auto zz = validate({times(Z(2, 2, 0), Z(2, 2, 1))}, 2, 2);
    EXPECT_EQ(supported_subgroup(zz, {0}).order, 1);
    auto zi = validate({Z(2, 2, 0), Z(2, 2, 1)}, 2, 2);
    auto sub = supported_subgroup(zi, {0});
    EXPECT_EQ(sub.order, 2);
    EXPECT_EQ(member(sub, Z(2, 2, 0)), Membership::PhaseMatch);
    EXPECT_EQ(member(sub, Z(2, 2, 1)), Membership::Absent);
}

TEST(SupportedSubgroup, MatchesExhaustiveScan) {
    std::mt19937_64 rng(4);
    for (i64 q : {2, 3, 4, 6}) {
        for (int rep = 0; rep < 8; ++rep) {
            auto gens = random_independent_tableau(rng, 2, q, 4);
            auto S = validate(gens, 2, q);
            auto sub = supported_subgroup(S, {1});
            i64 count = 0;
            for (const auto &e : group_elements(S)) {
                if (e.a[0] == 0 && e.b[0] == 0) {
                    ++count;
                    EXPECT_EQ(member(sub, e), Membership::PhaseMatch);
                }
            }
            EXPECT_EQ(sub.order, count);
        }
    }
}

TEST(LocallyGenerated, Examples) {
    auto S = validate({times(Z(3, 3, 0), Z(3, 3, 1, 2)), times(Z(3, 3, 1), Z(3, 3, 2, 2)),
                       times(times(X(3, 3, 0), X(3, 3, 1)), X(3, 3, 2))},
                      3, 3);
    EXPECT_EQ(locally_generated(S, {}).order, 1);
    EXPECT_TRUE(locally_generated(S, {{0, 1, 2}}).same_group(validate(S.canonical_generators(), 3, 3)));
    auto two_local = validate({times(Z(3, 2, 0), Z(3, 2, 1)), times(Z(3, 2, 1), Z(3, 2, 2))}, 3, 2);
    auto rec = locally_generated(two_local, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_TRUE(rec.same_group(validate(two_local.canonical_generators(), 3, 2)));
}

TEST(Commutant, Examples) {
    auto triv = trivial_group(1, 3);
    auto full = commutant_on_region(triv, {0});
    EXPECT_EQ(validate({}, 1, 3).order, 1);
    std::vector<std::vector<i64>> vecs;
    for (const auto &P : full) vecs.push_back(symplectic_vector(P));
    EXPECT_EQ(hermite_mod(vecs, 2, 3).subgroup_order(), 9);

    auto zg = validate({Z(1, 2, 0)}, 1, 2);
    auto cz = commutant_on_region(zg, {0});
    ASSERT_EQ(cz.size(), 1u);
    EXPECT_EQ(symplectic_vector(cz[0]), symplectic_vector(Z(1, 2, 0)));

    auto bell = validate({times(X(2, 2, 0), X(2, 2, 1)), times(Z(2, 2, 0), Z(2, 2, 1))}, 2, 2);
    EXPECT_TRUE(commutant_on_region(bell, {0}).empty());
    int scan = 0;
    for (const auto &P : all_labels(2, 2)) {
        if (P.a[1] != 0 || P.b[1] != 0) continue;
        bool c = true;
        for (const auto &g : bell.generators) c = c && commutation_exponent(P, g) == 0;
        scan += c;
    }
    EXPECT_EQ(scan, 1);
}

TEST(SpsDense, Examples) {
    EXPECT_LT((sps_dense(trivial_group(1, 2)) - Mat::Identity(2, 2) / 2.0).norm(), 1e-14);
    Mat zero = Mat::Zero(2, 2);
    zero(0, 0) = 1;
    EXPECT_LT((sps_dense(validate({Z(1, 2, 0)}, 1, 2)) - zero).norm(), 1e-14);
}

TEST(SpsDense, ProductFormAndInvariants) {
    std::mt19937_64 rng(9);
    for (i64 q : {2, 3, 4, 6}) {
        for (int rep = 0; rep < 10; ++rep) {
            auto gens = random_independent_tableau(rng, 2, q, 1 + rep % 3);
            auto S = validate(gens, 2, q);
            Mat rho = sps_dense(S);
            EXPECT_LT((rho - sps_dense_product(S)).norm(), 1e-10);
            EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
            EXPECT_LT((rho - rho.adjoint()).norm(), 1e-12);
            double rank = static_cast<double>(q * q) / S.order;
            EXPECT_LT((rho * rho - rho / rank).norm(), 1e-10);
            Eigen::SelfAdjointEigenSolver<Mat> es(rho);
            EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
        }
    }
}

TEST(Enumeration, CountsMatchBruteForce) {
    for (auto [n, q, expected] : std::vector<std::tuple<int, i64, std::size_t>>{{1, 2, 6}, {1, 3, 12}, {1, 6, 72}, {2, 2, 60}}) {
        auto states = pure_stabilizer_states(n, q);
        EXPECT_EQ(states.size(), expected);
        auto rays = brute_force_pure_states(n, q);
        EXPECT_EQ(rays.size(), expected);
        std::vector<Vec> mine;
        for (const auto &S : states) {
            EXPECT_EQ(S.order, ipow(q, n));
            Mat rho = sps_dense(S);
            Eigen::SelfAdjointEigenSolver<Mat> es(rho);
            Vec v = es.eigenvectors().col(rho.rows() - 1);
            EXPECT_NEAR(es.eigenvalues()(rho.rows() - 1), 1.0, 1e-10);
            add_ray(mine, v);
            bool found = false;
            for (const auto &r : rays) found = found || std::abs(r.dot(v)) > 1 - 1e-8;
            EXPECT_TRUE(found);
        }
        EXPECT_EQ(mine.size(), expected);
    }
}

TEST(Enumeration, QuditFourAndFive) {
    EXPECT_EQ(pure_stabilizer_states(1, 5).size(), 30u);
    // Z_4: 7 maximal isotropic subgroups of order 4, each with 4 phase versions.
    EXPECT_EQ(pure_stabilizer_states(1, 4).size(), 28u);
    EXPECT_EQ(all_stabilizer_projection_states(1, 2).size(), 7u);
}

TEST(Rephasing, Examples) {
    auto gens = std::vector<PauliLabel>{Z(1, 2, 0)};
    PauliLabel P = find_rephasing_pauli(gens, {{1}, {2}});
    EXPECT_EQ(P.b[0], 1);
    EXPECT_EQ(commutation_exponent(P, gens[0]), 1);
    PauliLabel I = find_rephasing_pauli(gens, {{0}, {2}});
    EXPECT_EQ(commutation_exponent(I, gens[0]), 0);
    EXPECT_THROW(find_rephasing_pauli({Z(1, 4, 0), Z(1, 4, 0, 2)}, {{0, 0}, {4, 2}}), Error);
}

TEST(Rephasing, AllTargetsVerifiedDensely) {
    std::mt19937_64 rng(21);
    for (i64 q : {2, 3, 4, 6}) {
        for (int rep = 0; rep < 6; ++rep) {
            auto gens = random_independent_tableau(rng, 2, q, 3);
            if (gens.empty()) continue;
            std::vector<i64> deltas;
            i64 combos = 1;
            for (const auto &g : gens) {
                deltas.push_back(order(g));
                combos *= deltas.back();
            }
            for (i64 idx = 0; idx < combos; ++idx) {
                PhaseAssignment pa{{}, deltas};
                i64 t = idx;
                for (i64 d : deltas) {
                    pa.u.push_back(t % d);
                    t /= d;
                }
                PauliLabel P = find_rephasing_pauli(gens, pa);
                Mat Pm = to_dense(P);
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    Mat g = to_dense(gens[i]);
                    cplx zeta = std::polar(1.0, 2 * std::numbers::pi * pa.u[i] / deltas[i]);
                    EXPECT_LT((Pm * g * Pm.adjoint() - zeta * g).norm(), 1e-10);
                }
            }
        }
    }
}

TEST(ExtremePoints, TrivialLogicalGroup) {
    auto S = validate({Z(2, 2, 0), Z(2, 2, 1)}, 2, 2);
    auto res = extreme_points(S, {0, 1}, {0}, {{0}});
    ASSERT_EQ(res.points.size(), 1u);
    EXPECT_TRUE(res.free_generators.empty());
    EXPECT_LT((sps_dense(res.points[0].group) - sps_dense(restrict_to(supported_subgroup(S, {0}), {0}))).norm(), 1e-12);
}

TEST(ExtremePoints, FreeGeneratorsYieldCommutingPoints) {
    // GHZ-like chain; region {0,1} with single-site balls leaves Z0Z1 free.
    auto S = validate({times(Z(3, 3, 0), Z(3, 3, 1, 2)), times(Z(3, 3, 1), Z(3, 3, 2, 2)),
                       times(times(X(3, 3, 0), X(3, 3, 1)), X(3, 3, 2))},
                      3, 3);
    auto res = extreme_points(S, {0, 1, 2}, {0, 1}, {{0}, {1}});
    EXPECT_EQ(res.free_generators.size(), 1u);
    EXPECT_EQ(res.points.size(), 3u);
    for (const auto &p1 : res.points) {
        for (const auto &p2 : res.points) {
            Mat A = sps_dense(p1.group), B = sps_dense(p2.group);
            EXPECT_LT((A * B - B * A).norm(), 1e-10);
        }
    }
    EXPECT_THROW(extreme_points(S, {0, 1}, {0, 2}, {}), Error);
}

TEST(Tableau, RoundTrip) {
    std::mt19937_64 rng(17);
    for (i64 q : {2, 3, 4, 6}) {
        auto gens = random_independent_tableau(rng, 3, q, 3);
        std::string text = write_tableau(gens, 3, q);
        int n = 0;
        i64 qq = 0;
        auto back = read_tableau(text, &n, &qq);
        EXPECT_EQ(back, gens);
        EXPECT_EQ(n, 3);
        EXPECT_EQ(qq, q);
        EXPECT_EQ(write_tableau(back, n, qq), text);
    }
    EXPECT_THROW(read_tableau("2 1 1\n0 1\n"), Error);
}
