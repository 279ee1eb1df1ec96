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
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "toric_oracle.hpp"

using namespace qmagic;
using qmagic::testing::crossing_oracle_exponent;

namespace {

cplx omega_pow(i64 q, i64 k) { return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / q); }

// Applies a Pauli label to a state vector by index arithmetic.
Vec apply_pauli(const PauliLabel &P, const Vec &psi) {
    Vec out = Vec::Zero(psi.size());
    for (i64 j = 0; j < psi.size(); ++j) {
        i64 t = j, k = 0, stride = 1, ph = 0;
        for (int i = 0; i < P.n; ++i) {
            i64 kd = (t % P.q + P.b[i]) % P.q;
            t /= P.q;
            ph += P.a[i] * kd;
            k += kd * stride;
            stride *= P.q;
        }
        out(k) += omega2q_pow(P.q, P.c + 2 * mod(ph, P.q)) * psi(j);
    }
    return out;
}

Vec project_onto(const StabilizerGroup &G, Vec psi) {
    for (const auto &g : G.generators) {
        Vec acc = Vec::Zero(psi.size()), cur = psi;
        i64 d = order(g);
        for (i64 k = 0; k < d; ++k) {
            acc += cur;
            cur = apply_pauli(g, cur);
        }
        psi = acc / static_cast<double>(d);
    }
    return psi;
}

// Random walk of the given length on the primal or dual graph.
StringPath random_walk(const ToricLattice &lat, bool dual, int start, int len, std::mt19937_64 &rng) {
    StringPath p{dual, start, {}};
    int cur = start;
    for (int s = 0; s < len; ++s) {
        std::vector<std::pair<int, int>> opts;
        if (dual) {
            for (auto [e, sg] : lat.boundary(cur)) opts.push_back({e, sg});
        } else {
            for (auto [e, sg] : lat.star(cur)) opts.push_back({e, sg});
        }
        auto step = opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)];
        p.steps.push_back(step);
        cur = path_end(lat, p);
    }
    return p;
}

}  // namespace

TEST(ToricBuild, GroupOrders) {
    ToricCode c = build_toric(2, 2, 2);
    EXPECT_EQ(c.lattice.num_edges(), 8);
    EXPECT_EQ(c.group.order, 64);
    EXPECT_EQ(build_toric(3, 2, 2).group.order, ipow(3, 6));
    EXPECT_EQ(build_toric(3, 3, 3).group.order, ipow(3, 16));
    EXPECT_EQ(build_toric(4, 2, 3).group.order, ipow(4, 10));
}

TEST(ToricBuild, IncidenceAndCommutation) {
    for (i64 q : {2, 3, 5}) {
        ToricCode c = build_toric(q, 3, 2);
        const auto &lat = c.lattice;
        std::vector<int> in_star(lat.num_edges()), in_boundary(lat.num_edges());
        for (int v = 0; v < lat.num_vertices(); ++v) {
            for (auto [e, s] : lat.star(v)) ++in_star[e];
            for (auto [e, s] : lat.boundary(v)) ++in_boundary[e];
        }
        for (int e = 0; e < lat.num_edges(); ++e) {
            EXPECT_EQ(in_star[e], 2);
            EXPECT_EQ(in_boundary[e], 2);
        }
        for (const auto &g : c.group.generators) {
            for (const auto &h : c.group.generators) EXPECT_EQ(commutation_exponent(g, h), 0);
        }
    }
    EXPECT_THROW(build_toric(2, 1, 3), Error);
    EXPECT_THROW(build_toric(2, 9, 9), Error);
}

TEST(ToricGround, DenseGroundSpaceDimension) {
    ToricCode c = build_toric(2, 2, 2);
    Mat P = sps_dense_product(c.group);
    Eigen::SelfAdjointEigenSolver<Mat> es(P);
    int rank = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) rank += es.eigenvalues()(i) > 1e-9;
    EXPECT_EQ(rank, 4);
}

TEST(ToricGround, StabilizedAndOrthogonalSectors) {
    for (i64 q : {2, 3}) {
        ToricCode c = build_toric(q, 2, 2);
        std::vector<Vec> states;
        for (i64 s1 = 0; s1 < q; ++s1) {
            for (i64 s2 = 0; s2 < q; ++s2) {
                Vec psi = ground_state(c, {s1, s2}).amp;
                for (const auto &g : c.group.generators) {
                    EXPECT_NEAR(std::abs(psi.dot(apply_pauli(g, psi)) - 1.0), 0, 1e-10);
                }
                auto [row, col] = logical_z_loops(c.lattice);
                EXPECT_NEAR(std::abs(psi.dot(apply_pauli(row, psi)) - omega_pow(q, s1)), 0, 1e-10);
                EXPECT_NEAR(std::abs(psi.dot(apply_pauli(col, psi)) - omega_pow(q, s2)), 0, 1e-10);
                states.push_back(psi);
            }
        }
        for (std::size_t i = 0; i < states.size(); ++i) {
            for (std::size_t j = i + 1; j < states.size(); ++j) EXPECT_NEAR(std::abs(states[i].dot(states[j])), 0, 1e-12);
        }
    }
}

TEST(ToricGround, ProjectorColumnOracle) {
    std::mt19937_64 rng(11);
    ToricCode c = build_toric(3, 2, 2);
    for (auto sector : {std::pair<i64, i64>{0, 0}, {1, 2}}) {
        Vec proj = project_onto(ground_state_group(c, sector), qmagic::testing::random_vector(rng, ipow(3, 8)));
        Vec psi = ground_state(c, sector).amp;
        EXPECT_NEAR(std::abs(psi.dot(proj.normalized())), 1.0, 1e-10);
    }
}

TEST(ToricGround, DiskReductionIsSupportedSubgroupState) {
    ToricCode c = build_toric(2, 2, 2);
    DenseState psi = ground_state(c, {0, 0});
    StabilizerGroup G = ground_state_group(c, {0, 0});
    const auto &lat = c.lattice;
    std::vector<Region> disks;
    Region plaq, star;
    for (auto [e, s] : lat.boundary(lat.plaquette(0, 0))) plaq.push_back(e);
    for (auto [e, s] : lat.star(lat.vertex(1, 1))) star.push_back(e);
    disks.push_back(plaq);
    disks.push_back(star);
    disks.push_back({lat.h(0, 0), lat.v(1, 0)});
    for (auto d : disks) {
        std::sort(d.begin(), d.end());
        Mat rho = partial_trace_pure(psi.amp, psi.n, psi.q, d);
        Mat sps = sps_dense(restrict_to(supported_subgroup(G, d), d));
        EXPECT_LT((rho - sps).norm(), 1e-10);
    }
}

TEST(AnyonString, TrivialTypeIsIdentity) {
    ToricCode c = build_toric(3, 3, 3);
    SMatrixLayout L = default_smatrix_layout(c.lattice);
    EXPECT_TRUE(anyon_string(c.lattice, {0, 0}, L.v_lower).is_identity_up_to_phase());
}

TEST(AnyonString, NoncontractibleLoopIsLogical) {
    ToricCode c = build_toric(3, 3, 3);
    const auto &lat = c.lattice;
    AnyonRoute r;
    r.primal = {false, lat.vertex(0, 0), {{lat.h(0, 0), 1}, {lat.h(1, 0), 1}, {lat.h(2, 0), 1}}};
    r.dual = {true, lat.plaquette(0, 0), {{lat.v(1, 0), 1}, {lat.v(2, 0), 1}, {lat.v(0, 0), 1}}};
    EXPECT_EQ(path_end(lat, r.primal), lat.vertex(0, 0));
    EXPECT_EQ(path_end(lat, r.dual), lat.plaquette(0, 0));
    PauliLabel W = anyon_string(lat, {1, 2}, r);
    for (const auto &g : c.group.generators) EXPECT_EQ(commutation_exponent(W, g), 0);
    EXPECT_EQ(member(c.group, W), Membership::Absent);
}

TEST(AnyonString, OnlyEndpointsAreExcited) {
    std::mt19937_64 rng(12);
    for (auto [q, Lx, Ly] : {std::tuple<i64, int, int>{2, 2, 2}, {3, 3, 3}, {5, 3, 2}}) {
        ToricCode c = build_toric(q, Lx, Ly);
        const auto &lat = c.lattice;
        const int nv = lat.num_vertices();
        for (int trial = 0; trial < 40; ++trial) {
            AnyonRoute r;
            r.primal = random_walk(lat, false, trial % nv, 1 + trial % 5, rng);
            r.dual = random_walk(lat, true, (3 * trial) % nv, 1 + trial % 4, rng);
            AnyonType t{1 + trial % (q - 1), 1 + (trial / 2) % (q - 1)};
            PauliLabel W = anyon_string(lat, t, r);
            int ve = path_end(lat, r.primal), pe = path_end(lat, r.dual);
            for (int v = 0; v < nv; ++v) {
                i64 k = commutation_exponent(W, c.group.generators[v]);
                i64 expect = 0;
                if (v == r.primal.start) expect += t.a;
                if (v == ve) expect -= t.a;
                EXPECT_EQ(k, mod(expect, q)) << "vertex " << v;
            }
            for (int p = 0; p < nv; ++p) {
                i64 k = commutation_exponent(W, c.group.generators[nv + p]);
                i64 expect = 0;
                if (p == r.dual.start) expect -= t.b;
                if (p == pe) expect += t.b;
                EXPECT_EQ(k, mod(expect, q)) << "plaquette " << p;
            }
        }
    }
}

TEST(AnyonString, InvalidPathRejected) {
    ToricCode c = build_toric(2, 3, 3);
    const auto &lat = c.lattice;
    AnyonRoute r;
    r.primal = {false, lat.vertex(0, 0), {{lat.h(1, 1), 1}}};
    EXPECT_THROW(anyon_string(lat, {1, 0}, r), Error);
    r.primal = {false, lat.vertex(0, 0), {{lat.h(0, 0), -1}}};
    EXPECT_THROW(anyon_string(lat, {1, 0}, r), Error);
    AnyonRoute swapped;
    swapped.primal.dual = true;
    EXPECT_THROW(anyon_string(lat, {1, 0}, swapped), Error);
}

TEST(SMatrix, Examples) {
    ToricCode c2 = build_toric(2, 2, 3);
    EXPECT_NEAR(std::abs(s_matrix_element(c2, {1, 0}, {0, 0}) - 1.0), 0, 1e-12);
    EXPECT_NEAR(std::abs(s_matrix_element(c2, {1, 0}, {0, 1}) + 1.0), 0, 1e-12);
    ToricCode c3 = build_toric(3, 2, 3);
    cplx s = s_matrix_element(c3, {1, 0}, {0, 1});
    EXPECT_NEAR(std::abs(s * s * s - 1.0), 0, 1e-12);
    EXPECT_GT(std::abs(s - 1.0), 0.5);
    EXPECT_THROW(s_matrix_element(build_toric(2, 2, 2), {1, 0}, {0, 1}), Error);
}

TEST(SMatrix, DenseRouteAgrees) {
    for (auto [q, Lx, Ly] : {std::tuple<i64, int, int>{2, 2, 3}, {2, 3, 3}, {3, 2, 3}, {3, 3, 3}}) {
        ToricCode c = build_toric(q, Lx, Ly);
        for (i64 i = 0; i < q * q; ++i) {
            for (i64 j = 0; j < q * q; ++j) {
                AnyonType t1{i / q, i % q}, t2{j / q, j % q};
                EXPECT_NEAR(std::abs(s_matrix_element(c, t1, t2) - s_matrix_element_dense(c, t1, t2)), 0, 1e-10);
            }
        }
    }
}

TEST(SMatrix, FullGroundStateRouteAgrees) {
    ToricCode c = build_toric(2, 2, 3);
    DenseState psi = ground_state(c, {0, 0});
    SMatrixLayout L = default_smatrix_layout(c.lattice);
    for (i64 i = 0; i < 4; ++i) {
        for (i64 j = 0; j < 4; ++j) {
            PauliLabel op = smatrix_operator(c.lattice, {i / 2, i % 2}, {j / 2, j % 2}, L);
            cplx dense = psi.amp.dot(apply_pauli(op, psi.amp));
            EXPECT_NEAR(std::abs(dense - s_matrix_element(c, {i / 2, i % 2}, {j / 2, j % 2})), 0, 1e-10);
        }
    }
}

TEST(SMatrix, CrossingCountOracleAndBilinearForm) {
    for (auto [q, Lx, Ly] : {std::tuple<i64, int, int>{2, 2, 3}, {2, 3, 3}, {3, 2, 3}, {3, 3, 3}, {4, 2, 3}, {5, 3, 3}}) {
        ToricCode c = build_toric(q, Lx, Ly);
        SMatrixLayout L = default_smatrix_layout(c.lattice);
        cplx em = s_matrix_element(c, {1, 0}, {0, 1});
        for (i64 i = 0; i < q * q; ++i) {
            for (i64 j = 0; j < q * q; ++j) {
                AnyonType t1{i / q, i % q}, t2{j / q, j % q};
                cplx s = s_matrix_element(c, t1, t2);
                EXPECT_NEAR(std::abs(s - omega_pow(q, crossing_oracle_exponent(L, t1, t2, q))), 0, 1e-10);
                EXPECT_NEAR(std::abs(s - std::pow(em, static_cast<double>(t1.a * t2.b + t1.b * t2.a))), 0, 1e-9);
            }
        }
    }
}

TEST(SMatrix, DeformedLowerPathSamePhase) {
    ToricCode c = build_toric(3, 3, 3);
    const auto &lat = c.lattice;
    SMatrixLayout L = default_smatrix_layout(lat);
    SMatrixLayout D = L;
    D.v_lower.dual = {true,
                      lat.plaquette(0, 0),
                      {{lat.v(0, 0), -1}, {lat.v(-1, 0), -1}, {lat.h(-2, 1), -1}, {lat.v(-1, 1), 1}}};
    EXPECT_EQ(path_end(lat, D.v_lower.dual), path_end(lat, L.v_lower.dual));
    for (i64 i = 0; i < 9; ++i) {
        for (i64 j = 0; j < 9; ++j) {
            AnyonType t1{i / 3, i % 3}, t2{j / 3, j % 3};
            EXPECT_NEAR(std::abs(s_matrix_element(c, t1, t2, L) - s_matrix_element(c, t1, t2, D)), 0, 1e-10);
        }
    }
}

TEST(Quantization, SmallTori) {
    for (auto [q, Lx, Ly] : {std::tuple<i64, int, int>{2, 2, 3}, {2, 3, 3}, {3, 2, 3}, {3, 3, 3}}) {
        QuantizationReport r = quantization_check(build_toric(q, Lx, Ly));
        EXPECT_TRUE(r.pass);
        EXPECT_EQ(r.phases.size(), static_cast<std::size_t>(q * q * q * q));
        EXPECT_LT(r.max_deviation, 1e-12);
        EXPECT_NE(r.em_exponent, 0);
    }
    QuantizationReport sub = quantization_check(build_toric(3, 2, 3), {{{1, 0}, {0, 1}}});
    EXPECT_EQ(sub.phases.size(), 1u);
}

TEST(Annulus, ExtremePointCounts) {
    for (auto [q, Lx, Ly, expect] :
         {std::tuple<i64, int, int, std::size_t>{2, 4, 4, 4}, {3, 4, 3, 9}, {2, 5, 3, 4}, {3, 4, 4, 9}}) {
        ToricCode c = build_toric(q, Lx, Ly);
        AnnulusReport r = annulus_extreme_points(c, edge_annulus(c.lattice, 1, 1));
        EXPECT_EQ(r.extreme.points.size(), expect);
        EXPECT_EQ(r.extreme.free_generators.size(), 2u);
        EXPECT_TRUE(r.count_ok);
        EXPECT_LT(r.max_commutator, 1e-12);
        EXPECT_TRUE(r.pauli_connected);
        EXPECT_TRUE(r.vacuum_is_reference);
        EXPECT_GT(r.min_match_fidelity, 1 - 1e-12);
        EXPECT_TRUE(r.matches_ok);
        EXPECT_TRUE(r.pass);
    }
}

TEST(Annulus, SmallTorusRejected) {
    EXPECT_THROW(edge_annulus(build_toric(3, 3, 3).lattice, 1, 1), Error);
}

TEST(Annulus, NonAnnulusRejected) {
    ToricCode c = build_toric(2, 4, 3);
    AnnulusGeometry g = edge_annulus(c.lattice, 0, 0);
    g.omega = {g.omega[0], g.omega[1]};
    g.balls = {};
    EXPECT_THROW(annulus_extreme_points(c, g), Error);
}

TEST(Annulus, MixturesDecomposeIntoExtremePoints) {
    std::mt19937_64 rng(13);
    ToricCode c = build_toric(2, 4, 4);
    AnnulusGeometry g = edge_annulus(c.lattice, 2, 1);
    AnnulusReport r = annulus_extreme_points(c, g);
    StabilizerGroup ref = ground_state_group(c, {0, 0});
    std::vector<Mat> excited;
    for (i64 a = 0; a < 2; ++a) {
        for (i64 b = 0; b < 2; ++b) {
            StabilizerGroup G = conjugate_group(ref, anyon_string(c.lattice, {a, b}, g.crossing));
            excited.push_back(sps_dense(restrict_to(supported_subgroup(G, g.omega), g.omega)));
        }
    }
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> w(4);
        double sum = 0;
        for (auto &x : w) sum += (x = u(rng));
        Mat rho = Mat::Zero(excited[0].rows(), excited[0].cols());
        for (int t = 0; t < 4; ++t) rho += (w[t] / sum) * excited[t];
        Mat mix = Mat::Zero(rho.rows(), rho.cols());
        double total = 0;
        for (std::size_t i = 0; i < r.extreme.points.size(); ++i) {
            Mat sigma = sps_dense(r.extreme.points[i].group);
            double rank = 1.0 / std::real((sigma * sigma).trace());
            double alpha = std::real((rho * sigma).trace()) * rank;
            EXPECT_GE(alpha, -1e-12);
            EXPECT_LE(alpha, 1 + 1e-12);
            auto m = r.matched[i];
            EXPECT_NEAR(alpha, w[m.a * 2 + m.b] / sum, 1e-10);
            total += alpha;
            mix += alpha * sigma;
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
        EXPECT_LT(trace_distance(rho, mix), 1e-9);
    }
}
