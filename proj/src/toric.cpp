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

#include "qmagic/toric.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace qmagic {

namespace {

using SpMat = Eigen::SparseMatrix<cplx>;

constexpr int kMaxToricEdges = 128;
constexpr i64 kSparseLimit = i64{1} << 20;

int wrap(int v, int L) { return ((v % L) + L) % L; }

i64 sparse_dim(int n, i64 q) {
    i64 D = 1;
    for (int i = 0; i < n; ++i) {
        D *= q;
        if (D > kSparseLimit) throw Error(ErrorKind::DenseLimit, "region too large for sparse evaluation");
    }
    return D;
}

void pauli_triplets(const PauliLabel &P, i64 D, double w, std::vector<Eigen::Triplet<cplx>> &trips) {
    std::vector<cplx> roots(2 * P.q);
    for (i64 c = 0; c < 2 * P.q; ++c) roots[c] = w * omega2q_pow(P.q, c);
    for (i64 j = 0; j < D; ++j) {
        i64 t = j, k = 0, stride = 1, ph = 0;
        for (int i = 0; i < P.n; ++i) {
            i64 kd = (t % P.q + P.b[i]) % P.q;
            t /= P.q;
            ph += P.a[i] * kd;
            k += kd * stride;
            stride *= P.q;
        }
        trips.emplace_back(k, j, roots[mod(P.c + 2 * ph, 2 * P.q)]);
    }
}

SpMat sparse_pauli(const PauliLabel &P) {
    i64 D = sparse_dim(P.n, P.q);
    std::vector<Eigen::Triplet<cplx>> trips;
    trips.reserve(D);
    pauli_triplets(P, D, 1.0, trips);
    SpMat M(D, D);
    M.setFromTriplets(trips.begin(), trips.end());
    return M;
}

SpMat sps_sparse(const StabilizerGroup &S) {
    i64 D = sparse_dim(S.n, S.q);
    auto elems = group_elements(S);
    std::vector<Eigen::Triplet<cplx>> trips;
    trips.reserve(D * elems.size());
    for (const auto &g : elems) pauli_triplets(g, D, 1.0 / static_cast<double>(D), trips);
    SpMat M(D, D);
    M.setFromTriplets(trips.begin(), trips.end());
    M.prune(cplx(0.0));
    return M;
}

cplx sparse_trace_product(const SpMat &A, const SpMat &B) {
    if (A.nonZeros() > B.nonZeros()) return sparse_trace_product(B, A);
    cplx t = 0;
    for (Eigen::Index k = 0; k < A.outerSize(); ++k) {
        for (SpMat::InnerIterator it(A, k); it; ++it) t += it.value() * B.coeff(it.col(), it.row());
    }
    return t;
}

// Root fidelity of two normalized projectors that commute.
double commuting_sps_fidelity(const SpMat &rho, const SpMat &sigma) {
    double rs = std::real(sparse_trace_product(rho, sigma));
    double rr = std::real(sparse_trace_product(rho, rho));
    double ss = std::real(sparse_trace_product(sigma, sigma));
    return rs / std::sqrt(rr * ss);
}

cplx expectation_on(const StabilizerGroup &G, const PauliLabel &P) {
    auto v = symplectic_vector(P);
    if (!G.lattice.contains(v)) return 0.0;
    return omega2q_pow(G.q, P.c - group_element_with_vector(G, v).c);
}

Region union_support(const std::vector<PauliLabel> &ops) {
    std::set<int> s;
    for (const auto &P : ops) {
        for (int e : P.support()) s.insert(e);
    }
    return Region(s.begin(), s.end());
}

}  // namespace

int ToricLattice::h(int x, int y) const { return 2 * (wrap(x, Lx) + Lx * wrap(y, Ly)); }
int ToricLattice::v(int x, int y) const { return h(x, y) + 1; }
int ToricLattice::vertex(int x, int y) const { return wrap(x, Lx) + Lx * wrap(y, Ly); }
int ToricLattice::plaquette(int x, int y) const { return vertex(x, y); }

int ToricLattice::tail(int edge) const { return edge / 2; }

int ToricLattice::head(int edge) const {
    int site = edge / 2, x = site % Lx, y = site / Lx;
    return edge % 2 == 0 ? vertex(x + 1, y) : vertex(x, y + 1);
}

std::pair<int, int> ToricLattice::sides(int edge) const {
    int site = edge / 2, x = site % Lx, y = site / Lx;
    if (edge % 2 == 0) return {plaquette(x, y), plaquette(x, y - 1)};
    return {plaquette(x - 1, y), plaquette(x, y)};
}

std::vector<std::pair<int, int>> ToricLattice::star(int vtx) const {
    int x = vtx % Lx, y = vtx / Lx;
    return {{h(x, y), 1}, {v(x, y), 1}, {h(x - 1, y), -1}, {v(x, y - 1), -1}};
}

std::vector<std::pair<int, int>> ToricLattice::boundary(int p) const {
    int x = p % Lx, y = p / Lx;
    return {{h(x, y), 1}, {v(x + 1, y), 1}, {h(x, y + 1), -1}, {v(x, y), -1}};
}

ToricCode build_toric(i64 q, int Lx, int Ly) {
    if (q < 2) throw Error(ErrorKind::InvalidModulus, "toric code needs q >= 2");
    if (Lx < 2 || Ly < 2) throw Error(ErrorKind::OutOfRange, "torus sides must be at least 2");
    ToricLattice lat{q, Lx, Ly};
    const int n = lat.num_edges();
    if (n > kMaxToricEdges) throw Error(ErrorKind::BudgetExceeded, "torus has too many edges");
    std::vector<PauliLabel> gens;
    for (int vtx = 0; vtx < lat.num_vertices(); ++vtx) {
        PauliLabel A = pauli_identity(n, q);
        for (auto [e, s] : lat.star(vtx)) A.b[e] = mod(A.b[e] + s, q);
        gens.push_back(A);
    }
    for (int p = 0; p < lat.num_vertices(); ++p) {
        PauliLabel B = pauli_identity(n, q);
        for (auto [e, s] : lat.boundary(p)) B.a[e] = mod(B.a[e] + s, q);
        gens.push_back(B);
    }
    return {lat, validate(gens, n, q)};
}

int path_end(const ToricLattice &lat, const StringPath &path) {
    const int nodes = lat.num_vertices();
    if (path.start < 0 || path.start >= nodes) throw Error(ErrorKind::InvalidRegion, "path start out of range");
    int cur = path.start;
    for (auto [e, s] : path.steps) {
        if (e < 0 || e >= lat.num_edges() || (s != 1 && s != -1)) {
            throw Error(ErrorKind::InvalidRegion, "bad path step");
        }
        int from, to;
        if (path.dual) {
            auto [plus, minus] = lat.sides(e);
            from = s > 0 ? plus : minus;
            to = s > 0 ? minus : plus;
        } else {
            from = s > 0 ? lat.tail(e) : lat.head(e);
            to = s > 0 ? lat.head(e) : lat.tail(e);
        }
        if (from != cur) throw Error(ErrorKind::InvalidRegion, "path is not connected");
        cur = to;
    }
    return cur;
}

PauliLabel anyon_string(const ToricLattice &lat, AnyonType t, const AnyonRoute &route) {
    if (route.primal.dual || !route.dual.dual) throw Error(ErrorKind::InvalidRegion, "route paths on wrong graphs");
    const i64 q = lat.q;
    PauliLabel P = pauli_identity(lat.num_edges(), q);
    if (mod(t.a, q) != 0) {
        path_end(lat, route.primal);
        for (auto [e, s] : route.primal.steps) P.a[e] = mod(P.a[e] + t.a * s, q);
    }
    if (mod(t.b, q) != 0) {
        path_end(lat, route.dual);
        for (auto [e, s] : route.dual.steps) P.b[e] = mod(P.b[e] + t.b * s, q);
    }
    return P;
}

std::pair<PauliLabel, PauliLabel> logical_z_loops(const ToricLattice &lat) {
    PauliLabel row = pauli_identity(lat.num_edges(), lat.q), col = row;
    for (int x = 0; x < lat.Lx; ++x) row.a[lat.h(x, 0)] = 1;
    for (int y = 0; y < lat.Ly; ++y) col.a[lat.v(0, y)] = 1;
    return {row, col};
}

StabilizerGroup ground_state_group(const ToricCode &code, std::pair<i64, i64> sector) {
    auto gens = code.group.generators;
    auto [row, col] = logical_z_loops(code.lattice);
    gens.push_back(with_phase(row, mod(-2 * sector.first, 2 * code.lattice.q)));
    gens.push_back(with_phase(col, mod(-2 * sector.second, 2 * code.lattice.q)));
    return validate(gens, code.lattice.num_edges(), code.lattice.q);
}

DenseState ground_state(const ToricCode &code, std::pair<i64, i64> sector) {
    const ToricLattice &lat = code.lattice;
    const int n = lat.num_edges();
    const i64 q = lat.q;
    const i64 D = dense_dimension(n, q);
    // Uniform superposition of flat Z_q connections with the requested holonomies.
    Vec amp = Vec::Zero(D);
    std::vector<i64> j(n);
    for (i64 idx = 0; idx < D; ++idx) {
        i64 t = idx;
        for (int e = 0; e < n; ++e) {
            j[e] = t % q;
            t /= q;
        }
        bool flat = true;
        for (int p = 0; p < lat.num_vertices() && flat; ++p) {
            i64 flux = 0;
            for (auto [e, s] : lat.boundary(p)) flux += s * j[e];
            flat = mod(flux, q) == 0;
        }
        if (!flat) continue;
        i64 hr = 0, hc = 0;
        for (int x = 0; x < lat.Lx; ++x) hr += j[lat.h(x, 0)];
        for (int y = 0; y < lat.Ly; ++y) hc += j[lat.v(0, y)];
        if (mod(hr, q) == mod(sector.first, q) && mod(hc, q) == mod(sector.second, q)) amp(idx) = 1.0;
    }
    return make_state(n, q, amp.normalized());
}

SMatrixLayout default_smatrix_layout(const ToricLattice &lat) {
    if (lat.Lx < 2 || lat.Ly < 3) throw Error(ErrorKind::InvalidRegion, "S-matrix layout needs Lx >= 2 and Ly >= 3");
    auto V = [&](int x, int y) { return lat.vertex(x, y); };
    auto P = [&](int x, int y) { return lat.plaquette(x, y); };
    SMatrixLayout L;
    // The V pair runs from (vertex (1,1), plaquette (0,0)) to (vertex (0,2), plaquette (-1,1)).
    L.v_lower.primal = {false, V(1, 1), {{lat.h(0, 1), -1}, {lat.v(0, 1), 1}}};
    L.v_lower.dual = {true, P(0, 0), {{lat.v(0, 0), -1}, {lat.h(-1, 1), -1}}};
    L.v_upper.primal = {false, V(1, 1), {{lat.v(1, 1), 1}, {lat.h(0, 2), -1}}};
    L.v_upper.dual = {true, P(0, 0), {{lat.h(0, 1), -1}, {lat.v(0, 1), -1}}};
    // The W pair runs from (vertex (0,1), plaquette (0,1)) to (vertex (0,0), plaquette (0,0)).
    L.w_lower.primal = {false, V(0, 1), {{lat.v(0, 0), -1}}};
    L.w_lower.dual = {true, P(0, 1), {{lat.h(0, 1), 1}}};
    L.w_upper.primal = {false, V(0, 1), {{lat.h(-1, 1), -1}, {lat.v(-1, 0), -1}, {lat.h(-1, 0), 1}}};
    L.w_upper.dual = {true, P(0, 1), {{lat.v(0, 1), -1}, {lat.h(-1, 1), 1}, {lat.v(0, 0), 1}}};
    return L;
}

PauliLabel smatrix_operator(const ToricLattice &lat, AnyonType t1, AnyonType t2, const SMatrixLayout &layout) {
    PauliLabel vd = anyon_string(lat, t1, layout.v_lower), vu = anyon_string(lat, t1, layout.v_upper);
    PauliLabel wd = anyon_string(lat, t2, layout.w_lower), wu = anyon_string(lat, t2, layout.w_upper);
    if (path_end(lat, layout.v_lower.primal) != path_end(lat, layout.v_upper.primal) ||
        path_end(lat, layout.v_lower.dual) != path_end(lat, layout.v_upper.dual) ||
        path_end(lat, layout.w_lower.primal) != path_end(lat, layout.w_upper.primal) ||
        path_end(lat, layout.w_lower.dual) != path_end(lat, layout.w_upper.dual)) {
        throw Error(ErrorKind::InvalidRegion, "lower and upper routes must share endpoints");
    }
    return compose(adjoint(wu), compose(adjoint(vu), compose(vd, wd)));
}

cplx s_matrix_element(const ToricCode &code, AnyonType t1, AnyonType t2, const std::optional<SMatrixLayout> &layout) {
    SMatrixLayout L = layout ? *layout : default_smatrix_layout(code.lattice);
    PauliLabel op = smatrix_operator(code.lattice, t1, t2, L);
    cplx val = expectation_on(ground_state_group(code, {0, 0}), op);
    if (std::abs(std::abs(val) - 1.0) > 1e-9) throw Error(ErrorKind::Internal, "S-matrix phase is not unimodular");
    return val;
}

cplx s_matrix_element_dense(const ToricCode &code, AnyonType t1, AnyonType t2,
                            const std::optional<SMatrixLayout> &layout) {
    const ToricLattice &lat = code.lattice;
    SMatrixLayout L = layout ? *layout : default_smatrix_layout(lat);
    PauliLabel op = smatrix_operator(lat, t1, t2, L);
    Region supp = union_support({anyon_string(lat, t1, L.v_lower), anyon_string(lat, t1, L.v_upper),
                                 anyon_string(lat, t2, L.w_lower), anyon_string(lat, t2, L.w_upper)});
    if (supp.empty()) return 1.0;
    StabilizerGroup G = ground_state_group(code, {0, 0});
    SpMat rho = sps_sparse(restrict_to(supported_subgroup(G, supp), supp));
    return sparse_trace_product(rho, sparse_pauli(restrict_label(op, supp)));
}

QuantizationReport quantization_check(const ToricCode &code, const std::vector<std::pair<AnyonType, AnyonType>> &pairs,
                                      double tol) {
    const i64 q = code.lattice.q;
    QuantizationReport r;
    r.pairs = pairs;
    if (r.pairs.empty()) {
        for (i64 i = 0; i < q * q; ++i) {
            for (i64 j = 0; j < q * q; ++j) r.pairs.push_back({{i / q, i % q}, {j / q, j % q}});
        }
    }
    SMatrixLayout L = default_smatrix_layout(code.lattice);
    r.pass = true;
    for (const auto &[t1, t2] : r.pairs) {
        cplx s = s_matrix_element(code, t1, t2, L);
        double ang = std::arg(s) * static_cast<double>(q) / (2 * std::numbers::pi);
        i64 k = mod(static_cast<i64>(std::llround(ang)), q);
        double dev = std::abs(s - omega2q_pow(q, 2 * k));
        r.phases.push_back(s);
        r.exponents.push_back(k);
        r.max_deviation = std::max(r.max_deviation, dev);
        r.pass = r.pass && dev <= tol;
    }
    cplx em = s_matrix_element(code, {1, 0}, {0, 1}, L);
    r.em_exponent = mod(static_cast<i64>(std::llround(std::arg(em) * static_cast<double>(q) / (2 * std::numbers::pi))), q);
    return r;
}

AnnulusGeometry edge_annulus(const ToricLattice &lat, int x, int y) {
    if (lat.Lx < 4 || lat.Ly < 3) throw Error(ErrorKind::InvalidRegion, "edge annulus needs Lx >= 4 and Ly >= 3");
    AnnulusGeometry g;
    std::set<int> om{lat.h(x, y + 1), lat.h(x, y - 1), lat.h(x - 1, y), lat.h(x + 1, y),
                     lat.v(x, y),     lat.v(x, y - 1), lat.v(x + 1, y), lat.v(x + 1, y - 1)};
    g.omega.assign(om.begin(), om.end());
    std::set<int> touched, plus;
    for (int e : g.omega) {
        touched.insert(lat.tail(e));
        touched.insert(lat.head(e));
    }
    for (int vtx : touched) {
        for (auto [e, s] : lat.star(vtx)) plus.insert(e);
    }
    g.omega_plus.assign(plus.begin(), plus.end());
    std::set<Region> balls;
    auto add_ball = [&](const std::vector<std::pair<int, int>> &edges) {
        std::set<int> b;
        for (auto [e, s] : edges) {
            if (om.count(e)) b.insert(e);
        }
        if (!b.empty()) balls.insert(Region(b.begin(), b.end()));
    };
    for (int vtx : touched) add_ball(lat.star(vtx));
    for (int p = 0; p < lat.num_vertices(); ++p) add_ball(lat.boundary(p));
    g.balls.assign(balls.begin(), balls.end());
    g.crossing.primal = {false, lat.vertex(x, y), {{lat.h(x - 1, y), -1}}};
    g.crossing.dual = {true, lat.plaquette(x, y), {{lat.h(x, y + 1), -1}}};
    return g;
}

AnnulusReport annulus_extreme_points(const ToricCode &code, const AnnulusGeometry &geometry, double tol) {
    const ToricLattice &lat = code.lattice;
    const i64 q = lat.q;
    const Region &omega = geometry.omega;
    StabilizerGroup ref = ground_state_group(code, {0, 0});
    AnnulusReport r;
    r.extreme = extreme_points(ref, geometry.omega_plus, omega, geometry.balls);
    r.logical_order = r.extreme.region.order / r.extreme.local.order;
    if (r.logical_order != q * q) throw Error(ErrorKind::InvalidRegion, "region is not an annulus");
    const auto &pts = r.extreme.points;
    r.count_ok = static_cast<i64>(pts.size()) == q * q;

    std::vector<SpMat> mats;
    for (const auto &p : pts) mats.push_back(sps_sparse(p.group));
    for (std::size_t i = 0; i < mats.size(); ++i) {
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            SpMat c = mats[i] * mats[j] - mats[j] * mats[i];
            r.max_commutator = std::max(r.max_commutator, c.norm());
        }
    }

    std::vector<PauliLabel> gens = r.extreme.local.canonical_generators();
    const std::size_t nlocal = gens.size();
    for (const auto &g : r.extreme.free_generators) gens.push_back(g);
    r.pauli_connected = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            PhaseAssignment pa;
            for (std::size_t k = 0; k < gens.size(); ++k) {
                i64 d = order(gens[k]);
                pa.delta.push_back(d);
                pa.u.push_back(k < nlocal ? 0 : mod(pts[i].phase.u[k - nlocal] - pts[j].phase.u[k - nlocal], d));
            }
            PauliLabel P = find_rephasing_pauli(gens, pa);
            r.pauli_connected = r.pauli_connected && conjugate_group(pts[i].group, P).same_group(pts[j].group);
        }
    }

    StabilizerGroup vacuum = restrict_to(supported_subgroup(ref, omega), omega);
    for (const auto &p : pts) {
        bool zero = std::all_of(p.phase.u.begin(), p.phase.u.end(), [](i64 u) { return u == 0; });
        if (zero) r.vacuum_is_reference = p.group.same_group(vacuum);
    }

    std::vector<AnyonType> types;
    std::vector<SpMat> anyon_mats;
    for (i64 a = 0; a < q; ++a) {
        for (i64 b = 0; b < q; ++b) {
            PauliLabel W = anyon_string(lat, {a, b}, geometry.crossing);
            StabilizerGroup excited = conjugate_group(ref, W);
            types.push_back({a, b});
            anyon_mats.push_back(sps_sparse(restrict_to(supported_subgroup(excited, omega), omega)));
        }
    }
    r.min_match_fidelity = pts.empty() ? 0 : 1;
    std::set<std::pair<i64, i64>> used;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double best = -1;
        std::size_t arg = 0;
        for (std::size_t t = 0; t < types.size(); ++t) {
            double f = commuting_sps_fidelity(mats[i], anyon_mats[t]);
            if (f > best + 1e-12) {
                best = f;
                arg = t;
            }
        }
        r.matched.push_back(types[arg]);
        used.insert({types[arg].a, types[arg].b});
        r.min_match_fidelity = std::min(r.min_match_fidelity, best);
    }
    r.matches_ok = r.min_match_fidelity > 1 - tol && used.size() == pts.size();
    r.pass = r.count_ok && r.max_commutator < tol && r.pauli_connected && r.matches_ok && r.vacuum_is_reference;
    return r;
}

}  // namespace qmagic
