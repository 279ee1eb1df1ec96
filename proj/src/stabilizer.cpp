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

#include "qmagic/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qmagic/ring.hpp"

namespace qmagic {

namespace {

std::vector<std::vector<i64>> vectors_of(const std::vector<PauliLabel> &gens) {
    std::vector<std::vector<i64>> out;
    for (const auto &g : gens) out.push_back(symplectic_vector(g));
    return out;
}

// Product of g_i^{x_i}, with exponents reduced by generator order.
PauliLabel product_of_powers(const std::vector<PauliLabel> &gens, const std::vector<i64> &x, int n, i64 q) {
    PauliLabel acc = pauli_identity(n, q);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        i64 e = mod(x[i], order(gens[i]));
        if (e != 0) acc = compose(acc, pauli_power(gens[i], e));
    }
    return acc;
}

void add_pauli(Mat &M, const PauliLabel &P, double weight) {
    const i64 D = M.rows();
    std::vector<i64> digits(P.n);
    for (i64 j = 0; j < D; ++j) {
        i64 t = j;
        for (int i = 0; i < P.n; ++i) {
            digits[i] = t % P.q;
            t /= P.q;
        }
        i64 k = 0, stride = 1, ph = 0;
        for (int i = 0; i < P.n; ++i) {
            i64 kd = (digits[i] + P.b[i]) % P.q;
            ph += P.a[i] * kd;
            k += kd * stride;
            stride *= P.q;
        }
        M(k, j) += weight * omega2q_pow(P.q, P.c + 2 * mod(ph, P.q));
    }
}

i64 dense_dim(int n, i64 q) {
    i64 D = 1;
    for (int i = 0; i < n; ++i) {
        D *= q;
        if (D > kDenseLimit) throw Error(ErrorKind::DenseLimit, "q^n exceeds the dense limit");
    }
    return D;
}

std::vector<int> outside_columns(int n, const Region &A) {
    std::vector<bool> in(n, false);
    for (int s : A) {
        if (s < 0 || s >= n) throw Error(ErrorKind::InvalidRegion, "region index out of range");
        in[s] = true;
    }
    std::vector<int> cols;
    for (int i = 0; i < n; ++i) {
        if (!in[i]) {
            cols.push_back(i);
            cols.push_back(n + i);
        }
    }
    return cols;
}

// Rows R_j such that sum_j w_j R_j is the vector of commutation exponents of w against gens.
std::vector<std::vector<i64>> commutation_rows(const std::vector<PauliLabel> &gens, int n, i64 q,
                                               const std::vector<int> &sites) {
    std::vector<std::vector<i64>> rows;
    for (int s : sites) {
        std::vector<i64> r;
        for (const auto &g : gens) r.push_back(g.b[s]);
        rows.push_back(r);
    }
    for (int s : sites) {
        std::vector<i64> r;
        for (const auto &g : gens) r.push_back(mod(-g.a[s], q));
        rows.push_back(r);
    }
    (void)n;
    return rows;
}

// Admissible phase exponents c for which (omega_{2q}^c g)^delta = I.
std::vector<i64> admissible_phases(const PauliLabel &g) {
    i64 d = order(g);
    i64 phi = pauli_power(with_phase(g, 0), d).c;
    std::vector<i64> out;
    for (i64 c = 0; c < 2 * g.q; ++c) {
        if (mod(c * d + phi, 2 * g.q) == 0) out.push_back(c);
    }
    return out;
}

bool try_validate(const std::vector<PauliLabel> &gens, int n, i64 q, StabilizerGroup *out) {
    try {
        StabilizerGroup S = validate(gens, n, q);
        if (out) *out = std::move(S);
        return true;
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::InconsistentPhase) return false;
        throw;
    }
}

bool assign_phases(std::vector<PauliLabel> &gens, std::size_t idx, int n, i64 q) {
    if (idx == gens.size()) return true;
    for (i64 c : admissible_phases(gens[idx])) {
        gens[idx].c = c;
        std::vector<PauliLabel> prefix(gens.begin(), gens.begin() + idx + 1);
        if (!try_validate(prefix, n, q, nullptr)) continue;
        if (assign_phases(gens, idx + 1, n, q)) return true;
    }
    return false;
}

// Every stabilizer group with the given vector subgroup, one per consistent phase function.
std::vector<StabilizerGroup> phase_versions(const std::vector<std::vector<i64>> &vecs, int n, i64 q) {
    StabilizerGroup base = lift_phases(vecs, n, q);
    const auto &gens = base.generators;
    std::set<std::vector<i64>> seen;
    std::vector<StabilizerGroup> out;
    i64 total = ipow(q, 2 * n);
    for (i64 idx = 0; idx < total && static_cast<i64>(out.size()) < base.order; ++idx) {
        std::vector<i64> w(2 * n);
        i64 t = idx;
        for (int i = 2 * n - 1; i >= 0; --i) {
            w[i] = t % q;
            t /= q;
        }
        PauliLabel P = pauli_from_vector(n, q, w);
        std::vector<i64> chi;
        for (const auto &g : gens) chi.push_back(commutation_exponent(P, g));
        if (!seen.insert(chi).second) continue;
        out.push_back(conjugate_group(base, P));
    }
    return out;
}

std::vector<std::vector<i64>> all_vectors(int len, i64 q) {
    std::vector<std::vector<i64>> out;
    i64 total = ipow(q, len);
    for (i64 idx = 0; idx < total; ++idx) {
        std::vector<i64> v(len);
        i64 t = idx;
        for (int i = len - 1; i >= 0; --i) {
            v[i] = t % q;
            t /= q;
        }
        out.push_back(std::move(v));
    }
    return out;
}

i64 symplectic_form(const std::vector<i64> &x, const std::vector<i64> &y, int n, i64 q) {
    i64 s = 0;
    for (int i = 0; i < n; ++i) s += x[i] * y[n + i] - x[n + i] * y[i];
    return mod(s, q);
}

// Isotropic subgroups of Z_q^{2n} for a prime power q, as canonical lattices.
std::vector<ModLattice> isotropic_prime_power(int n, i64 q, bool maximal_only) {
    const int N = 2 * n;
    const i64 top = ipow(q, n);
    auto vecs = all_vectors(N, q);
    std::set<std::vector<std::vector<i64>>> visited;
    std::vector<ModLattice> out;
    ModLattice start = hermite_mod({}, N, q);
    std::vector<ModLattice> stack{start};
    visited.insert(start.rows);
    while (!stack.empty()) {
        ModLattice L = std::move(stack.back());
        stack.pop_back();
        if (!maximal_only || L.subgroup_order() == top) out.push_back(L);
        if (L.subgroup_order() == top) continue;
        for (const auto &v : vecs) {
            if (L.contains(v)) continue;
            bool iso = symplectic_form(v, v, n, q) == 0;
            for (const auto &r : L.rows) {
                if (!iso) break;
                iso = symplectic_form(v, r, n, q) == 0;
            }
            if (!iso) continue;
            auto rows = L.rows;
            rows.push_back(v);
            ModLattice M = hermite_mod(rows, N, q);
            if (visited.insert(M.rows).second) stack.push_back(std::move(M));
        }
    }
    std::sort(out.begin(), out.end(), [](const ModLattice &x, const ModLattice &y) { return x.rows < y.rows; });
    return out;
}

// Isotropic subgroups over composite q, combined from prime-power factors through CRT idempotents.
std::vector<std::vector<std::vector<i64>>> isotropic_subgroups(int n, i64 q, bool maximal_only) {
    Modulus m = factorize(q);
    auto pps = m.prime_powers();
    std::vector<std::vector<std::vector<i64>>> combos{{}};
    for (std::size_t j = 0; j < pps.size(); ++j) {
        i64 pp = pps[j];
        i64 cof = q / pp;
        i64 idem = mod(cof * inv_mod(cof % pp, pp), q);
        auto subs = isotropic_prime_power(n, pp, maximal_only);
        std::vector<std::vector<std::vector<i64>>> next;
        for (const auto &base : combos) {
            for (const auto &L : subs) {
                auto rows = base;
                for (const auto &r : L.rows) {
                    std::vector<i64> lifted(r.size());
                    for (std::size_t i = 0; i < r.size(); ++i) lifted[i] = mod(idem * r[i], q);
                    rows.push_back(lifted);
                }
                next.push_back(std::move(rows));
            }
        }
        combos = std::move(next);
    }
    return combos;
}

}  // namespace

StabilizerGroup lift_phases(const std::vector<std::vector<i64>> &vecs, int n, i64 q) {
    ModLattice L = hermite_mod(vecs, 2 * n, q);
    std::vector<PauliLabel> gens;
    for (const auto &r : L.rows) gens.push_back(pauli_from_vector(n, q, r));
    if (!assign_phases(gens, 0, n, q)) throw Error(ErrorKind::Internal, "no consistent phase for isotropic subgroup");
    return validate(gens, n, q);
}

StabilizerGroup trivial_group(int n, i64 q) { return validate({}, n, q); }

StabilizerGroup validate(const std::vector<PauliLabel> &tableau, int n, i64 q) {
    for (const auto &g : tableau) {
        if (g.n != n || g.q != q) throw Error(ErrorKind::ShapeMismatch, "generator shape differs from (n, q)");
    }
    for (std::size_t i = 0; i < tableau.size(); ++i) {
        for (std::size_t j = i + 1; j < tableau.size(); ++j) {
            if (commutation_exponent(tableau[i], tableau[j]) != 0) {
                throw Error(ErrorKind::NoncommutingPair,
                            "noncommuting-pair(" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    i64 prod_orders = 1;
    for (const auto &g : tableau) {
        PauliLabel gd = pauli_power(g, order(g));
        if (gd.c != 0) throw Error(ErrorKind::InconsistentPhase, "generator power yields a nontrivial phase");
        prod_orders *= order(g);
    }
    auto vecs = vectors_of(tableau);
    std::vector<int> all_cols(2 * n);
    for (int i = 0; i < 2 * n; ++i) all_cols[i] = i;
    for (const auto &x : kernel_mod(vecs, all_cols, q)) {
        if (product_of_powers(tableau, x, n, q).c != 0) {
            throw Error(ErrorKind::InconsistentPhase, "generator relation yields a nontrivial phase");
        }
    }
    StabilizerGroup S;
    S.n = n;
    S.q = q;
    S.generators = tableau;
    S.lattice = hermite_mod(vecs, 2 * n, q);
    S.order = S.lattice.subgroup_order();
    S.independent = S.order == prod_orders;
    return S;
}

i64 group_order(const StabilizerGroup &S) { return S.order; }

PauliLabel group_element_with_vector(const StabilizerGroup &S, const std::vector<i64> &v) {
    auto x = solve_left_mod(vectors_of(S.generators), v, S.q);
    if (!x) throw Error(ErrorKind::Internal, "vector is not in the group");
    return product_of_powers(S.generators, *x, S.n, S.q);
}

Membership member(const StabilizerGroup &S, const PauliLabel &P) {
    if (P.n != S.n || P.q != S.q) throw Error(ErrorKind::ShapeMismatch, "label shape differs from group");
    auto v = symplectic_vector(P);
    if (!S.lattice.contains(v)) return Membership::Absent;
    return group_element_with_vector(S, v).c == P.c ? Membership::PhaseMatch : Membership::UpToPhase;
}

std::vector<PauliLabel> StabilizerGroup::canonical_generators() const {
    std::vector<PauliLabel> out;
    for (const auto &r : lattice.rows) out.push_back(group_element_with_vector(*this, r));
    return out;
}

bool StabilizerGroup::same_group(const StabilizerGroup &o) const {
    if (n != o.n || q != o.q || !(lattice == o.lattice)) return false;
    return canonical_generators() == o.canonical_generators();
}

std::vector<PauliLabel> group_elements(const StabilizerGroup &S) {
    std::vector<PauliLabel> elems{pauli_identity(S.n, S.q)};
    for (std::size_t j = 0; j < S.lattice.rows.size(); ++j) {
        PauliLabel h = group_element_with_vector(S, S.lattice.rows[j]);
        i64 count = S.q / S.lattice.rows[j][S.lattice.pivots[j]];
        std::vector<PauliLabel> next;
        next.reserve(elems.size() * count);
        for (const auto &e : elems) {
            PauliLabel cur = e;
            for (i64 c = 0; c < count; ++c) {
                next.push_back(cur);
                cur = compose(cur, h);
            }
        }
        elems = std::move(next);
    }
    return elems;
}

StabilizerGroup supported_subgroup(const StabilizerGroup &S, const Region &A) {
    auto cols = outside_columns(S.n, A);
    std::vector<PauliLabel> gens;
    if (S.generators.empty()) return trivial_group(S.n, S.q);
    for (const auto &x : kernel_mod(vectors_of(S.generators), cols, S.q)) {
        PauliLabel g = product_of_powers(S.generators, x, S.n, S.q);
        if (!g.is_identity_up_to_phase()) gens.push_back(g);
    }
    StabilizerGroup raw = validate(gens, S.n, S.q);
    return validate(raw.canonical_generators(), S.n, S.q);
}

StabilizerGroup locally_generated(const StabilizerGroup &S, const std::vector<Region> &balls) {
    std::vector<PauliLabel> gens;
    for (const auto &ball : balls) {
        auto sub = supported_subgroup(S, ball);
        gens.insert(gens.end(), sub.generators.begin(), sub.generators.end());
    }
    StabilizerGroup raw = validate(gens, S.n, S.q);
    return validate(raw.canonical_generators(), S.n, S.q);
}

std::vector<PauliLabel> commutant_on_region(const StabilizerGroup &S, const Region &A) {
    auto rows = commutation_rows(S.generators, S.n, S.q, A);
    std::vector<int> cols(S.generators.size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = static_cast<int>(i);
    std::vector<PauliLabel> out;
    const int m = static_cast<int>(A.size());
    for (const auto &w : kernel_mod(rows, cols, S.q)) {
        PauliLabel P = pauli_identity(S.n, S.q);
        for (int j = 0; j < m; ++j) {
            P.a[A[j]] = w[j];
            P.b[A[j]] = w[m + j];
        }
        if (!P.is_identity_up_to_phase()) out.push_back(P);
    }
    return out;
}

PauliLabel restrict_label(const PauliLabel &P, const Region &A) {
    PauliLabel R = pauli_identity(static_cast<int>(A.size()), P.q);
    std::vector<bool> in(P.n, false);
    for (std::size_t j = 0; j < A.size(); ++j) {
        in[A[j]] = true;
        R.a[j] = P.a[A[j]];
        R.b[j] = P.b[A[j]];
    }
    for (int i = 0; i < P.n; ++i) {
        if (!in[i] && (P.a[i] != 0 || P.b[i] != 0)) {
            throw Error(ErrorKind::InvalidRegion, "label is not supported on the region");
        }
    }
    R.c = P.c;
    return R;
}

PauliLabel embed_label(const PauliLabel &P, const Region &A, int n) {
    PauliLabel R = pauli_identity(n, P.q);
    for (std::size_t j = 0; j < A.size(); ++j) {
        R.a[A[j]] = P.a[j];
        R.b[A[j]] = P.b[j];
    }
    R.c = P.c;
    return R;
}

StabilizerGroup restrict_to(const StabilizerGroup &S, const Region &A) {
    std::vector<PauliLabel> gens;
    for (const auto &g : S.canonical_generators()) gens.push_back(restrict_label(g, A));
    return validate(gens, static_cast<int>(A.size()), S.q);
}

Mat sps_dense(const StabilizerGroup &S) {
    i64 D = dense_dim(S.n, S.q);
    Mat M = Mat::Zero(D, D);
    auto elems = group_elements(S);
    double w = 1.0 / static_cast<double>(D);
    for (const auto &e : elems) add_pauli(M, e, w);
    return M;
}

Mat sps_dense_product(const StabilizerGroup &S) {
    i64 D = dense_dim(S.n, S.q);
    Mat M = Mat::Identity(D, D);
    for (const auto &g : S.generators) {
        i64 d = order(g);
        Mat P = Mat::Zero(D, D);
        PauliLabel cur = pauli_identity(S.n, S.q);
        for (i64 k = 0; k < d; ++k) {
            add_pauli(P, cur, 1.0 / static_cast<double>(d));
            cur = compose(cur, g);
        }
        M = M * P;
    }
    return M / M.trace();
}

PauliLabel solve_commutation(const std::vector<PauliLabel> &gens, const std::vector<i64> &targets) {
    if (gens.empty()) throw Error(ErrorKind::ShapeMismatch, "no generators given");
    const int n = gens[0].n;
    const i64 q = gens[0].q;
    std::vector<int> sites(n);
    for (int i = 0; i < n; ++i) sites[i] = i;
    auto rows = commutation_rows(gens, n, q, sites);
    auto w = solve_left_mod(rows, targets, q);
    if (!w) throw Error(ErrorKind::Internal, "commutation system has no solution");
    PauliLabel P = pauli_identity(n, q);
    for (int i = 0; i < n; ++i) {
        P.a[i] = (*w)[i];
        P.b[i] = (*w)[n + i];
    }
    return P;
}

PauliLabel find_rephasing_pauli(const std::vector<PauliLabel> &gens, const PhaseAssignment &targets) {
    if (gens.empty()) throw Error(ErrorKind::ShapeMismatch, "no generators given");
    if (targets.u.size() != gens.size()) throw Error(ErrorKind::ShapeMismatch, "one target per generator");
    StabilizerGroup S = validate(gens, gens[0].n, gens[0].q);
    if (!S.independent) throw Error(ErrorKind::NotIndependent, "generators are not independent");
    const i64 q = gens[0].q;
    std::vector<i64> t;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        i64 d = order(gens[i]);
        t.push_back(mod((q / d) * targets.u[i], q));
    }
    return solve_commutation(gens, t);
}

StabilizerGroup conjugate_group(const StabilizerGroup &S, const PauliLabel &P) {
    StabilizerGroup R = S;
    for (auto &g : R.generators) g.c = mod(g.c + 2 * commutation_exponent(P, g), 2 * S.q);
    return R;
}

void enumerate_pure_stabilizer_states(int n, i64 q, const std::function<void(const StabilizerGroup &)> &emit,
                                      i64 budget) {
    i64 emitted = 0;
    for (const auto &vecs : isotropic_subgroups(n, q, true)) {
        for (const auto &S : phase_versions(vecs, n, q)) {
            if (++emitted > budget) throw Error(ErrorKind::BudgetExceeded, "pure stabilizer enumeration budget");
            emit(S);
        }
    }
}

std::vector<StabilizerGroup> pure_stabilizer_states(int n, i64 q, i64 budget) {
    std::vector<StabilizerGroup> out;
    enumerate_pure_stabilizer_states(n, q, [&](const StabilizerGroup &S) { out.push_back(S); }, budget);
    return out;
}

std::vector<StabilizerGroup> all_stabilizer_projection_states(int n, i64 q, i64 budget) {
    std::vector<StabilizerGroup> out;
    for (const auto &vecs : isotropic_subgroups(n, q, false)) {
        for (auto &S : phase_versions(vecs, n, q)) {
            if (static_cast<i64>(out.size()) >= budget) {
                throw Error(ErrorKind::BudgetExceeded, "stabilizer projection state budget");
            }
            out.push_back(std::move(S));
        }
    }
    return out;
}

ExtremePointResult extreme_points(const StabilizerGroup &reference, const Region &omega_plus, const Region &omega,
                                  const std::vector<Region> &balls) {
    std::set<int> plus(omega_plus.begin(), omega_plus.end());
    std::set<int> om(omega.begin(), omega.end());
    for (int s : omega) {
        if (!plus.count(s)) throw Error(ErrorKind::InvalidRegion, "omega is not contained in omega-plus");
    }
    for (const auto &b : balls) {
        for (int s : b) {
            if (!om.count(s)) throw Error(ErrorKind::InvalidRegion, "ball leaves omega");
        }
    }
    const int n = reference.n;
    const i64 q = reference.q;
    StabilizerGroup ref_plus = supported_subgroup(reference, omega_plus);
    StabilizerGroup region = supported_subgroup(ref_plus, omega);
    StabilizerGroup local = locally_generated(ref_plus, balls);

    // Extend the local generators greedily, scanning region elements in label order.
    auto elems = group_elements(restrict_to(region, omega));
    std::sort(elems.begin(), elems.end());
    std::vector<PauliLabel> local_gens = local.canonical_generators();
    std::vector<std::vector<i64>> span;
    for (const auto &g : local_gens) span.push_back(symplectic_vector(g));
    std::vector<PauliLabel> free;
    ModLattice cur = hermite_mod(span, 2 * n, q);
    for (const auto &e : elems) {
        PauliLabel full = embed_label(e, omega, n);
        auto v = symplectic_vector(full);
        if (cur.contains(v)) continue;
        span.push_back(v);
        cur = hermite_mod(span, 2 * n, q);
        free.push_back(full);
    }

    ExtremePointResult res;
    res.local = restrict_to(local, omega);
    res.region = restrict_to(region, omega);
    for (const auto &g : free) res.free_generators.push_back(restrict_label(g, omega));

    std::vector<i64> deltas;
    i64 combos = 1;
    for (const auto &g : free) {
        deltas.push_back(order(g));
        combos *= deltas.back();
    }
    for (i64 idx = 0; idx < combos; ++idx) {
        PhaseAssignment pa;
        pa.delta = deltas;
        pa.u.resize(free.size());
        i64 t = idx;
        for (int i = static_cast<int>(free.size()) - 1; i >= 0; --i) {
            pa.u[i] = t % deltas[i];
            t /= deltas[i];
        }
        std::vector<PauliLabel> gens = local_gens;
        for (std::size_t i = 0; i < free.size(); ++i) {
            // zeta_g^{-u} = omega_{2q}^{-2 u q / delta}
            gens.push_back(with_phase(free[i], free[i].c - 2 * pa.u[i] * (q / deltas[i])));
        }
        StabilizerGroup G;
        if (!try_validate(gens, n, q, &G)) continue;
        StabilizerGroup restricted = restrict_to(G, omega);
        bool dup = false;
        for (const auto &p : res.points) dup = dup || p.group.same_group(restricted);
        if (!dup) res.points.push_back({pa, restricted});
    }
    return res;
}

std::string write_tableau(const std::vector<PauliLabel> &gens, int n, i64 q) {
    std::ostringstream os;
    os << q << ' ' << n << ' ' << gens.size() << '\n';
    for (const auto &g : gens) {
        bool first = true;
        auto put = [&](i64 v) {
            if (!first) os << ' ';
            os << v;
            first = false;
        };
        for (i64 v : g.a) put(v);
        for (i64 v : g.b) put(v);
        put(g.c);
        os << '\n';
    }
    return os.str();
}

std::vector<PauliLabel> read_tableau(const std::string &text, int *n_out, i64 *q_out) {
    std::istringstream is(text);
    i64 q = 0;
    int n = 0;
    long k = 0;
    if (!(is >> q >> n >> k) || q < 2 || n < 0 || k < 0) throw Error(ErrorKind::Parse, "bad tableau header");
    std::vector<PauliLabel> gens;
    for (long j = 0; j < k; ++j) {
        PauliLabel P = pauli_identity(n, q);
        for (int i = 0; i < n; ++i) {
            if (!(is >> P.a[i])) throw Error(ErrorKind::Parse, "truncated tableau row");
        }
        for (int i = 0; i < n; ++i) {
            if (!(is >> P.b[i])) throw Error(ErrorKind::Parse, "truncated tableau row");
        }
        if (!(is >> P.c)) throw Error(ErrorKind::Parse, "truncated tableau row");
        for (int i = 0; i < n; ++i) {
            if (P.a[i] < 0 || P.a[i] >= q || P.b[i] < 0 || P.b[i] >= q) {
                throw Error(ErrorKind::Parse, "tableau exponent out of range");
            }
        }
        if (P.c < 0 || P.c >= 2 * q) throw Error(ErrorKind::Parse, "tableau phase out of range");
        gens.push_back(P);
    }
    std::string extra;
    if (is >> extra) throw Error(ErrorKind::Parse, "trailing data in tableau");
    if (n_out) *n_out = n;
    if (q_out) *q_out = q;
    return gens;
}

}  // namespace qmagic
