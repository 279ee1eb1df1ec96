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

#include "qmagic/covering.hpp"

#include <cmath>

#include "qmagic/lattice.hpp"

namespace qmagic {

namespace {

using Vecs = std::vector<std::vector<i64>>;

struct PrimePowerCover {
    GaloisRing R;
    std::vector<RingElement> e;
    std::vector<RingElement> e_dual;
    std::vector<RingElement> t_values;  // all of R, lex order
    std::vector<RingElement> s_values;  // pR, lex order
};

PrimePowerCover prime_power_data(i64 p, int r, int n) {
    PrimePowerCover d;
    d.R = construct_galois_ring(p, r, n);
    d.e = power_basis(d.R);
    d.e_dual = dual_basis(d.R, d.e);
    d.t_values = ring_elements(d.R);
    for (const auto &x : d.t_values) {
        bool in_pR = true;
        for (i64 c : x.coeffs) in_pR = in_pR && c % p == 0;
        if (in_pR) d.s_values.push_back(x);
    }
    return d;
}

// Coordinates of x in the dual basis: b_i = Tr(x e_i).
std::vector<i64> dual_coords(const PrimePowerCover &d, const RingElement &x) {
    std::vector<i64> out;
    for (const auto &ei : d.e) out.push_back(trace(d.R, ring_mul(d.R, x, ei)));
    return out;
}

// Coordinates of x in the primal basis: a_i = Tr(x e*_i).
std::vector<i64> primal_coords(const PrimePowerCover &d, const RingElement &x) {
    std::vector<i64> out;
    for (const auto &ei : d.e_dual) out.push_back(trace(d.R, ring_mul(d.R, x, ei)));
    return out;
}

RingElement from_primal(const PrimePowerCover &d, const std::vector<i64> &a) {
    RingElement x = ring_zero(d.R);
    for (std::size_t i = 0; i < a.size(); ++i) x = ring_add(d.R, x, ring_mul(d.R, ring_scalar(d.R, a[i]), d.e[i]));
    return x;
}

RingElement from_dual(const PrimePowerCover &d, const std::vector<i64> &b) {
    RingElement y = ring_zero(d.R);
    for (std::size_t i = 0; i < b.size(); ++i) {
        y = ring_add(d.R, y, ring_mul(d.R, ring_scalar(d.R, b[i]), d.e_dual[i]));
    }
    return y;
}

std::vector<i64> concat(const std::vector<i64> &a, const std::vector<i64> &b) {
    std::vector<i64> v = a;
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

i64 lex_index(const std::vector<i64> &coeffs, i64 radix, i64 divide) {
    i64 idx = 0;
    for (i64 c : coeffs) idx = idx * radix + c / divide;
    return idx;
}

std::size_t designated_prime_power(const PrimePowerCover &d, const std::vector<i64> &v) {
    const GaloisRing &R = d.R;
    int n = R.n;
    std::vector<i64> a(v.begin(), v.begin() + n), b(v.begin() + n, v.end());
    RingElement x = from_primal(d, a);
    RingElement y = from_dual(d, b);
    int k = R.r;
    for (const auto *z : {&x, &y}) {
        for (i64 c : z->coeffs) {
            if (c == 0) continue;
            int val = 0;
            while (c % R.p == 0) {
                c /= R.p;
                ++val;
            }
            k = std::min(k, val);
        }
    }
    if (k == R.r) return 0;
    i64 pk = ipow(R.p, k);
    RingElement x0 = x, y0 = y;
    for (auto &c : x0.coeffs) c /= pk;
    for (auto &c : y0.coeffs) c /= pk;
    if (is_unit(R, x0)) {
        RingElement t = ring_mul(R, y0, inverse(R, x0));
        return static_cast<std::size_t>(lex_index(t.coeffs, R.pr, 1));
    }
    RingElement s = ring_mul(R, x0, inverse(R, y0));
    return d.t_values.size() + static_cast<std::size_t>(lex_index(s.coeffs, ipow(R.p, R.r - 1), R.p));
}

std::vector<i64> index_to_vector(i64 idx, int len, i64 q) {
    std::vector<i64> v(len);
    for (int i = 0; i < len; ++i) {
        v[i] = idx % q;
        idx /= q;
    }
    return v;
}

i64 vector_to_index(const std::vector<i64> &v, i64 q) {
    i64 idx = 0;
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) idx = idx * q + v[i];
    return idx;
}

i64 symplectic(const std::vector<i64> &x, const std::vector<i64> &y, int n, i64 q) {
    i64 s = 0;
    for (int i = 0; i < n; ++i) s = mod(s + x[i] * y[n + i] - x[n + i] * y[i], q);
    return s;
}

}  // namespace

CoverFamily cover_prime_power(i64 p, int r, int n) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
    PrimePowerCover d = prime_power_data(p, r, n);
    CoverFamily c;
    c.q = d.R.pr;
    c.n = n;
    for (const auto &t : d.t_values) {
        Vecs gens;
        for (int k = 0; k < n; ++k) {
            std::vector<i64> a(n, 0);
            a[k] = 1;
            gens.push_back(concat(a, dual_coords(d, ring_mul(d.R, t, d.e[k]))));
        }
        c.members.push_back(gens);
    }
    for (const auto &s : d.s_values) {
        Vecs gens;
        for (int k = 0; k < n; ++k) {
            std::vector<i64> b(n, 0);
            b[k] = 1;
            gens.push_back(concat(primal_coords(d, ring_mul(d.R, s, d.e_dual[k])), b));
        }
        c.members.push_back(gens);
    }
    return c;
}

CoverFamily cover_composite(i64 q, int n) {
    Modulus m = factorize(q);
    if (m.factors.size() == 1) return cover_prime_power(m.factors[0].first, m.factors[0].second, n);
    std::vector<CoverFamily> parts;
    for (auto [p, r] : m.factors) parts.push_back(cover_prime_power(p, r, n));
    CoverFamily c;
    c.q = q;
    c.n = n;
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
        Vecs gens;
        for (int k = 0; k < n; ++k) {
            std::vector<i64> v(2 * n);
            for (int i = 0; i < 2 * n; ++i) {
                std::vector<i64> comps;
                for (std::size_t j = 0; j < parts.size(); ++j) comps.push_back(parts[j].members[pick[j]][k][i]);
                v[i] = crt_combine(comps, m);
            }
            gens.push_back(v);
        }
        c.members.push_back(gens);
        int j = static_cast<int>(parts.size()) - 1;
        while (j >= 0 && ++pick[j] == parts[j].members.size()) pick[j--] = 0;
        if (j < 0) break;
    }
    return c;
}

i64 cover_size_formula(i64 q, int n) {
    i64 size = 1;
    for (auto [p, r] : factorize(q).factors) size *= ipow(p, r * n) + ipow(p, (r - 1) * n);
    return size;
}

CoverReport verify_cover(const CoverFamily &c, i64 budget) {
    CoverReport rep;
    int n = c.n;
    i64 q = c.q;
    i64 total = ipow(q, 2 * n);
    if (total > budget) throw Error(ErrorKind::BudgetExceeded, "q^{2n} exceeds verification budget");
    rep.size = static_cast<i64>(c.members.size());
    rep.expected_size = cover_size_formula(q, n);
    rep.size_ok = rep.size == rep.expected_size;

    i64 target_order = ipow(q, n);
    rep.members_ok = true;
    for (std::size_t idx = 0; idx < c.members.size() && rep.members_ok; ++idx) {
        const auto &gens = c.members[idx];
        bool ok = true;
        for (std::size_t i = 0; i < gens.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < gens.size() && ok; ++j) ok = symplectic(gens[i], gens[j], n, q) == 0;
        }
        ok = ok && hermite_mod(gens, 2 * n, q).subgroup_order() == target_order;
        if (!ok) {
            rep.members_ok = false;
            rep.bad_member = idx;
        }
    }

    std::vector<char> covered(static_cast<std::size_t>(total), 0);
    for (const auto &gens : c.members) {
        i64 combos = ipow(q, static_cast<int>(gens.size()));
        for (i64 ci = 0; ci < combos; ++ci) {
            std::vector<i64> x = index_to_vector(ci, static_cast<int>(gens.size()), q);
            std::vector<i64> v(2 * n, 0);
            for (std::size_t g = 0; g < gens.size(); ++g) {
                for (int i = 0; i < 2 * n; ++i) v[i] = mod(v[i] + x[g] * gens[g][i], q);
            }
            covered[static_cast<std::size_t>(vector_to_index(v, q))] = 1;
        }
    }
    rep.covers = true;
    for (i64 idx = 0; idx < total; ++idx) {
        if (!covered[static_cast<std::size_t>(idx)]) {
            rep.covers = false;
            rep.uncovered = index_to_vector(idx, 2 * n, q);
            break;
        }
    }
    rep.pass = rep.covers && rep.members_ok && rep.size_ok;
    return rep;
}

std::size_t designated_member(const CoverFamily &c, const std::vector<i64> &v) {
    if (static_cast<int>(v.size()) != 2 * c.n) throw Error(ErrorKind::ShapeMismatch, "vector length must be 2n");
    Modulus m = factorize(c.q);
    std::size_t idx = 0;
    for (auto [p, r] : m.factors) {
        PrimePowerCover d = prime_power_data(p, r, c.n);
        std::vector<i64> part(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) part[i] = mod(v[i], d.R.pr);
        std::size_t count = d.t_values.size() + d.s_values.size();
        idx = idx * count + designated_prime_power(d, part);
    }
    return idx;
}

StabilizerGroup cover_member_group(const CoverFamily &c, std::size_t idx) {
    if (idx >= c.members.size()) throw Error(ErrorKind::OutOfRange, "member index out of range");
    return lift_phases(c.members[idx], c.n, c.q);
}

double lr_upper_bound(int n, i64 q) {
    return (n + std::pow(2.0, -n - 1)) * log_b(static_cast<double>(q));
}

}  // namespace qmagic
