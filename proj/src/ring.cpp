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

#include "qmagic/ring.hpp"

#include <algorithm>

namespace qmagic {

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Modulus factorize(i64 q) {
    if (q < 2) throw Error(ErrorKind::InvalidModulus, "modulus must be at least 2");
    Modulus m;
    m.q = q;
    i64 rest = q;
    for (i64 d = 2; d * d <= rest; ++d) {
        int e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (e > 0) m.factors.push_back({d, e});
    }
    if (rest > 1) m.factors.push_back({rest, 1});
    return m;
}

std::vector<i64> Modulus::prime_powers() const {
    std::vector<i64> out;
    for (auto [p, r] : factors) out.push_back(ipow(p, r));
    return out;
}

std::vector<i64> crt_split(i64 a, const Modulus &m) {
    std::vector<i64> out;
    for (i64 pp : m.prime_powers()) out.push_back(mod(a, pp));
    return out;
}

i64 inv_mod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1 != 0) {
        i64 t = g / a1;
        g -= t * a1;
        std::swap(g, a1);
        x -= t * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw Error(ErrorKind::NotAUnit, "element is not invertible");
    return mod(x, m);
}

i64 crt_combine(const std::vector<i64> &parts, const Modulus &m) {
    auto pps = m.prime_powers();
    if (parts.size() != pps.size()) throw Error(ErrorKind::ShapeMismatch, "crt component count");
    i64 acc = 0;
    for (std::size_t j = 0; j < pps.size(); ++j) {
        i64 Mj = m.q / pps[j];
        acc = mod(acc + mod(parts[j], pps[j]) * Mj % m.q * inv_mod(Mj, pps[j]), m.q);
    }
    return acc;
}

namespace {

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(const Poly &a, const Poly &b, i64 m) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = mod(out[i] - b[i], m);
    trim(out);
    return out;
}

Poly poly_add(const Poly &a, const Poly &b, i64 m) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = mod(out[i] + b[i], m);
    trim(out);
    return out;
}

Poly poly_scale(const Poly &a, i64 s, i64 m) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod(a[i] * s, m);
    trim(out);
    return out;
}

// Division over a field F_p: returns (quotient, remainder).
std::pair<Poly, Poly> poly_divmod_field(Poly a, Poly b, i64 p) {
    trim(a);
    trim(b);
    if (b.empty()) throw Error(ErrorKind::Internal, "polynomial division by zero");
    i64 lead_inv = inv_mod(b.back(), p);
    Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        i64 f = mod(a.back() * lead_inv, p);
        quot[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = mod(a[i + shift] - f * b[i], p);
        trim(a);
    }
    trim(quot);
    return {quot, a};
}

// Extended gcd over F_p: s*a + t*b = 1 for coprime a, b.
std::pair<Poly, Poly> poly_bezout(const Poly &a, const Poly &b, i64 p) {
    Poly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [qt, rem] = poly_divmod_field(r0, r1, p);
        Poly s2 = poly_sub(s0, poly_mul(qt, s1, p), p);
        Poly t2 = poly_sub(t0, poly_mul(qt, t1, p), p);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.size() != 1) throw Error(ErrorKind::Internal, "bezout inputs not coprime");
    i64 c = inv_mod(r0[0], p);
    return {poly_scale(s0, c, p), poly_scale(t0, c, p)};
}

bool irreducible_over_fp(const Poly &f, i64 p) {
    int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        i64 count = ipow(p, d);
        for (i64 idx = 0; idx < count; ++idx) {
            Poly g(d + 1);
            i64 t = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            if (poly_divmod_field(f, g, p).second.empty()) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree n over F_p with nonzero constant term, ordered
// lexicographically by (c_0, c_1, ..., c_{n-1}).
Poly smallest_irreducible(i64 p, int n) {
    i64 count = ipow(p, n);
    for (i64 idx = 0; idx < count; ++idx) {
        Poly f(n + 1);
        i64 t = idx;
        for (int i = n - 1; i >= 0; --i) {
            f[i] = t % p;
            t /= p;
        }
        f[n] = 1;
        if (f[0] == 0) continue;
        if (irreducible_over_fp(f, p)) return f;
    }
    throw Error(ErrorKind::Internal, "no irreducible polynomial found");
}

Poly hensel_lift(const Poly &h0, i64 p, int r, i64 N) {
    Poly target(N + 1, 0);
    Poly g0;
    {
        Poly f(N + 1, 0);
        f[0] = p - 1;
        f[N] = 1;
        auto [qt, rem] = poly_divmod_field(f, h0, p);
        if (!rem.empty()) throw Error(ErrorKind::Internal, "factor does not divide x^N - 1");
        g0 = qt;
    }
    auto [s, t] = poly_bezout(h0, g0, p);
    Poly h = h0, g = g0;
    i64 pk = p;
    for (int k = 1; k < r; ++k) {
        i64 m = pk * p;
        Poly f(N + 1, 0);
        f[0] = m - 1;
        f[N] = 1;
        Poly diff = poly_sub(f, poly_mul(h, g, m), m);
        Poly e(diff.size());
        for (std::size_t i = 0; i < diff.size(); ++i) e[i] = (diff[i] / pk) % p;
        trim(e);
        Poly a = poly_divmod_field(poly_mul(e, t, p), h0, p).second;
        Poly num = poly_sub(e, poly_mul(a, g0, p), p);
        auto [b, rem] = poly_divmod_field(num, h0, p);
        if (!rem.empty()) throw Error(ErrorKind::Internal, "hensel step failed");
        h = poly_add(h, poly_scale(a, pk, m), m);
        g = poly_add(g, poly_scale(b, pk, m), m);
        pk = m;
    }
    h.resize(h0.size(), 0);
    return h;
}

void check_same(const GaloisRing &R, const RingElement &x) {
    if (static_cast<int>(x.coeffs.size()) != R.n) throw Error(ErrorKind::RingMismatch, "ring element size mismatch");
}

}  // namespace

Poly poly_mul(const Poly &a, const Poly &b, i64 m) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], m);
    }
    trim(out);
    return out;
}

Poly poly_mod(const Poly &a, const Poly &monic, i64 m) {
    Poly r = a;
    for (auto &c : r) c = mod(c, m);
    trim(r);
    std::size_t dn = monic.size() - 1;
    while (r.size() > dn) {
        std::size_t shift = r.size() - 1 - dn;
        i64 f = r.back();
        for (std::size_t i = 0; i <= dn; ++i) r[i + shift] = mod(r[i + shift] - f * monic[i], m);
        trim(r);
    }
    return r;
}

i64 GaloisRing::size() const { return ipow(pr, n); }

GaloisRing construct_galois_ring(i64 p, int r, int n) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, "p must be prime");
    if (r < 1 || n < 1) throw Error(ErrorKind::OutOfRange, "r and n must be positive");
    GaloisRing R;
    R.p = p;
    R.r = r;
    R.n = n;
    R.pr = ipow(p, r);
    if (n == 1) {
        R.h = {R.pr - 1, 1};
        return R;
    }
    Poly h0 = smallest_irreducible(p, n);
    R.h = hensel_lift(h0, p, r, ipow(p, n) - 1);
    return R;
}

RingElement ring_zero(const GaloisRing &R) { return {std::vector<i64>(R.n, 0)}; }

RingElement ring_scalar(const GaloisRing &R, i64 s) {
    RingElement e = ring_zero(R);
    e.coeffs[0] = mod(s, R.pr);
    return e;
}

RingElement ring_one(const GaloisRing &R) { return ring_scalar(R, 1); }

RingElement ring_xi(const GaloisRing &R) {
    if (R.n == 1) return ring_one(R);
    RingElement e = ring_zero(R);
    e.coeffs[1] = 1;
    return e;
}

RingElement ring_element_at(const GaloisRing &R, i64 index) {
    RingElement e = ring_zero(R);
    for (int i = R.n - 1; i >= 0; --i) {
        e.coeffs[i] = index % R.pr;
        index /= R.pr;
    }
    return e;
}

std::vector<RingElement> ring_elements(const GaloisRing &R) {
    std::vector<RingElement> out;
    i64 sz = R.size();
    out.reserve(sz);
    for (i64 i = 0; i < sz; ++i) out.push_back(ring_element_at(R, i));
    return out;
}

RingElement ring_add(const GaloisRing &R, const RingElement &x, const RingElement &y) {
    check_same(R, x);
    check_same(R, y);
    RingElement out = x;
    for (int i = 0; i < R.n; ++i) out.coeffs[i] = mod(x.coeffs[i] + y.coeffs[i], R.pr);
    return out;
}

RingElement ring_neg(const GaloisRing &R, const RingElement &x) {
    check_same(R, x);
    RingElement out = x;
    for (auto &c : out.coeffs) c = mod(-c, R.pr);
    return out;
}

RingElement ring_mul(const GaloisRing &R, const RingElement &x, const RingElement &y) {
    check_same(R, x);
    check_same(R, y);
    Poly prod = poly_mod(poly_mul(x.coeffs, y.coeffs, R.pr), R.h, R.pr);
    RingElement out = ring_zero(R);
    for (std::size_t i = 0; i < prod.size(); ++i) out.coeffs[i] = prod[i];
    return out;
}

RingElement ring_pow(const GaloisRing &R, const RingElement &x, i64 e) {
    RingElement acc = ring_one(R), base = x;
    while (e > 0) {
        if (e & 1) acc = ring_mul(R, acc, base);
        base = ring_mul(R, base, base);
        e >>= 1;
    }
    return acc;
}

bool is_unit(const GaloisRing &R, const RingElement &x) {
    check_same(R, x);
    return std::any_of(x.coeffs.begin(), x.coeffs.end(), [&](i64 c) { return c % R.p != 0; });
}

RingElement inverse(const GaloisRing &R, const RingElement &x) {
    if (!is_unit(R, x)) throw Error(ErrorKind::NotAUnit, "inverse of a non-unit");
    i64 units = R.size() - ipow(R.p, R.n * (R.r - 1));
    return ring_pow(R, x, units - 1);
}

RingElement frobenius(const GaloisRing &R, const RingElement &x) {
    check_same(R, x);
    RingElement xp = ring_pow(R, ring_xi(R), R.p);
    RingElement acc = ring_zero(R), power = ring_one(R);
    for (int i = 0; i < R.n; ++i) {
        RingElement term = power;
        for (auto &c : term.coeffs) c = mod(c * x.coeffs[i], R.pr);
        acc = ring_add(R, acc, term);
        power = ring_mul(R, power, xp);
    }
    return acc;
}

i64 trace(const GaloisRing &R, const RingElement &x) {
    RingElement acc = ring_zero(R), cur = x;
    for (int i = 0; i < R.n; ++i) {
        acc = ring_add(R, acc, cur);
        cur = frobenius(R, cur);
    }
    for (int i = 1; i < R.n; ++i) {
        if (acc.coeffs[i] != 0) throw Error(ErrorKind::Internal, "trace left the base ring");
    }
    return acc.coeffs[0];
}

std::vector<RingElement> power_basis(const GaloisRing &R) {
    std::vector<RingElement> out;
    for (int i = 0; i < R.n; ++i) {
        RingElement e = ring_zero(R);
        e.coeffs[i] = 1;
        out.push_back(e);
    }
    return out;
}

std::vector<i64> solve_mod(std::vector<std::vector<i64>> A, std::vector<i64> b, i64 m) {
    const std::size_t N = A.size();
    Modulus mm = factorize(m);
    if (mm.factors.size() != 1) throw Error(ErrorKind::Internal, "solve_mod needs a prime-power modulus");
    const i64 p = mm.factors[0].first;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = N;
        for (std::size_t row = col; row < N; ++row) {
            if (mod(A[row][col], p) != 0) {
                piv = row;
                break;
            }
        }
        if (piv == N) throw Error(ErrorKind::NotABasis, "matrix is singular modulo the ring characteristic");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        i64 inv = inv_mod(A[col][col], m);
        for (auto &v : A[col]) v = mod(v * inv, m);
        b[col] = mod(b[col] * inv, m);
        for (std::size_t row = 0; row < N; ++row) {
            if (row == col || A[row][col] == 0) continue;
            i64 f = A[row][col];
            for (std::size_t k = 0; k < N; ++k) A[row][k] = mod(A[row][k] - f * A[col][k], m);
            b[row] = mod(b[row] - f * b[col], m);
        }
    }
    return b;
}

std::vector<RingElement> dual_basis(const GaloisRing &R, const std::vector<RingElement> &basis) {
    const int n = R.n;
    if (static_cast<int>(basis.size()) != n) throw Error(ErrorKind::NotABasis, "basis must have n elements");
    std::vector<std::vector<i64>> gram(n, std::vector<i64>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) gram[i][j] = trace(R, ring_mul(R, basis[i], basis[j]));
    }
    // e*_j = sum_k c_{jk} e_k with Gram * c_j = unit vector j.
    std::vector<RingElement> out;
    for (int j = 0; j < n; ++j) {
        std::vector<i64> rhs(n, 0);
        rhs[j] = 1;
        std::vector<i64> c = solve_mod(gram, rhs, R.pr);
        RingElement e = ring_zero(R);
        for (int k = 0; k < n; ++k) {
            RingElement term = basis[k];
            for (auto &v : term.coeffs) v = mod(v * c[k], R.pr);
            e = ring_add(R, e, term);
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace qmagic
