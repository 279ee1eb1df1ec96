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

#include <utility>
#include <vector>

#include "qmagic/common.hpp"

namespace qmagic {

struct Modulus {
    i64 q = 0;
    std::vector<std::pair<i64, int>> factors;  // (p_j, r_j), p_j ascending

    std::vector<i64> prime_powers() const;
    i64 smallest_prime() const { return factors.front().first; }
};

bool is_prime(i64 p);
Modulus factorize(i64 q);

std::vector<i64> crt_split(i64 a, const Modulus &m);
i64 crt_combine(const std::vector<i64> &parts, const Modulus &m);

// Modular inverse of a modulo m; throws NotAUnit when gcd(a, m) != 1.
i64 inv_mod(i64 a, i64 m);

// Polynomials over Z_m as ascending coefficient vectors.
using Poly = std::vector<i64>;

struct GaloisRing {
    i64 p = 0;
    int r = 0;
    int n = 0;
    i64 pr = 0;  // p^r
    Poly h;      // monic, degree n, length n + 1

    bool operator==(const GaloisRing &o) const { return p == o.p && r == o.r && n == o.n && h == o.h; }
    bool operator!=(const GaloisRing &o) const { return !(*this == o); }
    i64 size() const;
};

struct RingElement {
    std::vector<i64> coeffs;  // power basis of xi, each in [0, p^r)

    bool operator==(const RingElement &o) const { return coeffs == o.coeffs; }
    bool operator!=(const RingElement &o) const { return coeffs != o.coeffs; }
    bool operator<(const RingElement &o) const { return coeffs < o.coeffs; }
};

GaloisRing construct_galois_ring(i64 p, int r, int n);

RingElement ring_zero(const GaloisRing &R);
RingElement ring_one(const GaloisRing &R);
RingElement ring_scalar(const GaloisRing &R, i64 s);
RingElement ring_xi(const GaloisRing &R);
// The index-th element in lexicographic coefficient order (coefficient 0 most significant).
RingElement ring_element_at(const GaloisRing &R, i64 index);
std::vector<RingElement> ring_elements(const GaloisRing &R);

RingElement ring_add(const GaloisRing &R, const RingElement &x, const RingElement &y);
RingElement ring_neg(const GaloisRing &R, const RingElement &x);
RingElement ring_mul(const GaloisRing &R, const RingElement &x, const RingElement &y);
RingElement ring_pow(const GaloisRing &R, const RingElement &x, i64 e);

bool is_unit(const GaloisRing &R, const RingElement &x);
RingElement inverse(const GaloisRing &R, const RingElement &x);

RingElement frobenius(const GaloisRing &R, const RingElement &x);
i64 trace(const GaloisRing &R, const RingElement &x);

std::vector<RingElement> power_basis(const GaloisRing &R);
std::vector<RingElement> dual_basis(const GaloisRing &R, const std::vector<RingElement> &basis);

// Solves A x = b over Z_m when A is invertible mod m (det a unit); throws NotABasis otherwise.
std::vector<i64> solve_mod(std::vector<std::vector<i64>> A, std::vector<i64> b, i64 m);

// Polynomial helpers over Z_m, exposed for tests.
Poly poly_mul(const Poly &a, const Poly &b, i64 m);
Poly poly_mod(const Poly &a, const Poly &monic, i64 m);

}  // namespace qmagic
