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

#include <string>
#include <vector>

#include "qmagic/common.hpp"
#include "qmagic/linalg.hpp"

namespace qmagic {

// omega_{2q}^c * Z^a X^b on n sites, with Z|j> = omega^j |j> and X|j> = |j+1 mod q>.
struct PauliLabel {
    int n = 0;
    i64 q = 2;
    std::vector<i64> a;  // Z exponents in Z_q
    std::vector<i64> b;  // X exponents in Z_q
    i64 c = 0;           // phase exponent in Z_{2q}

    bool operator==(const PauliLabel &o) const { return n == o.n && q == o.q && a == o.a && b == o.b && c == o.c; }
    bool operator!=(const PauliLabel &o) const { return !(*this == o); }
    bool operator<(const PauliLabel &o) const;

    bool same_vector(const PauliLabel &o) const { return a == o.a && b == o.b; }
    bool is_identity_up_to_phase() const;
    std::vector<int> support() const;
};

PauliLabel pauli_identity(int n, i64 q);
PauliLabel pauli_single(int n, i64 q, int site, i64 za, i64 xb);
PauliLabel pauli_from_vector(int n, i64 q, const std::vector<i64> &ab, i64 c = 0);
std::vector<i64> symplectic_vector(const PauliLabel &P);

PauliLabel compose(const PauliLabel &P, const PauliLabel &Q);
PauliLabel pauli_power(const PauliLabel &P, i64 e);
PauliLabel adjoint(const PauliLabel &P);
PauliLabel with_phase(const PauliLabel &P, i64 c);

i64 commutation_exponent(const PauliLabel &P, const PauliLabel &Q);
i64 character_value(const PauliLabel &P, const PauliLabel &Q);
i64 order(const PauliLabel &P);

Mat to_dense(const PauliLabel &P);
cplx omega2q_pow(i64 q, i64 c);

struct CrtPermutation {
    std::vector<i64> perm;  // perm[j] = tensor index of (j mod p_1^{r_1}, ...), first factor fastest
    std::vector<i64> dims;  // prime-power factor dimensions
    bool identity = false;  // set when q is a prime power
};
CrtPermutation crt_permutation(i64 q);

std::string to_text(const PauliLabel &P);
PauliLabel parse_label(const std::string &text);

}  // namespace qmagic
