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

#include "qmagic/pauli.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qmagic/ring.hpp"

namespace qmagic {

namespace {

void check_shape(const PauliLabel &P, const PauliLabel &Q) {
    if (P.n != Q.n || P.q != Q.q) throw Error(ErrorKind::ShapeMismatch, "Pauli labels differ in (n, q)");
}

i64 dot(const std::vector<i64> &x, const std::vector<i64> &y) {
    i64 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

}  // namespace

bool PauliLabel::operator<(const PauliLabel &o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
}

bool PauliLabel::is_identity_up_to_phase() const {
    for (int i = 0; i < n; ++i) {
        if (a[i] != 0 || b[i] != 0) return false;
    }
    return true;
}

std::vector<int> PauliLabel::support() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (a[i] != 0 || b[i] != 0) out.push_back(i);
    }
    return out;
}

PauliLabel pauli_identity(int n, i64 q) {
    PauliLabel P;
    P.n = n;
    P.q = q;
    P.a.assign(n, 0);
    P.b.assign(n, 0);
    return P;
}

PauliLabel pauli_single(int n, i64 q, int site, i64 za, i64 xb) {
    PauliLabel P = pauli_identity(n, q);
    P.a[site] = mod(za, q);
    P.b[site] = mod(xb, q);
    return P;
}

PauliLabel pauli_from_vector(int n, i64 q, const std::vector<i64> &ab, i64 c) {
    PauliLabel P = pauli_identity(n, q);
    for (int i = 0; i < n; ++i) {
        P.a[i] = mod(ab[i], q);
        P.b[i] = mod(ab[n + i], q);
    }
    P.c = mod(c, 2 * q);
    return P;
}

std::vector<i64> symplectic_vector(const PauliLabel &P) {
    std::vector<i64> v(P.a);
    v.insert(v.end(), P.b.begin(), P.b.end());
    return v;
}

// X^b Z^a = omega^{-ab} Z^a X^b, so moving X^{b_P} past Z^{a_Q} costs omega^{-b_P . a_Q}.
PauliLabel compose(const PauliLabel &P, const PauliLabel &Q) {
    check_shape(P, Q);
    PauliLabel R = P;
    for (int i = 0; i < P.n; ++i) {
        R.a[i] = mod(P.a[i] + Q.a[i], P.q);
        R.b[i] = mod(P.b[i] + Q.b[i], P.q);
    }
    R.c = mod(P.c + Q.c - 2 * mod(dot(P.b, Q.a), P.q), 2 * P.q);
    return R;
}

PauliLabel pauli_power(const PauliLabel &P, i64 e) {
    if (e < 0) return pauli_power(adjoint(P), -e);
    PauliLabel acc = pauli_identity(P.n, P.q);
    for (i64 i = 0; i < e; ++i) acc = compose(acc, P);
    return acc;
}

PauliLabel adjoint(const PauliLabel &P) {
    PauliLabel R = P;
    for (int i = 0; i < P.n; ++i) {
        R.a[i] = mod(-P.a[i], P.q);
        R.b[i] = mod(-P.b[i], P.q);
    }
    R.c = mod(-P.c - 2 * mod(dot(P.a, P.b), P.q), 2 * P.q);
    return R;
}

PauliLabel with_phase(const PauliLabel &P, i64 c) {
    PauliLabel R = P;
    R.c = mod(c, 2 * P.q);
    return R;
}

i64 commutation_exponent(const PauliLabel &P, const PauliLabel &Q) {
    check_shape(P, Q);
    return mod(dot(P.a, Q.b) - dot(P.b, Q.a), P.q);
}

i64 character_value(const PauliLabel &P, const PauliLabel &Q) { return commutation_exponent(P, Q); }

i64 order(const PauliLabel &P) {
    i64 d = 1;
    for (int i = 0; i < P.n; ++i) {
        d = lcm(d, P.q / gcd(P.q, P.a[i]));
        d = lcm(d, P.q / gcd(P.q, P.b[i]));
    }
    return d;
}

cplx omega2q_pow(i64 q, i64 c) {
    double ang = std::numbers::pi * static_cast<double>(mod(c, 2 * q)) / static_cast<double>(q);
    return {std::cos(ang), std::sin(ang)};
}

Mat to_dense(const PauliLabel &P) {
    i64 D = 1;
    for (int i = 0; i < P.n; ++i) {
        D *= P.q;
        if (D > kDenseLimit) throw Error(ErrorKind::DenseLimit, "q^n exceeds the dense limit");
    }
    Mat M = Mat::Zero(D, D);
    std::vector<i64> digits(P.n);
    for (i64 j = 0; j < D; ++j) {
        i64 t = j;
        for (int i = 0; i < P.n; ++i) {
            digits[i] = t % P.q;
            t /= P.q;
        }
        // Z^a X^b |j> = omega^{a.(j+b)} |j+b>
        i64 k = 0, stride = 1, ph = 0;
        for (int i = 0; i < P.n; ++i) {
            i64 kd = (digits[i] + P.b[i]) % P.q;
            ph += P.a[i] * kd;
            k += kd * stride;
            stride *= P.q;
        }
        M(k, j) = omega2q_pow(P.q, P.c + 2 * mod(ph, P.q));
    }
    return M;
}

CrtPermutation crt_permutation(i64 q) {
    Modulus m = factorize(q);
    CrtPermutation out;
    out.dims = m.prime_powers();
    out.perm.resize(q);
    if (m.factors.size() == 1) {
        out.identity = true;
        for (i64 j = 0; j < q; ++j) out.perm[j] = j;
        return out;
    }
    for (i64 j = 0; j < q; ++j) {
        auto parts = crt_split(j, m);
        i64 idx = 0, stride = 1;
        for (std::size_t f = 0; f < parts.size(); ++f) {
            idx += parts[f] * stride;
            stride *= out.dims[f];
        }
        out.perm[j] = idx;
    }
    return out;
}

std::string to_text(const PauliLabel &P) {
    std::ostringstream os;
    os << P.q << ' ' << P.n << " |";
    for (i64 v : P.a) os << ' ' << v;
    os << " |";
    for (i64 v : P.b) os << ' ' << v;
    os << " | " << P.c;
    return os.str();
}

PauliLabel parse_label(const std::string &text) {
    std::string s = text;
    for (auto &ch : s) {
        if (ch == '|') ch = ' ';
    }
    std::istringstream is(s);
    i64 q = 0;
    int n = 0;
    if (!(is >> q >> n) || q < 2 || n < 0) throw Error(ErrorKind::Parse, "bad Pauli label header");
    PauliLabel P = pauli_identity(n, q);
    for (int i = 0; i < n; ++i) {
        if (!(is >> P.a[i])) throw Error(ErrorKind::Parse, "bad Pauli label Z part");
    }
    for (int i = 0; i < n; ++i) {
        if (!(is >> P.b[i])) throw Error(ErrorKind::Parse, "bad Pauli label X part");
    }
    if (!(is >> P.c)) throw Error(ErrorKind::Parse, "bad Pauli label phase");
    std::string extra;
    if (is >> extra) throw Error(ErrorKind::Parse, "trailing data in Pauli label");
    for (int i = 0; i < n; ++i) {
        P.a[i] = mod(P.a[i], q);
        P.b[i] = mod(P.b[i], q);
    }
    P.c = mod(P.c, 2 * q);
    return P;
}

}  // namespace qmagic
