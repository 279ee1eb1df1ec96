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

#include <random>
#include <vector>

#include <Eigen/QR>

#include "qmagic/dense.hpp"
#include "qmagic/stabilizer.hpp"

namespace qmagic::testing {

inline PauliLabel random_pauli(std::mt19937_64 &rng, int n, i64 q) {
    std::uniform_int_distribution<i64> dq(0, q - 1);
    PauliLabel P = pauli_identity(n, q);
    for (int i = 0; i < n; ++i) {
        P.a[i] = dq(rng);
        P.b[i] = dq(rng);
    }
    return P;
}

// Random independent, phase-consistent tableau with up to max_k generators.
inline std::vector<PauliLabel> random_independent_tableau(std::mt19937_64 &rng, int n, i64 q, int max_k) {
    std::vector<PauliLabel> gens;
    for (int attempt = 0; attempt < 200 && static_cast<int>(gens.size()) < max_k; ++attempt) {
        PauliLabel g = random_pauli(rng, n, q);
        if (g.is_identity_up_to_phase()) continue;
        bool commutes = true;
        for (const auto &h : gens) commutes = commutes && commutation_exponent(g, h) == 0;
        if (!commutes) continue;
        std::vector<i64> ok;
        for (i64 c = 0; c < 2 * q; ++c) {
            if (pauli_power(with_phase(g, c), order(g)).c == 0) ok.push_back(c);
        }
        g.c = ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)];
        auto trial = gens;
        trial.push_back(g);
        try {
            if (validate(trial, n, q).independent) gens = trial;
        } catch (const Error &) {
        }
    }
    return gens;
}

inline Vec random_vector(std::mt19937_64 &rng, i64 D) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(D);
    for (i64 i = 0; i < D; ++i) v(i) = cplx(g(rng), g(rng));
    return v.normalized();
}

inline DenseState random_state(std::mt19937_64 &rng, int n, i64 q) {
    return {n, q, random_vector(rng, ipow(q, n))};
}

inline Mat random_density(std::mt19937_64 &rng, i64 D, i64 rank) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat G(D, rank);
    for (i64 i = 0; i < D; ++i) {
        for (i64 j = 0; j < rank; ++j) G(i, j) = cplx(g(rng), g(rng));
    }
    Mat rho = G * G.adjoint();
    return rho / rho.trace().real();
}

inline Mat random_unitary(std::mt19937_64 &rng, i64 d) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat G(d, d);
    for (i64 i = 0; i < d; ++i) {
        for (i64 j = 0; j < d; ++j) G(i, j) = cplx(g(rng), g(rng));
    }
    Eigen::HouseholderQR<Mat> qr(G);
    Mat Q = qr.householderQ();
    Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (i64 j = 0; j < d; ++j) Q.col(j) *= std::polar(1.0, std::arg(R(j, j)));
    return Q;
}

inline Mat kron(const Mat &A, const Mat &B) {
    Mat K(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
    return K;
}

}  // namespace qmagic::testing
