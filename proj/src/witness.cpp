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

#include "qmagic/witness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "qmagic/ring.hpp"

namespace qmagic {

namespace {

Mat haar_unitary(std::mt19937_64 &rng, i64 d) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat Z(d, d);
    for (i64 i = 0; i < d; ++i) {
        for (i64 j = 0; j < d; ++j) Z(i, j) = cplx(g(rng), g(rng));
    }
    Eigen::HouseholderQR<Mat> qr(Z);
    Mat Q = qr.householderQ();
    Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (i64 i = 0; i < d; ++i) Q.col(i) *= std::polar(1.0, std::arg(R(i, i)));
    return Q;
}

void check_disjoint(const Region &A, const Region &B) {
    std::set<int> sa(A.begin(), A.end());
    for (int s : B) {
        if (sa.count(s)) throw Error(ErrorKind::InvalidRegion, "regions overlap");
    }
}

}  // namespace

MiWitnessVerdict mi_forbidden_window(const Mat &rho, int n, i64 q, const Region &A, const Region &B, double tol) {
    check_disjoint(A, B);
    MiWitnessVerdict v;
    v.p = factorize(q).smallest_prime();
    v.I = mutual_information(rho, n, q, A, B);
    v.eps1 = tol;
    v.eps2 = log_b(static_cast<double>(v.p)) - tol;
    v.fires = v.I > v.eps1 && v.I < v.eps2;
    v.margin = std::min(v.I - v.eps1, v.eps2 - v.I);
    return v;
}

Region thicken(const Region &A, int d, int n) {
    std::set<int> out;
    for (int s : A) {
        for (int t = std::max(0, s - d); t <= std::min(n - 1, s + d); ++t) out.insert(t);
    }
    return Region(out.begin(), out.end());
}

Region shrink(const Region &A, int d, int n) {
    std::set<int> in(A.begin(), A.end());
    Region out;
    for (int s : A) {
        bool interior = true;
        for (int t = std::max(0, s - d); t <= std::min(n - 1, s + d); ++t) interior = interior && in.count(t);
        if (interior) out.push_back(s);
    }
    return out;
}

StabilityReport mi_stability_check(const DenseState &psi, int depth, const Region &A, const Region &B,
                                   const GateSupplier &gates, double tol) {
    check_disjoint(A, B);
    Region Ap = thicken(A, depth, psi.n), Bp = thicken(B, depth, psi.n);
    std::set<int> sa(Ap.begin(), Ap.end());
    for (int s : Bp) {
        if (sa.count(s)) throw Error(ErrorKind::InvalidRegion, "thickened regions overlap");
    }
    StabilityReport r;
    Region Am = shrink(A, depth, psi.n), Bm = shrink(B, depth, psi.n);
    r.inner = mutual_information_pure(psi, Am, Bm);
    r.outer = mutual_information_pure(psi, Ap, Bp);
    r.evolved = mutual_information_pure(apply_brickwork(psi, depth, gates), A, B);
    r.holds = r.inner <= r.evolved + tol && r.evolved <= r.outer + tol;
    return r;
}

StabilityReport mi_stability_check(const DenseState &psi, int depth, const Region &A, const Region &B,
                                   std::mt19937_64 &rng, double tol) {
    std::map<std::pair<int, int>, Mat> gates;
    for (int l = 0; l < depth; ++l) {
        for (int s = l % 2; s + 1 < psi.n; s += 2) gates[{l, s}] = haar_unitary(rng, psi.q * psi.q);
    }
    GateSupplier supply = [&](int layer, int site) { return gates.at({layer, site}); };
    return mi_stability_check(psi, depth, A, B, supply, tol);
}

double fidelity_triangle(double delta1, double delta2) {
    if (!(delta1 >= 0 && delta1 <= 1) || !(delta2 >= 0 && delta2 <= 1)) {
        throw Error(ErrorKind::OutOfRange, "fidelity_triangle arguments must lie in [0, 1]");
    }
    return delta1 + std::sqrt(2 * delta2);
}

AssemblyResult logn_lrm_assemble(const DecayProfile &profile, const std::vector<PatchBound> &certs) {
    AssemblyResult r;
    r.s_bound = profile.K * profile.m * profile.m * profile.r0 * profile.r0 *
                std::pow(profile.n, -profile.c1 / profile.xi);
    r.product_fidelity = std::exp(-r.s_bound / 2);
    r.delta2 = 1 - r.product_fidelity;
    r.delta1 = 1;
    for (const auto &c : certs) r.delta1 *= fsm_upper_from_distance(c.epsilon, c.D);
    r.combined = fidelity_triangle(r.delta1, std::min(1.0, r.delta2));
    r.bound = -2 * log_b(r.combined);
    return r;
}

}  // namespace qmagic
