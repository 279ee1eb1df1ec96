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

#include "qmagic/lp.hpp"

#include <Eigen/LU>
#include <cmath>
#include <vector>

namespace qmagic {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr int kReinvertEvery = 50;

struct Tableau {
    int m = 0;
    int N = 0;  // columns excluding rhs
    RMat F;     // original [A | I | b], used to refresh T
    RMat T;     // m x (N + 1), last column is the rhs
    RVec cost;
    RVec d;     // reduced costs
    std::vector<int> basis;

    // Recomputes T = B^{-1} F from the current basis to shed accumulated rounding.
    void reinvert() {
        RMat B(m, m);
        for (int i = 0; i < m; ++i) B.col(i) = F.col(basis[i]);
        Eigen::PartialPivLU<RMat> lu(B);
        T = lu.solve(F);
        for (int i = 0; i < m; ++i) {
            T.col(basis[i]).setZero();
            T(i, basis[i]) = 1.0;
        }
        set_costs(cost);
    }

    void pivot(int r, int col) {
        double pv = T(r, col);
        T.row(r) /= pv;
        for (int i = 0; i < m; ++i) {
            if (i != r && T(i, col) != 0.0) T.row(i) -= T(i, col) * T.row(r);
        }
        double dc = d(col);
        if (dc != 0.0) d -= dc * T.row(r).head(N).transpose();
        basis[r] = col;
    }

    void set_costs(const RVec &cst) {
        cost = cst;
        d = cst;
        for (int i = 0; i < m; ++i) {
            double cb = cst(basis[i]);
            if (cb != 0.0) d -= cb * T.row(i).head(N).transpose();
        }
    }

    // Returns Optimal, Unbounded, or IterationLimit.
    LpStatus run(const std::vector<char> &allowed, double tol, int max_iter, int *iters) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < N; ++j) {
                if (allowed[j] && d(j) < -tol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return LpStatus::Optimal;
            if (*iters >= max_iter) return LpStatus::IterationLimit;
            int leave = -1;
            double best = 0;
            for (int i = 0; i < m; ++i) {
                double a = T(i, enter);
                if (a <= kPivotTol) continue;
                double ratio = T(i, N) / a;
                if (leave < 0 || ratio < best - tol || (std::abs(ratio - best) <= tol && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return LpStatus::Unbounded;
            pivot(leave, enter);
            ++*iters;
            if (*iters % kReinvertEvery == 0) reinvert();
        }
    }
};

}  // namespace

LpResult solve_lp(const RMat &A, const RVec &b, const RVec &c, double tol, int max_iter) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    LpResult res;
    res.x = RVec::Zero(n);
    res.y = RVec::Zero(m);

    RMat Af = A;
    RVec bf = b;
    std::vector<double> sign(m, 1.0);
    for (int i = 0; i < m; ++i) {
        if (bf(i) < 0) {
            Af.row(i) *= -1;
            bf(i) *= -1;
            sign[i] = -1;
        }
    }

    Tableau tab;
    tab.m = m;
    tab.N = n + m;
    tab.T = RMat::Zero(m, n + m + 1);
    tab.T.leftCols(n) = Af;
    tab.T.block(0, n, m, m) = RMat::Identity(m, m);
    tab.T.col(n + m) = bf;
    tab.F = tab.T;
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) tab.basis[i] = n + i;

    RVec phase1 = RVec::Zero(n + m);
    phase1.tail(m).setOnes();
    tab.set_costs(phase1);
    std::vector<char> all(n + m, 1);
    LpStatus st = tab.run(all, tol, max_iter, &res.iterations);
    if (st == LpStatus::IterationLimit) {
        res.status = st;
        return res;
    }
    double infeas = 0;
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) infeas += tab.T(i, n + m);
    }
    double scale = std::max(1.0, bf.lpNorm<Eigen::Infinity>());
    if (infeas > 1e3 * tol * scale) {
        res.status = LpStatus::Infeasible;
        return res;
    }

    std::vector<char> redundant(m, 0);
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        int col = -1;
        double best = kPivotTol;
        for (int j = 0; j < n; ++j) {
            if (std::abs(tab.T(i, j)) > best) {
                best = std::abs(tab.T(i, j));
                col = j;
            }
        }
        if (col < 0) {
            redundant[i] = 1;
        } else {
            tab.pivot(i, col);
        }
    }

    RVec phase2 = RVec::Zero(n + m);
    phase2.head(n) = c;
    tab.set_costs(phase2);
    std::vector<char> orig(n + m, 0);
    for (int j = 0; j < n; ++j) orig[j] = 1;
    for (int pass = 0; pass < 4; ++pass) {
        int before = res.iterations;
        if (pass > 0) tab.reinvert();
        st = tab.run(orig, tol, max_iter, &res.iterations);
        if (st != LpStatus::Optimal) {
            res.status = st;
            return res;
        }
        if (pass > 0 && res.iterations == before) break;
    }

    std::vector<int> rows, cols;
    for (int i = 0; i < m; ++i) {
        if (!redundant[i]) {
            rows.push_back(i);
            cols.push_back(tab.basis[i]);
        }
    }
    const int k = static_cast<int>(rows.size());
    RMat B(k, k);
    RVec bb(k), cb(k);
    for (int r = 0; r < k; ++r) {
        bb(r) = bf(rows[r]);
        for (int s = 0; s < k; ++s) B(r, s) = Af(rows[r], cols[s]);
    }
    for (int s = 0; s < k; ++s) cb(s) = c(cols[s]);
    Eigen::FullPivLU<RMat> lu(B);
    RVec xb = lu.solve(bb);
    RVec yb = lu.transpose().solve(cb);
    if (!lu.isInvertible()) {
        xb.setZero();
        yb.setZero();
        for (int r = 0; r < k; ++r) xb(r) = tab.T(rows[r], n + m);
    }
    for (int s = 0; s < k; ++s) res.x(cols[s]) = std::max(0.0, xb(s));
    for (int r = 0; r < k; ++r) res.y(rows[r]) = sign[rows[r]] * yb(r);
    res.value = c.dot(res.x);
    res.status = LpStatus::Optimal;
    return res;
}

}  // namespace qmagic
