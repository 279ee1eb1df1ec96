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

#include "qmagic/magic.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qmagic/lp.hpp"

namespace qmagic {

namespace {

constexpr double kEigFloor = 1e-12;
constexpr double kConeTol = 1e-8;

double expect(const Vec &v, const Mat &A) { return (v.adjoint() * A * v)(0, 0).real(); }

void check_square(const Mat &rho, i64 D) {
    if (rho.rows() != D || rho.cols() != D) throw Error(ErrorKind::ShapeMismatch, "density dimension mismatch");
}

// -Tr(rho log sigma) in nats with eigenvalues floored.
double cross_entropy(const Mat &rho, const Mat &sigma) {
    Eigen::SelfAdjointEigenSolver<Mat> es(sigma);
    const Mat &U = es.eigenvectors();
    double s = 0;
    for (int k = 0; k < U.cols(); ++k) {
        double w = expect(U.col(k), rho);
        s -= w * std::log(std::max(es.eigenvalues()(k), kEigFloor));
    }
    return s;
}

double neg_entropy_nats(const Mat &rho) {
    Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
    double s = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double l = es.eigenvalues()(i);
        if (l > 1e-14) s += l * std::log(l);
    }
    return s;
}

// Gradient of sigma -> -Tr(rho log sigma), as a Hermitian matrix G with directional derivative Tr(G Delta).
Mat cross_entropy_gradient(const Mat &rho, const Mat &sigma) {
    Eigen::SelfAdjointEigenSolver<Mat> es(sigma);
    const Mat &U = es.eigenvectors();
    RVec lam = es.eigenvalues().cwiseMax(kEigFloor);
    Mat R = U.adjoint() * rho * U;
    const int D = static_cast<int>(lam.size());
    Mat Gp(D, D);
    for (int k = 0; k < D; ++k) {
        for (int l = 0; l < D; ++l) {
            double g;
            if (std::abs(lam(k) - lam(l)) < 1e-14 * std::max(1.0, lam(k))) {
                g = 1.0 / lam(k);
            } else {
                g = (std::log(lam(k)) - std::log(lam(l))) / (lam(k) - lam(l));
            }
            Gp(k, l) = -g * R(k, l);
        }
    }
    Mat G = U * Gp * U.adjoint();
    return (G + G.adjoint()) / 2.0;
}

template <class F>
double golden_section(F f, double lo, double hi, int iters = 80) {
    const double r = (std::sqrt(5.0) - 1) / 2;
    double a = lo, b = hi;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = f(x2);
        }
    }
    double best = (a + b) / 2;
    double fb = f(best);
    if (f(lo) <= fb) best = lo, fb = f(lo);
    if (f(hi) < fb) best = hi;
    return best;
}

Mat clip_operator_norm(const Mat &W) {
    Eigen::SelfAdjointEigenSolver<Mat> es((W + W.adjoint()) / 2.0);
    RVec lam = es.eigenvalues().cwiseMax(-1.0).cwiseMin(1.0);
    return es.eigenvectors() * lam.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

std::vector<std::size_t> computational_basis_indices(const StabilizerDictionary &dict) {
    const i64 D = dict.dimension();
    std::vector<std::size_t> out(static_cast<std::size_t>(D), dict.states.size());
    for (std::size_t k = 0; k < dict.states.size(); ++k) {
        const Vec &v = dict.states[k];
        Eigen::Index idx;
        double m = v.cwiseAbs().maxCoeff(&idx);
        if (std::abs(m - 1.0) < 1e-10) out[static_cast<std::size_t>(idx)] = k;
    }
    for (auto k : out) {
        if (k == dict.states.size()) throw Error(ErrorKind::Internal, "dictionary lacks a computational basis state");
    }
    return out;
}

}  // namespace

const char *estimate_status_name(EstimateStatus s) {
    switch (s) {
        case EstimateStatus::Exact: return "exact";
        case EstimateStatus::UpperEstimate: return "upper-estimate";
        case EstimateStatus::LowerEstimate: return "lower-estimate";
    }
    return "unknown";
}

RVec hermitian_coords(const Mat &H) {
    const Eigen::Index D = H.rows();
    RVec r(D * D);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < D; ++i) r(k++) = H(i, i).real();
    for (Eigen::Index i = 0; i < D; ++i) {
        for (Eigen::Index j = i + 1; j < D; ++j) {
            r(k++) = H(i, j).real();
            r(k++) = H(i, j).imag();
        }
    }
    return r;
}

Mat hermitian_from_dual(const RVec &y, i64 D) {
    Mat A = Mat::Zero(D, D);
    Eigen::Index k = 0;
    for (i64 i = 0; i < D; ++i) A(i, i) = y(k++);
    for (i64 i = 0; i < D; ++i) {
        for (i64 j = i + 1; j < D; ++j) {
            A(i, j) = cplx(y(k), y(k + 1)) / 2.0;
            A(j, i) = std::conj(A(i, j));
            k += 2;
        }
    }
    return A;
}

StabilizerDictionary build_dictionary(int n, i64 q, i64 budget) {
    StabilizerDictionary dict;
    dict.n = n;
    dict.q = q;
    const i64 D = dense_dimension(n, q);
    dict.groups = pure_stabilizer_states(n, q, budget);
    if (static_cast<i64>(dict.groups.size()) * D > budget * 64) {
        throw Error(ErrorKind::BudgetExceeded, "dictionary exceeds enumeration budget");
    }
    for (const auto &S : dict.groups) {
        Mat P = sps_dense(S);
        Eigen::Index k;
        P.diagonal().real().maxCoeff(&k);
        Vec v = P.col(k) / std::sqrt(P(k, k).real());
        dict.states.push_back(v.normalized());
    }
    return dict;
}

PureFidelityResult lf_pure(const Vec &psi, const StabilizerDictionary &dict) {
    if (psi.size() != dict.dimension()) throw Error(ErrorKind::ShapeMismatch, "state dimension mismatch");
    PureFidelityResult res;
    res.fidelity = -1;
    double norm2 = psi.squaredNorm();
    for (std::size_t k = 0; k < dict.states.size(); ++k) {
        double f = std::norm(dict.states[k].dot(psi)) / norm2;
        if (f > res.fidelity + 1e-15) {
            res.fidelity = f;
            res.witness = k;
        }
    }
    res.value = std::max(0.0, -log_b(res.fidelity));
    return res;
}

RobustnessResult lr_lp(const Mat &rho, const StabilizerDictionary &dict) {
    const i64 D = dict.dimension();
    check_square(rho, D);
    const Eigen::Index K = static_cast<Eigen::Index>(dict.states.size());
    const Eigen::Index rows = D * D;
    RMat A(rows, 2 * K);
    for (Eigen::Index k = 0; k < K; ++k) {
        RVec r = hermitian_coords(dict.projector(static_cast<std::size_t>(k)));
        A.col(k) = r;
        A.col(K + k) = -r;
    }
    RVec b = hermitian_coords(rho);
    RVec c = RVec::Ones(2 * K);
    LpResult lp = solve_lp(A, b, c);
    if (lp.status != LpStatus::Optimal) throw Error(ErrorKind::Internal, "robustness LP did not reach optimality");

    RobustnessResult res;
    res.coefficients = lp.x.head(K) - lp.x.tail(K);
    res.one_plus_2r = std::max(1.0, res.coefficients.cwiseAbs().sum());
    res.value = log_b(res.one_plus_2r);
    res.dual_witness = hermitian_from_dual(lp.y, D);
    res.dual_value = (res.dual_witness * rho).trace().real();
    double worst = 0;
    for (Eigen::Index k = 0; k < K; ++k) {
        worst = std::max(worst, std::abs(expect(dict.states[static_cast<std::size_t>(k)], res.dual_witness)));
    }
    res.max_dual_violation = worst - 1.0;
    res.gap = std::abs(res.coefficients.cwiseAbs().sum() - res.dual_value);
    return res;
}

ConeResult lgr_smax_cone(const Mat &rho, const StabilizerDictionary &dict, int max_iterations) {
    const i64 D = dict.dimension();
    check_square(rho, D);
    const std::size_t K = dict.states.size();
    std::vector<Vec> cuts;
    Eigen::SelfAdjointEigenSolver<Mat> er((rho + rho.adjoint()) / 2.0);
    for (i64 i = 0; i < D; ++i) {
        cuts.push_back(er.eigenvectors().col(i));
        cuts.push_back(Vec::Unit(D, i));
    }
    std::vector<RVec> rows;
    std::vector<double> rhs;
    auto add_cut = [&](const Vec &v) {
        RVec w(K);
        for (std::size_t k = 0; k < K; ++k) w(static_cast<Eigen::Index>(k)) = std::norm(dict.states[k].dot(v));
        rows.push_back(w);
        rhs.push_back(expect(v, rho));
    };
    for (const auto &v : cuts) add_cut(v);

    ConeResult res;
    RVec d = RVec::Zero(K);
    for (int it = 0; it < max_iterations; ++it) {
        const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
        RMat A = RMat::Zero(m, K + m);
        RVec b(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            A.row(i).head(K) = rows[static_cast<std::size_t>(i)].transpose();
            A(i, K + i) = -1.0;
            b(i) = rhs[static_cast<std::size_t>(i)];
        }
        RVec c = RVec::Zero(K + m);
        c.head(K).setOnes();
        LpResult lp = solve_lp(A, b, c, 1e-11);
        if (lp.status != LpStatus::Optimal) throw Error(ErrorKind::Internal, "cutting-plane LP failed");
        d = lp.x.head(K);
        res.lambda = d.sum();
        res.iterations = it + 1;

        Mat M = -rho;
        for (std::size_t k = 0; k < K; ++k) {
            if (d(static_cast<Eigen::Index>(k)) != 0.0) M += d(static_cast<Eigen::Index>(k)) * dict.projector(k);
        }
        Eigen::SelfAdjointEigenSolver<Mat> es((M + M.adjoint()) / 2.0);
        res.min_eigenvalue = es.eigenvalues()(0);
        if (res.min_eigenvalue >= -kConeTol) break;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            if (es.eigenvalues()(i) < -kConeTol) add_cut(es.eigenvectors().col(i));
        }
    }
    res.status = res.min_eigenvalue >= -kConeTol ? EstimateStatus::Exact : EstimateStatus::LowerEstimate;
    res.lambda_upper = res.lambda + static_cast<double>(D) * std::max(0.0, -res.min_eigenvalue);
    double lam = std::max(1.0, res.lambda);
    res.smax_set = log_b(lam);
    res.lgr = log_b(2 * lam - 1);
    return res;
}

RelEntropyResult rel_entropy_magic(const Mat &rho, const StabilizerDictionary &dict, double gap_tol,
                                   int max_iterations) {
    const i64 D = dict.dimension();
    check_square(rho, D);
    const std::size_t K = dict.states.size();
    std::vector<Mat> proj(K);
    for (std::size_t k = 0; k < K; ++k) proj[k] = dict.projector(k);
    double self = neg_entropy_nats(rho);

    // Away-step Frank-Wolfe over the dictionary hull, started at the maximally mixed state.
    std::vector<double> alpha(K, 0.0);
    for (auto k : computational_basis_indices(dict)) alpha[k] = 1.0 / static_cast<double>(D);
    Mat sigma = Mat::Identity(D, D) / static_cast<double>(D);

    double gap_tol_nats = gap_tol / from_nats(1.0);
    RelEntropyResult res;
    double gap = std::numeric_limits<double>::infinity();
    int it = 0;
    for (; it < max_iterations; ++it) {
        Mat G = cross_entropy_gradient(rho, sigma);
        double g_sigma = (G * sigma).trace().real();
        std::size_t s = 0, v = K;
        double best_s = std::numeric_limits<double>::infinity(), best_v = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < K; ++k) {
            double val = expect(dict.states[k], G);
            if (val < best_s) best_s = val, s = k;
            if (alpha[k] > 0 && val > best_v) best_v = val, v = k;
        }
        gap = g_sigma - best_s;
        if (gap <= gap_tol_nats) break;
        double away_gap = best_v - g_sigma;
        Mat dir;
        double gmax;
        bool fw_step = gap >= away_gap || v == K;
        if (fw_step) {
            dir = proj[s] - sigma;
            gmax = 1.0;
        } else {
            dir = sigma - proj[v];
            gmax = alpha[v] / (1.0 - alpha[v]);
        }
        auto h = [&](double g) { return cross_entropy(rho, sigma + g * dir); };
        double gamma = golden_section(h, 0.0, gmax);
        if (gamma <= 0) {
            if (fw_step) gamma = std::min(gmax, 1e-9);
            else gamma = 0;
        }
        if (fw_step) {
            for (auto &a : alpha) a *= (1 - gamma);
            alpha[s] += gamma;
        } else {
            for (auto &a : alpha) a *= (1 + gamma);
            alpha[v] -= gamma;
            if (alpha[v] < 1e-15) alpha[v] = 0;
        }
        sigma = sigma + gamma * dir;
        sigma = (sigma + sigma.adjoint()) / 2.0;
    }
    res.iterations = it;
    res.sigma = sigma;
    res.value = std::max(0.0, from_nats(self + cross_entropy(rho, sigma)));
    res.gap = from_nats(std::max(0.0, gap));
    return res;
}

SpsDistance distance_to_sps(const Mat &rho, int n, i64 q, i64 budget) {
    check_square(rho, dense_dimension(n, q));
    SpsDistance res;
    res.epsilon = std::numeric_limits<double>::infinity();
    for (const auto &S : all_stabilizer_projection_states(n, q, budget)) {
        double e = trace_distance(rho, sps_dense(S));
        if (e < res.epsilon - 1e-15) {
            res.epsilon = e;
            res.nearest = S;
        }
    }
    return res;
}

double distance_to_hull_lower(const Mat &rho, const StabilizerDictionary &dict, int iterations) {
    const i64 D = dict.dimension();
    check_square(rho, D);
    Mat W = Mat::Zero(D, D);
    double best = 0;
    for (int it = 0; it < iterations; ++it) {
        std::size_t arg = 0;
        double top = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < dict.states.size(); ++k) {
            double val = expect(dict.states[k], W);
            if (val > top) top = val, arg = k;
        }
        best = std::max(best, (W * rho).trace().real() - top);
        double step = 2.0 / std::sqrt(static_cast<double>(it) + 1.0);
        W = clip_operator_norm(W + step * (rho - dict.projector(arg)));
    }
    return best;
}

std::vector<double> pauli_measurement_distribution(const PauliLabel &P, const Mat &rho) {
    const i64 delta = order(P);
    Mat M = to_dense(P);
    check_square(rho, M.rows());
    std::vector<cplx> t(static_cast<std::size_t>(delta));
    Mat Mj = Mat::Identity(M.rows(), M.cols());
    for (i64 j = 0; j < delta; ++j) {
        t[static_cast<std::size_t>(j)] = (Mj * rho).trace();
        Mj = Mj * M;
    }
    cplx mu = Mj(0, 0);
    double base_angle = std::arg(mu) / static_cast<double>(delta);
    std::vector<double> p(static_cast<std::size_t>(delta));
    for (i64 k = 0; k < delta; ++k) {
        double ang = base_angle + 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(delta);
        cplx acc = 0;
        for (i64 j = 0; j < delta; ++j) acc += std::polar(1.0, -ang * static_cast<double>(j)) * t[static_cast<std::size_t>(j)];
        p[static_cast<std::size_t>(k)] = acc.real() / static_cast<double>(delta);
    }
    return p;
}

DistinguishingPauli sm_distinguishing_pauli(const Mat &rho, const Mat &sigma, int n, i64 q) {
    const i64 D = dense_dimension(n, q);
    check_square(rho, D);
    check_square(sigma, D);
    Mat Delta = rho - sigma;
    DistinguishingPauli res;
    res.pauli = pauli_identity(n, q);
    res.alpha = -1;
    const i64 total = ipow(q, 2 * n);
    for (i64 idx = 0; idx < total; ++idx) {
        std::vector<i64> v(2 * n);
        i64 t = idx;
        for (auto &x : v) {
            x = t % q;
            t /= q;
        }
        PauliLabel P = pauli_from_vector(n, q, v);
        double a = std::abs((to_dense(P).adjoint() * Delta).trace());
        if (a > res.alpha + 1e-12) {
            res.alpha = a;
            res.pauli = P;
        }
    }
    auto pr = pauli_measurement_distribution(res.pauli, rho);
    auto ps = pauli_measurement_distribution(res.pauli, sigma);
    for (std::size_t k = 0; k < pr.size(); ++k) res.achieved += std::abs(pr[k] - ps[k]);
    return res;
}

double fsm_upper_from_distance(double eps, double D) {
    if (!(eps >= 0 && eps <= 2)) throw Error(ErrorKind::OutOfRange, "epsilon must lie in [0, 2]");
    if (!(D >= 2)) throw Error(ErrorKind::OutOfRange, "patch dimension must be at least 2");
    return std::sqrt(1 - eps * eps / (4 * D * D));
}

PatchCertificate certify_product_lf(const std::vector<PatchBound> &patches, PatchTarget target) {
    PatchCertificate cert;
    cert.patches = patches;
    cert.target = target;
    for (const auto &p : patches) {
        double f = fsm_upper_from_distance(p.epsilon, p.D);
        cert.bound -= 2 * log_b(f);
    }
    return cert;
}

double extensive_rel_entropy_bound(const std::vector<PatchBound> &patches) {
    double nats = 0;
    for (const auto &p : patches) {
        if (!(p.epsilon >= 0 && p.epsilon <= 2)) throw Error(ErrorKind::OutOfRange, "epsilon must lie in [0, 2]");
        if (!(p.D >= 2)) throw Error(ErrorKind::OutOfRange, "patch dimension must be at least 2");
        nats += p.epsilon * p.epsilon / (2 * p.D * p.D);
    }
    return from_nats(nats);
}

double low_energy_lr_witness(const Vec &psi, const Vec &psi_l, double f_l) {
    if (!(f_l > 0) || f_l > 1 + 1e-12) throw Error(ErrorKind::OutOfRange, "stabilizer fidelity must lie in (0, 1]");
    if (psi.size() != psi_l.size()) throw Error(ErrorKind::ShapeMismatch, "state dimension mismatch");
    double overlap = std::norm(psi_l.dot(psi)) / (psi.squaredNorm() * psi_l.squaredNorm());
    double arg = overlap / f_l;
    return arg > 1 ? log_b(arg) : 0.0;
}

MagicReport magic_report(const DenseState &state, const std::vector<std::string> &measures,
                         const StabilizerDictionary &dict) {
    MagicReport rep;
    rep.log_base = log_base();
    Mat rho = state.density();
    rho /= rho.trace().real();
    bool want_cone = false;
    for (const auto &m : measures) {
        if (m == "lf") {
            rep.has_lf = true;
            rep.lf.value = lf_pure(state.amp, dict).value;
        } else if (m == "lr") {
            rep.has_lr = true;
            RobustnessResult r = lr_lp(rho, dict);
            rep.lr.value = r.value;
            rep.lr.gap = r.gap;
        } else if (m == "lgr") {
            rep.has_lgr = true;
            want_cone = true;
        } else if (m == "smax") {
            rep.has_smax = true;
            want_cone = true;
        } else if (m == "srel") {
            rep.has_srel = true;
            RelEntropyResult r = rel_entropy_magic(rho, dict);
            rep.s_rel = {r.value, EstimateStatus::UpperEstimate, r.gap};
        } else {
            throw Error(ErrorKind::Parse, "unknown measure '" + m + "'");
        }
    }
    if (want_cone) {
        ConeResult c = lgr_smax_cone(rho, dict);
        double gap_lam = c.lambda_upper - c.lambda;
        rep.lgr = {c.lgr, c.status, log_b(2 * (c.lambda + gap_lam) - 1) - c.lgr};
        rep.s_max_set = {c.smax_set, c.status, log_b(c.lambda + gap_lam) - c.smax_set};
    }
    return rep;
}

}  // namespace qmagic
