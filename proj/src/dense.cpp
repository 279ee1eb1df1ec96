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

#include "qmagic/dense.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <set>

#include "json.hpp"

namespace qmagic {

namespace {

constexpr double kEntropyClip = 1e-14;
constexpr double kSupportCut = 1e-10;
constexpr double kPsdTol = 1e-8;

void check_region(const Region &R, int n) {
    std::set<int> seen;
    for (int s : R) {
        if (s < 0 || s >= n || !seen.insert(s).second) throw Error(ErrorKind::InvalidRegion, "invalid region");
    }
}

Region complement(const Region &keep, int n) {
    std::vector<bool> in(n, false);
    for (int s : keep) in[s] = true;
    Region out;
    for (int i = 0; i < n; ++i) {
        if (!in[i]) out.push_back(i);
    }
    return out;
}

// Full index for every (kept digits, traced digits) pair.
std::vector<i64> index_map(int n, i64 q, const Region &keep, const Region &traced) {
    i64 dk = ipow(q, static_cast<int>(keep.size())), dt = ipow(q, static_cast<int>(traced.size()));
    std::vector<i64> strides(n);
    i64 s = 1;
    for (int i = 0; i < n; ++i) {
        strides[i] = s;
        s *= q;
    }
    std::vector<i64> part_k(dk, 0), part_t(dt, 0);
    for (i64 k = 0; k < dk; ++k) {
        i64 t = k;
        for (int s2 : keep) {
            part_k[k] += (t % q) * strides[s2];
            t /= q;
        }
    }
    for (i64 k = 0; k < dt; ++k) {
        i64 t = k;
        for (int s2 : traced) {
            part_t[k] += (t % q) * strides[s2];
            t /= q;
        }
    }
    std::vector<i64> out(dk * dt);
    for (i64 k = 0; k < dk; ++k) {
        for (i64 t = 0; t < dt; ++t) out[k * dt + t] = part_k[k] + part_t[t];
    }
    return out;
}

RVec hermitian_eigenvalues(const Mat &M) {
    Eigen::SelfAdjointEigenSolver<Mat> es(M, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

void check_psd(const Mat &rho) {
    if (hermitian_eigenvalues(rho).minCoeff() < -kPsdTol) throw Error(ErrorKind::OutOfRange, "matrix is not PSD");
}

}  // namespace

i64 dense_dimension(int n, i64 q) {
    i64 D = 1;
    for (int i = 0; i < n; ++i) {
        D *= q;
        if (D > kDenseLimit) throw Error(ErrorKind::DenseLimit, "q^n exceeds the dense limit");
    }
    return D;
}

DenseState make_state(int n, i64 q, const Vec &amp) {
    if (amp.size() != dense_dimension(n, q)) throw Error(ErrorKind::ShapeMismatch, "amplitude length is not q^n");
    if (std::abs(amp.norm() - 1.0) > 1e-12) throw Error(ErrorKind::OutOfRange, "state is not normalized");
    return {n, q, amp};
}

DenseState product_state(const std::vector<DenseState> &parts) {
    DenseState out{0, parts.empty() ? 2 : parts[0].q, Vec::Ones(1)};
    for (const auto &p : parts) {
        if (p.q != out.q) throw Error(ErrorKind::ShapeMismatch, "product of states with different q");
        Vec next(out.amp.size() * p.amp.size());
        // The new factor occupies the slower (higher) sites.
        for (i64 j = 0; j < p.amp.size(); ++j) next.segment(j * out.amp.size(), out.amp.size()) = p.amp(j) * out.amp;
        out.amp = next;
        out.n += p.n;
    }
    dense_dimension(out.n, out.q);
    return out;
}

Mat partial_trace(const Mat &rho, int n, i64 q, const Region &keep) {
    check_region(keep, n);
    Region traced = complement(keep, n);
    i64 dk = ipow(q, static_cast<int>(keep.size())), dt = ipow(q, static_cast<int>(traced.size()));
    auto idx = index_map(n, q, keep, traced);
    Mat out = Mat::Zero(dk, dk);
    for (i64 i = 0; i < dk; ++i) {
        for (i64 j = 0; j < dk; ++j) {
            cplx s = 0;
            for (i64 t = 0; t < dt; ++t) s += rho(idx[i * dt + t], idx[j * dt + t]);
            out(i, j) = s;
        }
    }
    return out;
}

Mat partial_trace_pure(const Vec &psi, int n, i64 q, const Region &keep) {
    check_region(keep, n);
    Region traced = complement(keep, n);
    i64 dk = ipow(q, static_cast<int>(keep.size())), dt = ipow(q, static_cast<int>(traced.size()));
    auto idx = index_map(n, q, keep, traced);
    Mat M(dk, dt);
    for (i64 i = 0; i < dk; ++i) {
        for (i64 t = 0; t < dt; ++t) M(i, t) = psi(idx[i * dt + t]);
    }
    return M * M.adjoint();
}

Mat psd_sqrt(const Mat &rho) {
    Eigen::SelfAdjointEigenSolver<Mat> es(rho);
    RVec ev = es.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) ev(i) = ev(i) > kEntropyClip ? std::sqrt(ev(i)) : 0.0;
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

double root_fidelity(const Mat &rho, const Mat &sigma) {
    check_psd(rho);
    check_psd(sigma);
    Mat s = psd_sqrt(rho);
    Mat inner = s * sigma * s;
    inner = (inner + inner.adjoint()) / 2.0;
    RVec ev = hermitian_eigenvalues(inner);
    double f = 0;
    for (int i = 0; i < ev.size(); ++i) {
        if (ev(i) > kEntropyClip) f += std::sqrt(ev(i));
    }
    return f;
}

double fidelity_sq(const Mat &rho, const Mat &sigma) {
    double f = root_fidelity(rho, sigma);
    return f * f;
}

double trace_distance(const Mat &rho, const Mat &sigma) {
    Mat d = rho - sigma;
    d = (d + d.adjoint()) / 2.0;
    return hermitian_eigenvalues(d).cwiseAbs().sum();
}

double vn_entropy(const Mat &rho) {
    RVec ev = hermitian_eigenvalues(rho);
    double s = 0;
    for (int i = 0; i < ev.size(); ++i) {
        if (ev(i) > kEntropyClip) s -= ev(i) * std::log(ev(i));
    }
    return from_nats(s);
}

double mutual_information(const Mat &rho, int n, i64 q, const Region &A, const Region &B) {
    std::set<int> sa(A.begin(), A.end());
    for (int s : B) {
        if (sa.count(s)) throw Error(ErrorKind::InvalidRegion, "regions overlap");
    }
    Region AB = A;
    AB.insert(AB.end(), B.begin(), B.end());
    return vn_entropy(partial_trace(rho, n, q, A)) + vn_entropy(partial_trace(rho, n, q, B)) -
           vn_entropy(partial_trace(rho, n, q, AB));
}

double mutual_information_pure(const DenseState &psi, const Region &A, const Region &B) {
    std::set<int> sa(A.begin(), A.end());
    for (int s : B) {
        if (sa.count(s)) throw Error(ErrorKind::InvalidRegion, "regions overlap");
    }
    Region AB = A;
    AB.insert(AB.end(), B.begin(), B.end());
    return vn_entropy(partial_trace_pure(psi.amp, psi.n, psi.q, A)) +
           vn_entropy(partial_trace_pure(psi.amp, psi.n, psi.q, B)) -
           vn_entropy(partial_trace_pure(psi.amp, psi.n, psi.q, AB));
}

double relative_entropy(const Mat &rho, const Mat &sigma) {
    Eigen::SelfAdjointEigenSolver<Mat> er(rho), es(sigma);
    const Mat &V = es.eigenvectors();
    const RVec &sv = es.eigenvalues();
    double cross = 0;
    for (int i = 0; i < sv.size(); ++i) {
        double w = (V.col(i).adjoint() * rho * V.col(i))(0, 0).real();
        if (sv(i) <= kSupportCut) {
            if (w > kSupportCut) return std::numeric_limits<double>::infinity();
            continue;
        }
        cross += w * std::log(sv(i));
    }
    double self = 0;
    for (int i = 0; i < er.eigenvalues().size(); ++i) {
        double l = er.eigenvalues()(i);
        if (l > kEntropyClip) self += l * std::log(l);
    }
    return from_nats(self - cross);
}

double max_relative_entropy(const Mat &rho, const Mat &sigma) {
    Eigen::SelfAdjointEigenSolver<Mat> es(sigma);
    const Mat &V = es.eigenvectors();
    const RVec &sv = es.eigenvalues();
    std::vector<int> keep;
    for (int i = 0; i < sv.size(); ++i) {
        double w = (V.col(i).adjoint() * rho * V.col(i))(0, 0).real();
        if (sv(i) <= kSupportCut) {
            if (w > kSupportCut) return std::numeric_limits<double>::infinity();
        } else {
            keep.push_back(i);
        }
    }
    Mat W(sv.size(), keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) W.col(j) = V.col(keep[j]) / std::sqrt(sv(keep[j]));
    Mat M = W.adjoint() * rho * W;
    M = (M + M.adjoint()) / 2.0;
    return log_b(hermitian_eigenvalues(M).maxCoeff());
}

DenseState apply_two_site(const DenseState &psi, const Mat &U, int site) {
    const i64 q = psi.q;
    if (U.rows() != q * q || U.cols() != q * q) throw Error(ErrorKind::ShapeMismatch, "gate must be q^2 x q^2");
    if ((U.adjoint() * U - Mat::Identity(q * q, q * q)).norm() > 1e-10) {
        throw Error(ErrorKind::OutOfRange, "gate is not unitary");
    }
    if (site < 0 || site + 1 >= psi.n) throw Error(ErrorKind::InvalidRegion, "gate site out of range");
    i64 lo = ipow(q, site), D = psi.amp.size();
    DenseState out = psi;
    for (i64 base = 0; base < D; ++base) {
        i64 x0 = (base / lo) % q, x1 = (base / (lo * q)) % q;
        if (x0 != 0 || x1 != 0) continue;
        for (i64 r = 0; r < q * q; ++r) {
            cplx s = 0;
            for (i64 c = 0; c < q * q; ++c) s += U(r, c) * psi.amp(base + (c % q) * lo + (c / q) * lo * q);
            out.amp(base + (r % q) * lo + (r / q) * lo * q) = s;
        }
    }
    return out;
}

DenseState apply_brickwork(const DenseState &psi, int depth, const GateSupplier &gates) {
    DenseState cur = psi;
    for (int layer = 0; layer < depth; ++layer) {
        for (int site = layer % 2; site + 1 < psi.n; site += 2) cur = apply_two_site(cur, gates(layer, site), site);
    }
    return cur;
}

std::string state_to_json(const DenseState &psi) {
    nlohmann::json j;
    j["q"] = psi.q;
    j["n"] = psi.n;
    nlohmann::json amps = nlohmann::json::array();
    for (i64 i = 0; i < psi.amp.size(); ++i) amps.push_back({psi.amp(i).real(), psi.amp(i).imag()});
    j["amplitudes"] = amps;
    return j.dump();
}

DenseState state_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::Parse, std::string("state file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("amplitudes")) {
        throw Error(ErrorKind::Parse, "state file needs q, n and amplitudes");
    }
    try {
        i64 q = j["q"].get<i64>();
        int n = j["n"].get<int>();
        if (q < 2 || n < 0) throw Error(ErrorKind::Parse, "state file has invalid q or n");
        i64 D = dense_dimension(n, q);
        const auto &amps = j["amplitudes"];
        if (!amps.is_array() || static_cast<i64>(amps.size()) != D) {
            throw Error(ErrorKind::Parse, "amplitude count is not q^n");
        }
        Vec v(D);
        for (i64 i = 0; i < D; ++i) {
            const auto &e = amps[i];
            if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "amplitude must be [re, im]");
            v(i) = cplx(e[0].get<double>(), e[1].get<double>());
        }
        double nrm = v.norm();
        if (std::abs(nrm - 1.0) > 1e-6) throw Error(ErrorKind::Parse, "state is not normalized");
        return {n, q, v / nrm};
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::Parse, std::string("state file: ") + e.what());
    }
}

}  // namespace qmagic
