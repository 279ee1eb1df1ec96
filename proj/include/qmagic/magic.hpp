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

#include "qmagic/dense.hpp"
#include "qmagic/linalg.hpp"
#include "qmagic/stabilizer.hpp"

namespace qmagic {

struct StabilizerDictionary {
    int n = 0;
    i64 q = 2;
    std::vector<Vec> states;  // unit vectors, one per pure stabilizer state
    std::vector<StabilizerGroup> groups;

    i64 dimension() const { return dense_dimension(n, q); }
    Mat projector(std::size_t i) const { return states[i] * states[i].adjoint(); }
};

StabilizerDictionary build_dictionary(int n, i64 q, i64 budget = 200000);

enum class EstimateStatus { Exact, UpperEstimate, LowerEstimate };
const char *estimate_status_name(EstimateStatus s);

struct PureFidelityResult {
    double value = 0;        // LF in the configured base
    double fidelity = 1;     // max |<phi|psi>|^2
    std::size_t witness = 0;  // dictionary index attaining the maximum
};

PureFidelityResult lf_pure(const Vec &psi, const StabilizerDictionary &dict);

struct RobustnessResult {
    double value = 0;       // LR = log(1 + 2R)
    double one_plus_2r = 1;
    RVec coefficients;      // c_sigma per dictionary state
    Mat dual_witness;       // Hermitian A with |Tr(A sigma)| <= 1
    double dual_value = 1;  // Tr(A rho)
    double max_dual_violation = 0;  // max_sigma |Tr(A sigma)| - 1
    double gap = 0;
    EstimateStatus status = EstimateStatus::Exact;
};

RobustnessResult lr_lp(const Mat &rho, const StabilizerDictionary &dict);

struct ConeResult {
    double lambda = 1;        // optimum of min sum d_i s.t. sum d_i phi_i >= rho
    double lambda_upper = 1;  // feasible repair of the last iterate
    double smax_set = 0;      // log lambda
    double lgr = 0;           // log(2 lambda - 1)
    double min_eigenvalue = 0;
    int iterations = 0;
    EstimateStatus status = EstimateStatus::Exact;
};

ConeResult lgr_smax_cone(const Mat &rho, const StabilizerDictionary &dict, int max_iterations = 2000);

struct RelEntropyResult {
    double value = 0;  // S(rho || sigma) at the final iterate, an upper estimate
    double gap = 0;    // Frank-Wolfe duality gap, same base
    Mat sigma;
    int iterations = 0;
};

RelEntropyResult rel_entropy_magic(const Mat &rho, const StabilizerDictionary &dict, double gap_tol = 1e-6,
                                   int max_iterations = 10000);

struct SpsDistance {
    double epsilon = 0;
    StabilizerGroup nearest;
};

// Exact minimum of ||rho - tau||_1 over every stabilizer projection state on (n, q).
SpsDistance distance_to_sps(const Mat &rho, int n, i64 q, i64 budget = 200000);

// Certified lower bound on min over the stabilizer hull of ||rho - sigma||_1.
double distance_to_hull_lower(const Mat &rho, const StabilizerDictionary &dict, int iterations = 400);

struct DistinguishingPauli {
    PauliLabel pauli;
    double alpha = 0;     // |Tr(P^dag (rho - sigma))|
    double achieved = 0;  // outcome-distribution 1-norm of the spectral measurement of P
};

DistinguishingPauli sm_distinguishing_pauli(const Mat &rho, const Mat &sigma, int n, i64 q);
// Outcome distribution of the spectral measurement of P on rho.
std::vector<double> pauli_measurement_distribution(const PauliLabel &P, const Mat &rho);

double fsm_upper_from_distance(double eps, double D);

enum class PatchTarget { SP, S };

struct PatchBound {
    double epsilon = 0;
    double D = 2;
};

struct PatchCertificate {
    std::vector<PatchBound> patches;
    PatchTarget target = PatchTarget::SP;
    double bound = 0;  // lower bound on LF in the configured base
};

PatchCertificate certify_product_lf(const std::vector<PatchBound> &patches, PatchTarget target);
double extensive_rel_entropy_bound(const std::vector<PatchBound> &patches);
double low_energy_lr_witness(const Vec &psi, const Vec &psi_l, double f_l);

struct MagicValue {
    double value = 0;
    EstimateStatus status = EstimateStatus::Exact;
    double gap = 0;
};

struct MagicReport {
    bool has_lf = false, has_srel = false, has_smax = false, has_lgr = false, has_lr = false;
    MagicValue lf, s_rel, s_max_set, lgr, lr;
    double log_base = 2;
};

// Computes the requested measures; LF requires a pure input (pass psi), the others use rho.
MagicReport magic_report(const DenseState &state, const std::vector<std::string> &measures,
                         const StabilizerDictionary &dict);

// Real coordinates of a Hermitian matrix: diagonal, then Re and Im of the strict upper triangle.
RVec hermitian_coords(const Mat &H);
Mat hermitian_from_dual(const RVec &y, i64 D);

}  // namespace qmagic
