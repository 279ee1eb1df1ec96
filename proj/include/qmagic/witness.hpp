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

#include "qmagic/dense.hpp"
#include "qmagic/magic.hpp"

namespace qmagic {

struct MiWitnessVerdict {
    double I = 0;
    i64 p = 2;  // smallest prime divisor of q
    double eps1 = 0, eps2 = 0;  // window [tol, log p - tol]
    bool fires = false;
    double margin = 0;  // distance from I to the nearest window edge, negative when outside
};

MiWitnessVerdict mi_forbidden_window(const Mat &rho, int n, i64 q, const Region &A, const Region &B, double tol = 1e-6);

// Sites of a chain of n sites within distance d of A, and those of A at distance more than d from its complement.
Region thicken(const Region &A, int d, int n);
Region shrink(const Region &A, int d, int n);

struct StabilityReport {
    double inner = 0;   // I_rho(A^{-d} : B^{-d})
    double evolved = 0; // I_{U rho U^dag}(A : B)
    double outer = 0;   // I_rho(A^{+d} : B^{+d})
    bool holds = false;
};

StabilityReport mi_stability_check(const DenseState &psi, int depth, const Region &A, const Region &B,
                                   const GateSupplier &gates, double tol = 1e-8);
StabilityReport mi_stability_check(const DenseState &psi, int depth, const Region &A, const Region &B,
                                   std::mt19937_64 &rng, double tol = 1e-8);

double fidelity_triangle(double delta1, double delta2);

struct DecayProfile {
    double K = 1;
    double xi = 1;
    int m = 1;
    double r0 = 1;
    double c1 = 1;
    double n = 2;
};

struct AssemblyResult {
    double s_bound = 0;         // K m^2 r0^2 n^{-c1/xi}
    double product_fidelity = 1;  // exp(-s_bound / 2)
    double delta1 = 1;          // prod sqrt(1 - eps^2 / 4D^2)
    double delta2 = 0;          // 1 - product_fidelity
    double combined = 1;        // delta1 + sqrt(2 delta2)
    double bound = 0;           // -log(combined^2), configured base
};

AssemblyResult logn_lrm_assemble(const DecayProfile &profile, const std::vector<PatchBound> &certs);

}  // namespace qmagic
