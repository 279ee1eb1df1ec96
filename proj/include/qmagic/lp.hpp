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

#include "qmagic/linalg.hpp"

namespace qmagic {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RVec x;   // primal solution
    RVec y;   // equality-constraint duals: A^T y <= c at optimality
    double value = 0;
    int iterations = 0;
};

// Dense two-phase primal simplex with Bland's rule for
//   minimize c^T x  subject to  A x = b,  x >= 0.
// The final basic solution and duals are recomputed from the original data by an LU solve.
LpResult solve_lp(const RMat &A, const RVec &b, const RVec &c, double tol = 1e-9, int max_iter = 100000);

}  // namespace qmagic
