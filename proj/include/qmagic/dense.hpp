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

#include <functional>
#include <string>
#include <vector>

#include "qmagic/common.hpp"
#include "qmagic/linalg.hpp"

namespace qmagic {

using Region = std::vector<int>;

struct DenseState {
    int n = 0;
    i64 q = 2;
    Vec amp;  // little-endian: site 0 varies fastest

    Mat density() const { return amp * amp.adjoint(); }
};

i64 dense_dimension(int n, i64 q);
DenseState make_state(int n, i64 q, const Vec &amp);
DenseState product_state(const std::vector<DenseState> &parts);

// Output ordering follows `keep`, whose first entry becomes the fastest index.
Mat partial_trace(const Mat &rho, int n, i64 q, const Region &keep);
Mat partial_trace_pure(const Vec &psi, int n, i64 q, const Region &keep);

Mat psd_sqrt(const Mat &rho);
double root_fidelity(const Mat &rho, const Mat &sigma);
double fidelity_sq(const Mat &rho, const Mat &sigma);
// Full Schatten 1-norm of the difference; orthogonal pure states are at distance 2.
double trace_distance(const Mat &rho, const Mat &sigma);

double vn_entropy(const Mat &rho);
double mutual_information(const Mat &rho, int n, i64 q, const Region &A, const Region &B);
double mutual_information_pure(const DenseState &psi, const Region &A, const Region &B);
// Both return +infinity when the support of rho is not inside the support of sigma.
double relative_entropy(const Mat &rho, const Mat &sigma);
double max_relative_entropy(const Mat &rho, const Mat &sigma);

// Two-site gate acting on (site, site + 1); basis index is x_site + q * x_{site+1}.
using GateSupplier = std::function<Mat(int layer, int site)>;
DenseState apply_brickwork(const DenseState &psi, int depth, const GateSupplier &gates);
DenseState apply_two_site(const DenseState &psi, const Mat &U, int site);

std::string state_to_json(const DenseState &psi);
DenseState state_from_json(const std::string &text);

}  // namespace qmagic
