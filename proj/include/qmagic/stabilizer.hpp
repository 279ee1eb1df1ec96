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

#include "qmagic/lattice.hpp"
#include "qmagic/pauli.hpp"

namespace qmagic {

using Region = std::vector<int>;

struct StabilizerGroup {
    int n = 0;
    i64 q = 2;
    std::vector<PauliLabel> generators;
    ModLattice lattice;  // canonical form of the symplectic vectors
    i64 order = 1;
    bool independent = true;  // |S| equals the product of generator orders

    // Canonical generators: one per lattice row, carrying the group's phase.
    std::vector<PauliLabel> canonical_generators() const;
    bool same_group(const StabilizerGroup &o) const;
};

enum class Membership { PhaseMatch, UpToPhase, Absent };

StabilizerGroup validate(const std::vector<PauliLabel> &tableau, int n, i64 q);
StabilizerGroup trivial_group(int n, i64 q);
// A stabilizer group on the given isotropic vectors with some consistent choice of phases.
StabilizerGroup lift_phases(const std::vector<std::vector<i64>> &vecs, int n, i64 q);
i64 group_order(const StabilizerGroup &S);
Membership member(const StabilizerGroup &S, const PauliLabel &P);
// The element of S with the symplectic vector of P (phase taken from S); requires membership.
PauliLabel group_element_with_vector(const StabilizerGroup &S, const std::vector<i64> &v);
std::vector<PauliLabel> group_elements(const StabilizerGroup &S);

StabilizerGroup supported_subgroup(const StabilizerGroup &S, const Region &A);
StabilizerGroup locally_generated(const StabilizerGroup &S, const std::vector<Region> &balls);
std::vector<PauliLabel> commutant_on_region(const StabilizerGroup &S, const Region &A);
// Elements must vanish outside A; returns the group on |A| sites in the order of A.
StabilizerGroup restrict_to(const StabilizerGroup &S, const Region &A);
PauliLabel restrict_label(const PauliLabel &P, const Region &A);
PauliLabel embed_label(const PauliLabel &P, const Region &A, int n);

Mat sps_dense(const StabilizerGroup &S);
// Normalized product of generator projectors P(g) = (1/d) sum_k g^k.
Mat sps_dense_product(const StabilizerGroup &S);

struct PhaseAssignment {
    std::vector<i64> u;      // exponent of zeta_g = exp(2 pi i / delta_g)
    std::vector<i64> delta;  // generator orders
};

// Finds P with commutation_exponent(P, g_i) == targets_i (mod q), or throws Internal.
PauliLabel solve_commutation(const std::vector<PauliLabel> &gens, const std::vector<i64> &targets);
PauliLabel find_rephasing_pauli(const std::vector<PauliLabel> &gens, const PhaseAssignment &targets);
// Conjugates every generator by P.
StabilizerGroup conjugate_group(const StabilizerGroup &S, const PauliLabel &P);

void enumerate_pure_stabilizer_states(int n, i64 q, const std::function<void(const StabilizerGroup &)> &emit,
                                      i64 budget = 200000);
std::vector<StabilizerGroup> pure_stabilizer_states(int n, i64 q, i64 budget = 200000);
// All stabilizer groups (any order) with all consistent phases.
std::vector<StabilizerGroup> all_stabilizer_projection_states(int n, i64 q, i64 budget = 200000);

struct ExtremePoint {
    PhaseAssignment phase;
    StabilizerGroup group;  // on |omega| sites, in the order of omega
};

struct ExtremePointResult {
    StabilizerGroup local;                // S_{Omega+}(Omega), restricted to omega
    StabilizerGroup region;               // S_r(Omega), restricted to omega
    std::vector<PauliLabel> free_generators;  // G(L)
    std::vector<ExtremePoint> points;
};

ExtremePointResult extreme_points(const StabilizerGroup &reference, const Region &omega_plus, const Region &omega,
                                  const std::vector<Region> &balls);

// Tableau text format: header "q n k", then k lines "a_0..a_{n-1} b_0..b_{n-1} c".
std::string write_tableau(const std::vector<PauliLabel> &gens, int n, i64 q);
std::vector<PauliLabel> read_tableau(const std::string &text, int *n_out = nullptr, i64 *q_out = nullptr);

}  // namespace qmagic
