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

#include <optional>
#include <utility>
#include <vector>

#include "qmagic/dense.hpp"
#include "qmagic/stabilizer.hpp"

namespace qmagic {

// Z_q toric code on an Lx x Ly torus. Edge h(x,y) runs (x,y) -> (x+1,y) and v(x,y) runs (x,y) -> (x,y+1).
struct ToricLattice {
    i64 q = 2;
    int Lx = 2, Ly = 2;

    int num_edges() const { return 2 * Lx * Ly; }
    int num_vertices() const { return Lx * Ly; }
    int h(int x, int y) const;
    int v(int x, int y) const;
    int vertex(int x, int y) const;
    int plaquette(int x, int y) const;
    int tail(int edge) const;
    int head(int edge) const;
    // Plaquettes on either side of an edge; the first carries it with sign +1 in its counterclockwise boundary.
    std::pair<int, int> sides(int edge) const;
    // (edge, sign) pairs: +1 on outgoing edges, -1 on incoming.
    std::vector<std::pair<int, int>> star(int vertex) const;
    // (edge, sign) pairs of the counterclockwise boundary.
    std::vector<std::pair<int, int>> boundary(int plaquette) const;
};

struct ToricCode {
    ToricLattice lattice;
    StabilizerGroup group;  // vertex operators first, then plaquettes
};

ToricCode build_toric(i64 q, int Lx, int Ly);

struct AnyonType {
    i64 a = 0;  // electric charge
    i64 b = 0;  // magnetic charge
    bool operator==(const AnyonType &o) const { return a == o.a && b == o.b; }
};

// A walk on the primal graph (vertices) or the dual graph (plaquettes). A primal step has sign +1 when the
// edge is traversed along its orientation; a dual step has the sign the edge carries in the boundary of the
// plaquette being left.
struct StringPath {
    bool dual = false;
    int start = 0;
    std::vector<std::pair<int, int>> steps;
};

// Validates the walk and returns its final node.
int path_end(const ToricLattice &lat, const StringPath &path);

struct AnyonRoute {
    StringPath primal;
    StringPath dual{true, 0, {}};
};

// Z^{a s} along the primal steps times X^{b s} along the dual steps.
PauliLabel anyon_string(const ToricLattice &lat, AnyonType t, const AnyonRoute &route);

// Z along the row y = 0 and along the column x = 0.
std::pair<PauliLabel, PauliLabel> logical_z_loops(const ToricLattice &lat);

// Stabilizer group of the ground state whose two Z loops have eigenvalues omega^{s1}, omega^{s2}.
StabilizerGroup ground_state_group(const ToricCode &code, std::pair<i64, i64> sector);
DenseState ground_state(const ToricCode &code, std::pair<i64, i64> sector);

// Lower and upper routes for the two anyon pairs.
struct SMatrixLayout {
    AnyonRoute v_lower, v_upper;
    AnyonRoute w_lower, w_upper;
};

// Needs Lx >= 2 and Ly >= 3.
SMatrixLayout default_smatrix_layout(const ToricLattice &lat);

// <phi| W_u^dag V_u^dag V_d W_d |phi> on the sector (0,0) ground state, with V of type t1 and W of type t2.
PauliLabel smatrix_operator(const ToricLattice &lat, AnyonType t1, AnyonType t2, const SMatrixLayout &layout);
cplx s_matrix_element(const ToricCode &code, AnyonType t1, AnyonType t2,
                      const std::optional<SMatrixLayout> &layout = std::nullopt);
// Same quantity as an explicit matrix trace against the reduced density matrix on the strings' support.
cplx s_matrix_element_dense(const ToricCode &code, AnyonType t1, AnyonType t2,
                            const std::optional<SMatrixLayout> &layout = std::nullopt);

struct QuantizationReport {
    std::vector<std::pair<AnyonType, AnyonType>> pairs;
    std::vector<cplx> phases;
    std::vector<i64> exponents;  // phase ~ exp(2 pi i k / q)
    double max_deviation = 0;
    i64 em_exponent = 0;  // exponent of S_{e,m}, the reference entry
    bool pass = false;
};

// All q^2 x q^2 pairs (row-major over types indexed a q + b) when pairs is empty.
QuantizationReport quantization_check(const ToricCode &code,
                                      const std::vector<std::pair<AnyonType, AnyonType>> &pairs = {},
                                      double tol = 1e-9);

struct AnnulusGeometry {
    Region omega;
    Region omega_plus;
    std::vector<Region> balls;
    AnyonRoute crossing;  // from the hole to just outside the annulus
};

// Width-one annulus of eight edges around the hole edge h(x,y). Needs Lx >= 4 and Ly >= 3.
AnnulusGeometry edge_annulus(const ToricLattice &lat, int x, int y);

struct AnnulusReport {
    ExtremePointResult extreme;
    i64 logical_order = 0;  // |S_r(Omega)| / |S_{Omega+}(Omega)|
    bool count_ok = false;
    double max_commutator = 0;  // Frobenius norm
    bool pauli_connected = false;
    std::vector<AnyonType> matched;  // anyon type whose string reproduces each point
    double min_match_fidelity = 0;
    bool matches_ok = false;
    bool vacuum_is_reference = false;
    bool pass = false;
};

AnnulusReport annulus_extreme_points(const ToricCode &code, const AnnulusGeometry &geometry, double tol = 1e-9);

}  // namespace qmagic
