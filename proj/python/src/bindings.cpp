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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmagic/covering.hpp"
#include "qmagic/magic.hpp"
#include "qmagic/toric.hpp"
#include "qmagic/witness.hpp"

namespace py = pybind11;
using namespace qmagic;

namespace {

py::dict magic_value(const MagicValue &v) {
    py::dict d;
    d["value"] = v.value;
    d["status"] = estimate_status_name(v.status);
    d["gap"] = v.gap;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Qudit stabilizer, magic and toric-code routines";

    static py::exception<Error> error(m, "QmagicError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error &e) {
            error((std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
        }
    });

    m.def("set_log_base", &set_log_base, py::arg("base"), "Logarithm base for entropic quantities; 0 means natural.");
    m.def("log_base", &log_base);

    py::class_<PauliLabel>(m, "PauliLabel")
        .def(py::init(&pauli_identity), py::arg("n"), py::arg("q"))
        .def_readwrite("n", &PauliLabel::n)
        .def_readwrite("q", &PauliLabel::q)
        .def_readwrite("a", &PauliLabel::a)
        .def_readwrite("b", &PauliLabel::b)
        .def_readwrite("c", &PauliLabel::c)
        .def("__eq__", &PauliLabel::operator==)
        .def("__repr__", [](const PauliLabel &P) { return "PauliLabel('" + to_text(P) + "')"; })
        .def("dense", &to_dense)
        .def("order", [](const PauliLabel &P) { return order(P); });
    m.def("parse_label", &parse_label);
    m.def("compose", &compose);
    m.def("commutation_exponent", &commutation_exponent);

    m.def(
        "cover",
        [](i64 q, int n, bool verify) {
            CoverFamily fam = cover_composite(q, n);
            py::dict d;
            d["members"] = fam.members;
            d["expected_size"] = cover_size_formula(q, n);
            if (verify) d["pass"] = verify_cover(fam).pass;
            return d;
        },
        py::arg("q"), py::arg("n"), py::arg("verify") = false);

    m.def(
        "find_rephasing_pauli",
        [](const std::vector<PauliLabel> &gens, const std::vector<i64> &u) {
            PhaseAssignment pa{u, {}};
            for (const auto &g : gens) pa.delta.push_back(order(g));
            return find_rephasing_pauli(gens, pa);
        },
        py::arg("generators"), py::arg("targets"));

    m.def(
        "magic_report",
        [](const Vec &amp, int n, i64 q, const std::vector<std::string> &measures) {
            DenseState psi = make_state(n, q, amp);
            StabilizerDictionary dict = build_dictionary(n, q);
            MagicReport r = magic_report(psi, measures, dict);
            py::dict d;
            if (r.has_lf) d["lf"] = magic_value(r.lf);
            if (r.has_srel) d["srel"] = magic_value(r.s_rel);
            if (r.has_smax) d["smax"] = magic_value(r.s_max_set);
            if (r.has_lgr) d["lgr"] = magic_value(r.lgr);
            if (r.has_lr) d["lr"] = magic_value(r.lr);
            return d;
        },
        py::arg("amplitudes"), py::arg("n"), py::arg("q"),
        py::arg("measures") = std::vector<std::string>{"lf", "srel", "smax", "lgr", "lr"});

    m.def(
        "certify_product_lf",
        [](const std::vector<std::pair<double, double>> &patches, const std::string &target) {
            std::vector<PatchBound> pb;
            for (auto [e, D] : patches) pb.push_back({e, D});
            if (target != "sp" && target != "s") throw Error(ErrorKind::OutOfRange, "target must be sp or s");
            return certify_product_lf(pb, target == "sp" ? PatchTarget::SP : PatchTarget::S).bound;
        },
        py::arg("patches"), py::arg("target") = "sp");

    m.def(
        "mutual_information",
        [](const Mat &rho, int n, i64 q, const Region &A, const Region &B) { return mutual_information(rho, n, q, A, B); },
        py::arg("rho"), py::arg("n"), py::arg("q"), py::arg("A"), py::arg("B"));
    m.def(
        "mi_witness_fires",
        [](const Mat &rho, int n, i64 q, const Region &A, const Region &B, double tol) {
            return mi_forbidden_window(rho, n, q, A, B, tol).fires;
        },
        py::arg("rho"), py::arg("n"), py::arg("q"), py::arg("A"), py::arg("B"), py::arg("tol") = 1e-6);

    m.def(
        "s_matrix",
        [](i64 q, int lx, int ly) {
            ToricCode code = build_toric(q, lx, ly);
            QuantizationReport r = quantization_check(code);
            const std::size_t T = static_cast<std::size_t>(q * q);
            std::vector<std::vector<cplx>> S(T, std::vector<cplx>(T));
            for (std::size_t i = 0; i < r.phases.size(); ++i) S[i / T][i % T] = r.phases[i];
            return S;
        },
        py::arg("q"), py::arg("lx"), py::arg("ly"), "Braiding phases indexed by anyon type a*q + b.");
    m.def(
        "annulus_extreme_point_count",
        [](i64 q, int lx, int ly) {
            ToricCode code = build_toric(q, lx, ly);
            AnnulusReport r = annulus_extreme_points(code, edge_annulus(code.lattice, 1, 1));
            return r.extreme.points.size();
        },
        py::arg("q"), py::arg("lx"), py::arg("ly"));
}
