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

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "qmagic/covering.hpp"
#include "qmagic/magic.hpp"
#include "qmagic/toric.hpp"
#include "qmagic/witness.hpp"

using namespace qmagic;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char *kVersion = "0.1.0";

enum Exit { kOk = 0, kFailed = 1, kBudget = 2, kUsage = 64, kData = 65, kInternal = 70 };

struct RunConfig {
    std::string base = "2";
    i64 dense_budget = kDenseLimit;
    i64 enum_budget = 200000;
    std::uint64_t seed = 1;
    std::string out;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::DenseLimit:
        return kBudget;
    case ErrorKind::InvalidModulus:
    case ErrorKind::InvalidPrime:
    case ErrorKind::OutOfRange:
    case ErrorKind::InvalidRegion:
        return kUsage;
    case ErrorKind::Internal:
        return kInternal;
    default:
        return kData;
    }
}

Json config_json(const RunConfig &cfg) {
    Json j;
    j["base"] = cfg.base;
    j["dense_budget"] = cfg.dense_budget;
    j["enum_budget"] = cfg.enum_budget;
    j["seed"] = cfg.seed;
    j["version"] = kVersion;
    return j;
}

Json envelope(const RunConfig &cfg, const std::string &command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["config"] = config_json(cfg);
    return j;
}

void emit(const RunConfig &cfg, const Json &j) {
    std::string text = j.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot open output file " + cfg.out);
    f << text;
}

std::string read_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Parse, "cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<double> parse_doubles(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception &) {
            throw UsageError("not a number: " + tok);
        }
    }
    return out;
}

std::vector<i64> parse_ints(const std::string &text) {
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        for (std::size_t pos = 0; pos <= tok.size();) {
            std::size_t next = tok.find(',', pos);
            if (next == std::string::npos) next = tok.size();
            std::string part = tok.substr(pos, next - pos);
            if (!part.empty()) {
                try {
                    out.push_back(std::stoll(part));
                } catch (const std::exception &) {
                    throw UsageError("not an integer: " + part);
                }
            }
            pos = next + 1;
        }
    }
    return out;
}

std::vector<PatchBound> parse_patches(const std::string &eps, const std::string &dims) {
    auto e = parse_doubles(eps);
    auto d = parse_doubles(dims);
    if (e.size() != d.size()) throw UsageError("--eps and --dims need the same length");
    std::vector<PatchBound> out;
    for (std::size_t i = 0; i < e.size(); ++i) out.push_back({e[i], d[i]});
    return out;
}

Json read_json(const std::string &path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

// JSON list of {"epsilon": e, "D": d} objects or [e, d] pairs.
std::vector<PatchBound> read_certs(const std::string &path) {
    Json j = read_json(path);
    if (!j.is_array()) throw Error(ErrorKind::Parse, "certificate file must hold a list");
    std::vector<PatchBound> out;
    try {
        for (const auto &c : j) {
            if (c.is_array()) out.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
            else out.push_back({c.at("epsilon").get<double>(), c.at("D").get<double>()});
        }
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
    return out;
}

DecayProfile read_profile(const std::string &path) {
    Json j = read_json(path);
    DecayProfile p;
    try {
        p.K = j.at("K").get<double>();
        p.xi = j.at("xi").get<double>();
        p.m = j.at("m").get<int>();
        p.r0 = j.at("r0").get<double>();
        p.c1 = j.at("c1").get<double>();
        p.n = j.at("n").get<double>();
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
    return p;
}

// Per-patch distance of each state in a JSON list of state objects.
std::vector<PatchBound> patches_from_states(const RunConfig &cfg, const std::string &path, PatchTarget target) {
    Json j = read_json(path);
    if (!j.is_array()) throw Error(ErrorKind::Parse, "patch file must hold a list of states");
    std::vector<PatchBound> out;
    for (const auto &s : j) {
        DenseState psi = state_from_json(s.dump());
        i64 D = dense_dimension(psi.n, psi.q);
        if (D > cfg.dense_budget) throw Error(ErrorKind::DenseLimit, "patch exceeds dense budget");
        Mat rho = psi.density();
        double eps = target == PatchTarget::SP
                         ? distance_to_sps(rho, psi.n, psi.q, cfg.enum_budget).epsilon
                         : distance_to_hull_lower(rho, build_dictionary(psi.n, psi.q, cfg.enum_budget));
        out.push_back({eps, static_cast<double>(D)});
    }
    return out;
}

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json magic_value_json(const MagicValue &v) {
    Json j;
    j["value"] = v.value;
    j["status"] = estimate_status_name(v.status);
    j["gap"] = v.gap;
    return j;
}

Json anyon_json(AnyonType t) { return Json::array({t.a, t.b}); }

// "a,b:c,d;a,b:c,d"
std::vector<std::pair<AnyonType, AnyonType>> parse_pairs(const std::string &text) {
    std::vector<std::pair<AnyonType, AnyonType>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("pair needs the form a,b:c,d");
        auto l = parse_ints(item.substr(0, colon)), r = parse_ints(item.substr(colon + 1));
        if (l.size() != 2 || r.size() != 2) throw UsageError("pair needs the form a,b:c,d");
        out.push_back({{l[0], l[1]}, {r[0], r[1]}});
    }
    return out;
}

Region parse_region(const std::string &text) {
    Region out;
    for (i64 v : parse_ints(text)) out.push_back(static_cast<int>(v));
    return out;
}

int cmd_cover(const RunConfig &cfg, i64 q, int n, bool verify, const std::string &tableau_out) {
    if (q < 2 || n < 1) throw UsageError("cover needs q >= 2 and n >= 1");
    CoverFamily fam = cover_composite(q, n);
    Json j = envelope(cfg, "cover");
    j["q"] = q;
    j["n"] = n;
    j["members"] = fam.members.size();
    j["expected_size"] = cover_size_formula(q, n);
    int code = kOk;
    if (verify) {
        CoverReport r = verify_cover(fam, cfg.enum_budget);
        Json v;
        v["pass"] = r.pass;
        v["covers"] = r.covers;
        v["members_ok"] = r.members_ok;
        v["size_ok"] = r.size_ok;
        if (r.uncovered) v["uncovered"] = *r.uncovered;
        if (r.bad_member) v["bad_member"] = *r.bad_member;
        j["verify"] = v;
        if (!r.pass) code = kFailed;
    }
    Json tableaux = Json::array();
    std::string all;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        std::string text = write_tableau(cover_member_group(fam, i).generators, n, q);
        tableaux.push_back(text);
        all += (i ? "\n" : "") + text;
    }
    j["tableaux"] = tableaux;
    if (!tableau_out.empty()) {
        std::ofstream f(tableau_out);
        if (!f) throw UsageError("cannot open " + tableau_out);
        f << all;
        j["tableau_file"] = tableau_out;
    }
    emit(cfg, j);
    return code;
}

int cmd_magic(const RunConfig &cfg, const std::string &state_file, const std::string &measures) {
    DenseState psi = state_from_json(read_file(state_file));
    if (dense_dimension(psi.n, psi.q) > cfg.dense_budget) throw Error(ErrorKind::DenseLimit, "state exceeds dense budget");
    std::vector<std::string> names;
    std::stringstream ss(measures);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) names.push_back(tok);
    }
    StabilizerDictionary dict = build_dictionary(psi.n, psi.q, cfg.enum_budget);
    MagicReport r = magic_report(psi, names, dict);
    Json j = envelope(cfg, "magic");
    j["n"] = psi.n;
    j["q"] = psi.q;
    j["dictionary_size"] = dict.states.size();
    Json m = Json::object();
    if (r.has_lf) m["lf"] = magic_value_json(r.lf);
    if (r.has_srel) m["srel"] = magic_value_json(r.s_rel);
    if (r.has_smax) m["smax"] = magic_value_json(r.s_max_set);
    if (r.has_lgr) m["lgr"] = magic_value_json(r.lgr);
    if (r.has_lr) m["lr"] = magic_value_json(r.lr);
    j["measures"] = m;
    emit(cfg, j);
    return kOk;
}

int cmd_certify(const RunConfig &cfg, const std::string &patch_file, const std::string &eps, const std::string &dims,
                const std::string &target) {
    PatchTarget t;
    if (target == "sp") t = PatchTarget::SP;
    else if (target == "s") t = PatchTarget::S;
    else throw UsageError("--target must be sp or s");
    if (patch_file.empty() == eps.empty()) throw UsageError("give either --patches or --eps with --dims");
    auto patches = patch_file.empty() ? parse_patches(eps, dims) : patches_from_states(cfg, patch_file, t);
    PatchCertificate c = certify_product_lf(patches, t);
    Json j = envelope(cfg, "certify");
    j["target"] = target;
    Json listed = Json::array();
    for (const auto &p : c.patches) listed.push_back({{"epsilon", p.epsilon}, {"D", p.D}});
    j["patches"] = listed;
    j["bound"] = c.bound;
    emit(cfg, j);
    return kOk;
}

int cmd_toric_smatrix(const RunConfig &cfg, i64 q, int lx, int ly, const std::string &pairs) {
    ToricCode code = build_toric(q, lx, ly);
    QuantizationReport r = quantization_check(code, parse_pairs(pairs));
    Json j = envelope(cfg, "toric smatrix");
    j["q"] = q;
    j["lx"] = lx;
    j["ly"] = ly;
    Json entries = Json::array();
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
        Json e;
        e["t1"] = anyon_json(r.pairs[i].first);
        e["t2"] = anyon_json(r.pairs[i].second);
        e["phase"] = complex_json(r.phases[i]);
        e["exponent"] = r.exponents[i];
        entries.push_back(e);
    }
    j["entries"] = entries;
    if (pairs.empty()) {
        Json table = Json::array();
        const std::size_t T = static_cast<std::size_t>(q * q);
        for (std::size_t a = 0; a < T; ++a) {
            Json row = Json::array();
            for (std::size_t b = 0; b < T; ++b) row.push_back(r.exponents[a * T + b]);
            table.push_back(row);
        }
        j["exponent_table"] = table;
    }
    j["em_exponent"] = r.em_exponent;
    j["max_deviation"] = r.max_deviation;
    j["quantized"] = r.pass;
    emit(cfg, j);
    return r.pass ? kOk : kFailed;
}

int cmd_toric_annulus(const RunConfig &cfg, i64 q, int lx, int ly, int x, int y) {
    ToricCode code = build_toric(q, lx, ly);
    AnnulusReport r = annulus_extreme_points(code, edge_annulus(code.lattice, x, y));
    Json j = envelope(cfg, "toric annulus");
    j["q"] = q;
    j["lx"] = lx;
    j["ly"] = ly;
    j["hole"] = Json::array({x, y});
    j["extreme_points"] = r.extreme.points.size();
    Json pts = Json::array();
    for (std::size_t i = 0; i < r.extreme.points.size(); ++i) {
        Json p;
        p["u"] = r.extreme.points[i].phase.u;
        p["anyon"] = anyon_json(r.matched[i]);
        pts.push_back(p);
    }
    j["points"] = pts;
    j["max_commutator"] = r.max_commutator;
    j["pauli_connected"] = r.pauli_connected;
    j["min_match_fidelity"] = r.min_match_fidelity;
    j["pass"] = r.pass;
    emit(cfg, j);
    return r.pass ? kOk : kFailed;
}

int cmd_witness_mi(const RunConfig &cfg, const std::string &state_file, const std::string &a, const std::string &b,
                   double tol) {
    DenseState psi = state_from_json(read_file(state_file));
    MiWitnessVerdict v = mi_forbidden_window(psi.density(), psi.n, psi.q, parse_region(a), parse_region(b), tol);
    Json j = envelope(cfg, "witness mi");
    j["mutual_information"] = v.I;
    j["p"] = v.p;
    j["window"] = Json::array({v.eps1, v.eps2});
    j["fires"] = v.fires;
    j["margin"] = v.margin;
    emit(cfg, j);
    return kOk;
}

int cmd_witness_stability(const RunConfig &cfg, const std::string &state_file, int depth, const std::string &a,
                          const std::string &b) {
    DenseState psi = state_from_json(read_file(state_file));
    std::mt19937_64 rng(cfg.seed);
    StabilityReport r = mi_stability_check(psi, depth, parse_region(a), parse_region(b), rng);
    Json j = envelope(cfg, "witness stability");
    j["depth"] = depth;
    j["inner"] = r.inner;
    j["evolved"] = r.evolved;
    j["outer"] = r.outer;
    j["holds"] = r.holds;
    emit(cfg, j);
    return r.holds ? kOk : kFailed;
}

int cmd_witness_assemble(const RunConfig &cfg, DecayProfile prof, const std::string &profile_file,
                         const std::string &certs_file, const std::string &eps, const std::string &dims) {
    if (!profile_file.empty()) prof = read_profile(profile_file);
    if (certs_file.empty() == eps.empty()) throw UsageError("give either --certs or --eps with --dims");
    auto certs = certs_file.empty() ? parse_patches(eps, dims) : read_certs(certs_file);
    AssemblyResult r = logn_lrm_assemble(prof, certs);
    Json j = envelope(cfg, "witness assemble");
    j["profile"] = {{"K", prof.K}, {"xi", prof.xi}, {"m", prof.m}, {"r0", prof.r0}, {"c1", prof.c1}, {"n", prof.n}};
    j["s_bound"] = r.s_bound;
    j["product_fidelity"] = r.product_fidelity;
    j["delta1"] = r.delta1;
    j["delta2"] = r.delta2;
    j["combined"] = r.combined;
    j["bound"] = r.bound;
    emit(cfg, j);
    return kOk;
}

int cmd_rephase(const RunConfig &cfg, const std::string &tableau_file, const std::string &targets) {
    int n = 0;
    i64 q = 0;
    auto gens = read_tableau(read_file(tableau_file), &n, &q);
    auto u = parse_ints(targets);
    if (u.size() != gens.size()) throw UsageError("need one target per generator");
    PhaseAssignment pa;
    pa.u = u;
    for (const auto &g : gens) pa.delta.push_back(order(g));
    PauliLabel P = find_rephasing_pauli(gens, pa);
    Json j = envelope(cfg, "rephase");
    j["q"] = q;
    j["n"] = n;
    j["targets"] = u;
    j["pauli"] = to_text(P);
    emit(cfg, j);
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qudit stabilizer and magic toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--base", cfg.base, "logarithm base: 2, e or 10")->check(CLI::IsMember({"2", "e", "10"}));
    app.add_option("--dense-budget", cfg.dense_budget, "largest dense dimension")->check(CLI::PositiveNumber);
    app.add_option("--enum-budget", cfg.enum_budget, "largest enumeration size")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("-o,--out", cfg.out, "write the JSON report to this file");

    i64 q = 0;
    int n = 0, lx = 0, ly = 0, depth = 1, hx = 1, hy = 1;
    bool verify = false;
    double tol = 1e-6;
    std::string tableau_out, state_file, measures = "lf,srel,smax,lgr,lr", eps, dims, target = "sp", pairs, region_a,
                                         region_b, tableau_file, targets, patch_file, profile_file, certs_file;
    DecayProfile prof;

    auto *cover = app.add_subcommand("cover", "generate and verify a Pauli-group cover");
    cover->add_option("--q", q, "local dimension")->required();
    cover->add_option("--n", n, "number of qudits")->required();
    cover->add_flag("--verify", verify, "check the covering property exhaustively");
    cover->add_option("--tableau-out", tableau_out, "write member tableaux to this file");

    auto *magic = app.add_subcommand("magic", "magic measures of a state file");
    magic->add_option("--state", state_file, "state JSON file")->required();
    magic->add_option("--measures", measures, "comma-separated subset of lf,srel,smax,lgr,lr");

    auto *certify = app.add_subcommand("certify", "multiplicative LF certificate for product states");
    certify->add_option("--patches", patch_file, "JSON list of patch states");
    auto *ceps = certify->add_option("--eps", eps, "comma-separated per-patch distances");
    certify->add_option("--dims", dims, "comma-separated per-patch dimensions")->needs(ceps);
    ceps->needs("--dims");
    certify->add_option("--target", target, "sp or s");

    auto *toric = app.add_subcommand("toric", "Z_q toric-code experiments");
    toric->require_subcommand(1);
    auto *smatrix = toric->add_subcommand("smatrix", "braiding phases and quantization check");
    smatrix->add_option("--q", q)->required();
    smatrix->add_option("--lx", lx)->required();
    smatrix->add_option("--ly", ly)->required();
    smatrix->add_option("--pairs", pairs, "subset as a,b:c,d;...");
    auto *annulus = toric->add_subcommand("annulus", "information-convex extreme points of an annulus");
    annulus->add_option("--q", q)->required();
    annulus->add_option("--lx", lx)->required();
    annulus->add_option("--ly", ly)->required();
    annulus->add_option("--x", hx, "hole edge column");
    annulus->add_option("--y", hy, "hole edge row");

    auto *witness = app.add_subcommand("witness", "mutual-information witnesses");
    witness->require_subcommand(1);
    auto *mi = witness->add_subcommand("mi", "forbidden-window test");
    mi->add_option("--state", state_file)->required();
    mi->add_option("--regionA,--a", region_a, "sites of A")->required();
    mi->add_option("--regionB,--b", region_b, "sites of B")->required();
    mi->add_option("--tol", tol);
    auto *stability = witness->add_subcommand("stability", "brickwork sandwich check with Haar gates");
    stability->add_option("--state", state_file)->required();
    stability->add_option("--depth", depth)->required();
    stability->add_option("--regionA,--a", region_a)->required();
    stability->add_option("--regionB,--b", region_b)->required();
    auto *assemble = witness->add_subcommand("assemble", "finite-size assembly of the LF bound");
    assemble->add_option("--profile", profile_file, "JSON decay profile {K, xi, m, r0, c1, n}");
    assemble->add_option("--certs", certs_file, "JSON list of patch certificates");
    auto *inline_k = assemble->add_option("--K", prof.K)->excludes("--profile");
    for (CLI::Option *opt : {assemble->add_option("--xi", prof.xi), assemble->add_option("--m", prof.m),
                             assemble->add_option("--r0", prof.r0), assemble->add_option("--c1", prof.c1),
                             assemble->add_option("--n", prof.n)}) {
        opt->needs(inline_k)->excludes("--profile");
        inline_k->needs(opt);
    }
    auto *aeps = assemble->add_option("--eps", eps);
    assemble->add_option("--dims", dims)->needs(aeps);
    aeps->needs("--dims");

    auto *rephase = app.add_subcommand("rephase", "Pauli that re-phases stabilizer generators");
    rephase->add_option("--tableau", tableau_file)->required();
    rephase->add_option("--targets", targets, "phase exponents u_i")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        set_log_base(cfg.base == "e" ? 0.0 : std::stod(cfg.base));
        if (*cover) return cmd_cover(cfg, q, n, verify, tableau_out);
        if (*magic) return cmd_magic(cfg, state_file, measures);
        if (*certify) return cmd_certify(cfg, patch_file, eps, dims, target);
        if (*smatrix) return cmd_toric_smatrix(cfg, q, lx, ly, pairs);
        if (*annulus) return cmd_toric_annulus(cfg, q, lx, ly, hx, hy);
        if (*mi) return cmd_witness_mi(cfg, state_file, region_a, region_b, tol);
        if (*stability) return cmd_witness_stability(cfg, state_file, depth, region_a, region_b);
        if (*assemble) {
            if (profile_file.empty() && inline_k->count() == 0) throw UsageError("give --profile or the inline profile");
            return cmd_witness_assemble(cfg, prof, profile_file, certs_file, eps, dims);
        }
        if (*rephase) return cmd_rephase(cfg, tableau_file, targets);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error &e) {
        std::cerr << error_kind_name(e.kind()) << ": " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
