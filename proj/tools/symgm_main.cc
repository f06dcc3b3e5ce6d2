// Copyright 2026 The symgm Authors
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

// symgm: geometric measure of entanglement of symmetric states built from
// rank-one POVM kets.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symgm/errors.h"
#include "symgm/gm.h"
#include "symgm/likelihood.h"
#include "symgm/majorana.h"
#include "symgm/permanent.h"
#include "symgm/povm.h"
#include "symgm/state_io.h"
#include "symgm/symmetric_state.h"

namespace {

using Json = nlohmann::ordered_json;
using namespace symgm;

enum ExitCode { kOk = 0, kParse = 2, kNonConvergence = 3, kVerification = 4 };

struct Global {
    bool json = false;
    std::string format = "text";
    std::uint64_t seed = SearchOptions{}.seed;
    std::size_t restarts = SearchOptions{}.restarts;
    bool nats = false;
    double tol_opt = Tolerances{}.optimization;
    double tol_sat = Tolerances{}.saturation;
    double tol_compat = Tolerances{}.compatibility;

    SearchOptions options() const {
        SearchOptions o;
        o.seed = seed;
        o.restarts = restarts;
        o.tol.optimization = tol_opt;
        o.tol.saturation = tol_sat;
        o.tol.compatibility = tol_compat;
        return o;
    }
    // Values computed in bits are rescaled for --nats.
    double log_unit(double bits) const {
        return nats ? bits * std::numbers::ln2 : bits;
    }
    std::string log_key(const std::string &base) const {
        return base + (nats ? "_nats" : "_bits");
    }
};

// Rounds away noise below 1e-15 so that -0 and 1e-17 print as 0.
double clean(double x) {
    return std::abs(x) < 1e-15 ? 0.0 : x;
}

Json amplitudes(const CVec &v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        a.push_back({clean(v(i).real()), clean(v(i).imag())});
    }
    return a;
}

Json matrix(const CMat &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        rows.push_back(amplitudes(m.row(r).transpose()));
    }
    return rows;
}

Json bloch(const BlochVector &b) {
    return {clean(b.x), clean(b.y), clean(b.z)};
}

std::string format_scalar(const Json &j) {
    if (j.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
        return buf;
    }
    if (j.is_string()) {
        return j.get<std::string>();
    }
    return j.dump();
}

// text: "key: value" per top-level field; csv: "key,value" with a header.
// Nested values are printed as compact JSON.
void emit(const Global &g, const Json &report) {
    std::string fmt = g.json ? "json" : g.format;
    if (fmt == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    if (fmt == "csv") {
        std::cout << "key,value\n";
    }
    for (const auto &[k, v] : report.items()) {
        std::string val = format_scalar(v);
        if (fmt == "csv") {
            if (val.find(',') != std::string::npos) {
                val = "\"" + val + "\"";
            }
            std::cout << k << "," << val << "\n";
        } else {
            std::cout << k << ": " << val << "\n";
        }
    }
}

Json gm_report(const Global &g, const SymmetricState &s, const GmResult &r) {
    Json j;
    j["parties"] = s.parties();
    j["dim"] = s.dim();
    j["lambda_sq"] = r.lambda_sq;
    j[g.log_key("gm")] = g.log_unit(r.gm);
    j[g.log_key("bound")] = g.log_unit(r.bound);
    j["saturated"] = r.saturated;
    j["additive"] = r.additive;
    j["witness"] = amplitudes(r.witness.vec());
    j["witness_count"] = r.witnesses.size();
    return j;
}

int run_perm(const Global &g, const std::string &path) {
    StateSpec spec = load_state(path);
    SymmetricState s = build_symmetric(resolve_multiset(spec, g.seed));
    Json j;
    j["parties"] = s.parties();
    j["dim"] = s.dim();
    j["perm_A"] = s.perm_a();
    if (spec.counts) {
        j["perm_A_dicke"] = permanent_dicke(*spec.counts);
    }
    j["norm_const"] = s.norm_const();
    emit(g, j);
    return kOk;
}

int run_gm(const Global &g, const std::string &path) {
    SymmetricState s = build_symmetric(resolve_multiset(load_state(path), g.seed));
    emit(g, gm_report(g, s, gm_optimize(s, g.options())));
    return kOk;
}

int run_dicke(const Global &g, const std::vector<int> &counts, double theta) {
    if (counts.size() != 4) {
        throw InputError("--counts takes four integers n00 n01 n10 n11");
    }
    DickeCounts c{counts[0], counts[1], counts[2], counts[3], theta};
    double pd = permanent_dicke(c);
    Json j;
    j["counts"] = counts;
    j["theta"] = theta;
    j["perm_A_dicke"] = pd;
    if (c.total() <= kMaxRyserSize) {
        SymmetricState s = build_symmetric(dicke_multiset(c));
        j["perm_A_ryser"] = s.perm_a();
        GmResult r = gm_optimize(s, g.options());
        j[g.log_key("gm")] = g.log_unit(r.gm);
        j[g.log_key("bound")] = g.log_unit(r.bound);
        j["saturated"] = r.saturated;
        j["witness"] = amplitudes(r.witness.vec());
    }
    emit(g, j);
    return kOk;
}

int run_mubs(const Global &g, int d, int b, std::vector<int> reps) {
    MubSet m = build_mubs(d, b);
    double defect = mub_defect(m);
    if (defect > 1e-9) {
        throw VerificationFailure("bases are not mutually unbiased, defect " + std::to_string(defect));
    }
    if (reps.empty()) {
        reps.assign(m.bases.size(), 1);
    }
    SymmetricState s = mub_symmetric_state(m, reps);
    GmResult r = mub_state_gm(m, reps, g.options());
    Json j;
    j["dim"] = d;
    j["bases"] = b;
    j["reps"] = reps;
    j["unbiased_defect"] = clean(defect);
    Json rest = gm_report(g, s, r);
    for (auto &[k, v] : rest.items()) {
        if (k != "dim") {
            j[k] = v;
        }
    }
    emit(g, j);
    return kOk;
}

int run_sic(const Global &g, int d, double t) {
    PureState fid = [&] {
        if (d == 2) {
            return fiducial_d2();
        }
        if (d == 3) {
            return fiducial_d3(t);
        }
        throw InputError("sic: only dimensions 2 and 3 have built-in fiducials");
    }();
    SicPovm sic = hw_orbit(fid);
    bool fid_ok = verify_fiducial(fid);
    bool sic_ok = verify_sic(sic.kets);
    bool design_ok = two_design_check(sic, 16, g.seed);
    if (!fid_ok || !sic_ok || !design_ok) {
        throw VerificationFailure("sic: the orbit failed SIC verification");
    }
    SymmetricState s = build_symmetric(KetMultiset::of(sic.kets));
    GmResult r = sic_state_gm(sic, g.options());
    Json j;
    j["dim"] = d;
    if (d == 3) {
        j["t"] = t;
    }
    j["fiducial_ok"] = fid_ok;
    j["sic_ok"] = sic_ok;
    j["two_design_ok"] = design_ok;
    j["perm_A"] = s.perm_a();
    Json rest = gm_report(g, s, r);
    for (auto &[k, v] : rest.items()) {
        if (k != "dim") {
            j[k] = v;
        }
    }
    emit(g, j);
    return kOk;
}

int run_sic_scan(const Global &g, int d, int points, const std::string &out_path) {
    if (d != 3) {
        throw InputError("sic-scan: only --dim 3 is supported");
    }
    std::vector<double> grid = sic_scan_grid(points);
    std::vector<SicScanRow> rows = sic_scan_d3(grid);
    for (const auto &r : rows) {
        if (!r.agrees || std::abs(r.gm - r.gm_closed) > 1e-9) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "sic-scan: closed form disagrees at t = %.12g (perm %.12g vs %.12g)", r.t,
                          r.perm_a, r.perm_closed);
            throw VerificationFailure(buf);
        }
    }
    std::ostringstream csv;
    write_scan_csv(csv, rows);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            throw InputError("cannot write " + out_path);
        }
        f << csv.str();
    }
    std::string fmt = g.json ? "json" : g.format;
    if (fmt == "json") {
        Json j;
        j["dim"] = d;
        j["points"] = rows.size();
        Json arr = Json::array();
        for (const auto &r : rows) {
            arr.push_back({{"t", r.t}, {"perm_A", r.perm_a}, {g.log_key("G"), g.log_unit(r.gm)}});
        }
        j["rows"] = arr;
        std::cout << j.dump(2) << "\n";
    } else if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
    }
    return kOk;
}

int run_majorana(const Global &g, const std::string &path) {
    StateSpec spec = load_state(path);
    CVec amps = spec.dicke_amplitudes ? *spec.dicke_amplitudes
                                      : dicke_amplitudes(build_symmetric(resolve_multiset(spec, g.seed)));
    MajoranaPoints mp = majorana_from_dicke(amps, g.seed);
    SymmetricState rebuilt = build_symmetric(mp.multiset);
    double fid = dicke_fidelity(amps, dicke_amplitudes(rebuilt));
    HalfSphereResult hs = half_sphere_check(mp.points);
    Json j;
    j["parties"] = static_cast<int>(mp.points.size());
    Json pts = Json::array();
    for (const auto &p : mp.points) {
        pts.push_back(bloch(p));
    }
    j["points"] = pts;
    j["round_trip_fidelity"] = fid;
    j["half_sphere"] = hs.contained;
    j["half_sphere_margin"] = clean(hs.margin);
    emit(g, j);
    return kOk;
}

int run_ml(const Global &g, const std::string &path) {
    SymmetricState s = build_symmetric(resolve_multiset(load_state(path), g.seed));
    RankOnePovm p = povm_from_state(s);
    MlResult r = ml_maximize(p, g.options());
    if (!r.converged) {
        throw NonConvergence("ml: iteration did not reach the fixed-point tolerance");
    }
    Json j;
    j["rho_ml"] = matrix(r.rho_ml.mat());
    j["purity"] = r.purity;
    j["is_pure_max"] = r.is_pure_max;
    j["log_likelihood_max"] = r.log_likelihood_max;
    j["pi_max"] = p.pi_max;
    j[g.log_key("bound")] = g.log_unit(gm_lower_bound(p));
    j["iterations"] = r.iterations;
    emit(g, j);
    return kOk;
}

int run_compat(const Global &g, const std::string &path, const std::vector<double> &freqs, double theta,
               bool have_theta) {
    Json j;
    if (have_theta) {
        if (freqs.size() != 4) {
            throw InputError("compat: --f takes four frequencies f00 f01 f10 f11");
        }
        std::array<double, 4> f{freqs[0], freqs[1], freqs[2], freqs[3]};
        CompatResult closed = compatibility_qubit(theta, f);
        std::vector<double> targets(f.begin(), f.end());
        CompatResult num = compatibility_general(dicke_kets(theta), targets, g.options());
        j["theta"] = theta;
        j["compatible"] = closed.compatible;
        j["residual"] = closed.residual;
        j["numeric_compatible"] = num.compatible;
        j["numeric_residual"] = num.residual;
        if (closed.witness) {
            j["witness"] = amplitudes(closed.witness->vec());
        }
    } else {
        if (path.empty()) {
            throw InputError("compat: give a state file or --theta with --f");
        }
        SymmetricState s = build_symmetric(resolve_multiset(load_state(path), g.seed));
        RankOnePovm p = povm_from_state(s);
        CompatResult r = compatibility_general(p, g.options());
        j["pi_max"] = p.pi_max;
        j["compatible"] = r.compatible;
        j["inconclusive"] = r.inconclusive;
        j["residual"] = r.residual;
        if (r.witness) {
            j["witness"] = amplitudes(r.witness->vec());
        }
    }
    emit(g, j);
    return kOk;
}

int run_additivity(const Global &g, const std::string &path) {
    SymmetricState s = build_symmetric(resolve_multiset(load_state(path), g.seed));
    AdditivityCertificate c = additivity_certify(s, g.options());
    Json j;
    j["certified"] = c.certified;
    j["ml_pure"] = c.ml_pure;
    j["half_sphere"] = c.half_sphere;
    j["few_kets"] = c.few_kets;
    emit(g, j);
    return kOk;
}

void report_error(const Global &g, const std::string &kind, const std::string &msg, int code) {
    std::cerr << "symgm: " << msg << "\n";
    if (g.json || g.format == "json") {
        Json j;
        j["error"] = kind;
        j["message"] = msg;
        j["exit_code"] = code;
        std::cout << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Geometric measure of entanglement of symmetric states from rank-one POVM kets"};
    app.require_subcommand(1);
    Global g;
    app.add_flag("--json", g.json, "Emit a single JSON document");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", g.seed, "Seed for every randomized search");
    app.add_option("--restarts", g.restarts, "Random restarts per search")->check(CLI::PositiveNumber);
    app.add_flag("--nats", g.nats, "Report logarithms in nats instead of bits");
    app.add_option("--tol-opt", g.tol_opt, "Optimizer stopping tolerance")->check(CLI::PositiveNumber);
    app.add_option("--tol-saturation", g.tol_sat, "Bound saturation tolerance")->check(CLI::PositiveNumber);
    app.add_option("--tol-compat", g.tol_compat, "Compatibility residual threshold")->check(CLI::PositiveNumber);

    std::string state_path;
    auto add_state_cmd = [&](const char *name, const char *help) {
        auto *c = app.add_subcommand(name, help);
        c->add_option("state", state_path, "State JSON file")->required()->check(CLI::ExistingFile);
        return c;
    };
    auto *perm = add_state_cmd("perm", "Gram permanent, party count and normalization");
    auto *gm = add_state_cmd("gm", "Geometric measure, bound and closest product state");
    auto *maj = add_state_cmd("majorana", "Majorana points and half-sphere test (qubits)");
    auto *ml = add_state_cmd("ml", "Maximum-likelihood state of the POVM data");
    auto *add = add_state_cmd("additivity", "Sufficient conditions for GM additivity");

    std::vector<int> counts;
    double theta = 0;
    auto *dicke = app.add_subcommand("dicke", "Two-basis qubit state with counts n00 n01 n10 n11");
    dicke->add_option("--counts", counts, "n00 n01 n10 n11")->required()->expected(4);
    dicke->add_option("--theta", theta, "Angle between the bases")->required();

    int dim = 2, bases = 2;
    std::vector<int> reps;
    auto *mubs = app.add_subcommand("mubs", "State from mutually unbiased bases of a prime dimension");
    mubs->add_option("--dim", dim, "Prime dimension")->required();
    mubs->add_option("--bases", bases, "Number of bases, 1 to d+1")->required();
    mubs->add_option("--reps", reps, "Copies of each basis (default all 1)");

    double t = 0;
    auto *sic = app.add_subcommand("sic", "State from a Heisenberg-Weyl SIC");
    sic->add_option("--dim", dim, "2 or 3")->required();
    sic->add_option("--t", t, "Fiducial parameter for d = 3");

    int points = 121;
    std::string out_path;
    auto *scan = app.add_subcommand("sic-scan", "G(t) over the d = 3 SIC family, as CSV");
    scan->add_option("--dim", dim, "Must be 3")->default_val(3);
    scan->add_option("--points", points, "Grid points on [0, pi/3]")->check(CLI::PositiveNumber);
    scan->add_option("--out", out_path, "Write the CSV here instead of stdout");

    std::vector<double> freqs;
    auto *compat = app.add_subcommand("compat", "Whether the bound is attainable by a pure state");
    compat->add_option("state", state_path, "State JSON file")->check(CLI::ExistingFile);
    auto *theta_opt = compat->add_option("--theta", theta, "Qubit two-basis angle");
    compat->add_option("--f", freqs, "Frequencies f00 f01 (basis 0) f10 f11 (basis 1), each pair summing to 1")->expected(4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        if (code == 0) {
            return kOk;
        }
        if (g.json || g.format == "json") {
            report_error(g, "usage", e.what(), kParse);
        }
        return kParse;
    }

    try {
        if (*perm) return run_perm(g, state_path);
        if (*gm) return run_gm(g, state_path);
        if (*maj) return run_majorana(g, state_path);
        if (*ml) return run_ml(g, state_path);
        if (*add) return run_additivity(g, state_path);
        if (*dicke) return run_dicke(g, counts, theta);
        if (*mubs) return run_mubs(g, dim, bases, reps);
        if (*sic) return run_sic(g, dim, t);
        if (*scan) return run_sic_scan(g, dim, points, out_path);
        if (*compat) return run_compat(g, state_path, freqs, theta, theta_opt->count() > 0);
    } catch (const InputError &e) {
        report_error(g, "input", e.what(), kParse);
        return kParse;
    } catch (const NonConvergence &e) {
        report_error(g, "non_convergence", e.what(), kNonConvergence);
        return kNonConvergence;
    } catch (const VerificationFailure &e) {
        report_error(g, "verification", e.what(), kVerification);
        return kVerification;
    }
    return kParse;
}
