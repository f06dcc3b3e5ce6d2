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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracle.h"
#include "symgm/gm.h"
#include "symgm/likelihood.h"
#include "symgm/majorana.h"
#include "symgm/permanent.h"
#include "symgm/povm.h"
#include "symgm/rng.h"

using namespace symgm;

namespace {

// Collects the first failed check of a criterion.
struct Check {
    std::string failure;

    void require(bool ok, const std::string &what) {
        if (!ok && failure.empty()) {
            failure = what;
        }
    }
    void near(double got, double want, double tol, const std::string &what) {
        if (!(std::abs(got - want) <= tol) && failure.empty()) {
            std::ostringstream s;
            s.precision(15);
            s << what << ": got " << got << ", want " << want << " (tol " << tol << ")";
            failure = s.str();
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const CVec kZero = CVec::Unit(2, 0);
const CVec kOne = CVec::Unit(2, 1);

SymmetricState w_state() {
    return build_symmetric(KetMultiset({kZero, kOne}, {2, 1}));
}

SymmetricState ghz3() {
    CVec amps = CVec::Zero(4);
    amps(0) = amps(3) = 1 / std::sqrt(2.0);
    return build_symmetric(majorana_from_dicke(amps).multiset);
}

void criterion1(Check &c) {
    auto t0 = Clock::now();
    SicPovm sic = hw_orbit(fiducial_d2());
    SymmetricState s = build_symmetric(KetMultiset::of(sic.kets));
    c.near(permanent_ryser(gram(s.multiset()).mat).real(), 8.0 / 3, 1e-12, "Ryser perm(A)");
    GmResult formula = sic_state_gm(sic, {}, false);
    c.near(formula.lambda_sq, 1.0 / 3, 1e-9, "formula Lambda^2");
    c.near(formula.gm, std::log2(3.0), 1e-9, "formula G");
    GmResult num = gm_optimize(s);
    c.near(num.lambda_sq, 1.0 / 3, 1e-6, "gm_optimize Lambda^2");
    c.near(num.gm, std::log2(3.0), 1e-6, "gm_optimize G");
    c.require(num.witnesses.size() == 4, "expected four closest product states, got " +
                                             std::to_string(num.witnesses.size()));
    std::vector<bool> hit(sic.kets.size(), false);
    for (const auto &w : num.witnesses) {
        bool matched = false;
        for (std::size_t j = 0; j < sic.kets.size(); ++j) {
            if (std::norm(w.vec().dot(sic.kets[j])) > 1 - 1e-7) {
                hit[j] = matched = true;
            }
        }
        c.require(matched, "witness does not match a SIC ket");
    }
    c.require(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), "some SIC ket is not a witness");
    double elapsed = seconds_since(t0);
    c.require(elapsed < 1, "runtime " + std::to_string(elapsed) + " s exceeds 1 s");
}

void criterion2(Check &c) {
    auto t0 = Clock::now();
    auto grid = sic_scan_grid(121);
    auto rows = sic_scan_d3(grid);
    c.require(rows.size() == 121, "expected 121 rows");
    for (const auto &r : rows) {
        double closed = 27.0 / 32.0 * (61 - std::cos(9 * r.t));
        c.near(r.perm_a / closed, 1, 1e-9, "perm at t=" + std::to_string(r.t));
        c.near(r.gm, std::log2(16 * (61 - std::cos(9 * r.t)) / 105), 1e-9, "G at t=" + std::to_string(r.t));
    }
    auto by_gm = [](const SicScanRow &a, const SicScanRow &b) { return a.gm < b.gm; };
    c.require(std::min_element(rows.begin(), rows.end(), by_gm) == rows.begin(), "minimum not at t=0");
    c.require(std::max_element(rows.begin(), rows.end(), by_gm) == rows.end() - 1, "maximum not at t=pi/3");
    std::vector<double> special{2 * std::numbers::pi / 9};
    c.near(sic_scan_d3(special)[0].gm, rows.front().gm, 1e-10, "G(2pi/9) vs G(0)");
    double elapsed = seconds_since(t0);
    c.require(elapsed < 2, "runtime " + std::to_string(elapsed) + " s exceeds 2 s");
}

void criterion3(Check &c) {
    for (double theta : {0.0, std::numbers::pi / 6, std::numbers::pi / 2, 2.0, std::numbers::pi}) {
        DickeCounts dc{1, 1, 1, 1, theta};
        std::string at = " at theta=" + std::to_string(theta);
        c.near(permanent_dicke(dc), (7 + std::cos(2 * theta)) / 2, 1e-12, "permanent_dicke" + at);
        GmResult r = gm_optimize(build_symmetric(dicke_multiset(dc)));
        c.near(r.gm, std::log2((7 + std::cos(2 * theta)) / 3), 1e-6, "G" + at);
        if (theta == std::numbers::pi / 2) {
            c.near(r.gm, 1, 1e-9, "G at theta=pi/2");
        }
    }
}

void criterion4(Check &c) {
    int cases = 0;
    for (double theta : {0.3, 1.0, std::numbers::pi / 2, 2.2, 3.0}) {
        for (int a = 0; a <= 8; ++a) {
            for (int b = 0; a + b <= 8; ++b) {
                for (int d = 0; a + b + d <= 8; ++d) {
                    for (int e = 0; a + b + d + e <= 8; ++e) {
                        if (a + b + d + e == 0) {
                            continue;
                        }
                        DickeCounts dc{a, b, d, e, theta};
                        double ryser = permanent_ryser(gram(dicke_multiset(dc)).mat).real();
                        c.near(permanent_dicke(dc) / ryser, 1, 1e-9,
                               "counts " + std::to_string(a) + std::to_string(b) + std::to_string(d) +
                                   std::to_string(e));
                        ++cases;
                    }
                }
            }
        }
    }
    c.require(cases >= 300, "only " + std::to_string(cases) + " cases");
}

void criterion5(Check &c) {
    for (double r : {0.3, 0.7}) {
        std::vector<CVec> kets;
        const double s = std::sqrt(1 - r * r);
        for (int j = 0; j < 6; ++j) {
            double phi = 2 * std::numbers::pi * j / 6;
            kets.push_back(bloch_to_state({s * std::cos(phi), s * std::sin(phi), r}).vec());
        }
        std::string at = " at r=" + std::to_string(r);
        MlResult ml = ml_maximize(RankOnePovm::make(kets, std::vector<int>(6, 1)));
        c.require(ml.purity > 1 - 1e-9, "ML state not pure" + at);
        c.near(ml.rho_ml.mat()(0, 0).real(), 1, 1e-9, "ML state <0|rho|0>" + at);
        SymmetricState st = build_symmetric(KetMultiset::of(kets));
        double bound = -std::log2(720 / st.perm_a() * std::pow((1 + r) / 2, 6));
        c.near(gm_optimize(st).gm, bound, 1e-7, "G vs cone bound" + at);
    }
    SicPovm sic = hw_orbit(fiducial_d2());
    RankOnePovm p = RankOnePovm::make(sic.kets, {1, 1, 1, 1});
    MlResult ml = ml_maximize(p);
    c.require((ml.rho_ml.mat() - CMat::Identity(2, 2) / 2).norm() <= 1e-8, "qubit SIC ML state is not I/2");
    GmResult g = gm_optimize(build_symmetric(KetMultiset::of(sic.kets)));
    c.require(g.gm - gm_lower_bound(p) > 0.1, "qubit SIC bound gap is not above 0.1 bit");
    c.require(!g.saturated, "qubit SIC reported saturated");
}

void criterion6(Check &c) {
    Rng rng = make_rng(606, 0);
    std::uniform_real_distribution<double> u(0, 1);
    int disagreements = 0, banded = 0;
    for (int trial = 0; trial < 500; ++trial) {
        double theta = 0.05 + (std::numbers::pi - 0.1) * u(rng);
        double a = u(rng), b = u(rng);
        std::array<double, 4> f{a, 1 - a, b, 1 - b};
        CompatResult closed = compatibility_qubit(theta, f);
        CompatResult num = compatibility_general(dicke_kets(theta), {f.begin(), f.end()});
        if (std::abs(closed.residual - 1) < 1e-6) {
            ++banded;
            continue;
        }
        disagreements += closed.compatible != num.compatible;
    }
    c.require(disagreements == 0, std::to_string(disagreements) + " disagreements out of " +
                                      std::to_string(500 - banded));
    for (int trial = 0; trial < 100; ++trial) {
        double a = u(rng), b = u(rng);
        std::array<double, 4> f{a, 1 - a, b, 1 - b};
        double h0 = f[0] - f[1], h1 = f[2] - f[3];
        CompatResult r = compatibility_qubit(std::numbers::pi / 2, f);
        c.near(r.residual * r.residual, h0 * h0 + h1 * h1, 1e-12, "residual^2 vs h0^2 + h1^2");
        c.require(r.compatible == (h0 * h0 + h1 * h1 <= 1), "theta=pi/2 verdict differs from h0^2 + h1^2 <= 1");
    }
}

void criterion7(Check &c) {
    Rng rng = make_rng(707, 0);
    double worst = 1;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 6;
        CVec amps = random_ket(n + 1, rng);
        MajoranaPoints mp = majorana_from_dicke(amps, static_cast<std::uint64_t>(trial));
        worst = std::min(worst, dicke_fidelity(amps, dicke_amplitudes(build_symmetric(mp.multiset))));
    }
    c.require(worst >= 1 - 1e-7, "worst round-trip fidelity " + std::to_string(worst));
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<BlochVector> pts{random_unit_bloch(rng), random_unit_bloch(rng), random_unit_bloch(rng)};
        c.require(half_sphere_check(pts).contained, "three points not in a half sphere");
    }
    const double s = 1 / std::sqrt(3.0);
    std::vector<BlochVector> tet{{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
    std::vector<Eigen::Vector3d> tv;
    for (const auto &p : tet) {
        tv.emplace_back(p.x, p.y, p.z);
    }
    c.require(!half_sphere_check(tet).contained, "tetrahedron reported in a half sphere");
    c.require(!oracle::half_sphere_grid(tv), "grid oracle finds a half sphere for the tetrahedron");
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<CVec> kets{random_ket(2, rng), random_ket(2, rng), random_ket(2, rng)};
        c.require(additivity_certify(build_symmetric(KetMultiset::of(kets))).certified,
                  "random 3-qubit state not certified additive");
    }
}

void criterion8(Check &c) {
    SearchOptions opt;
    opt.restarts = 64;
    const double gw = std::log2(9.0 / 4);
    auto t0 = Clock::now();
    TensorProductGm ww = gm_tensor_product(w_state(), w_state(), opt);
    double e1 = seconds_since(t0);
    c.near(ww.gm, 2 * gw, 1e-5, "G(W (x) W)");
    c.require(e1 < 30, "W (x) W took " + std::to_string(e1) + " s");
    t0 = Clock::now();
    TensorProductGm wg = gm_tensor_product(w_state(), ghz3(), opt);
    double e2 = seconds_since(t0);
    c.near(wg.gm, gw + 1, 1e-5, "G(W (x) GHZ)");
    c.require(e2 < 30, "W (x) GHZ took " + std::to_string(e2) + " s");
}

void criterion9(Check &c) {
    for (int d : {2, 3, 5, 7, 11, 13}) {
        c.require(mub_defect(build_mubs(d, d + 1)) <= 1e-9, "MUBs not unbiased for d=" + std::to_string(d));
    }
    MubSet zx = build_mubs(2, 2);
    GmResult r = mub_state_gm(zx, {1, 1});
    c.require(r.saturated, "{Z, X} state not saturated");
    c.near(std::abs(state_to_bloch(r.witness).y), 1, 1e-9, "witness |y|");
    c.near(gm_optimize(mub_symmetric_state(zx, {1, 1})).gm, r.gm, 1e-6, "gm_optimize vs MUB formula");
    c.require(!mub_state_gm(build_mubs(3, 4), {1, 1, 1, 1}).saturated, "complete d=3 set reported saturated");
}

struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string &args) {
    std::string cmd = std::string(SYMGM_CLI) + " " + args + " 2>&1";
    Run r;
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) {
        return r;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) {
        r.out.append(buf, n);
    }
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void criterion10(Check &c) {
    const std::string data = SYMGM_TEST_DATA;
    const std::vector<std::string> commands{
        "perm " + data + "/qubit_sic.json",
        "--seed 5 gm " + data + "/w3.json",
        "--json gm " + data + "/qubit_sic.json",
        "dicke --counts 1 2 1 1 --theta 0.9",
        "--json mubs --dim 3 --bases 4",
        "sic --dim 3 --t 0.4",
        "sic-scan",
        "--json majorana " + data + "/ghz3_dicke.json",
        "ml " + data + "/w3.json",
        "compat --theta 1.1 --f 0.3 0.7 0.6 0.4",
        "--json compat " + data + "/qubit_sic.json",
        "additivity " + data + "/qubit_sic.json",
        "--format csv gm " + data + "/dicke_1111.json",
    };
    for (const auto &cmd : commands) {
        Run a = run_cli(cmd), b = run_cli(cmd);
        c.require(a.code == 0, "'" + cmd + "' exited with " + std::to_string(a.code));
        c.require(a.code == b.code && a.out == b.out, "'" + cmd + "' output differs between runs");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<void(Check &)>>> criteria{
        {"qubit SIC constants", criterion1},
        {"d=3 SIC scan", criterion2},
        {"two-basis {1,1;1,1} states", criterion3},
        {"closed-form permanent vs Ryser", criterion4},
        {"likelihood bound machinery", criterion5},
        {"compatibility equivalence", criterion6},
        {"Majorana and half-sphere", criterion7},
        {"tensor-product additivity", criterion8},
        {"MUB suite", criterion9},
        {"CLI determinism", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto t0 = Clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception &e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        double dt = seconds_since(t0);
        bool ok = c.failure.empty();
        failed += !ok;
        std::printf("%s criterion %zu: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, dt,
                    ok ? "" : " -- ", c.failure.c_str());
        std::fflush(stdout);
    }
    return failed;
}
