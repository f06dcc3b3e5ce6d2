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

#include "symgm/povm.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "symgm/errors.h"
#include "symgm/parallel.h"
#include "symgm/permanent.h"
#include "symgm/rng.h"

namespace symgm {

namespace {

Complex root_of_unity(double num, int d) {
    return std::polar(1.0, 2 * std::numbers::pi * num / d);
}

}  // namespace

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

HwOperators hw_operators(int d) {
    if (d < 2) {
        throw InputError("hw_operators: dimension must be at least 2");
    }
    HwOperators hw{CMat::Zero(d, d), CMat::Zero(d, d)};
    for (int k = 0; k < d; ++k) {
        hw.x((k + 1) % d, k) = 1;
        hw.z(k, k) = root_of_unity(k, d);
    }
    return hw;
}

MubSet build_mubs(int d, int b) {
    if (!is_prime(d)) {
        throw InputError("build_mubs: dimension " + std::to_string(d) + " is not prime");
    }
    if (b < 1 || b > d + 1) {
        throw InputError("build_mubs: number of bases must lie in [1, d+1]");
    }
    MubSet m{d, {}};
    std::vector<CVec> comp;
    for (int k = 0; k < d; ++k) {
        comp.push_back(CVec::Unit(d, k));
    }
    m.bases.push_back(comp);
    // X Z^a v = lambda v: coefficients c_k = lambda^{-k} w^{a k(k-1)/2} / sqrt(d),
    // with lambda_m = exp(2 pi i (m + a(d-1)/2) / d). The first entry is real positive.
    const double inv_sqrt_d = 1 / std::sqrt(static_cast<double>(d));
    for (int a = 0; a < d && static_cast<int>(m.bases.size()) < b; ++a) {
        std::vector<CVec> basis;
        for (int mm = 0; mm < d; ++mm) {
            double lambda_num = mm + a * (d - 1) / 2.0;
            CVec v(d);
            for (int k = 0; k < d; ++k) {
                long long quad = static_cast<long long>(a) * k * (k - 1) / 2;
                double phase_num = static_cast<double>(quad % d) - lambda_num * k;
                v(k) = inv_sqrt_d * root_of_unity(phase_num, d);
            }
            basis.push_back(v);
        }
        m.bases.push_back(std::move(basis));
    }
    return m;
}

double mub_defect(const MubSet &m) {
    double worst = 0;
    const double d = m.dim;
    for (std::size_t j = 0; j < m.bases.size(); ++j) {
        for (std::size_t l = 0; l < m.bases.size(); ++l) {
            for (std::size_t k = 0; k < m.bases[j].size(); ++k) {
                for (std::size_t q = 0; q < m.bases[l].size(); ++q) {
                    double expect = (j == l) ? (k == q ? 1.0 : 0.0) : 1.0 / d;
                    double got = std::norm(m.bases[j][k].dot(m.bases[l][q]));
                    worst = std::max(worst, std::abs(got - expect));
                }
            }
        }
    }
    return worst;
}

SymmetricState mub_symmetric_state(const MubSet &m, const std::vector<int> &reps) {
    if (reps.size() != m.bases.size()) {
        throw InputError("mub_symmetric_state: need one multiplicity per basis");
    }
    std::vector<CVec> kets;
    std::vector<int> mults;
    for (std::size_t j = 0; j < m.bases.size(); ++j) {
        if (reps[j] < 1) {
            throw InputError("mub_symmetric_state: multiplicities must be at least 1");
        }
        for (const auto &k : m.bases[j]) {
            kets.push_back(k);
            mults.push_back(reps[j]);
        }
    }
    return build_symmetric(KetMultiset(std::move(kets), std::move(mults)));
}

GmResult mub_state_gm(const MubSet &m, const std::vector<int> &reps, const SearchOptions &opt) {
    SymmetricState s = mub_symmetric_state(m, reps);
    const int n = s.parties();
    const double bound =
        -(std::lgamma(n + 1.0) - n * std::log(static_cast<double>(m.dim)) - std::log(s.perm_a())) / std::numbers::ln2;

    std::vector<CVec> kets;
    for (const auto &basis : m.bases) {
        kets.insert(kets.end(), basis.begin(), basis.end());
    }
    std::vector<double> targets(kets.size(), 1.0 / m.dim);
    CompatResult compat = compatibility_general(kets, targets, opt);
    bool complete = static_cast<int>(m.bases.size()) == m.dim + 1;

    GmResult out;
    if (compat.compatible && !complete) {
        out.witness = *compat.witness;
        out.witnesses = {out.witness};
        out.lambda_sq = product_overlap(s, out.witness);
        out.gm = -std::log2(out.lambda_sq);
    } else {
        out = gm_optimize(s, opt);
    }
    out.bound = bound;
    out.saturated = compat.compatible && !complete;
    out.additive = out.saturated || additivity_certify(s, opt).certified;
    return out;
}

SicPovm hw_orbit(const PureState &fiducial) {
    const int d = static_cast<int>(fiducial.dim());
    HwOperators hw = hw_operators(d);
    SicPovm s{d, {}, fiducial.vec(), {}};
    CMat xp = CMat::Identity(d, d);
    for (int k1 = 0; k1 < d; ++k1) {
        CMat zp = CMat::Identity(d, d);
        for (int k2 = 0; k2 < d; ++k2) {
            s.kets.push_back(xp * zp * fiducial.vec());
            s.labels.emplace_back(k1, k2);
            zp = hw.z * zp;
        }
        xp = hw.x * xp;
    }
    return s;
}

PureState fiducial_d2() {
    const double s3 = std::sqrt(3.0);
    CVec v(2);
    v << std::sqrt((3 + s3) / 6), std::polar(std::sqrt((3 - s3) / 6), std::numbers::pi / 4);
    return PureState(v);
}

PureState fiducial_d3(double t) {
    CVec v(3);
    v << 0, 1, -std::polar(1.0, t);
    return PureState(v / std::sqrt(2.0));
}

bool verify_fiducial(const PureState &psi, double tol) {
    const int d = static_cast<int>(psi.dim());
    if (d < 2) {
        return false;
    }
    HwOperators hw = hw_operators(d);
    const double expect = 1 / std::sqrt(d + 1.0);
    CMat xp = CMat::Identity(d, d);
    for (int k1 = 0; k1 < d; ++k1) {
        CMat zp = CMat::Identity(d, d);
        for (int k2 = 0; k2 < d; ++k2) {
            if (k1 != 0 || k2 != 0) {
                double got = std::abs(psi.vec().dot(xp * zp * psi.vec()));
                if (std::abs(got - expect) > tol) {
                    return false;
                }
            }
            zp = hw.z * zp;
        }
        xp = hw.x * xp;
    }
    return true;
}

bool verify_sic(const std::vector<CVec> &kets, double tol) {
    if (kets.empty()) {
        return false;
    }
    const auto d = kets.front().size();
    if (static_cast<Eigen::Index>(kets.size()) != d * d) {
        return false;
    }
    for (std::size_t j = 0; j < kets.size(); ++j) {
        if (kets[j].size() != d) {
            return false;
        }
        for (std::size_t k = 0; k < kets.size(); ++k) {
            double expect = (1.0 + (j == k ? d : 0)) / (d + 1.0);
            if (std::abs(std::norm(kets[j].dot(kets[k])) - expect) > tol) {
                return false;
            }
        }
    }
    CMat frame = frame_operator(kets) - static_cast<double>(d) * CMat::Identity(d, d);
    return frame.norm() <= tol;
}

bool two_design_check(const SicPovm &s, int trials, std::uint64_t seed) {
    const double d = s.dim;
    const double fourth = 2 * d / (d + 1);
    for (int t = 0; t < trials; ++t) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(t));
        CVec phi = random_ket(s.dim, rng);
        double s2 = 0, s4 = 0;
        for (const auto &k : s.kets) {
            double q = std::norm(phi.dot(k));
            s2 += q;
            s4 += q * q;
        }
        if (std::abs(s2 - d) > 1e-9 || std::abs(s4 - fourth) > 1e-9) {
            return false;
        }
    }
    return true;
}

GmResult sic_state_gm(const SicPovm &sp, const SearchOptions &opt, bool cross_check) {
    if (!verify_sic(sp.kets)) {
        throw VerificationFailure("sic_state_gm: kets do not form a SIC");
    }
    SymmetricState s = build_symmetric(KetMultiset::of(sp.kets));
    const int n = s.parties();
    const double d = sp.dim;
    const double log_lambda = std::lgamma(n + 1.0) - (n - 1) * std::log(d + 1) - std::log(s.perm_a());

    GmResult out;
    out.lambda_sq = std::exp(log_lambda);
    out.gm = -log_lambda / std::numbers::ln2;
    for (const auto &k : sp.kets) {
        out.witnesses.push_back(PureState::normalize(canonical_phase(k)));
    }
    out.witness = out.witnesses.front();
    if (cross_check) {
        GmResult num = gm_optimize(s, opt);
        if (std::abs(num.lambda_sq - out.lambda_sq) > 1e-6 * out.lambda_sq) {
            throw VerificationFailure("sic_state_gm: numerical optimum " + std::to_string(num.lambda_sq) +
                                      " disagrees with the closed form " + std::to_string(out.lambda_sq));
        }
        for (const auto &w : num.witnesses) {
            bool on_ket = false;
            for (const auto &k : sp.kets) {
                on_ket = on_ket || std::norm(w.vec().dot(k)) > 1 - 1e-7;
            }
            if (!on_ket) {
                throw VerificationFailure("sic_state_gm: a closest product state is not one of the SIC kets");
            }
        }
        out.bound = num.bound;
        out.additive = num.additive;
    } else {
        out.bound = gm_lower_bound(povm_from_state(s));
        out.additive = additivity_certify(s, opt).certified;
    }
    out.saturated = std::abs(out.gm - out.bound) < opt.tol.saturation;
    return out;
}

std::vector<double> sic_scan_grid(int points) {
    if (points < 1) {
        throw InputError("sic_scan_grid: need at least one point");
    }
    std::vector<double> grid;
    if (points == 1) {
        grid.push_back(0);
        return grid;
    }
    for (int i = 0; i < points; ++i) {
        grid.push_back(std::numbers::pi / 3 * i / (points - 1));
    }
    return grid;
}

std::vector<SicScanRow> sic_scan_d3(std::span<const double> t_grid) {
    std::vector<SicScanRow> rows(t_grid.size());
    parallel_for(t_grid.size(), [&](std::size_t i) {
        const double t = t_grid[i];
        SicPovm sic = hw_orbit(fiducial_d3(t));
        SicScanRow &row = rows[i];
        row.t = t;
        row.perm_a = permanent_ryser(gram(KetMultiset::of(sic.kets)).mat).real();
        row.perm_closed = 27.0 / 32.0 * (61 - std::cos(9 * t));
        // Lambda^2 = 9! / (4^8 perm A).
        row.gm = -(std::lgamma(10.0) - 8 * std::log(4.0) - std::log(row.perm_a)) / std::numbers::ln2;
        row.gm_closed = std::log2(16 * (61 - std::cos(9 * t)) / 105);
        row.agrees = std::abs(row.perm_a - row.perm_closed) < 1e-9 * row.perm_closed;
    });
    return rows;
}

void write_scan_csv(std::ostream &out, const std::vector<SicScanRow> &rows) {
    out << "t,perm_A,G_bits\n";
    char buf[128];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", r.t, r.perm_a, r.gm);
        out << buf;
    }
}

}  // namespace symgm
