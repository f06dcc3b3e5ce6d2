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

#include "symgm/likelihood.h"

#include <cmath>
#include <limits>
#include <string>

#include "symgm/errors.h"
#include "symgm/parallel.h"
#include "symgm/rng.h"

namespace symgm {

RankOnePovm RankOnePovm::make(std::vector<CVec> kets, std::vector<int> counts) {
    if (kets.empty() || kets.size() != counts.size()) {
        throw InputError("RankOnePovm: kets and counts must be nonempty and equally long");
    }
    int total = 0;
    for (int c : counts) {
        if (c < 0) {
            throw InputError("RankOnePovm: negative count");
        }
        total += c;
    }
    if (total == 0) {
        throw InputError("RankOnePovm: counts sum to zero");
    }
    CMat pi = frame_operator(kets);
    double g = hermitian_eig(pi).values.back();
    if (!(g > 0)) {
        throw InputError("RankOnePovm: frame operator vanishes");
    }
    return RankOnePovm{std::move(kets), std::move(counts), g};
}

int RankOnePovm::total() const {
    int t = 0;
    for (int c : counts) {
        t += c;
    }
    return t;
}

std::vector<double> RankOnePovm::frequencies() const {
    double n = total();
    std::vector<double> f;
    for (int c : counts) {
        f.push_back(c / n);
    }
    return f;
}

RankOnePovm povm_from_state(const SymmetricState &s) {
    return RankOnePovm::make(s.multiset().kets(), s.multiset().mults());
}

double log_pure_likelihood(const std::vector<CVec> &kets, const std::vector<double> &weights, const CVec &phi) {
    double acc = 0;
    for (std::size_t j = 0; j < kets.size(); ++j) {
        if (weights[j] == 0) {
            continue;
        }
        double q = std::norm(phi.dot(kets[j]));
        if (q <= 0) {
            return -std::numeric_limits<double>::infinity();
        }
        acc += weights[j] * std::log(q);
    }
    return acc;
}

namespace {

PureOptimum climb(const std::vector<CVec> &kets, const std::vector<double> &w, CVec phi, const SearchOptions &opt) {
    double wsum = 0;
    for (double x : w) {
        wsum += x;
    }
    phi.normalize();
    double f = log_pure_likelihood(kets, w, phi);
    bool converged = false;
    for (std::size_t it = 0; it < opt.max_iterations; ++it) {
        CVec m_phi = CVec::Zero(phi.size());
        for (std::size_t j = 0; j < kets.size(); ++j) {
            if (w[j] == 0) {
                continue;
            }
            Complex o = kets[j].dot(phi);
            double q = std::max(std::norm(o), opt.tol.overlap_floor);
            m_phi += (w[j] * o / q) * kets[j];
        }
        m_phi /= wsum;
        // Stationary points satisfy M(phi) phi = (sum w) phi.
        double residual = (m_phi - phi).norm();
        if (residual < 1e-11) {
            converged = true;
            break;
        }
        CVec trial = m_phi.normalized();
        double f_trial = log_pure_likelihood(kets, w, trial);
        double eps = 1.0;
        while (!(f_trial >= f) && eps > 1e-10) {
            trial = (phi + eps * m_phi).normalized();
            f_trial = log_pure_likelihood(kets, w, trial);
            eps *= 0.5;
        }
        if (!(f_trial >= f)) {
            // No ascent along the map direction; treat as stationary.
            converged = std::isfinite(f) && residual < 1e-6;
            break;
        }
        double change = f_trial - f;
        phi = trial;
        f = f_trial;
        if (std::isfinite(f) && change <= 1e-15 * std::max(1.0, std::abs(f)) && residual < 1e-7) {
            converged = true;
            break;
        }
    }
    return PureOptimum{PureState::normalize(canonical_phase(phi)), f, converged};
}

}  // namespace

PureSearchResult maximize_pure_likelihood(const std::vector<CVec> &kets, const std::vector<double> &weights,
                                          const std::vector<CVec> &seeds, const SearchOptions &opt) {
    if (kets.empty() || kets.size() != weights.size()) {
        throw InputError("maximize_pure_likelihood: kets and weights must be nonempty and equally long");
    }
    const Eigen::Index d = kets.front().size();
    const std::size_t starts = seeds.size() + opt.restarts;
    if (starts == 0) {
        throw InputError("maximize_pure_likelihood: no starting points");
    }
    std::vector<PureOptimum> runs(starts);
    parallel_for(starts, [&](std::size_t i) {
        CVec start;
        if (i < seeds.size()) {
            start = seeds[i];
        } else {
            Rng rng = make_rng(opt.seed, i);
            start = random_ket(d, rng);
        }
        runs[i] = climb(kets, weights, start, opt);
    });
    PureSearchResult out{runs.front(), std::move(runs)};
    for (const auto &r : out.runs) {
        if (r.objective > out.best.objective) {
            out.best = r;
        }
    }
    return out;
}

namespace {

struct Probe {
    std::vector<double> p;
    double log_l = 0;
};

Probe probe(const std::vector<CVec> &kets, const std::vector<int> &counts, const CMat &rho) {
    Probe out;
    for (std::size_t j = 0; j < kets.size(); ++j) {
        double pj = std::real(kets[j].dot(rho * kets[j]));
        out.p.push_back(pj);
        if (counts[j] > 0) {
            out.log_l += counts[j] * (pj > 0 ? std::log(pj) : -std::numeric_limits<double>::infinity());
        }
    }
    return out;
}

CMat r_operator(const std::vector<CVec> &kets, const std::vector<double> &f, const std::vector<double> &p) {
    Eigen::Index d = kets.front().size();
    CMat r = CMat::Zero(d, d);
    for (std::size_t j = 0; j < kets.size(); ++j) {
        if (f[j] > 0) {
            r += (f[j] / p[j]) * (kets[j] * kets[j].adjoint());
        }
    }
    return r;
}

CMat hermitize(const CMat &m) {
    return (m + m.adjoint()) / 2.0;
}

}  // namespace

MlResult ml_maximize(const RankOnePovm &pv, const SearchOptions &opt) {
    const auto &kets = pv.kets;
    const Eigen::Index d = kets.front().size();
    const std::vector<double> f = pv.frequencies();
    const CMat id = CMat::Identity(d, d);

    CMat rho = id / static_cast<double>(d);
    Probe cur = probe(kets, pv.counts, rho);
    double eps = 1.0;
    double residual = std::numeric_limits<double>::infinity();
    std::size_t it = 0;
    bool converged = false;
    for (; it < opt.max_iterations; ++it) {
        CMat r = r_operator(kets, f, cur.p);
        residual = (r * rho - rho).norm();
        if (residual < 1e-10) {
            converged = true;
            break;
        }
        // Try eps/2, eps and 2 eps and keep the best. Large dilutions approach
        // plain R rho R, which can oscillate around the maximum at constant
        // likelihood; picking the best candidate damps that.
        auto try_step = [&](double e, CMat &out_rho, Probe &out_probe) {
            CMat step = id + e * r;
            out_rho = hermitize(step * rho * step);
            out_rho /= out_rho.trace().real();
            out_probe = probe(kets, pv.counts, out_rho);
        };
        bool accepted = false;
        while (eps > 1e-12) {
            CMat best_rho;
            Probe best;
            double best_eps = 0;
            bool have = false;
            for (double e : {0.5 * eps, eps, std::min(2 * eps, 1e8)}) {
                CMat cand_rho;
                Probe cand;
                try_step(e, cand_rho, cand);
                if (cand.log_l >= cur.log_l && (!have || cand.log_l > best.log_l)) {
                    best_rho = std::move(cand_rho);
                    best = std::move(cand);
                    best_eps = e;
                    have = true;
                }
            }
            if (have) {
                rho = std::move(best_rho);
                cur = std::move(best);
                eps = best_eps;
                accepted = true;
                break;
            }
            eps *= 0.25;
        }
        if (!accepted) {
            // No ascent available at any dilution: numerically stationary.
            converged = residual < 1e-7;
            break;
        }
    }

    MlResult out;
    out.rho_ml = DensityMatrix(rho, 1e-8);
    out.log_likelihood_max = cur.log_l;
    out.likelihood_max = std::exp(cur.log_l);
    out.purity = out.rho_ml.purity();
    out.residual = residual;
    out.iterations = it;
    out.converged = converged;
    out.is_pure_max = out.purity > 1.0 - opt.tol.purity;

    if (!out.is_pure_max) {
        // The maximizers may form a face that also contains pure states.
        std::vector<double> w(pv.counts.begin(), pv.counts.end());
        std::vector<CVec> seeds;
        HermitianEig eig = hermitian_eig(out.rho_ml.mat(), 1e-8);
        seeds.push_back(eig.vectors.back());
        for (const auto &k : kets) {
            seeds.push_back(k);
        }
        SearchOptions pure_opt = opt;
        pure_opt.restarts = std::max<std::size_t>(opt.restarts, 8);
        PureSearchResult pure = maximize_pure_likelihood(kets, w, seeds, pure_opt);
        if (pure.best.objective >= cur.log_l - 1e-9 * std::max(1.0, std::abs(cur.log_l))) {
            out.rho_ml = DensityMatrix::pure(pure.best.phi);
            out.log_likelihood_max = std::max(cur.log_l, pure.best.objective);
            out.likelihood_max = std::exp(out.log_likelihood_max);
            out.purity = 1.0;
            out.is_pure_max = true;
        }
    }
    return out;
}

}  // namespace symgm
