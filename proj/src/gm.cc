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

#include "symgm/gm.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "symgm/errors.h"
#include "symgm/majorana.h"
#include "symgm/parallel.h"
#include "symgm/permanent.h"
#include "symgm/rng.h"

namespace symgm {

double gm_lower_bound(const RankOnePovm &p) {
    const int n = p.total();
    if (n > kMaxRyserSize) {
        throw InputError("gm_lower_bound: N exceeds the permanent size limit");
    }
    std::vector<CVec> expanded;
    for (std::size_t j = 0; j < p.kets.size(); ++j) {
        for (int r = 0; r < p.counts[j]; ++r) {
            expanded.push_back(p.kets[j]);
        }
    }
    CMat a(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            a(j, k) = expanded[static_cast<std::size_t>(j)].dot(expanded[static_cast<std::size_t>(k)]);
        }
    }
    double perm = permanent_ryser(a).real();
    double log_val = std::lgamma(n + 1.0) - std::log(perm);
    std::vector<double> f = p.frequencies();
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (p.counts[j] > 0) {
            log_val += p.counts[j] * std::log(p.pi_max * f[j]);
        }
    }
    return -log_val / std::numbers::ln2;
}

DualBasisPair dual_basis(double theta) {
    double s = std::sin(theta);
    double c = std::cos(theta);
    return {Eigen::Vector3d(-c / s, 0, 1), Eigen::Vector3d(1 / s, 0, 0)};
}

CompatResult compatibility_qubit(double theta, const std::array<double, 4> &f) {
    for (double x : f) {
        if (x < -1e-12 || x > 1 + 1e-12) {
            throw InputError("compatibility_qubit: frequencies must lie in [0, 1]");
        }
    }
    if (std::abs(f[0] + f[1] - 1) > 1e-9 || std::abs(f[2] + f[3] - 1) > 1e-9) {
        throw InputError("compatibility_qubit: each basis row must sum to 1");
    }
    const double h0 = f[0] - f[1];
    const double h1 = f[2] - f[3];
    CompatResult out;
    if (std::abs(std::sin(theta)) < 1e-12) {
        // Coincident bases: |theta+> is +-|0> (cos theta > 0) or +-|1>.
        double expected = std::cos(theta) > 0 ? h0 : -h0;
        out.residual = std::abs(h1 - expected);
        out.compatible = out.residual <= 1e-12;
        if (out.compatible) {
            double z = std::clamp(h0, -1.0, 1.0);
            out.witness = bloch_to_state(BlochVector{std::sqrt(1 - z * z), 0, z});
        }
        return out;
    }
    DualBasisPair dual = dual_basis(theta);
    Eigen::Vector3d v = h0 * dual.s0 + h1 * dual.s1;
    out.residual = v.norm();
    out.compatible = out.residual <= 1 + 1e-12;
    if (out.compatible) {
        double y = std::sqrt(std::max(0.0, 1 - v.squaredNorm()));
        Eigen::Vector3d s(v.x(), y, v.z());
        s.normalize();
        out.witness = bloch_to_state(BlochVector{s.x(), s.y(), s.z()});
    }
    return out;
}

namespace {

struct LmRun {
    CVec phi;
    double d = std::numeric_limits<double>::infinity();
};

// Real parameters x = (Re phi, Im phi); p_j(x) = |<k_j|phi>|^2 / |phi|^2.
LmRun levenberg_marquardt(const std::vector<CVec> &kets, const std::vector<double> &targets, CVec phi) {
    const Eigen::Index d = phi.size();
    const auto m = static_cast<Eigen::Index>(kets.size());
    auto residuals = [&](const CVec &x, Eigen::VectorXd &r, Eigen::MatrixXd *jac) {
        double n2 = x.squaredNorm();
        r.resize(m);
        if (jac) {
            jac->resize(m, 2 * d);
        }
        for (Eigen::Index j = 0; j < m; ++j) {
            const CVec &k = kets[static_cast<std::size_t>(j)];
            Complex o = k.dot(x);
            double p = std::norm(o) / n2;
            r(j) = p - targets[static_cast<std::size_t>(j)];
            if (jac) {
                for (Eigen::Index i = 0; i < d; ++i) {
                    Complex ck = std::conj(k(i));
                    double du = 2 * std::real(std::conj(o) * ck);
                    double dv = 2 * std::real(std::conj(o) * Complex(0, 1) * ck);
                    (*jac)(j, i) = (du - p * 2 * x(i).real()) / n2;
                    (*jac)(j, d + i) = (dv - p * 2 * x(i).imag()) / n2;
                }
            }
        }
    };
    phi.normalize();
    Eigen::VectorXd r;
    Eigen::MatrixXd jac;
    residuals(phi, r, &jac);
    double cost = r.squaredNorm();
    double mu = 1e-3;
    for (int it = 0; it < 400 && cost > 1e-30; ++it) {
        Eigen::MatrixXd jtj = jac.transpose() * jac;
        Eigen::VectorXd g = jac.transpose() * r;
        bool improved = false;
        for (int tries = 0; tries < 30; ++tries) {
            Eigen::MatrixXd a = jtj;
            a.diagonal().array() += mu * (1.0 + jtj.diagonal().array());
            Eigen::VectorXd step = a.ldlt().solve(-g);
            CVec trial(d);
            for (Eigen::Index i = 0; i < d; ++i) {
                trial(i) = phi(i) + Complex(step(i), step(d + i));
            }
            trial.normalize();
            Eigen::VectorXd rt;
            residuals(trial, rt, nullptr);
            double ct = rt.squaredNorm();
            if (ct < cost) {
                phi = trial;
                cost = ct;
                mu = std::max(mu / 3, 1e-12);
                improved = true;
                break;
            }
            mu *= 4;
        }
        if (!improved) {
            break;
        }
        residuals(phi, r, &jac);
    }
    return {phi, cost};
}

}  // namespace

CompatResult compatibility_general(const std::vector<CVec> &kets, const std::vector<double> &targets,
                                   const SearchOptions &opt) {
    if (kets.empty() || kets.size() != targets.size()) {
        throw InputError("compatibility_general: kets and targets must be nonempty and equally long");
    }
    const Eigen::Index d = kets.front().size();
    // Seeds: eigenvectors of sum_j t_j |k_j><k_j| (its top eigenvector is exact
    // whenever a compatible phi is unique) followed by random starts.
    std::vector<CVec> seeds;
    CMat weighted = CMat::Zero(d, d);
    for (std::size_t j = 0; j < kets.size(); ++j) {
        weighted += targets[j] * kets[j] * kets[j].adjoint();
    }
    for (const auto &v : hermitian_eig(weighted, 1e-8).vectors) {
        seeds.push_back(v);
    }
    const std::size_t starts = seeds.size() + std::max<std::size_t>(opt.restarts, 1);
    std::vector<LmRun> runs(starts);
    parallel_for(starts, [&](std::size_t i) {
        CVec start;
        if (i < seeds.size()) {
            start = seeds[i];
        } else {
            Rng rng = make_rng(opt.seed, 7919 + i);
            start = random_ket(d, rng);
        }
        runs[i] = levenberg_marquardt(kets, targets, start);
    });
    const LmRun *best = &runs.front();
    for (const auto &r : runs) {
        if (r.d < best->d) {
            best = &r;
        }
    }
    CompatResult out;
    out.residual = best->d;
    out.compatible = best->d < opt.tol.compatibility;
    out.inconclusive = !out.compatible && best->d < 1e-9;
    if (out.compatible) {
        out.witness = PureState::normalize(canonical_phase(best->phi));
    }
    return out;
}

CompatResult compatibility_general(const RankOnePovm &p, const SearchOptions &opt) {
    std::vector<double> targets;
    for (double f : p.frequencies()) {
        targets.push_back(p.pi_max * f);
    }
    return compatibility_general(p.kets, targets, opt);
}

GmResult gm_optimize(const SymmetricState &s, const SearchOptions &opt) {
    const auto &ms = s.multiset();
    std::vector<double> w(ms.mults().begin(), ms.mults().end());
    std::vector<CVec> seeds;
    for (const auto &k : ms.kets()) {
        seeds.push_back(k.normalized());
    }
    PureSearchResult search = maximize_pure_likelihood(ms.kets(), w, seeds, opt);

    GmResult out;
    out.witness = search.best.phi;
    out.lambda_sq = product_overlap(s, out.witness);
    out.gm = -std::log2(out.lambda_sq);

    const double cutoff = search.best.objective - 1e-9 * std::max(1.0, std::abs(search.best.objective));
    out.witnesses.push_back(out.witness);
    for (const auto &run : search.runs) {
        if (!(run.objective >= cutoff)) {
            continue;
        }
        bool seen = false;
        for (const auto &w0 : out.witnesses) {
            if (fidelity(w0, run.phi) > 1 - 1e-6) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            out.witnesses.push_back(run.phi);
        }
    }

    out.bound = gm_lower_bound(povm_from_state(s));
    out.saturated = std::abs(out.gm - out.bound) < opt.tol.saturation;
    out.additive = out.saturated || additivity_certify(s, opt).certified;
    return out;
}

AdditivityCertificate additivity_certify(const SymmetricState &s, const SearchOptions &opt) {
    AdditivityCertificate c;
    const auto &ms = s.multiset();
    c.few_kets = ms.distinct() <= 3;
    if (s.dim() == 2) {
        std::vector<BlochVector> pts;
        for (const auto &k : ms.kets()) {
            pts.push_back(bloch_of_ket(k));
        }
        c.half_sphere = half_sphere_check(pts).contained;
    }
    c.ml_pure = ml_maximize(povm_from_state(s), opt).is_pure_max;
    c.certified = c.few_kets || c.half_sphere || c.ml_pure;
    return c;
}

CVec paired_tensor(const SymmetricState &s1, const SymmetricState &s2) {
    const int n = s1.parties();
    const Eigen::Index d1 = s1.dim(), d2 = s2.dim();
    const Eigen::Index dd = d1 * d2;
    CVec a = dense_expand(s1);
    CVec b = dense_expand(s2);
    Eigen::Index size = 1;
    for (int k = 0; k < n; ++k) {
        size *= dd;
    }
    CVec out(size);
    for (Eigen::Index flat = 0; flat < size; ++flat) {
        Eigen::Index rem = flat, ia = 0, ib = 0, pa = 1, pb = 1;
        for (int k = 0; k < n; ++k) {
            Eigen::Index local = rem % dd;
            rem /= dd;
            ia += (local / d2) * pa;
            ib += (local % d2) * pb;
            pa *= d1;
            pb *= d2;
        }
        out(flat) = a(ia) * b(ib);
    }
    return out;
}

namespace {

// g_i = sum T_{i, i2..iN} conj(phi_{i2}) ... conj(phi_{iN}); party 0 is the
// most significant digit, so contracting the trailing digits leaves party 0.
CVec contract_all_but_first(const CVec &t, const CVec &phi, int parties) {
    const Eigen::Index d = phi.size();
    CVec cur = t;
    for (int k = parties; k > 1; --k) {
        Eigen::Index rows = cur.size() / d;
        CVec next(rows);
        for (Eigen::Index r = 0; r < rows; ++r) {
            next(r) = phi.dot(cur.segment(r * d, d));
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

TensorProductGm gm_tensor_product(const SymmetricState &s1, const SymmetricState &s2, const SearchOptions &opt) {
    const int n = s1.parties();
    if (s2.parties() != n) {
        throw InputError("gm_tensor_product: party counts differ");
    }
    const Eigen::Index dd = s1.dim() * s2.dim();
    if (dd > 16 || n > 4) {
        throw InputError("gm_tensor_product: requires d1 d2 <= 16 and N <= 4");
    }
    const CVec t = paired_tensor(s1, s2);
    const std::size_t starts = std::max<std::size_t>(opt.restarts, 1);
    std::vector<double> best(starts, 0.0);
    parallel_for(starts, [&](std::size_t i) {
        Rng rng = make_rng(opt.seed, 104729 + i);
        CVec phi = random_ket(dd, rng);
        CVec g = contract_all_but_first(t, phi, n);
        Complex f = phi.dot(g);
        double val = std::norm(f);
        double shift = 0;
        for (std::size_t it = 0; it < opt.max_iterations; ++it) {
            CVec next = (g + shift * f * phi);
            if (next.norm() == 0) {
                break;
            }
            next.normalize();
            CVec g_next = contract_all_but_first(t, next, n);
            Complex f_next = next.dot(g_next);
            double v_next = std::norm(f_next);
            if (v_next < val) {
                // Increase the shift until the step is an ascent step.
                shift = shift == 0 ? 1 : 2 * shift;
                if (shift > 1e6) {
                    break;
                }
                continue;
            }
            double change = v_next - val;
            phi = std::move(next);
            g = std::move(g_next);
            f = f_next;
            val = v_next;
            if (change < 1e-15) {
                break;
            }
        }
        best[i] = val;
    });
    TensorProductGm out;
    for (double v : best) {
        out.lambda_sq = std::max(out.lambda_sq, v);
    }
    out.gm = -std::log2(out.lambda_sq);
    return out;
}

}  // namespace symgm
