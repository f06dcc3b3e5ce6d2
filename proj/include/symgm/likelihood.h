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

#ifndef SYMGM_LIKELIHOOD_H
#define SYMGM_LIKELIHOOD_H

#include <optional>
#include <vector>

#include "symgm/config.h"
#include "symgm/linalg.h"
#include "symgm/symmetric_state.h"

namespace symgm {

/// Rank-one POVM elements |psi_j><psi_j| (kets may be subnormalized) with
/// observed counts n_j. pi_max is the largest eigenvalue g of
/// Pi = sum_j |psi_j><psi_j|.
struct RankOnePovm {
    std::vector<CVec> kets;
    std::vector<int> counts;
    double pi_max = 0;

    /// Validates dimensions and counts and computes pi_max.
    static RankOnePovm make(std::vector<CVec> kets, std::vector<int> counts);

    int total() const;
    /// f_j = n_j / N.
    std::vector<double> frequencies() const;
};

/// Distinct kets of the multiset, as stored, with their multiplicities as counts.
RankOnePovm povm_from_state(const SymmetricState &s);

struct MlResult {
    DensityMatrix rho_ml = DensityMatrix::maximally_mixed(1);
    /// prod_j p_j^{n_j} and its natural log.
    double likelihood_max = 0;
    double log_likelihood_max = 0;
    double purity = 0;
    bool is_pure_max = false;
    /// Fixed-point residual ||R(rho) rho - rho||_F of the returned iterate.
    double residual = 0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Maximizes L(rho) = prod_j <psi_j|rho|psi_j>^{n_j} over density matrices.
///
/// Diluted iteration rho <- (I + eps R) rho (I + eps R) / tr(...), with
/// R = sum_j (f_j / p_j) |psi_j><psi_j|, started at I/d. A step that lowers
/// the likelihood is retried with eps halved; accepted steps double eps.
/// When the maximizer found is mixed, the best pure state is searched as
/// well: if it reaches the same likelihood (a face of maximizers containing
/// a pure state) it is returned as rho_ml. On non-convergence the best
/// iterate is returned with converged = false.
MlResult ml_maximize(const RankOnePovm &p, const SearchOptions &opt = {});

/// One local maximum of F(phi) = sum_j w_j log |<phi|psi_j>|^2 on the unit sphere.
struct PureOptimum {
    PureState phi = PureState::normalize(CVec::Ones(1));
    double objective = 0;  // F(phi), natural log
    bool converged = false;
};

struct PureSearchResult {
    PureOptimum best;
    /// One entry per start, in start order: the given seeds first, then random.
    std::vector<PureOptimum> runs;
};

/// Multi-start maximization of F via the multiplicative map
/// phi <- normalize(M(phi) phi), M(phi) = sum_j w_j |psi_j><psi_j| / max(|<phi|psi_j>|^2, floor),
/// with a damped fallback whenever the full step lowers F. Starts are the
/// `seeds` followed by `opt.restarts` Haar-random vectors drawn from
/// per-start streams of `opt.seed`. Ties keep the lowest start index.
PureSearchResult maximize_pure_likelihood(const std::vector<CVec> &kets, const std::vector<double> &weights,
                                          const std::vector<CVec> &seeds, const SearchOptions &opt);

/// F(phi) for the given kets and weights.
double log_pure_likelihood(const std::vector<CVec> &kets, const std::vector<double> &weights, const CVec &phi);

}  // namespace symgm

#endif
