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

#ifndef SYMGM_GM_H
#define SYMGM_GM_H

#include <array>
#include <optional>
#include <vector>

#include "symgm/config.h"
#include "symgm/likelihood.h"
#include "symgm/linalg.h"
#include "symgm/symmetric_state.h"

namespace symgm {

/// Geometric measure of a pure symmetric state. Logarithms are base 2.
struct GmResult {
    double lambda_sq = 1;  // max_phi |<phi|^{(x)N}|Psi>|^2
    double gm = 0;         // -log2(lambda_sq)
    double bound = 0;      // likelihood lower bound on gm, in bits
    bool saturated = false;
    bool additive = false;
    PureState witness = PureState::normalize(CVec::Ones(1));
    /// Distinct optimal phi (fidelity-deduplicated), best first.
    std::vector<PureState> witnesses;
};

/// -log2[(N!/perm A) prod_j (g f_j)^{n_j}], g = pi_max. Zero counts contribute 1.
/// Throws InputError when N exceeds the permanent size limit.
double gm_lower_bound(const RankOnePovm &p);

/// Dual basis of r0 = (0,0,1), r1 = (sin t, 0, cos t) in the x-z plane.
struct DualBasisPair {
    Eigen::Vector3d s0;
    Eigen::Vector3d s1;
};
DualBasisPair dual_basis(double theta);

struct CompatResult {
    bool compatible = false;
    std::optional<PureState> witness;
    /// Closed form: |h0 s0 + h1 s1| (or the single-basis defect). General: min D.
    double residual = 0;
    /// General test only: optimizer ended in the grey zone between thresholds.
    bool inconclusive = false;
};

/// Frequencies f = (f00, f01, f10, f11) for outcomes |0>, |1>, |theta+>, |theta->.
/// Uses |h0 s0 + h1 s1| <= 1 with h_j = f_j0 - f_j1 for theta not a multiple
/// of pi, and the coincident-basis condition otherwise. Throws InputError
/// unless each basis row sums to 1.
CompatResult compatibility_qubit(double theta, const std::array<double, 4> &f);

/// Is there a unit phi with |<phi|k_j>|^2 = targets_j for all j?
/// Minimizes D(phi) = sum_j (|<phi|k_j>|^2 - targets_j)^2 by multi-start
/// Levenberg-Marquardt; compatible iff min D < tol.compatibility.
CompatResult compatibility_general(const std::vector<CVec> &kets, const std::vector<double> &targets,
                                   const SearchOptions &opt = {});
/// Targets g f_j.
CompatResult compatibility_general(const RankOnePovm &p, const SearchOptions &opt = {});

/// Multi-start maximization of the product overlap; seeds are the multiset
/// kets plus opt.restarts random vectors.
GmResult gm_optimize(const SymmetricState &s, const SearchOptions &opt = {});

struct AdditivityCertificate {
    bool certified = false;
    bool ml_pure = false;      // ML maximum attained at a pure state
    bool half_sphere = false;  // qubit: Majorana points in a closed half sphere
    bool few_kets = false;     // at most three distinct kets
};

/// Sufficient conditions only; `certified == false` means "not certified".
AdditivityCertificate additivity_certify(const SymmetricState &s, const SearchOptions &opt = {});

struct TensorProductGm {
    double lambda_sq = 0;
    double gm = 0;
};

/// Overlap of |Psi1> (x) |Psi2> with product states over the N pairs (A_k, B_k),
/// maximized over phi^{(x)N} with phi in C^{d1 d2} by a shifted symmetric
/// power iteration from opt.restarts random starts. Requires equal N,
/// d1 d2 <= 16 and N <= 4; throws InputError otherwise.
TensorProductGm gm_tensor_product(const SymmetricState &s1, const SymmetricState &s2, const SearchOptions &opt = {});

/// Dense |Psi1> (x) |Psi2> with party k holding local index a_k d2 + b_k.
CVec paired_tensor(const SymmetricState &s1, const SymmetricState &s2);

}  // namespace symgm

#endif
