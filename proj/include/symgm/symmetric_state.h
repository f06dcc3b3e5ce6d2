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

#ifndef SYMGM_SYMMETRIC_STATE_H
#define SYMGM_SYMMETRIC_STATE_H

#include <vector>

#include "symgm/linalg.h"
#include "symgm/multiset.h"

namespace symgm {

/// The normalized symmetrization c P_sym (x)_j |psi_j>^{(x) n_j}, stored
/// implicitly as its ket multiset together with perm(A) and c = sqrt(N!/perm(A)).
class SymmetricState {
   public:
    explicit SymmetricState(KetMultiset ms);

    const KetMultiset &multiset() const {
        return ms_;
    }
    int parties() const {
        return ms_.total();
    }
    Eigen::Index dim() const {
        return ms_.dim();
    }
    double perm_a() const {
        return perm_a_;
    }
    double norm_const() const {
        return norm_const_;
    }
    /// log(N!/perm(A)), natural log.
    double log_prefactor() const {
        return log_prefactor_;
    }

   private:
    KetMultiset ms_;
    double perm_a_ = 0;
    double norm_const_ = 0;
    double log_prefactor_ = 0;
};

/// Throws InputError when perm(A) is not positive (numerically degenerate multiset).
SymmetricState build_symmetric(const KetMultiset &ms);

/// |<phi|^{(x)N} |Psi>|^2 = (N!/perm A) prod_j |<phi|psi_j>|^{2 n_j}.
double product_overlap(const SymmetricState &s, const PureState &phi);

/// log of product_overlap (natural log); -inf when some overlap vanishes.
double log_product_overlap(const SymmetricState &s, const CVec &phi);

inline constexpr std::size_t kMaxDenseSize = std::size_t{1} << 20;

/// Full d^N amplitude vector, party 0 is the most significant digit.
/// Throws InputError when d^N exceeds 2^20.
CVec dense_expand(const SymmetricState &s);

/// <phi|^{(x)N} |v> for a dense N-partite vector v of local dimension phi.dim().
Complex dense_product_amplitude(const CVec &v, const CVec &phi, int parties);

/// Qubit states only: amplitudes on the Dicke basis |N,k>, k = number of |1>s.
CVec dicke_amplitudes(const SymmetricState &s);

/// Dense vector of sum_k a_k |N,k>.
CVec dense_from_dicke(const CVec &amplitudes);

}  // namespace symgm

#endif
