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

#ifndef SYMGM_MULTISET_H
#define SYMGM_MULTISET_H

#include <vector>

#include "symgm/linalg.h"

namespace symgm {

/// Distinct kets with positive multiplicities n_j, total N = sum n_j.
///
/// Kets may be subnormalized (norm in (0, 1]). Entries that coincide up to a
/// global phase are merged on construction, keeping the first ket and summing
/// multiplicities; this changes the symmetrized state by a global phase only.
class KetMultiset {
   public:
    KetMultiset(std::vector<CVec> kets, std::vector<int> mults, double merge_tol = 1e-12);

    /// n copies of one ket.
    static KetMultiset repeated(const CVec &ket, int n);
    /// One copy of each ket.
    static KetMultiset of(const std::vector<CVec> &kets);

    const std::vector<CVec> &kets() const {
        return kets_;
    }
    const std::vector<int> &mults() const {
        return mults_;
    }
    int total() const {
        return total_;
    }
    Eigen::Index dim() const {
        return kets_.front().size();
    }
    std::size_t distinct() const {
        return kets_.size();
    }
    /// Kets repeated according to multiplicity, in storage order.
    std::vector<CVec> expanded() const;

   private:
    std::vector<CVec> kets_;
    std::vector<int> mults_;
    int total_ = 0;
};

}  // namespace symgm

#endif
