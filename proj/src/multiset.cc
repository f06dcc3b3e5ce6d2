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

#include "symgm/multiset.h"

#include <cmath>
#include <string>

#include "symgm/errors.h"

namespace symgm {

namespace {

bool same_up_to_phase(const CVec &a, const CVec &b, double tol) {
    double na = a.norm();
    double nb = b.norm();
    if (std::abs(na - nb) > tol) {
        return false;
    }
    return na * nb - std::abs(a.dot(b)) <= tol * na * nb;
}

}  // namespace

KetMultiset::KetMultiset(std::vector<CVec> kets, std::vector<int> mults, double merge_tol) {
    if (kets.empty()) {
        throw InputError("KetMultiset: no kets");
    }
    if (kets.size() != mults.size()) {
        throw InputError("KetMultiset: kets and multiplicities differ in length");
    }
    Eigen::Index d = kets.front().size();
    if (d == 0) {
        throw InputError("KetMultiset: zero-dimensional ket");
    }
    for (std::size_t j = 0; j < kets.size(); ++j) {
        const CVec &k = kets[j];
        if (k.size() != d) {
            throw InputError("KetMultiset: ket " + std::to_string(j) + " has a different dimension");
        }
        if (!k.allFinite()) {
            throw InputError("KetMultiset: ket " + std::to_string(j) + " has non-finite entries");
        }
        double n = k.norm();
        if (!(n > 0) || n > 1.0 + 1e-12) {
            throw InputError("KetMultiset: ket " + std::to_string(j) + " norm must lie in (0, 1]");
        }
        if (mults[j] <= 0) {
            throw InputError("KetMultiset: multiplicities must be positive");
        }
        bool merged = false;
        for (std::size_t i = 0; i < kets_.size(); ++i) {
            if (same_up_to_phase(kets_[i], k, merge_tol)) {
                mults_[i] += mults[j];
                merged = true;
                break;
            }
        }
        if (!merged) {
            kets_.push_back(k);
            mults_.push_back(mults[j]);
        }
        total_ += mults[j];
    }
}

KetMultiset KetMultiset::repeated(const CVec &ket, int n) {
    return KetMultiset({ket}, {n});
}

KetMultiset KetMultiset::of(const std::vector<CVec> &kets) {
    return KetMultiset(kets, std::vector<int>(kets.size(), 1));
}

std::vector<CVec> KetMultiset::expanded() const {
    std::vector<CVec> out;
    out.reserve(static_cast<std::size_t>(total_));
    for (std::size_t j = 0; j < kets_.size(); ++j) {
        for (int r = 0; r < mults_[j]; ++r) {
            out.push_back(kets_[j]);
        }
    }
    return out;
}

}  // namespace symgm
