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

#ifndef SYMGM_PERMANENT_H
#define SYMGM_PERMANENT_H

#include "symgm/linalg.h"
#include "symgm/multiset.h"

namespace symgm {

struct GramMatrix {
    CMat mat;  // N x N, A_jk = <a_j|a_k> over the expanded ket list
    KetMultiset source;
};

GramMatrix gram(const KetMultiset &ms);

inline constexpr int kMaxRyserSize = 30;

/// Exact permanent by Ryser inclusion-exclusion over Gray-code ordered column
/// subsets, O(2^N N). Throws InputError for non-square input or N > 30.
Complex permanent_ryser(const CMat &m);

/// Occupation numbers of |0>, |1>, |theta+>, |theta->, where
/// |theta+> = cos(theta/2)|0> + sin(theta/2)|1> and
/// |theta-> = sin(theta/2)|0> - cos(theta/2)|1>.
struct DickeCounts {
    int n00 = 0;
    int n01 = 0;
    int n10 = 0;
    int n11 = 0;
    double theta = 0;

    int total() const {
        return n00 + n01 + n10 + n11;
    }
};

/// The four kets of the two qubit bases, ordered |0>, |1>, |theta+>, |theta->.
std::vector<CVec> dicke_kets(double theta);
KetMultiset dicke_multiset(const DickeCounts &c);

/// Permanent of the Gram matrix of `dicke_multiset(c)` from the closed-form
/// five-index sum; polynomial in N. Throws InputError on negative counts or N = 0.
double permanent_dicke(const DickeCounts &c);

/// n!/(k_1! ... k_m!), exact for n <= 20 and via lgamma above; zero if any
/// k_i is negative or the k_i do not sum to n.
double multinomial(int n, std::initializer_list<int> ks);

}  // namespace symgm

#endif
