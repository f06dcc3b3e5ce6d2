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

#ifndef SYMGM_MAJORANA_H
#define SYMGM_MAJORANA_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symgm/linalg.h"
#include "symgm/multiset.h"
#include "symgm/symmetric_state.h"

namespace symgm {

/// Stellar representation of a symmetric N-qubit state: N Bloch points and
/// the multiset of their kets. Ket phases are not meaningful.
struct MajoranaPoints {
    std::vector<BlochVector> points;
    KetMultiset multiset;
};

/// Majorana points of sum_k a_k |N,k>, from the roots of
/// p(z) = sum_k (-1)^k sqrt(C(N,k)) a_k z^{N-k}. A root z stands for the ket
/// |0> + z|1>; a degree deficit of m contributes m copies of |1>.
/// Throws InputError on a zero vector and NonConvergence if root finding fails.
MajoranaPoints majorana_from_dicke(const CVec &amplitudes, std::uint64_t seed = 1);

/// Throws InputError for d != 2.
MajoranaPoints majorana_extract(const SymmetricState &s, std::uint64_t seed = 1);

/// |<a|b>|^2 between two symmetric qubit states given by Dicke amplitudes
/// (each normalized internally).
double dicke_fidelity(const CVec &a, const CVec &b);

struct HalfSphereResult {
    bool contained = false;
    /// max over unit n of min_j n . r_j.
    double margin = 0;
    /// Unit n attaining the margin; set only when `contained`.
    std::optional<BlochVector> witness;
};

/// Whether all points lie in a closed half sphere {r : n . r >= 0}.
///
/// The optimum of min_j n . r_j over the sphere is attained at a direction
/// fixed by at most three active points: +-r_i, +-(r_i + r_j), +-(r_i x r_j),
/// or +-((r_j - r_i) x (r_k - r_i)). All such candidates are enumerated, so
/// the margin is exact up to rounding. Contained iff margin >= -1e-9.
HalfSphereResult half_sphere_check(std::span<const BlochVector> points);

}  // namespace symgm

#endif
