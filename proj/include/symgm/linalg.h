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

#ifndef SYMGM_LINALG_H
#define SYMGM_LINALG_H

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "symgm/config.h"

namespace symgm {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// A unit vector in C^d. Construction validates the norm; use
/// `PureState::normalize` to build one from an arbitrary nonzero vector.
class PureState {
   public:
    explicit PureState(CVec v, double tol = Tolerances{}.normalization);
    static PureState normalize(const CVec &v);

    const CVec &vec() const {
        return vec_;
    }
    Eigen::Index dim() const {
        return vec_.size();
    }

   private:
    CVec vec_;
};

/// Unit-trace, Hermitian, positive semidefinite matrix.
class DensityMatrix {
   public:
    explicit DensityMatrix(CMat m, double tol = Tolerances{}.algebraic);
    static DensityMatrix pure(const PureState &s);
    static DensityMatrix maximally_mixed(Eigen::Index d);

    const CMat &mat() const {
        return mat_;
    }
    double purity() const;

   private:
    CMat mat_;
};

struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 1;

    double norm() const;
    double dot(const BlochVector &o) const {
        return x * o.x + y * o.y + z * o.z;
    }
};

/// <a|b>, conjugate-linear in `a`. Throws InputError on dimension mismatch.
Complex inner(const CVec &a, const CVec &b);

/// |<a|b>|^2 for unit vectors.
double fidelity(const PureState &a, const PureState &b);

/// Throws InputError unless |r| = 1 within 1e-10.
PureState bloch_to_state(const BlochVector &r);
BlochVector state_to_bloch(const PureState &s);
/// Bloch vector of the normalized direction of a nonzero qubit ket.
BlochVector bloch_of_ket(const CVec &ket);

/// Multiplies by the phase that makes the first entry with modulus above
/// `cutoff` real and nonnegative.
CVec canonical_phase(const CVec &v, double cutoff = 1e-12);

bool is_hermitian(const CMat &m, double tol = Tolerances{}.algebraic);

struct HermitianEig {
    std::vector<double> values;  // ascending
    std::vector<CVec> vectors;   // orthonormal, vectors[i] belongs to values[i]
};

/// Throws InputError if `m` is not square and Hermitian within `tol`.
HermitianEig hermitian_eig(const CMat &m, double tol = Tolerances{}.algebraic);

/// Sum_j |k_j><k_j|.
CMat frame_operator(const std::vector<CVec> &kets);

/// Pauli matrices, index 0..2 = X, Y, Z.
CMat pauli(int which);

}  // namespace symgm

#endif
