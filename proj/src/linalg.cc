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

#include "symgm/linalg.h"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "symgm/errors.h"

namespace symgm {

PureState::PureState(CVec v, double tol) : vec_(std::move(v)) {
    if (vec_.size() == 0) {
        throw InputError("PureState: empty vector");
    }
    if (!vec_.allFinite()) {
        throw InputError("PureState: non-finite amplitude");
    }
    double n2 = vec_.squaredNorm();
    if (std::abs(n2 - 1.0) > tol) {
        throw InputError("PureState: norm^2 = " + std::to_string(n2) + " is not 1");
    }
}

PureState PureState::normalize(const CVec &v) {
    double n = v.norm();
    if (!(n > 0) || !std::isfinite(n)) {
        throw InputError("PureState::normalize: zero or non-finite vector");
    }
    return PureState(v / n);
}

DensityMatrix::DensityMatrix(CMat m, double tol) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() == 0) {
        throw InputError("DensityMatrix: not square");
    }
    if (!is_hermitian(mat_, tol)) {
        throw InputError("DensityMatrix: not Hermitian");
    }
    if (std::abs(mat_.trace() - Complex(1.0)) > tol) {
        throw InputError("DensityMatrix: trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(mat_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw InputError("DensityMatrix: negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const PureState &s) {
    return DensityMatrix(s.vec() * s.vec().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index d) {
    return DensityMatrix(CMat::Identity(d, d) / static_cast<double>(d));
}

double DensityMatrix::purity() const {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return mat_.squaredNorm();
}

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

Complex inner(const CVec &a, const CVec &b) {
    if (a.size() != b.size()) {
        throw InputError(
            "inner: dimension mismatch (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
    return a.dot(b);
}

double fidelity(const PureState &a, const PureState &b) {
    return std::norm(inner(a.vec(), b.vec()));
}

PureState bloch_to_state(const BlochVector &r) {
    if (std::abs(r.norm() - 1.0) > 1e-10) {
        throw InputError("bloch_to_state: Bloch vector is not a unit vector");
    }
    // cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, written without trig and
    // divided by the larger of the two half-angle factors.
    CVec v(2);
    if (r.z >= 0) {
        double c = std::sqrt((1.0 + r.z) / 2.0);
        v << Complex(c, 0), Complex(r.x, r.y) / (2.0 * c);
    } else {
        double s = std::sqrt((1.0 - r.z) / 2.0);
        v << Complex(r.x, -r.y) / (2.0 * s), Complex(s, 0);
        v = canonical_phase(v);
    }
    return PureState::normalize(v);
}

BlochVector state_to_bloch(const PureState &s) {
    if (s.dim() != 2) {
        throw InputError("state_to_bloch: not a qubit state");
    }
    Complex a = s.vec()(0);
    Complex b = s.vec()(1);
    Complex ab = std::conj(a) * b;
    return BlochVector{2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

BlochVector bloch_of_ket(const CVec &ket) {
    return state_to_bloch(PureState::normalize(ket));
}

CVec canonical_phase(const CVec &v, double cutoff) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double m = std::abs(v(i));
        if (m > cutoff) {
            return v * (std::conj(v(i)) / m);
        }
    }
    return v;
}

bool is_hermitian(const CMat &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

HermitianEig hermitian_eig(const CMat &m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw InputError("hermitian_eig: matrix is not square");
    }
    if (!is_hermitian(m, tol)) {
        throw InputError("hermitian_eig: matrix is not Hermitian");
    }
    CMat h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    if (es.info() != Eigen::Success) {
        throw NonConvergence("hermitian_eig: eigensolver failed");
    }
    HermitianEig out;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        out.values.push_back(es.eigenvalues()(i));
        out.vectors.push_back(es.eigenvectors().col(i));
    }
    return out;
}

CMat frame_operator(const std::vector<CVec> &kets) {
    if (kets.empty()) {
        throw InputError("frame_operator: no kets");
    }
    Eigen::Index d = kets.front().size();
    CMat pi = CMat::Zero(d, d);
    for (const auto &k : kets) {
        if (k.size() != d) {
            throw InputError("frame_operator: kets of different dimension");
        }
        pi += k * k.adjoint();
    }
    return pi;
}

CMat pauli(int which) {
    CMat p(2, 2);
    switch (which) {
        case 0:
            p << 0, 1, 1, 0;
            break;
        case 1:
            p << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case 2:
            p << 1, 0, 0, -1;
            break;
        default:
            throw InputError("pauli: index must be 0, 1 or 2");
    }
    return p;
}

}  // namespace symgm
