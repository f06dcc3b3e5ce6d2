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

#include "symgm/symmetric_state.h"

#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "symgm/errors.h"
#include "symgm/permanent.h"

namespace symgm {

namespace {

// Permanents of Gram matrices of nonzero kets are positive; only rounding can
// push them to zero.
constexpr double kMinPermanent = 1e-300;

}  // namespace

SymmetricState::SymmetricState(KetMultiset ms) : ms_(std::move(ms)) {
    const int n = ms_.total();
    if (n > kMaxRyserSize) {
        throw InputError("SymmetricState: N = " + std::to_string(n) + " exceeds the permanent size limit");
    }
    Complex p = permanent_ryser(gram(ms_).mat);
    if (!(p.real() > kMinPermanent) || std::abs(p.imag()) > 1e-9 * std::max(1.0, std::abs(p))) {
        throw InputError("SymmetricState: Gram permanent is not positive");
    }
    perm_a_ = p.real();
    log_prefactor_ = std::lgamma(n + 1.0) - std::log(perm_a_);
    norm_const_ = std::exp(0.5 * log_prefactor_);
}

SymmetricState build_symmetric(const KetMultiset &ms) {
    return SymmetricState(ms);
}

double log_product_overlap(const SymmetricState &s, const CVec &phi) {
    if (phi.size() != s.dim()) {
        throw InputError("product_overlap: dimension mismatch");
    }
    const auto &kets = s.multiset().kets();
    const auto &mults = s.multiset().mults();
    double acc = s.log_prefactor();
    for (std::size_t j = 0; j < kets.size(); ++j) {
        double ov = std::norm(phi.dot(kets[j]));
        if (ov <= 0) {
            return -std::numeric_limits<double>::infinity();
        }
        acc += mults[j] * std::log(ov);
    }
    return acc;
}

double product_overlap(const SymmetricState &s, const PureState &phi) {
    return std::exp(log_product_overlap(s, phi.vec()));
}

CVec dense_expand(const SymmetricState &s) {
    const int n = s.parties();
    const Eigen::Index d = s.dim();
    std::size_t size = 1;
    for (int k = 0; k < n; ++k) {
        size *= static_cast<std::size_t>(d);
        if (size > kMaxDenseSize) {
            throw InputError("dense_expand: d^N exceeds 2^20");
        }
    }
    // <i_1 .. i_N| P_sym (x)_k |a_k> = perm(M)/N! with M_kl = a_l[i_k]; the value
    // depends only on the occupation numbers of the index, so each occupation
    // pattern is evaluated once.
    const std::vector<CVec> a = s.multiset().expanded();
    const double scale = s.norm_const() / std::exp(std::lgamma(n + 1.0));
    std::map<std::vector<int>, Complex> cache;
    CVec out(static_cast<Eigen::Index>(size));
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (std::size_t flat = 0; flat < size; ++flat) {
        std::size_t rem = flat;
        std::vector<int> occupation(static_cast<std::size_t>(d), 0);
        for (int k = n - 1; k >= 0; --k) {
            digits[static_cast<std::size_t>(k)] = static_cast<int>(rem % static_cast<std::size_t>(d));
            rem /= static_cast<std::size_t>(d);
            occupation[static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])]++;
        }
        auto it = cache.find(occupation);
        if (it == cache.end()) {
            CMat m(n, n);
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    m(k, l) = a[static_cast<std::size_t>(l)](digits[static_cast<std::size_t>(k)]);
                }
            }
            it = cache.emplace(occupation, permanent_ryser(m) * scale).first;
        }
        out(static_cast<Eigen::Index>(flat)) = it->second;
    }
    return out;
}

Complex dense_product_amplitude(const CVec &v, const CVec &phi, int parties) {
    const Eigen::Index d = phi.size();
    CVec cur = v;
    // Contract the last party each round: cur has shape (d^{k-1}, d) row-major.
    for (int k = parties; k > 0; --k) {
        Eigen::Index rows = cur.size() / d;
        if (rows * d != cur.size()) {
            throw InputError("dense_product_amplitude: size is not a power of the local dimension");
        }
        CVec next = CVec::Zero(rows);
        for (Eigen::Index r = 0; r < rows; ++r) {
            Complex acc = 0;
            for (Eigen::Index i = 0; i < d; ++i) {
                acc += std::conj(phi(i)) * cur(r * d + i);
            }
            next(r) = acc;
        }
        cur = std::move(next);
    }
    if (cur.size() != 1) {
        throw InputError("dense_product_amplitude: size does not match party count");
    }
    return cur(0);
}

CVec dicke_amplitudes(const SymmetricState &s) {
    if (s.dim() != 2) {
        throw InputError("dicke_amplitudes: qubit states only");
    }
    // prod_l (alpha_l + beta_l t) = sum_k e_k t^k, and
    // <N,k|P_sym (x)a> = e_k / sqrt(C(N,k)).
    const int n = s.parties();
    CVec e = CVec::Zero(n + 1);
    e(0) = 1;
    int deg = 0;
    for (const CVec &ket : s.multiset().expanded()) {
        for (int k = deg + 1; k >= 1; --k) {
            e(k) = e(k) * ket(0) + e(k - 1) * ket(1);
        }
        e(0) *= ket(0);
        ++deg;
    }
    CVec amps(n + 1);
    for (int k = 0; k <= n; ++k) {
        double binom = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
        amps(k) = s.norm_const() * e(k) / std::sqrt(binom);
    }
    return amps;
}

CVec dense_from_dicke(const CVec &amplitudes) {
    const int n = static_cast<int>(amplitudes.size()) - 1;
    if (n < 1 || n > 20) {
        throw InputError("dense_from_dicke: need 1 <= N <= 20");
    }
    const std::size_t size = std::size_t{1} << n;
    CVec out(static_cast<Eigen::Index>(size));
    for (std::size_t x = 0; x < size; ++x) {
        int k = std::popcount(x);
        double binom = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
        out(static_cast<Eigen::Index>(x)) = amplitudes(k) / std::sqrt(binom);
    }
    return out;
}

}  // namespace symgm
