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

#include "symgm/permanent.h"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "symgm/errors.h"
#include "symgm/parallel.h"

namespace symgm {

GramMatrix gram(const KetMultiset &ms) {
    std::vector<CVec> a = ms.expanded();
    auto n = static_cast<Eigen::Index>(a.size());
    CMat g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j; k < n; ++k) {
            Complex v = a[j].dot(a[k]);
            g(j, k) = v;
            g(k, j) = std::conj(v);
        }
        g(j, j) = Complex(a[j].squaredNorm(), 0);
    }
    return GramMatrix{std::move(g), ms};
}

namespace {

// Signed Ryser sum over Gray codes g(k) = k ^ (k >> 1) for k in [begin, end),
// begin >= 1. Row sums start from the subset g(begin - 1). Row sums, products
// and the running total are kept in long double: for nearly parallel kets the
// alternating terms exceed the permanent by many orders of magnitude.
std::complex<long double> ryser_range(const CMat &m, std::uint64_t begin, std::uint64_t end) {
    using Real = long double;
    const Eigen::Index n = m.rows();
    std::vector<Real> re(static_cast<std::size_t>(n), 0), im(static_cast<std::size_t>(n), 0);
    auto add_col = [&](Eigen::Index j, Real sign) {
        for (Eigen::Index i = 0; i < n; ++i) {
            re[static_cast<std::size_t>(i)] += sign * m(i, j).real();
            im[static_cast<std::size_t>(i)] += sign * m(i, j).imag();
        }
    };
    std::uint64_t prev = (begin - 1) ^ ((begin - 1) >> 1);
    for (Eigen::Index j = 0; j < n; ++j) {
        if ((prev >> j) & 1U) {
            add_col(j, 1);
        }
    }
    Real total_re = 0, total_im = 0;
    for (std::uint64_t k = begin; k < end; ++k) {
        int j = std::countr_zero(k);
        std::uint64_t gray = k ^ (k >> 1);
        add_col(j, ((gray >> j) & 1U) ? 1 : -1);
        Real pr = re[0], pi = im[0];
        for (std::size_t i = 1; i < static_cast<std::size_t>(n); ++i) {
            Real t = pr * re[i] - pi * im[i];
            pi = pr * im[i] + pi * re[i];
            pr = t;
        }
        if (std::popcount(gray) & 1) {
            total_re -= pr;
            total_im -= pi;
        } else {
            total_re += pr;
            total_im += pi;
        }
    }
    return {total_re, total_im};
}

}  // namespace

Complex permanent_ryser(const CMat &m) {
    if (m.rows() != m.cols()) {
        throw InputError("permanent_ryser: matrix is not square");
    }
    const Eigen::Index n = m.rows();
    if (n > kMaxRyserSize) {
        throw InputError("permanent_ryser: N = " + std::to_string(n) + " exceeds " + std::to_string(kMaxRyserSize));
    }
    if (n == 0) {
        return 1;
    }
    const std::uint64_t subsets = std::uint64_t{1} << n;
    // Fixed chunking keeps the summation order independent of the worker count.
    const std::uint64_t chunks = n >= 16 ? 64 : 1;
    const std::uint64_t per_chunk = subsets / chunks;
    std::vector<std::complex<long double>> partial(chunks);
    parallel_for(chunks, [&](std::size_t c) {
        std::uint64_t begin = std::max<std::uint64_t>(1, c * per_chunk);
        std::uint64_t end = (c + 1) * per_chunk;
        partial[c] = ryser_range(m, begin, end);
    });
    std::complex<long double> total = 0;
    for (const auto &p : partial) {
        total += p;
    }
    Complex out(static_cast<double>(total.real()), static_cast<double>(total.imag()));
    return (n % 2) ? -out : out;
}

std::vector<CVec> dicke_kets(double theta) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    std::vector<CVec> k(4, CVec(2));
    k[0] << 1, 0;
    k[1] << 0, 1;
    k[2] << c, s;
    k[3] << s, -c;
    return k;
}

KetMultiset dicke_multiset(const DickeCounts &c) {
    std::array<int, 4> n{c.n00, c.n01, c.n10, c.n11};
    auto kets = dicke_kets(c.theta);
    std::vector<CVec> used;
    std::vector<int> mults;
    for (std::size_t j = 0; j < 4; ++j) {
        if (n[j] < 0) {
            throw InputError("dicke_multiset: negative count");
        }
        if (n[j] > 0) {
            used.push_back(kets[j]);
            mults.push_back(n[j]);
        }
    }
    if (used.empty()) {
        throw InputError("dicke_multiset: all counts are zero");
    }
    return KetMultiset(std::move(used), std::move(mults));
}

namespace {

double factorial_exact(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return static_cast<double>(f);
}

}  // namespace

double multinomial(int n, std::initializer_list<int> ks) {
    int sum = 0;
    for (int k : ks) {
        if (k < 0) {
            return 0;
        }
        sum += k;
    }
    if (sum != n) {
        return 0;
    }
    if (n <= 20) {
        std::uint64_t num = 1;
        for (int i = 2; i <= n; ++i) {
            num *= static_cast<std::uint64_t>(i);
        }
        for (int k : ks) {
            for (int i = 2; i <= k; ++i) {
                num /= static_cast<std::uint64_t>(i);
            }
        }
        return static_cast<double>(num);
    }
    double lg = std::lgamma(n + 1.0);
    for (int k : ks) {
        lg -= std::lgamma(k + 1.0);
    }
    return std::exp(lg);
}

double permanent_dicke(const DickeCounts &cnt) {
    const int n00 = cnt.n00, n01 = cnt.n01, n10 = cnt.n10, n11 = cnt.n11;
    if (n00 < 0 || n01 < 0 || n10 < 0 || n11 < 0) {
        throw InputError("permanent_dicke: negative count");
    }
    if (cnt.total() < 1) {
        throw InputError("permanent_dicke: N must be at least 1");
    }
    const double cos_half = std::cos(cnt.theta / 2);
    const double sin_half = std::sin(cnt.theta / 2);

    // Summation set: a+b <= n00, c+f <= n01, a+c <= n10, b+f <= n11,
    // g <= a+b, g <= a+c, f+g >= a. An empty set contributes zero.
    double sum = 0;
    for (int a = 0; a <= n00; ++a) {
        for (int b = 0; a + b <= n00; ++b) {
            for (int c = 0; c <= n01 && a + c <= n10; ++c) {
                for (int f = 0; c + f <= n01 && b + f <= n11; ++f) {
                    int g_lo = std::max(0, a - f);
                    int g_hi = std::min(a + b, a + c);
                    for (int g = g_lo; g <= g_hi; ++g) {
                        double term = std::pow(cos_half, 2 * f + 2 * g) *
                                      std::pow(sin_half, 2 * a + 2 * b + 2 * c - 2 * g) *
                                      multinomial(n00, {a, b, n00 - a - b}) *
                                      multinomial(n01, {c, f, n01 - c - f}) *
                                      multinomial(n10, {g, a + c - g, n10 - a - c}) *
                                      multinomial(n11, {a + b - g, f + g - a, n11 - b - f});
                        sum += ((g - a) % 2 == 0) ? term : -term;
                    }
                }
            }
        }
    }
    double prefactor = 1;
    if (cnt.total() <= 20) {
        prefactor = factorial_exact(n00) * factorial_exact(n01) * factorial_exact(n10) * factorial_exact(n11);
    } else {
        prefactor = std::exp(std::lgamma(n00 + 1.0) + std::lgamma(n01 + 1.0) + std::lgamma(n10 + 1.0) +
                             std::lgamma(n11 + 1.0));
    }
    return prefactor * sum;
}

}  // namespace symgm
