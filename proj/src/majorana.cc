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

#include "symgm/majorana.h"

#include <cmath>

#include "symgm/errors.h"
#include "symgm/polyroots.h"
#include "symgm/rng.h"

namespace symgm {

namespace {

constexpr double kZeroCoefficient = 1e-13;

double binomial(int n, int k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace

MajoranaPoints majorana_from_dicke(const CVec &amplitudes, std::uint64_t seed) {
    const int n = static_cast<int>(amplitudes.size()) - 1;
    if (n < 1) {
        throw InputError("majorana_from_dicke: need at least one qubit");
    }
    double scale = amplitudes.cwiseAbs().maxCoeff();
    if (!(scale > 0)) {
        throw InputError("majorana_from_dicke: zero state");
    }
    // c[k] multiplies z^{N-k}.
    std::vector<Complex> c(static_cast<std::size_t>(n + 1));
    double cmax = 0;
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = ((k % 2) ? -1.0 : 1.0) * std::sqrt(binomial(n, k)) * amplitudes(k) / scale;
        cmax = std::max(cmax, std::abs(c[static_cast<std::size_t>(k)]));
    }
    std::size_t lead = 0;
    while (lead < c.size() && std::abs(c[lead]) <= kZeroCoefficient * cmax) {
        ++lead;
    }
    std::size_t last = c.size();
    while (last > lead && std::abs(c[last - 1]) <= kZeroCoefficient * cmax) {
        --last;
    }
    const int south = static_cast<int>(lead);                       // |1>, z = infinity
    const int north = static_cast<int>(c.size() - last);            // |0>, z = 0
    std::span<const Complex> core(c.data() + lead, last - lead);

    Rng rng = make_rng(seed, 0);
    std::vector<Complex> roots = polynomial_roots(core, rng);

    std::vector<CVec> kets;
    std::vector<int> mults;
    CVec up(2), down(2);
    up << 1, 0;
    down << 0, 1;
    if (north > 0) {
        kets.push_back(up);
        mults.push_back(north);
    }
    if (south > 0) {
        kets.push_back(down);
        mults.push_back(south);
    }
    for (const Complex &z : roots) {
        CVec k(2);
        k << 1, z;
        kets.push_back(k / k.norm());
        mults.push_back(1);
    }
    KetMultiset ms(std::move(kets), std::move(mults));
    MajoranaPoints out{{}, ms};
    for (std::size_t j = 0; j < ms.distinct(); ++j) {
        BlochVector b = bloch_of_ket(ms.kets()[j]);
        for (int r = 0; r < ms.mults()[j]; ++r) {
            out.points.push_back(b);
        }
    }
    return out;
}

MajoranaPoints majorana_extract(const SymmetricState &s, std::uint64_t seed) {
    if (s.dim() != 2) {
        throw InputError("majorana_extract: qubit states only");
    }
    return majorana_from_dicke(dicke_amplitudes(s), seed);
}

double dicke_fidelity(const CVec &a, const CVec &b) {
    if (a.size() != b.size()) {
        throw InputError("dicke_fidelity: different party counts");
    }
    return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

namespace {

using V3 = Eigen::Vector3d;

V3 to_v3(const BlochVector &b) {
    return {b.x, b.y, b.z};
}

}  // namespace

HalfSphereResult half_sphere_check(std::span<const BlochVector> points) {
    HalfSphereResult out;
    if (points.empty()) {
        out.contained = true;
        out.margin = 1;
        out.witness = BlochVector{0, 0, 1};
        return out;
    }
    std::vector<V3> r;
    for (const auto &p : points) {
        V3 v = to_v3(p);
        double nv = v.norm();
        if (!(nv > 0)) {
            throw InputError("half_sphere_check: zero vector");
        }
        v /= nv;
        bool dup = false;
        for (const auto &q : r) {
            if ((q - v).norm() < 1e-12) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            r.push_back(v);
        }
    }

    double best = -2;
    V3 best_n(0, 0, 1);
    auto consider = [&](V3 n) {
        double len = n.norm();
        if (len < 1e-12) {
            return;
        }
        n /= len;
        for (int sign = 0; sign < 2; ++sign) {
            double m = 2;
            for (const auto &v : r) {
                m = std::min(m, n.dot(v));
            }
            if (m > best) {
                best = m;
                best_n = n;
            }
            n = -n;
        }
    };

    const std::size_t m = r.size();
    {
        // Any direction orthogonal to the first point.
        V3 helper = std::abs(r[0].x()) < 0.9 ? V3(1, 0, 0) : V3(0, 1, 0);
        consider(r[0].cross(helper));
    }
    for (std::size_t i = 0; i < m; ++i) {
        consider(r[i]);
        for (std::size_t j = i + 1; j < m; ++j) {
            consider(r[i] + r[j]);
            consider(r[i].cross(r[j]));
            for (std::size_t k = j + 1; k < m; ++k) {
                consider((r[j] - r[i]).cross(r[k] - r[i]));
            }
        }
    }
    out.margin = best;
    out.contained = best >= -1e-9;
    if (out.contained) {
        out.witness = BlochVector{best_n.x(), best_n.y(), best_n.z()};
    }
    return out;
}

}  // namespace symgm
