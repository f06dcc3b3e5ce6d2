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

#ifndef SYMGM_RNG_H
#define SYMGM_RNG_H

#include <cstdint>
#include <random>

#include "symgm/linalg.h"

namespace symgm {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; maps (seed, stream) to a decorrelated sub-seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    return Rng(derive_seed(seed, stream));
}

/// Haar-random unit vector in C^d.
inline CVec random_ket(Eigen::Index d, Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVec v(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        double re = g(rng);
        double im = g(rng);
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

inline BlochVector random_unit_bloch(Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    double x = g(rng), y = g(rng), z = g(rng);
    double n = std::sqrt(x * x + y * y + z * z);
    return {x / n, y / n, z / n};
}

}  // namespace symgm

#endif
