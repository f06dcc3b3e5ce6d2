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

#ifndef SYMGM_CONFIG_H
#define SYMGM_CONFIG_H

#include <cstddef>
#include <cstdint>

namespace symgm {

/// Numerical tolerances shared by every module.
struct Tolerances {
    /// Exact-algebra checks: Hermiticity, unit norm, overlap identities.
    double algebraic = 1e-10;
    /// Stopping and acceptance thresholds of iterative optimizers.
    double optimization = 1e-8;
    /// Unit-norm check on PureState.
    double normalization = 1e-12;
    /// Purity above 1 - this is reported as a pure ML maximum.
    double purity = 1e-7;
    /// Squared-residual threshold for declaring frequencies compatible.
    double compatibility = 1e-12;
    /// |gm - bound| below this means the likelihood bound is saturated.
    double saturation = 1e-7;
    /// Floor on |<phi|psi_j>|^2 in the pure-state fixed-point map.
    double overlap_floor = 1e-14;
};

/// Settings for multi-start optimizers.
struct SearchOptions {
    std::uint64_t seed = 20100915;
    std::size_t restarts = 32;
    std::size_t max_iterations = 20000;
    Tolerances tol{};
};

}  // namespace symgm

#endif
