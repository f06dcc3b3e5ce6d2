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

#ifndef SYMGM_POLYROOTS_H
#define SYMGM_POLYROOTS_H

#include <span>
#include <vector>

#include "symgm/linalg.h"
#include "symgm/rng.h"

namespace symgm {

struct RootOptions {
    std::size_t max_iterations = 2000;
    std::size_t max_restarts = 16;
    /// Accept when |p(z)| <= tol * sum_k |c_k| |z|^k at every root.
    double residual_tol = 1e-10;
};

/// All roots of c[0] z^n + c[1] z^{n-1} + ... + c[n] by Aberth-Ehrlich
/// iteration, restarting from perturbed initial circles until every root
/// passes the backward-error test. c[0] must be nonzero.
/// Throws NonConvergence when no restart succeeds.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, Rng &rng, const RootOptions &opt = {});

}  // namespace symgm

#endif
