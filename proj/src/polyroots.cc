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

#include "symgm/polyroots.h"

#include <cmath>
#include <numbers>

#include "symgm/errors.h"

namespace symgm {

namespace {

struct Eval {
    Complex p;
    Complex dp;
    double scale;  // sum |c_k| |z|^k, for the relative residual
};

Eval horner(std::span<const Complex> c, Complex z) {
    Complex p = c[0];
    Complex dp = 0;
    double az = std::abs(z);
    double scale = std::abs(c[0]);
    for (std::size_t k = 1; k < c.size(); ++k) {
        dp = dp * z + p;
        p = p * z + c[k];
        scale = scale * az + std::abs(c[k]);
    }
    return {p, dp, scale};
}

bool accepted(std::span<const Complex> c, const std::vector<Complex> &z, double tol) {
    for (const auto &r : z) {
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
            return false;
        }
        Eval e = horner(c, r);
        if (std::abs(e.p) > tol * e.scale) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, Rng &rng, const RootOptions &opt) {
    if (coeffs.empty() || std::abs(coeffs[0]) == 0) {
        throw InputError("polynomial_roots: leading coefficient must be nonzero");
    }
    const std::size_t n = coeffs.size() - 1;
    if (n == 0) {
        return {};
    }
    if (n == 1) {
        return {-coeffs[1] / coeffs[0]};
    }

    // Initial radius from the geometric mean of root moduli, |c_n/c_0|^{1/n},
    // falling back to the Cauchy bound when the constant term vanishes.
    double radius = std::pow(std::abs(coeffs[n] / coeffs[0]), 1.0 / static_cast<double>(n));
    if (!(radius > 1e-8) || !std::isfinite(radius)) {
        radius = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            radius = std::max(radius, std::abs(coeffs[k] / coeffs[0]));
        }
        radius = std::max(1e-3, std::min(1.0, radius));
    }

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t attempt = 0; attempt <= opt.max_restarts; ++attempt) {
        std::vector<Complex> z(n);
        double offset = 0.4 + (attempt == 0 ? 0.0 : 2 * std::numbers::pi * unit(rng));
        double r = radius * (attempt == 0 ? 1.0 : 0.5 + 1.5 * unit(rng));
        for (std::size_t k = 0; k < n; ++k) {
            double ang = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + offset;
            z[k] = std::polar(r, ang);
        }
        for (std::size_t it = 0; it < opt.max_iterations; ++it) {
            double max_step = 0;
            double max_mod = 0;
            for (std::size_t k = 0; k < n; ++k) {
                Eval e = horner(coeffs, z[k]);
                if (std::abs(e.p) == 0) {
                    continue;
                }
                Complex ratio = e.p / e.dp;
                Complex repulsion = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j != k) {
                        Complex diff = z[k] - z[j];
                        if (std::abs(diff) > 0) {
                            repulsion += 1.0 / diff;
                        }
                    }
                }
                Complex step = ratio / (1.0 - ratio * repulsion);
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                    step = ratio;
                }
                z[k] -= step;
                max_step = std::max(max_step, std::abs(step));
                max_mod = std::max(max_mod, std::abs(z[k]));
            }
            if (max_step <= 1e-15 * std::max(1.0, max_mod)) {
                break;
            }
        }
        if (accepted(coeffs, z, opt.residual_tol)) {
            return z;
        }
    }
    throw NonConvergence("polynomial_roots: Aberth-Ehrlich iteration did not converge");
}

}  // namespace symgm
