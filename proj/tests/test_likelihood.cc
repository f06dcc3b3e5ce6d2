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

#include "symgm/likelihood.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "symgm/errors.h"
#include "symgm/permanent.h"
#include "symgm/povm.h"
#include "symgm/rng.h"

using namespace symgm;

namespace {

// M kets on a cone of height r around +z.
std::vector<CVec> cone(int m, double r) {
    std::vector<CVec> kets;
    const double s = std::sqrt(1 - r * r);
    for (int j = 0; j < m; ++j) {
        double phi = 2 * std::numbers::pi * j / m;
        kets.push_back(bloch_to_state({s * std::cos(phi), s * std::sin(phi), r}).vec());
    }
    return kets;
}

double log_likelihood(const RankOnePovm &p, const CMat &rho) {
    double sum = 0;
    for (std::size_t j = 0; j < p.kets.size(); ++j) {
        sum += p.counts[j] * std::log(p.kets[j].dot(rho * p.kets[j]).real());
    }
    return sum;
}

CMat random_density(int d, Rng &rng) {
    CMat rho = CMat::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        CVec v = random_ket(d, rng);
        rho += (k + 0.5) * v * v.adjoint();
    }
    return rho / rho.trace().real();
}

}  // namespace

TEST(povm_data, make_validates) {
    EXPECT_THROW(RankOnePovm::make({}, {}), InputError);
    EXPECT_THROW(RankOnePovm::make({CVec::Unit(2, 0)}, {1, 1}), InputError);
    EXPECT_THROW(RankOnePovm::make({CVec::Unit(2, 0)}, {0}), InputError);
    RankOnePovm p = RankOnePovm::make({CVec::Unit(2, 0), CVec::Unit(2, 1)}, {3, 1});
    EXPECT_EQ(p.total(), 4);
    EXPECT_NEAR(p.pi_max, 1, 1e-14);
    EXPECT_NEAR(p.frequencies()[0], 0.75, 1e-15);
}

TEST(ml, cone_family_is_pure_north_pole) {
    for (double r : {0.3, 0.7}) {
        RankOnePovm p = RankOnePovm::make(cone(6, r), std::vector<int>(6, 1));
        EXPECT_NEAR(p.pi_max, 3 * (1 + r), 1e-12);
        MlResult ml = ml_maximize(p);
        EXPECT_TRUE(ml.converged);
        EXPECT_GT(ml.purity, 1 - 1e-9);
        EXPECT_TRUE(ml.is_pure_max);
        EXPECT_NEAR(ml.rho_ml.mat()(0, 0).real(), 1, 1e-9);
        EXPECT_NEAR(ml.log_likelihood_max, 6 * std::log((1 + r) / 2), 1e-9);
    }
}

TEST(ml, qubit_sic_gives_maximally_mixed) {
    SicPovm sic = hw_orbit(fiducial_d2());
    RankOnePovm p = RankOnePovm::make(sic.kets, {1, 1, 1, 1});
    MlResult ml = ml_maximize(p);
    EXPECT_TRUE(ml.converged);
    EXPECT_LT((ml.rho_ml.mat() - CMat::Identity(2, 2) / 2).norm(), 1e-8);
    EXPECT_FALSE(ml.is_pure_max);
}

TEST(ml, degenerate_face_returns_pure_state) {
    // Z and X bases with one count each: L = (1 - z^2)(1 - x^2)/16, so every
    // Bloch vector on the y axis maximizes, including the sigma_y eigenstates.
    DickeCounts c{1, 1, 1, 1, std::numbers::pi / 2};
    SymmetricState s = build_symmetric(dicke_multiset(c));
    MlResult ml = ml_maximize(povm_from_state(s));
    EXPECT_TRUE(ml.is_pure_max);
    EXPECT_GT(ml.purity, 1 - 1e-9);
    EXPECT_NEAR(ml.log_likelihood_max, 4 * std::log(0.5), 1e-9);
}

TEST(ml, maximum_beats_random_states) {
    Rng rng = make_rng(12, 0);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 2 + trial % 3;
        std::vector<CVec> kets;
        std::vector<int> counts;
        for (int j = 0; j < 2 * d; ++j) {
            kets.push_back(random_ket(d, rng));
            counts.push_back(1 + j % 3);
        }
        RankOnePovm p = RankOnePovm::make(kets, counts);
        MlResult ml = ml_maximize(p);
        EXPECT_TRUE(ml.converged);
        EXPECT_NEAR(log_likelihood(p, ml.rho_ml.mat()), ml.log_likelihood_max, 1e-9);
        for (int k = 0; k < 50; ++k) {
            EXPECT_LE(log_likelihood(p, random_density(d, rng)), ml.log_likelihood_max + 1e-9);
        }
        // Fixed point of R rho = rho.
        EXPECT_LT(ml.residual, 1e-8);
    }
}

TEST(pure_likelihood, finds_known_maximum) {
    // Weights (2, 1) on |0>, |1>: maximum at sqrt(2/3)|0> + sqrt(1/3)|1>.
    std::vector<CVec> kets{CVec::Unit(2, 0), CVec::Unit(2, 1)};
    std::vector<double> w{2, 1};
    SearchOptions opt;
    opt.restarts = 8;
    PureSearchResult r = maximize_pure_likelihood(kets, w, {}, opt);
    // The objective is flat at the maximum, so the argument is only good to ~sqrt(eps).
    EXPECT_NEAR(std::norm(r.best.phi.vec()(0)), 2.0 / 3, 1e-7);
    EXPECT_NEAR(r.best.objective, 2 * std::log(2.0 / 3) + std::log(1.0 / 3), 1e-12);
    EXPECT_EQ(r.runs.size(), 8u);
}

TEST(pure_likelihood, deterministic_for_fixed_seed) {
    Rng rng = make_rng(13, 0);
    std::vector<CVec> kets;
    for (int j = 0; j < 5; ++j) {
        kets.push_back(random_ket(3, rng));
    }
    std::vector<double> w{1, 2, 1, 1, 3};
    SearchOptions opt;
    auto a = maximize_pure_likelihood(kets, w, {}, opt);
    auto b = maximize_pure_likelihood(kets, w, {}, opt);
    EXPECT_EQ(a.best.objective, b.best.objective);
    EXPECT_EQ((a.best.phi.vec() - b.best.phi.vec()).norm(), 0);
}
