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

#ifndef SYMGM_POVM_H
#define SYMGM_POVM_H

#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "symgm/config.h"
#include "symgm/gm.h"
#include "symgm/linalg.h"

namespace symgm {

bool is_prime(int n);

/// Shift X|e_k> = |e_{k+1 mod d}> and phase Z|e_k> = w^k |e_k>, w = exp(2 pi i/d).
struct HwOperators {
    CMat x;
    CMat z;
};
HwOperators hw_operators(int d);

/// b mutually unbiased bases of C^d, d prime: the Z eigenbasis followed by the
/// eigenbases of X Z^a for a = 0, 1, ..., truncated to b bases.
struct MubSet {
    int dim = 0;
    std::vector<std::vector<CVec>> bases;
};

/// Throws InputError for non-prime d or b outside [1, d+1].
MubSet build_mubs(int d, int b);

/// Largest deviation of |<e^j_k|e^l_m>|^2 from (1/d)(1 - d_jl) + d_jl d_km.
double mub_defect(const MubSet &m);

/// The state built from n_j copies of every ket of basis j.
SymmetricState mub_symmetric_state(const MubSet &m, const std::vector<int> &reps);

/// GM of the MUB state. The bound -log2(N!/(d^N perm A)) is exact iff some
/// pure state is unbiased to every ket; a complete set (b = d+1) is never
/// saturated. Unsaturated cases fall back to gm_optimize.
/// Throws InputError unless reps has one entry >= 1 per basis.
GmResult mub_state_gm(const MubSet &m, const std::vector<int> &reps, const SearchOptions &opt = {});

struct SicPovm {
    int dim = 0;
    std::vector<CVec> kets;  // normalized, d^2 of them
    CVec fiducial;
    std::vector<std::pair<int, int>> labels;  // (k1, k2) of X^k1 Z^k2
};

/// X^{k1} Z^{k2} |psi> for (k1, k2) in lexicographic order. The result is only
/// a candidate; see verify_sic.
SicPovm hw_orbit(const PureState &fiducial);

/// sqrt((3+sqrt3)/6)|e0> + e^{i pi/4} sqrt((3-sqrt3)/6)|e1>.
PureState fiducial_d2();
/// (|e1> - e^{it}|e2>)/sqrt(2).
PureState fiducial_d3(double t);

/// All |<psi|X^k1 Z^k2|psi>| for (k1,k2) != (0,0) within 1e-9 of 1/sqrt(d+1).
bool verify_fiducial(const PureState &psi, double tol = 1e-9);

/// d^2 kets with |<psi_j|psi_k>|^2 = (1 + d delta_jk)/(d+1) and frame d I.
bool verify_sic(const std::vector<CVec> &kets, double tol = 1e-9);

/// For `trials` Haar-random phi: sum_j |<phi|psi_j>|^4 = 2d/(d+1) and
/// sum_j |<phi|psi_j>|^2 = d, both within 1e-9.
bool two_design_check(const SicPovm &s, int trials, std::uint64_t seed = 7);

/// Lambda^2 = (d^2)! / ((d+1)^{d^2-1} perm A) with the fiducial as witness.
/// With `cross_check`, gm_optimize must agree within 1e-6 (relative).
/// Throws VerificationFailure when the kets are not a SIC or the cross-check fails.
GmResult sic_state_gm(const SicPovm &s, const SearchOptions &opt = {}, bool cross_check = true);

struct SicScanRow {
    double t = 0;
    double perm_a = 0;         // Ryser permanent of the 9 x 9 Gram matrix
    double perm_closed = 0;    // (27/32)(61 - cos 9t)
    double gm = 0;             // bits, from perm_a
    double gm_closed = 0;      // log2(16 (61 - cos 9t) / 105)
    bool agrees = false;       // |perm_a - perm_closed| < 1e-9 perm_closed
};

/// `points` uniform values in [0, pi/3], endpoints included (points >= 2),
/// or {0} when points == 1.
std::vector<double> sic_scan_grid(int points);
std::vector<SicScanRow> sic_scan_d3(std::span<const double> t_grid);

/// Header `t,perm_A,G_bits`, 12 significant digits, rows in input order.
void write_scan_csv(std::ostream &out, const std::vector<SicScanRow> &rows);

}  // namespace symgm

#endif
