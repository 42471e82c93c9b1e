// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#pragma once

#include <map>
#include <span>
#include <vector>

#include "dlwt/boundary.hpp"

namespace dlwt {

// One lifting stage of the 1-D transform: prediction and update tap maps
// (offset -> coefficient) plus the final scaling K.
//
// Operators act as correlations on the half-rate sequences:
//   (P x)[n] = sum_l predict_taps[l] * x[n+l]
//   (U x)[n] = sum_l update_taps[l]  * x[n+l]
// with out-of-range indices resolved by the boundary mode.
struct LiftingStep1D {
    std::map<int, double> predict_taps;
    std::map<int, double> update_taps;
    double scale = 1.0;  // K; must be nonzero

    void validate() const;
};

struct Lwt1dResult {
    std::vector<double> coarse;
    std::vector<double> detail;
};

// Forward 1-D lifting transform, one split level:
//   even[n] = x[2n], odd[n] = x[2n+1]
//   d      = odd - P even
//   coarse = K * (even + U d)
//   detail = (1/K) * d
// Rejects odd-length or too-short signals.
Lwt1dResult lwt_forward_1d(const std::vector<double>& signal, const LiftingStep1D& step,
                           BoundaryMode boundary);

// Multi-stage variant: applies each step's predict/update in order on the
// same split, then scales once by the product of the steps' K values.
Lwt1dResult lwt_forward_1d(const std::vector<double>& signal,
                           std::span<const LiftingStep1D> steps, BoundaryMode boundary);

// Exact algebraic inverse of lwt_forward_1d (same step(s) and boundary).
// Rejects mismatched coarse/detail lengths.
std::vector<double> lwt_inverse_1d(const std::vector<double>& coarse,
                                   const std::vector<double>& detail,
                                   const LiftingStep1D& step, BoundaryMode boundary);
std::vector<double> lwt_inverse_1d(const std::vector<double>& coarse,
                                   const std::vector<double>& detail,
                                   std::span<const LiftingStep1D> steps, BoundaryMode boundary);

// Interpolating prediction taps of order M in {0, 2, 4}:
//   M=0: {0:1}   M=2: {0:1/2, 1:1/2}   M=4: {-1:-1/16, 0:9/16, 1:9/16, 2:-1/16}
// These are the Lagrange weights predicting x[2n+1] from neighbouring even
// samples x[2n+2l].
std::map<int, double> interpolating_taps_1d(int order);

// Update taps: prediction taps of order Mt reflected through the origin and
// divided by 4.
std::map<int, double> update_taps_1d(int order);

// P = identity, U = halving, K = 1.  The conventional test step; equivalent
// to the Mallat filter pair h = [1/2, 1/2], g = [-1, 1].
LiftingStep1D haar_like_step();

// Interpolating prediction of order M with matched update of order Mt.
LiftingStep1D interpolating_step_1d(int prediction_order, int update_order, double scale = 1.0);

}  // namespace dlwt
