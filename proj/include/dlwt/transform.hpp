// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dlwt/config.hpp"
#include "dlwt/directions.hpp"
#include "dlwt/grid.hpp"

namespace dlwt {

struct SplitResult {
    Grid even;                 // even[t] = c[2t]
    std::array<Grid, 12> odd;  // odd[k-1][t] = c[2t + s_k], boundary-resolved
};

// Directional polyphase split.  Rejects odd input dimensions.
SplitResult split(const Grid& c, const DirectionSet& dirs, BoundaryMode boundary);

// One analysis level: split, then per stage
//   d_k  = odd_k - P_k(even)                        k = 1..12
//   even += sum_m alpha_m sum_{k in D_m} U_k(d_k)
// and finally coarse = K*even, d_k = d_k/K.
struct LevelResult {
    Grid coarse;
    std::array<Grid, 12> details;
};
LevelResult dlwt_forward_level(const Grid& c, const LiftingConfig& cfg, const DirectionSet& dirs);

// Multiscale decomposition: J analysis levels, each recursing on the coarse
// output.  Level grids at depth d (1 = finest .. J = coarsest) have
// dimensions (width/2^d, height/2^d).
class Decomposition {
public:
    Decomposition() = default;
    Decomposition(Grid coarse, std::vector<std::array<Grid, 12>> details_finest_first,
                  LiftingConfig cfg, DirectionSet dirs, int original_width, int original_height);

    int levels() const { return static_cast<int>(details_.size()); }   // J
    int top_level() const { return top_level_; }                       // L = ceil(log2(max dim))
    int original_width() const { return original_width_; }
    int original_height() const { return original_height_; }
    const LiftingConfig& config() const { return config_; }
    const DirectionSet& directions() const { return directions_; }

    Grid& coarse() { return coarse_; }
    const Grid& coarse() const { return coarse_; }

    // depth: 1 = finest .. J = coarsest; k: 1..12.
    Grid& detail(int depth, int k) { return details_[depth - 1][k - 1]; }
    const Grid& detail(int depth, int k) const { return details_[depth - 1][k - 1]; }

    // Label of the grids at `depth`: top_level() - depth.
    int level_label(int depth) const { return top_level_ - depth; }

    std::uint64_t total_coefficients() const;

    void zero_coarse() { coarse_.fill(0.0); }
    void zero_details_at_depth(int depth);

    // Shape/metadata consistency; throws std::invalid_argument on violation.
    void validate() const;

private:
    Grid coarse_;
    std::vector<std::array<Grid, 12>> details_;  // [depth-1][k-1], depth 1 = finest
    LiftingConfig config_;
    DirectionSet directions_;
    int original_width_ = 0;
    int original_height_ = 0;
    int top_level_ = 0;
};

// Forward transform.  Requires width and height divisible by 2^levels and
// levels >= 1.
Decomposition dlwt_forward(const Grid& image, int levels, const LiftingConfig& cfg,
                           const DirectionSet& dirs = direction_vectors());

// Inverse transform.  Per level: rescale, undo update, undo predict, then
// merge the even grid and the redundant odd candidates.  The candidate set
// for output position 2t + t_m is { odd_k[t - v_k] : k in D_m }; indices
// outside the half grid participate (wrapped) only under periodic boundary,
// where they equal the in-range copies whenever coefficients are unmodified.
Grid dlwt_inverse(const Decomposition& decomp, MergePolicy merge = MergePolicy::average());

// Largest |candidate_i - candidate_j| seen across all merges of a full
// inverse pass; 0 for unmodified coefficients.
double coset_merge_spread(const Decomposition& decomp);

// Exact reduced ratio of stored coefficients to original pixels.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Ratio&, const Ratio&) = default;
};
Ratio redundancy_ratio(const Decomposition& decomp);

}  // namespace dlwt
