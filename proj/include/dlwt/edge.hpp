// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#pragma once

#include "dlwt/config.hpp"
#include "dlwt/grid.hpp"

namespace dlwt {

struct ThresholdMode {
    enum class Kind { relative, absolute };
    Kind kind = Kind::relative;
    double value = 0.1;  // tau in (0,1) for relative, >= 0 for absolute

    static ThresholdMode relative(double tau) { return {Kind::relative, tau}; }
    static ThresholdMode absolute(double v) { return {Kind::absolute, v}; }
    void validate() const;
};

struct EdgePipelineConfig {
    int levels = 1;                 // J
    LiftingConfig lifting;
    double presmooth_sigma = 0.0;   // 0 disables pre-smoothing
    ThresholdMode threshold;        // default relative tau = 0.1
    MergePolicy merge;

    void validate() const;
};

struct EdgeMap {
    Grid mask;                  // values in {0, 1}
    EdgePipelineConfig config;
    double applied_threshold = 0.0;
};

// |inverse(forward(image) with the coarse band zeroed)|: the image carried
// by detail components only, rectified.  Optional Gaussian pre-smoothing.
Grid edge_energy(const Grid& image, const EdgePipelineConfig& cfg);

// 1 where energy > threshold, else 0.  Relative mode thresholds at
// tau * max(energy); an all-zero energy grid yields an all-zero map.
EdgeMap binarize(const Grid& energy, const ThresholdMode& threshold);

// edge_energy followed by binarize.
EdgeMap detect_edges(const Grid& image, const EdgePipelineConfig& cfg);

}  // namespace dlwt
