// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#include "dlwt/edge.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dlwt/imaging.hpp"
#include "dlwt/transform.hpp"

namespace dlwt {

void ThresholdMode::validate() const {
    if (kind == Kind::relative) {
        if (!(value > 0.0 && value < 1.0))
            throw std::invalid_argument("relative threshold must lie in (0,1), got " +
                                        std::to_string(value));
    } else if (!(value >= 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument("absolute threshold must be nonnegative");
    }
}

void EdgePipelineConfig::validate() const {
    if (levels < 1)
        throw std::invalid_argument("edge pipeline level count must be >= 1, got " +
                                    std::to_string(levels));
    if (presmooth_sigma < 0.0 || !std::isfinite(presmooth_sigma))
        throw std::invalid_argument("presmooth sigma must be nonnegative");
    lifting.validate();
    threshold.validate();
}

Grid edge_energy(const Grid& image, const EdgePipelineConfig& cfg) {
    cfg.validate();
    const Grid* input = &image;
    Grid smoothed;
    if (cfg.presmooth_sigma > 0.0) {
        smoothed = gaussian_smooth(image, cfg.presmooth_sigma, cfg.lifting.boundary);
        input = &smoothed;
    }
    Decomposition decomp = dlwt_forward(*input, cfg.levels, cfg.lifting);
    decomp.zero_coarse();
    Grid rec = dlwt_inverse(decomp, cfg.merge);
    for (double& v : rec.samples()) v = std::abs(v);
    return rec;
}

EdgeMap binarize(const Grid& energy, const ThresholdMode& threshold) {
    require_valid(energy, "binarize");
    threshold.validate();
    double cut;
    if (threshold.kind == ThresholdMode::Kind::relative) {
        const double mx = energy.max_value();
        cut = threshold.value * mx;                 // all-zero energy -> all-zero map
    } else {
        cut = threshold.value;
    }
    EdgeMap map{Grid(energy.width(), energy.height()), {}, cut};
    for (std::size_t i = 0; i < energy.size(); ++i)
        map.mask.samples()[i] = energy.samples()[i] > cut ? 1.0 : 0.0;
    return map;
}

EdgeMap detect_edges(const Grid& image, const EdgePipelineConfig& cfg) {
    EdgeMap map = binarize(edge_energy(image, cfg), cfg.threshold);
    map.config = cfg;
    return map;
}

}  // namespace dlwt
