// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#pragma once

#include <cstddef>
#include <vector>

#include "dlwt/boundary.hpp"

namespace dlwt {

// A 2-D array of real samples, stored row-major: samples[y*width + x].
// Position t = (t_x, t_y) with t_x the column and t_y the row.
class Grid {
public:
    Grid() = default;
    Grid(int width, int height, double fill = 0.0);
    Grid(int width, int height, std::vector<double> samples);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return samples_.size(); }

    double& at(int x, int y) { return samples_[static_cast<std::size_t>(y) * width_ + x]; }
    double at(int x, int y) const { return samples_[static_cast<std::size_t>(y) * width_ + x]; }

    // Boundary-resolved access for possibly out-of-range (x, y).
    double at_resolved(int x, int y, BoundaryMode mode) const {
        return at(resolve_index(x, width_, mode), resolve_index(y, height_, mode));
    }

    std::vector<double>& samples() { return samples_; }
    const std::vector<double>& samples() const { return samples_; }

    bool same_shape(const Grid& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    void fill(double value);
    double sum() const;
    double min_value() const;
    double max_value() const;
    double max_abs() const;
    bool all_finite() const;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> samples_;
};

// Throws std::invalid_argument naming `what` if the grid is empty or holds
// non-finite samples.
void require_valid(const Grid& grid, const char* what);

}  // namespace dlwt
