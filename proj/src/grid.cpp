// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#include "dlwt/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dlwt {

Grid::Grid(int width, int height, double fill)
    : width_(width), height_(height) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("grid dimensions must be positive, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    samples_.assign(static_cast<std::size_t>(width) * height, fill);
}

Grid::Grid(int width, int height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("grid dimensions must be positive, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    if (samples_.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("grid sample count " + std::to_string(samples_.size()) +
                                    " does not match " + std::to_string(width) + "x" +
                                    std::to_string(height));
}

void Grid::fill(double value) { std::fill(samples_.begin(), samples_.end(), value); }

double Grid::sum() const {
    double s = 0.0;
    for (double v : samples_) s += v;
    return s;
}

double Grid::min_value() const { return *std::min_element(samples_.begin(), samples_.end()); }

double Grid::max_value() const { return *std::max_element(samples_.begin(), samples_.end()); }

double Grid::max_abs() const {
    double m = 0.0;
    for (double v : samples_) m = std::max(m, std::abs(v));
    return m;
}

bool Grid::all_finite() const {
    for (double v : samples_)
        if (!std::isfinite(v)) return false;
    return true;
}

void require_valid(const Grid& grid, const char* what) {
    if (grid.size() == 0)
        throw std::invalid_argument(std::string(what) + ": grid is empty");
    if (!grid.all_finite())
        throw std::invalid_argument(std::string(what) + ": grid holds non-finite samples");
}

}  // namespace dlwt
