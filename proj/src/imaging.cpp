// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#include "dlwt/imaging.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlwt {

Grid gaussian_smooth(const Grid& image, double sigma, BoundaryMode boundary) {
    require_valid(image, "gaussian_smooth");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("gaussian sigma must be positive, got " +
                                    std::to_string(sigma));

    const int radius = static_cast<int>(std::ceil(4.0 * sigma));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        kernel[i + radius] = std::exp(-0.5 * i * i / (sigma * sigma));
        sum += kernel[i + radius];
    }
    for (double& w : kernel) w /= sum;

    const int w = image.width();
    const int h = image.height();
    Grid rows(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += kernel[i + radius] * image.at(resolve_index(x + i, w, boundary), y);
            rows.at(x, y) = acc;
        }
    Grid out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += kernel[i + radius] * rows.at(x, resolve_index(y + i, h, boundary));
            out.at(x, y) = acc;
        }
    return out;
}

namespace {

void check_size(int size) {
    if (size < 16)
        throw std::invalid_argument("test image size must be >= 16, got " + std::to_string(size));
}

}  // namespace

Grid radial_circle_image(int size, double ring_period) {
    check_size(size);
    if (!(ring_period > 0.0)) throw std::invalid_argument("ring period must be positive");
    const double c = (size - 1) / 2.0;
    Grid g(size, size);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
            const double r = std::hypot(x - c, y - c);
            g.at(x, y) = 127.5 * (1.0 + std::cos(2.0 * std::numbers::pi * r / ring_period));
        }
    return g;
}

Grid filled_circle_image(int size, double radius) {
    check_size(size);
    if (radius < 0.0) radius = size / 4.0;
    const double c = (size - 1) / 2.0;
    Grid g(size, size);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x)
            g.at(x, y) = std::hypot(x - c, y - c) <= radius ? 255.0 : 0.0;
    return g;
}

Grid oriented_sinusoid_image(int size, double theta_deg, double frequency) {
    check_size(size);
    const double theta = theta_deg * std::numbers::pi / 180.0;
    const double cx = std::cos(theta);
    const double cy = std::sin(theta);
    Grid g(size, size);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x)
            g.at(x, y) = 127.5 * (1.0 + std::sin(2.0 * std::numbers::pi * frequency *
                                                 (x * cx + y * cy) / size));
    return g;
}

Grid plane_image(int size, double a, double b, double c) {
    check_size(size);
    Grid g(size, size);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) g.at(x, y) = a * x + b * y + c;
    return g;
}

Grid polynomial_image(int size, int degree) {
    check_size(size);
    if (degree < 0) throw std::invalid_argument("polynomial degree must be >= 0");
    // Fixed coefficient pattern over all monomials x^i y^j with i+j <= degree;
    // centred coordinates keep the values O(1) so the interpolation identity
    // is testable at tight absolute tolerances.
    Grid g(size, size);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
            const double u = (2.0 * x - (size - 1)) / size;
            const double v = (2.0 * y - (size - 1)) / size;
            double value = 0.0;
            for (int i = 0; i <= degree; ++i)
                for (int j = 0; i + j <= degree; ++j) {
                    const double coeff = ((i * 3 + j * 5 + 2) % 7) - 3.0;
                    value += coeff * std::pow(u, i) * std::pow(v, j);
                }
            g.at(x, y) = value;
        }
    return g;
}

}  // namespace dlwt
