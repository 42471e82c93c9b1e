// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#pragma once

#include "dlwt/boundary.hpp"
#include "dlwt/grid.hpp"

namespace dlwt {

// Separable Gaussian blur: kernel exp(-n^2 / 2 sigma^2) truncated at radius
// ceil(4 sigma) and normalized to unit sum.  Requires sigma > 0.
Grid gaussian_smooth(const Grid& image, double sigma, BoundaryMode boundary = BoundaryMode::periodic);

// Deterministic synthetic test images, values in [0, 255] unless noted.

// Concentric rings 127.5 * (1 + cos(2 pi r / period)) about the image
// centre ((size-1)/2, (size-1)/2); default ring period 16 px.
Grid radial_circle_image(int size, double ring_period = 16.0);

// Disk of value 255 on background 0; default radius size/4.
Grid filled_circle_image(int size, double radius = -1.0);

// 127.5 * (1 + sin(2 pi f (x cos(theta) + y sin(theta)) / size)).
Grid oriented_sinusoid_image(int size, double theta_deg, double frequency);

// a*x + b*y + c on lattice coordinates.
Grid plane_image(int size, double a, double b, double c);

// Full 2-D polynomial of the given total degree with fixed coefficients,
// evaluated on centred coordinates u = (2x - (size-1))/size in (-1, 1) to
// keep values O(1).
Grid polynomial_image(int size, int degree);

}  // namespace dlwt
