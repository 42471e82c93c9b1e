// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#pragma once

#include <string>

#include "dlwt/grid.hpp"

namespace dlwt {

// An image held as reals in [0, 255] plus its source value-range metadata.
struct ImageBuffer {
    Grid grid;
    int bit_depth = 8;
    int max_value = 255;
};

// Reads a binary PGM (P5) or PNG file, dispatching on the file magic.
// Grayscale 8-bit PNG is read directly; RGB(A) PNG is converted with luma
// weights (0.299, 0.587, 0.114); 16-bit inputs are rejected.
ImageBuffer load_image(const std::string& path);

// Writes an 8-bit grayscale image, dispatching on the extension
// (.pgm -> binary P5 with maxval 255, .png -> 8-bit grayscale PNG).
// Samples are clamped to [0, 255] and rounded to the nearest integer.
void save_image(const Grid& image, const std::string& path);

// Format-specific entry points.
ImageBuffer load_pgm(const std::string& path);
void save_pgm(const Grid& image, const std::string& path);
ImageBuffer load_png(const std::string& path);
void save_png(const Grid& image, const std::string& path);

}  // namespace dlwt
