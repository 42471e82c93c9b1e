// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#include "dlwt/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <vector>

namespace dlwt {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

std::uint8_t quantize(double v) {
    const double r = std::lround(std::clamp(v, 0.0, 255.0));
    return static_cast<std::uint8_t>(r);
}

// Skips PGM whitespace and '#' comment lines, then reads one decimal token.
int read_pgm_int(std::istream& in, const std::string& path) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == EOF || !std::isdigit(c)) fail(path, "malformed PGM header");
    int value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1 << 20) fail(path, "PGM header value out of range");
        c = in.get();
    }
    in.unget();
    return value;
}

struct FileCloser {
    void operator()(std::FILE* f) const { if (f) std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

ImageBuffer load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");
    char magic[2];
    if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5')
        fail(path, "not a binary PGM (P5) file");

    const int width = read_pgm_int(in, path);
    const int height = read_pgm_int(in, path);
    const int maxval = read_pgm_int(in, path);
    if (width <= 0 || height <= 0) fail(path, "bad PGM dimensions");
    if (maxval > 255) fail(path, "unsupported PGM bit depth (maxval " + std::to_string(maxval) +
                                     " > 255)");
    if (maxval < 1) fail(path, "bad PGM maxval");
    in.get();  // single whitespace byte after the header

    std::vector<std::uint8_t> raw(static_cast<std::size_t>(width) * height);
    if (!in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size())))
        fail(path, "truncated PGM payload");

    Grid grid(width, height);
    for (std::size_t i = 0; i < raw.size(); ++i) grid.samples()[i] = raw[i];
    return {std::move(grid), 8, maxval};
}

void save_pgm(const Grid& image, const std::string& path) {
    require_valid(image, "save_pgm");
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open file for writing");
    out << "P5\n" << image.width() << " " << image.height() << "\n255\n";
    std::vector<std::uint8_t> raw(image.size());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = quantize(image.samples()[i]);
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out) fail(path, "write failed");
}

ImageBuffer load_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail(path, "cannot open file");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail(path, "png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        fail(path, "png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "failed to decode PNG");
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);
    if (bit_depth == 16) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "unsupported bit depth: 16-bit PNG");
    }

    // Normalize to 8-bit gray or RGB rows; alpha is dropped.
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int width = static_cast<int>(png_get_image_width(png, info));
    const int height = static_cast<int>(png_get_image_height(png, info));
    const int channels = png_get_channels(png, info);
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "unsupported PNG channel layout");
    }

    std::vector<std::uint8_t> raw(static_cast<std::size_t>(width) * height * channels);
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y)
        rows[y] = raw.data() + static_cast<std::size_t>(y) * width * channels;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    Grid grid(width, height);
    if (channels == 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) grid.samples()[i] = raw[i];
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const std::uint8_t* px = raw.data() + 3 * i;
            grid.samples()[i] = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
        }
    }
    return {std::move(grid), 8, 255};
}

void save_png(const Grid& image, const std::string& path) {
    require_valid(image, "save_png");
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail(path, "cannot open file for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail(path, "png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        fail(path, "png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(path, "failed to encode PNG");
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, image.width(), image.height(), 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<std::uint8_t> row(image.width());
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) row[x] = quantize(image.at(x, y));
        png_write_row(png, row.data());
    }
    png_write_end(png, info);
    png_destroy_write_struct(&png, &info);
}

ImageBuffer load_image(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) fail(path, "cannot open file");
    unsigned char magic[8] = {};
    probe.read(reinterpret_cast<char*>(magic), 8);
    probe.close();

    static const unsigned char png_magic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (std::memcmp(magic, png_magic, 8) == 0) return load_png(path);
    if (magic[0] == 'P' && magic[1] == '5') return load_pgm(path);
    fail(path, "unrecognized image format (expected binary PGM or PNG)");
}

void save_image(const Grid& image, const std::string& path) {
    const auto dot = path.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".png" || ext == ".PNG") {
        save_png(image, path);
    } else if (ext == ".pgm" || ext == ".PGM") {
        save_pgm(image, path);
    } else {
        fail(path, "unsupported output extension '" + ext + "' (expected .pgm or .png)");
    }
}

}  // namespace dlwt
