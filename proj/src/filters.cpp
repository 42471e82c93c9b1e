// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#include "dlwt/filters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dlwt/transform.hpp"

namespace dlwt {

namespace {

void check_even_dims(const Grid& g) {
    if (g.width() % 2 != 0 || g.height() % 2 != 0)
        throw std::invalid_argument("grid dimensions must be even, got " +
                                    std::to_string(g.width()) + "x" +
                                    std::to_string(g.height()));
}

void check_direction(int k) {
    if (k < 1 || k > 12)
        throw std::invalid_argument("direction index must be in 1..12, got " + std::to_string(k));
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Filter2D::Filter2D(Taps taps) {
    for (auto& [offset, coeff] : taps) {
        if (!std::isfinite(coeff))
            throw std::invalid_argument("filter taps must be finite");
        if (coeff != 0.0) taps_.emplace(offset, coeff);
    }
}

double Filter2D::tap(int ox, int oy) const {
    auto it = taps_.find({ox, oy});
    return it == taps_.end() ? 0.0 : it->second;
}

double Filter2D::tap_sum() const {
    double s = 0.0;
    for (const auto& [offset, coeff] : taps_) s += coeff;
    return s;
}

int Filter2D::radius() const {
    int r = 0;
    for (const auto& [offset, coeff] : taps_)
        r = std::max({r, std::abs(offset.first), std::abs(offset.second)});
    return r;
}

Filter2D Filter2D::reflected() const {
    Taps t;
    for (const auto& [offset, coeff] : taps_) t[{-offset.first, -offset.second}] = coeff;
    return Filter2D(std::move(t));
}

Filter2D Filter2D::scaled(double f) const {
    Taps t;
    for (const auto& [offset, coeff] : taps_) t[offset] = coeff * f;
    return Filter2D(std::move(t));
}

Grid Filter2D::correlate(const Grid& x, BoundaryMode boundary) const {
    Grid out(x.width(), x.height());
    const int w = x.width();
    const int h = x.height();
    for (const auto& [offset, coeff] : taps_) {
        const int ox = offset.first;
        const int oy = offset.second;
        for (int ty = 0; ty < h; ++ty) {
            const int sy = resolve_index(ty + oy, h, boundary);
            for (int tx = 0; tx < w; ++tx)
                out.at(tx, ty) += coeff * x.at(resolve_index(tx + ox, w, boundary), sy);
        }
    }
    return out;
}

Filter2D interpolating_prediction(int order, int k, const DirectionSet& dirs) {
    check_direction(k);
    const Vec2i s = dirs.vector(k);
    switch (order) {
        case 0:
            return Filter2D({{{0, 0}, 1.0}});
        case 2:
            return Filter2D({{{0, 0}, 0.5}, {{s.x, s.y}, 0.5}});
        case 4:
            return Filter2D({{{-s.x, -s.y}, -1.0 / 16.0},
                             {{0, 0}, 9.0 / 16.0},
                             {{s.x, s.y}, 9.0 / 16.0},
                             {{2 * s.x, 2 * s.y}, -1.0 / 16.0}});
        default:
            throw std::invalid_argument("unsupported prediction order " + std::to_string(order) +
                                        " (expected 0, 2 or 4)");
    }
}

Filter2D update_from_prediction(int order, int k, const DirectionSet& dirs) {
    return interpolating_prediction(order, k, dirs).reflected().scaled(0.25);
}

std::map<int, double> bspline_filter_1d(int order) {
    if (order < 1)
        throw std::invalid_argument("B-spline order must be >= 1, got " + std::to_string(order));
    // U0(w) = e^{-i eps w/2} cos(w/2)^r expands to binomial weights at
    // integer positions n = m - (r - eps)/2, eps = r mod 2.
    const int eps = order % 2;
    const double norm = std::pow(2.0, -order);
    std::map<int, double> taps;
    for (int m = 0; m <= order; ++m) taps[m - (order - eps) / 2] = norm * binomial(order, m);
    return taps;
}

Filter2D bspline_filter_2d(int order) {
    const auto one = bspline_filter_1d(order);
    Filter2D::Taps taps;
    for (const auto& [ox, cx] : one)
        for (const auto& [oy, cy] : one) taps[{ox, oy}] = cx * cy;
    return Filter2D(std::move(taps));
}

UpdateFirstResult update_first_forward(const Grid& image, int spline_order, int prediction_order,
                                       const DirectionSet& dirs, BoundaryMode boundary) {
    require_valid(image, "update_first_forward");
    check_even_dims(image);
    const Filter2D u = bspline_filter_2d(spline_order);
    const int w = image.width() / 2;
    const int h = image.height() / 2;

    // coarse[t] = sum_l u[l] * x[2t - l]
    UpdateFirstResult r{Grid(w, h), {}};
    for (const auto& [offset, coeff] : u.taps()) {
        for (int ty = 0; ty < h; ++ty) {
            const int sy = resolve_index(2 * ty - offset.second, image.height(), boundary);
            for (int tx = 0; tx < w; ++tx)
                r.coarse.at(tx, ty) +=
                    coeff * image.at(resolve_index(2 * tx - offset.first, image.width(), boundary), sy);
        }
    }

    for (int k = 1; k <= 12; ++k) {
        const Vec2i s = dirs.vector(k);
        const Filter2D p = interpolating_prediction(prediction_order, k, dirs);
        Grid predicted = p.correlate(r.coarse, boundary);
        Grid d(w, h);
        for (int ty = 0; ty < h; ++ty)
            for (int tx = 0; tx < w; ++tx)
                d.at(tx, ty) = image.at_resolved(2 * tx + s.x, 2 * ty + s.y, boundary) -
                               predicted.at(tx, ty);
        r.details[k - 1] = std::move(d);
    }
    return r;
}

namespace {

// Probes the analysis map with unit impulses at the four polyphase parities
// around the window centre.  For an impulse at v0 the level-1 output obeys
// out[t] = f[v0 - 2t], so each probe fills the taps of one parity class.
template <typename Analyze>
EquivalentFilters probe_filters(int size, int support_radius, Analyze&& analyze) {
    if (size < 16) throw std::invalid_argument("probe size must be >= 16");
    if (size % 2 != 0) throw std::invalid_argument("probe size must be even");
    if (size < 2 * support_radius + 4)
        throw std::invalid_argument("probe size " + std::to_string(size) +
                                    " is too small for the filter support (need >= " +
                                    std::to_string(2 * support_radius + 4) + ")");

    const int c0 = size / 2;
    EquivalentFilters eq{Grid(size, size), {}, c0};
    for (auto& g : eq.highpass) g = Grid(size, size);

    for (int py = 0; py < 2; ++py) {
        for (int px = 0; px < 2; ++px) {
            Grid impulse(size, size);
            impulse.at(c0 + px, c0 + py) = 1.0;
            const LevelResult level = analyze(impulse);
            for (int ty = 0; ty < size / 2; ++ty) {
                for (int tx = 0; tx < size / 2; ++tx) {
                    // Centre the offset u = v0 - 2t into [-size/2, size/2).
                    int ux = (c0 + px - 2 * tx + c0) % size;
                    int uy = (c0 + py - 2 * ty + c0) % size;
                    if (ux < 0) ux += size;
                    if (uy < 0) uy += size;
                    eq.lowpass.at(ux, uy) = level.coarse.at(tx, ty);
                    for (int k = 1; k <= 12; ++k)
                        eq.highpass[k - 1].at(ux, uy) = level.details[k - 1].at(tx, ty);
                }
            }
        }
    }
    return eq;
}

}  // namespace

EquivalentFilters equivalent_filters(const LiftingConfig& cfg, int size, const DirectionSet& dirs) {
    cfg.validate();
    // Reach per stage: prediction spreads 2*r_p (+|s| for the odd offset),
    // the update another 2*r_u on top.
    int r_p = 0, r_u = 0, smax = 0;
    for (int k = 1; k <= 12; ++k) {
        r_p = std::max(r_p, interpolating_prediction(cfg.prediction_order, k, dirs).radius());
        r_u = std::max(r_u, update_from_prediction(cfg.update_order, k, dirs).radius());
        smax = std::max({smax, std::abs(dirs.vector(k).x), std::abs(dirs.vector(k).y)});
    }
    const int radius = cfg.stages * (std::max(smax, 2 * r_p) + 2 * r_u);

    LiftingConfig probe_cfg = cfg;
    probe_cfg.boundary = BoundaryMode::periodic;  // wrap-free as long as the support fits
    return probe_filters(size, radius, [&](const Grid& impulse) {
        return dlwt_forward_level(impulse, probe_cfg, dirs);
    });
}

EquivalentFilters equivalent_filters_update_first(int spline_order, int prediction_order, int size,
                                                  const DirectionSet& dirs) {
    const int r_u = bspline_filter_2d(spline_order).radius();
    int r_p = 0, smax = 0;
    for (int k = 1; k <= 12; ++k) {
        r_p = std::max(r_p, interpolating_prediction(prediction_order, k, dirs).radius());
        smax = std::max({smax, std::abs(dirs.vector(k).x), std::abs(dirs.vector(k).y)});
    }
    const int radius = std::max(smax, 2 * r_p + r_u) + r_u;

    return probe_filters(size, radius, [&](const Grid& impulse) {
        UpdateFirstResult r =
            update_first_forward(impulse, spline_order, prediction_order, dirs,
                                 BoundaryMode::periodic);
        return LevelResult{std::move(r.coarse), std::move(r.details)};
    });
}

Grid mallat_analysis(const Grid& x, const Filter2D& filter, BoundaryMode boundary) {
    check_even_dims(x);
    const int w = x.width() / 2;
    const int h = x.height() / 2;
    Grid out(w, h);
    for (const auto& [offset, coeff] : filter.taps()) {
        for (int ty = 0; ty < h; ++ty) {
            const int sy = resolve_index(2 * ty + offset.second, x.height(), boundary);
            for (int tx = 0; tx < w; ++tx)
                out.at(tx, ty) +=
                    coeff * x.at(resolve_index(2 * tx + offset.first, x.width(), boundary), sy);
        }
    }
    return out;
}

Filter2D filter_from_impulse(const Grid& impulse, int center, double tol) {
    Filter2D::Taps taps;
    for (int y = 0; y < impulse.height(); ++y)
        for (int x = 0; x < impulse.width(); ++x) {
            const double v = impulse.at(x, y);
            if (std::abs(v) > tol) taps[{x - center, y - center}] = v;
        }
    return Filter2D(std::move(taps));
}

double FrequencyResponse::omega(int index) const {
    return -std::numbers::pi + 2.0 * std::numbers::pi * index / size;
}

Grid FrequencyResponse::magnitude() const {
    Grid g(size, size);
    for (int b = 0; b < size; ++b)
        for (int a = 0; a < size; ++a) g.at(a, b) = std::abs(at(a, b));
    return g;
}

FrequencyResponse frequency_response(const Filter2D& filter, int size) {
    if (size < 16)
        throw std::invalid_argument("frequency grid size must be >= 16, got " +
                                    std::to_string(size));
    FrequencyResponse fr{size, {}};
    fr.values.assign(static_cast<std::size_t>(size) * size, {0.0, 0.0});
    for (int b = 0; b < size; ++b) {
        const double wy = fr.omega(b);
        for (int a = 0; a < size; ++a) {
            const double wx = fr.omega(a);
            std::complex<double> acc{0.0, 0.0};
            for (const auto& [offset, coeff] : filter.taps()) {
                const double phase = -(wx * offset.first + wy * offset.second);
                acc += coeff * std::complex<double>(std::cos(phase), std::sin(phase));
            }
            fr.values[static_cast<std::size_t>(b) * size + a] = acc;
        }
    }
    return fr;
}

}  // namespace dlwt
