// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#include "dlwt/transform.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dlwt/filters.hpp"

namespace dlwt {

namespace {

void check_even_dims(const Grid& g) {
    if (g.width() % 2 != 0 || g.height() % 2 != 0)
        throw std::invalid_argument("grid dimensions must be even, got " +
                                    std::to_string(g.width()) + "x" +
                                    std::to_string(g.height()));
}

int ceil_log2(int n) {
    int level = 0;
    while ((1 << level) < n) ++level;
    return level;
}

struct LevelFilters {
    std::array<Filter2D, 12> predict;
    std::array<Filter2D, 12> update;
};

LevelFilters make_filters(const LiftingConfig& cfg, const DirectionSet& dirs) {
    LevelFilters f;
    for (int k = 1; k <= 12; ++k) {
        f.predict[k - 1] = interpolating_prediction(cfg.prediction_order, k, dirs);
        f.update[k - 1] = update_from_prediction(cfg.update_order, k, dirs);
    }
    return f;
}

void add_scaled(Grid& dst, const Grid& src, double factor) {
    auto& d = dst.samples();
    const auto& s = src.samples();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += factor * s[i];
}

void scale_in_place(Grid& g, double factor) {
    for (double& v : g.samples()) v *= factor;
}

// Forward lifting stages on an already split level, in place.
void lift_forward(Grid& even, std::array<Grid, 12>& odd, const LiftingConfig& cfg,
                  const DirectionSet& dirs, const LevelFilters& filters) {
    for (int stage = 0; stage < cfg.stages; ++stage) {
        for (int k = 1; k <= 12; ++k) {
            const Grid predicted = filters.predict[k - 1].correlate(even, cfg.boundary);
            add_scaled(odd[k - 1], predicted, -1.0);
        }
        // Fixed ascending-k reduction keeps the output bit-reproducible.
        for (int k = 1; k <= 12; ++k) {
            const Grid updated = filters.update[k - 1].correlate(odd[k - 1], cfg.boundary);
            add_scaled(even, updated, dirs.alpha(dirs.coset_of(k)));
        }
    }
    if (cfg.scale != 1.0) {
        scale_in_place(even, cfg.scale);
        for (auto& d : odd) scale_in_place(d, 1.0 / cfg.scale);
    }
}

// Reverses lift_forward: rescale, undo updates, undo predictions.
void lift_inverse(Grid& even, std::array<Grid, 12>& odd, const LiftingConfig& cfg,
                  const DirectionSet& dirs, const LevelFilters& filters) {
    if (cfg.scale != 1.0) {
        scale_in_place(even, 1.0 / cfg.scale);
        for (auto& d : odd) scale_in_place(d, cfg.scale);
    }
    for (int stage = 0; stage < cfg.stages; ++stage) {
        for (int k = 1; k <= 12; ++k) {
            const Grid updated = filters.update[k - 1].correlate(odd[k - 1], cfg.boundary);
            add_scaled(even, updated, -dirs.alpha(dirs.coset_of(k)));
        }
        for (int k = 1; k <= 12; ++k) {
            const Grid predicted = filters.predict[k - 1].correlate(even, cfg.boundary);
            add_scaled(odd[k - 1], predicted, 1.0);
        }
    }
}

// Resolves the redundant odd candidates into the merged output; optionally
// records the largest candidate disagreement seen.
Grid merge_level(const Grid& even, const std::array<Grid, 12>& odd, const DirectionSet& dirs,
                 BoundaryMode boundary, MergePolicy merge, double* spread) {
    const int w = even.width();
    const int h = even.height();
    Grid out(2 * w, 2 * h);
    for (int ty = 0; ty < h; ++ty)
        for (int tx = 0; tx < w; ++tx) out.at(2 * tx, 2 * ty) = even.at(tx, ty);

    auto merge_coset = [&](int m, const int* members, int count) {
        const Vec2i rep = dirs.coset_representative(m);
        std::array<Vec2i, 6> offs;
        for (int i = 0; i < count; ++i) offs[i] = dirs.coset_offset(members[i]);
        const int chosen =
            merge.kind == MergePolicy::Kind::select_k ? (merge.index - 1) % count : 0;

        for (int ty = 0; ty < h; ++ty) {
            for (int tx = 0; tx < w; ++tx) {
                double cand[6];
                int n = 0;
                int chosen_slot = -1;
                for (int i = 0; i < count; ++i) {
                    const int ux = tx - offs[i].x;
                    const int uy = ty - offs[i].y;
                    const bool in_range = ux >= 0 && ux < w && uy >= 0 && uy < h;
                    // Wrapped indices are legitimate copies only under the
                    // periodic extension; the reflected half-grid index does
                    // not address the target sample.
                    if (!in_range && boundary != BoundaryMode::periodic) continue;
                    cand[n] = in_range ? odd[members[i] - 1].at(ux, uy)
                                       : odd[members[i] - 1].at_resolved(ux, uy, boundary);
                    if (i == chosen) chosen_slot = n;
                    ++n;
                }
                double value = cand[0];
                if (merge.kind == MergePolicy::Kind::average) {
                    double s = 0.0;
                    for (int i = 0; i < n; ++i) s += cand[i];
                    value = s / n;
                } else if (merge.kind == MergePolicy::Kind::select_k && chosen_slot >= 0) {
                    value = cand[chosen_slot];
                }
                if (spread && n > 1) {
                    auto [lo, hi] = std::minmax_element(cand, cand + n);
                    *spread = std::max(*spread, *hi - *lo);
                }
                out.at(2 * tx + rep.x, 2 * ty + rep.y) = value;
            }
        }
    };

    merge_coset(1, dirs.coset1().data(), 3);
    merge_coset(2, dirs.coset2().data(), 3);
    merge_coset(3, dirs.coset3().data(), 6);
    return out;
}

Grid inverse_impl(const Decomposition& decomp, MergePolicy merge, double* spread) {
    decomp.validate();
    const LiftingConfig& cfg = decomp.config();
    const DirectionSet& dirs = decomp.directions();
    const LevelFilters filters = make_filters(cfg, dirs);

    Grid current = decomp.coarse();
    for (int depth = decomp.levels(); depth >= 1; --depth) {
        std::array<Grid, 12> odd;
        for (int k = 1; k <= 12; ++k) odd[k - 1] = decomp.detail(depth, k);
        lift_inverse(current, odd, cfg, dirs, filters);
        current = merge_level(current, odd, dirs, cfg.boundary, merge, spread);
    }
    return current;
}

}  // namespace

SplitResult split(const Grid& c, const DirectionSet& dirs, BoundaryMode boundary) {
    require_valid(c, "split");
    check_even_dims(c);
    const int w = c.width() / 2;
    const int h = c.height() / 2;

    SplitResult r{Grid(w, h), {}};
    for (int ty = 0; ty < h; ++ty)
        for (int tx = 0; tx < w; ++tx) r.even.at(tx, ty) = c.at(2 * tx, 2 * ty);
    for (int k = 1; k <= 12; ++k) {
        const Vec2i s = dirs.vector(k);
        Grid o(w, h);
        for (int ty = 0; ty < h; ++ty)
            for (int tx = 0; tx < w; ++tx)
                o.at(tx, ty) = c.at_resolved(2 * tx + s.x, 2 * ty + s.y, boundary);
        r.odd[k - 1] = std::move(o);
    }
    return r;
}

LevelResult dlwt_forward_level(const Grid& c, const LiftingConfig& cfg, const DirectionSet& dirs) {
    cfg.validate();
    SplitResult s = split(c, dirs, cfg.boundary);
    const LevelFilters filters = make_filters(cfg, dirs);
    lift_forward(s.even, s.odd, cfg, dirs, filters);
    return {std::move(s.even), std::move(s.odd)};
}

Decomposition::Decomposition(Grid coarse, std::vector<std::array<Grid, 12>> details_finest_first,
                             LiftingConfig cfg, DirectionSet dirs, int original_width,
                             int original_height)
    : coarse_(std::move(coarse)),
      details_(std::move(details_finest_first)),
      config_(cfg),
      directions_(std::move(dirs)),
      original_width_(original_width),
      original_height_(original_height),
      top_level_(ceil_log2(std::max(original_width, original_height))) {
    validate();
}

std::uint64_t Decomposition::total_coefficients() const {
    std::uint64_t total = coarse_.size();
    for (const auto& level : details_)
        for (const auto& band : level) total += band.size();
    return total;
}

void Decomposition::zero_details_at_depth(int depth) {
    for (auto& band : details_[depth - 1]) band.fill(0.0);
}

void Decomposition::validate() const {
    if (details_.empty()) throw std::invalid_argument("decomposition holds no detail levels");
    config_.validate();
    directions_.validate();
    int w = original_width_;
    int h = original_height_;
    for (std::size_t depth = 1; depth <= details_.size(); ++depth) {
        if (w % 2 != 0 || h % 2 != 0)
            throw std::invalid_argument("decomposition dimensions are not divisible by 2^levels");
        w /= 2;
        h /= 2;
        for (const auto& band : details_[depth - 1])
            if (band.width() != w || band.height() != h)
                throw std::invalid_argument("detail grid at depth " + std::to_string(depth) +
                                            " has inconsistent dimensions");
    }
    if (coarse_.width() != w || coarse_.height() != h)
        throw std::invalid_argument("coarse grid dimensions are inconsistent with the metadata");
}

Decomposition dlwt_forward(const Grid& image, int levels, const LiftingConfig& cfg,
                           const DirectionSet& dirs) {
    require_valid(image, "dlwt_forward");
    cfg.validate();
    dirs.validate();
    if (levels < 1)
        throw std::invalid_argument("decomposition level count must be >= 1, got " +
                                    std::to_string(levels));
    if (levels >= 30) throw std::invalid_argument("decomposition level count is unreasonably large");
    const int factor = 1 << levels;
    if (image.width() % factor != 0 || image.height() % factor != 0)
        throw std::invalid_argument("image dimensions " + std::to_string(image.width()) + "x" +
                                    std::to_string(image.height()) + " are not divisible by 2^" +
                                    std::to_string(levels));

    const LevelFilters filters = make_filters(cfg, dirs);
    std::vector<std::array<Grid, 12>> details;
    details.reserve(levels);
    Grid current = image;
    for (int depth = 1; depth <= levels; ++depth) {
        SplitResult s = split(current, dirs, cfg.boundary);
        lift_forward(s.even, s.odd, cfg, dirs, filters);
        details.push_back(std::move(s.odd));
        current = std::move(s.even);
    }
    return Decomposition(std::move(current), std::move(details), cfg, dirs, image.width(),
                         image.height());
}

Grid dlwt_inverse(const Decomposition& decomp, MergePolicy merge) {
    return inverse_impl(decomp, merge, nullptr);
}

double coset_merge_spread(const Decomposition& decomp) {
    double spread = 0.0;
    inverse_impl(decomp, MergePolicy::average(), &spread);
    return spread;
}

Ratio redundancy_ratio(const Decomposition& decomp) {
    const std::uint64_t total = decomp.total_coefficients();
    const std::uint64_t pixels = static_cast<std::uint64_t>(decomp.original_width()) *
                                 static_cast<std::uint64_t>(decomp.original_height());
    const std::uint64_t g = std::gcd(total, pixels);
    return {total / g, pixels / g};
}

}  // namespace dlwt
