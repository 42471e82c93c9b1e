// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#pragma once

#include <array>
#include <complex>
#include <map>
#include <vector>

#include "dlwt/config.hpp"
#include "dlwt/directions.hpp"
#include "dlwt/grid.hpp"

namespace dlwt {

// Sparse 2-D FIR filter: map from lattice offset to coefficient.
// Applied as a correlation, out[t] = sum_l taps[l] * x[t+l]; see
// mallat_analysis below for the subsampled analysis convention.
class Filter2D {
public:
    using Taps = std::map<std::pair<int, int>, double>;

    Filter2D() = default;
    explicit Filter2D(Taps taps);

    const Taps& taps() const { return taps_; }
    double tap(int ox, int oy) const;
    double tap_sum() const;
    int radius() const;  // max Chebyshev extent of the support
    std::size_t support_size() const { return taps_.size(); }

    Filter2D reflected() const;      // taps[-t]
    Filter2D scaled(double f) const;

    // out[t] = sum_l taps[l] * x[t+l], boundary-resolved.
    Grid correlate(const Grid& x, BoundaryMode boundary) const;

private:
    Taps taps_;  // zero-valued taps are dropped on construction
};

// Interpolating prediction filter of order M in {0, 2, 4} along direction k:
//   M=0: {0:1}
//   M=2: {0:1/2, s_k:1/2}
//   M=4: {-s_k:-1/16, 0:9/16, s_k:9/16, 2s_k:-1/16}
Filter2D interpolating_prediction(int order, int k,
                                  const DirectionSet& dirs = direction_vectors());

// Matched update filter: u_k[t] = p_k[-t] / 4 at order Mt.
Filter2D update_from_prediction(int order, int k,
                                const DirectionSet& dirs = direction_vectors());

// 1-D B-spline low-pass of order r >= 1: binomial taps 2^-r * C(r, .),
// integer-indexed (the half-sample delay of odd r is folded into the tap
// positions, giving support {-(r-1)/2 .. (r+1)/2}).  Taps sum to 1.
std::map<int, double> bspline_filter_1d(int order);

// Tensor product of bspline_filter_1d with itself.
Filter2D bspline_filter_2d(int order);

struct UpdateFirstResult {
    Grid coarse;
    std::array<Grid, 12> details;  // details[k-1]
};

// One analysis level in update-first order:
//   coarse[t]   = sum_l u[l] * x[2t-l]          (u = 2-D B-spline of order r)
//   detail_k[t] = x[2t+s_k] - (P_k coarse)[t]   (order-M interpolating P_k)
// No inverse is offered for this form.
UpdateFirstResult update_first_forward(const Grid& image, int spline_order, int prediction_order,
                                       const DirectionSet& dirs, BoundaryMode boundary);

struct EquivalentFilters {
    Grid lowpass;                   // size x size, impulse response centred at (size/2, size/2)
    std::array<Grid, 12> highpass;  // highpass[k-1]
    int center = 0;                 // offset u maps to grid position u + center
};

// Equivalent one-level analysis filters h, g_k with
//   coarse[t]   = sum_v h[v-2t]   * x[v]
//   detail_k[t] = sum_v g_k[v-2t] * x[v]
// obtained by probing the analysis operator with unit impulses.  Throws if
// `size` cannot contain the filter support.
EquivalentFilters equivalent_filters(const LiftingConfig& cfg, int size,
                                     const DirectionSet& dirs = direction_vectors());
EquivalentFilters equivalent_filters_update_first(int spline_order, int prediction_order, int size,
                                                  const DirectionSet& dirs = direction_vectors());

// Subsampled analysis convolution out[t] = sum_u f[u] * x[2t+u], the direct
// filter-bank route the lifting pipeline is checked against.
Grid mallat_analysis(const Grid& x, const Filter2D& filter, BoundaryMode boundary);

// Extracts the sparse taps from a centred impulse-response grid, dropping
// magnitudes <= tol.
Filter2D filter_from_impulse(const Grid& impulse, int center, double tol = 1e-14);

// DFT samples of a filter on an S x S grid of omega in [-pi, pi)^2:
//   values[b*size + a] = sum_t f[t] * exp(-i omega_ab . t),
//   omega_ab = (-pi + 2 pi a / S, -pi + 2 pi b / S).
struct FrequencyResponse {
    int size = 0;
    std::vector<std::complex<double>> values;  // row-major over (a, b)

    std::complex<double> at(int a, int b) const { return values[static_cast<std::size_t>(b) * size + a]; }
    double omega(int index) const;  // grid index -> angular frequency
    Grid magnitude() const;
};

// Requires size >= 16.
FrequencyResponse frequency_response(const Filter2D& filter, int size);

}  // namespace dlwt
