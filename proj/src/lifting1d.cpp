// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#include "dlwt/lifting1d.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dlwt {

namespace {

// out[n] = sum_l taps[l] * x[n+l]
std::vector<double> correlate_1d(const std::vector<double>& x, const std::map<int, double>& taps,
                                 BoundaryMode boundary) {
    const int n = static_cast<int>(x.size());
    std::vector<double> out(x.size(), 0.0);
    for (const auto& [offset, coeff] : taps) {
        for (int i = 0; i < n; ++i) out[i] += coeff * x[resolve_index(i + offset, n, boundary)];
    }
    return out;
}

void check_signal(const std::vector<double>& signal) {
    if (signal.size() < 2 || signal.size() % 2 != 0)
        throw std::invalid_argument("signal length must be even and >= 2, got " +
                                    std::to_string(signal.size()));
    for (double v : signal)
        if (!std::isfinite(v)) throw std::invalid_argument("signal holds non-finite samples");
}

void check_taps(const std::map<int, double>& taps, const char* which) {
    for (const auto& [offset, coeff] : taps) {
        (void)offset;
        if (!std::isfinite(coeff))
            throw std::invalid_argument(std::string(which) + " taps hold non-finite coefficients");
    }
}

}  // namespace

void LiftingStep1D::validate() const {
    if (scale == 0.0 || !std::isfinite(scale))
        throw std::invalid_argument("lifting scale K must be nonzero and finite");
    check_taps(predict_taps, "predict");
    check_taps(update_taps, "update");
}

Lwt1dResult lwt_forward_1d(const std::vector<double>& signal, const LiftingStep1D& step,
                           BoundaryMode boundary) {
    return lwt_forward_1d(signal, std::span<const LiftingStep1D>(&step, 1), boundary);
}

Lwt1dResult lwt_forward_1d(const std::vector<double>& signal,
                           std::span<const LiftingStep1D> steps, BoundaryMode boundary) {
    check_signal(signal);
    if (steps.empty()) throw std::invalid_argument("at least one lifting step is required");
    for (const auto& s : steps) s.validate();

    const std::size_t half = signal.size() / 2;
    Lwt1dResult r;
    r.coarse.resize(half);
    r.detail.resize(half);
    for (std::size_t i = 0; i < half; ++i) {
        r.coarse[i] = signal[2 * i];
        r.detail[i] = signal[2 * i + 1];
    }

    double scale = 1.0;
    for (const auto& step : steps) {
        const auto predicted = correlate_1d(r.coarse, step.predict_taps, boundary);
        for (std::size_t i = 0; i < half; ++i) r.detail[i] -= predicted[i];
        const auto updated = correlate_1d(r.detail, step.update_taps, boundary);
        for (std::size_t i = 0; i < half; ++i) r.coarse[i] += updated[i];
        scale *= step.scale;
    }
    if (scale != 1.0) {
        for (std::size_t i = 0; i < half; ++i) {
            r.coarse[i] *= scale;
            r.detail[i] /= scale;
        }
    }
    return r;
}

std::vector<double> lwt_inverse_1d(const std::vector<double>& coarse,
                                   const std::vector<double>& detail,
                                   const LiftingStep1D& step, BoundaryMode boundary) {
    return lwt_inverse_1d(coarse, detail, std::span<const LiftingStep1D>(&step, 1), boundary);
}

std::vector<double> lwt_inverse_1d(const std::vector<double>& coarse,
                                   const std::vector<double>& detail,
                                   std::span<const LiftingStep1D> steps, BoundaryMode boundary) {
    if (coarse.size() != detail.size())
        throw std::invalid_argument("coarse length " + std::to_string(coarse.size()) +
                                    " does not match detail length " + std::to_string(detail.size()));
    if (coarse.empty()) throw std::invalid_argument("coarse and detail must be nonempty");
    if (steps.empty()) throw std::invalid_argument("at least one lifting step is required");
    for (const auto& s : steps) s.validate();

    const std::size_t half = coarse.size();
    std::vector<double> even = coarse;
    std::vector<double> odd = detail;

    double scale = 1.0;
    for (const auto& step : steps) scale *= step.scale;
    if (scale != 1.0) {
        for (std::size_t i = 0; i < half; ++i) {
            even[i] /= scale;
            odd[i] *= scale;
        }
    }

    for (std::size_t si = steps.size(); si-- > 0;) {
        const auto& step = steps[si];
        const auto updated = correlate_1d(odd, step.update_taps, boundary);
        for (std::size_t i = 0; i < half; ++i) even[i] -= updated[i];
        const auto predicted = correlate_1d(even, step.predict_taps, boundary);
        for (std::size_t i = 0; i < half; ++i) odd[i] += predicted[i];
    }

    std::vector<double> out(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
        out[2 * i] = even[i];
        out[2 * i + 1] = odd[i];
    }
    return out;
}

std::map<int, double> interpolating_taps_1d(int order) {
    switch (order) {
        case 0: return {{0, 1.0}};
        case 2: return {{0, 0.5}, {1, 0.5}};
        case 4: return {{-1, -1.0 / 16.0}, {0, 9.0 / 16.0}, {1, 9.0 / 16.0}, {2, -1.0 / 16.0}};
        default:
            throw std::invalid_argument("unsupported interpolating prediction order " +
                                        std::to_string(order) + " (expected 0, 2 or 4)");
    }
}

std::map<int, double> update_taps_1d(int order) {
    std::map<int, double> u;
    for (const auto& [offset, coeff] : interpolating_taps_1d(order)) u[-offset] = coeff / 4.0;
    return u;
}

LiftingStep1D haar_like_step() {
    return {{{0, 1.0}}, {{0, 0.5}}, 1.0};
}

LiftingStep1D interpolating_step_1d(int prediction_order, int update_order, double scale) {
    if (update_order > prediction_order)
        throw std::invalid_argument("update order must not exceed prediction order");
    return {interpolating_taps_1d(prediction_order), update_taps_1d(update_order), scale};
}

}  // namespace dlwt
