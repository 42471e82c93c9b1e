// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#include "dlwt/directions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dlwt {

namespace {

int positive_mod2(int v) { return ((v % 2) + 2) % 2; }

DirectionSet build_canonical() {
    DirectionSet d;
    d.vectors = {{{0, 0},
                  {1, 0}, {3, 1}, {2, 1}, {1, 1}, {1, 2}, {1, 3},
                  {0, 1}, {-1, 3}, {-1, 2}, {-1, 1}, {-2, 1}, {-3, 1}}};
    d.reps = {{{1, 0}, {0, 1}, {1, 1}}};
    d.alphas = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0};
    d.d1 = {1, 5, 9};
    d.d2 = {3, 7, 11};
    d.d3 = {2, 4, 6, 8, 10, 12};
    for (int k : d.d1) d.coset[k] = 1;
    for (int k : d.d2) d.coset[k] = 2;
    for (int k : d.d3) d.coset[k] = 3;
    return d;
}

}  // namespace

Vec2i DirectionSet::coset_offset(int k) const {
    const Vec2i s = vectors[k];
    const Vec2i t = reps[coset[k] - 1];
    return {(s.x - t.x) / 2, (s.y - t.y) / 2};
}

double DirectionSet::angle_deg(int k) const {
    const Vec2i s = vectors[k];
    double deg = std::atan2(static_cast<double>(s.y), static_cast<double>(s.x)) * 180.0 /
                 std::numbers::pi;
    if (deg < 0.0) deg += 180.0;
    if (deg >= 180.0) deg -= 180.0;
    return deg;
}

void DirectionSet::validate() const {
    if (!(vectors[0] == Vec2i{0, 0}))
        throw std::invalid_argument("direction set: s_0 must be (0,0)");

    int seen[13] = {};
    auto check_parity = [&](int k, int px, int py) {
        const Vec2i s = vectors[k];
        if (positive_mod2(s.x) != px || positive_mod2(s.y) != py)
            throw std::invalid_argument("direction set: s_" + std::to_string(k) +
                                        " has the wrong parity class");
    };
    for (int k : d1) { check_parity(k, 1, 0); seen[k]++; }
    for (int k : d2) { check_parity(k, 0, 1); seen[k]++; }
    for (int k : d3) { check_parity(k, 1, 1); seen[k]++; }
    for (int k = 1; k <= kCount; ++k)
        if (seen[k] != 1)
            throw std::invalid_argument("direction set: cosets do not partition {1..12}");

    if (alphas[0] != 1.0 / 3.0 || alphas[1] != 1.0 / 3.0 || alphas[2] != 1.0 / 6.0)
        throw std::invalid_argument("direction set: alphas must be 1/3, 1/3, 1/6");

    for (int k = 1; k <= kCount; ++k) {
        double target = 15.0 * (k - 1);
        double diff = std::abs(angle_deg(k) - target);
        diff = std::min(diff, 180.0 - diff);
        if (diff > 5.0)
            throw std::invalid_argument("direction set: s_" + std::to_string(k) +
                                        " deviates more than 5 degrees from " +
                                        std::to_string(target));
        const Vec2i s = vectors[k];
        const Vec2i t = reps[coset[k] - 1];
        if (positive_mod2(s.x - t.x) != 0 || positive_mod2(s.y - t.y) != 0)
            throw std::invalid_argument("direction set: s_" + std::to_string(k) +
                                        " is not t_m + 2*v for its coset representative");
    }
}

const DirectionSet& direction_vectors() {
    static const DirectionSet canonical = [] {
        DirectionSet d = build_canonical();
        d.validate();
        return d;
    }();
    return canonical;
}

}  // namespace dlwt
