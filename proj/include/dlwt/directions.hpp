// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#pragma once

#include <array>

namespace dlwt {

struct Vec2i {
    int x = 0;
    int y = 0;
    friend bool operator==(const Vec2i&, const Vec2i&) = default;
};

// The 13 lattice direction vectors s_0..s_12 of the 12-direction transform,
// their parity cosets, coset offsets and update weights.
//
// s_0 = (0,0) is the even phase.  For k = 1..12, s_k points approximately
// along 15*(k-1) degrees and falls in one of three parity classes mod 2:
//   D1 -> (1,0), D2 -> (0,1), D3 -> (1,1)
// with coset representatives t_1 = (1,0), t_2 = (0,1), t_3 = (1,1) and
// offsets v_k satisfying s_k = t_m + 2*v_k.
struct DirectionSet {
    static constexpr int kCount = 12;

    std::array<Vec2i, 13> vectors{};   // vectors[k] = s_k
    std::array<int, 13> coset{};       // coset[k] in 1..3 for k = 1..12; coset[0] = 0
    std::array<Vec2i, 3> reps{};       // t_1, t_2, t_3
    std::array<double, 3> alphas{};    // alpha_1..alpha_3
    std::array<int, 3> d1{};           // coset members, ascending
    std::array<int, 3> d2{};
    std::array<int, 6> d3{};

    const Vec2i& vector(int k) const { return vectors[k]; }
    int coset_of(int k) const { return coset[k]; }
    Vec2i coset_representative(int m) const { return reps[m - 1]; }
    double alpha(int m) const { return alphas[m - 1]; }

    // v_k with s_k = t_m + 2*v_k.
    Vec2i coset_offset(int k) const;

    // Direction angle in degrees, in [0, 180).
    double angle_deg(int k) const;

    // Enforces the structural invariants (parity classes, coset partition,
    // alpha values, angles within 5 degrees of 15*(k-1)).  Throws
    // std::invalid_argument on violation.
    void validate() const;
};

// The canonical direction table (validated):
//   k:   1     2     3     4     5     6     7     8      9      10     11     12
//   s_k:(1,0) (3,1) (2,1) (1,1) (1,2) (1,3) (0,1) (-1,3) (-1,2) (-1,1) (-2,1) (-3,1)
// the shortest integer vectors meeting the parity and angle constraints.
const DirectionSet& direction_vectors();

}  // namespace dlwt
