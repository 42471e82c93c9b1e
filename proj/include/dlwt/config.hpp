// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#pragma once

#include <string>

#include "dlwt/boundary.hpp"

namespace dlwt {

// Configuration of the 2-D directional lifting transform.
struct LiftingConfig {
    int prediction_order = 2;  // M in {0, 2, 4}
    int update_order = 2;      // M~ in {0, 2, 4}, M~ <= M
    double scale = 1.0;        // K, nonzero
    BoundaryMode boundary = BoundaryMode::periodic;
    int stages = 1;            // n >= 1 predict/update rounds per level

    void validate() const;  // throws std::invalid_argument
};

// How the inverse resolves the redundant candidates for one odd output sample.
// average:      mean of the valid candidates (default)
// select_first: first valid candidate in ascending direction index
// select_k:     the index-th direction (1-based, modulo coset size) of each
//               parity coset's ascending direction list; falls back to the
//               first valid candidate when that one is unavailable
struct MergePolicy {
    enum class Kind { average, select_first, select_k };
    Kind kind = Kind::average;
    int index = 1;  // used by select_k

    static MergePolicy average() { return {}; }
    static MergePolicy first() { return {Kind::select_first, 1}; }
    static MergePolicy select(int k) { return {Kind::select_k, k}; }

    // "average" | "first" | "k=<i>"
    static MergePolicy parse(const std::string& text);
    std::string to_string() const;
};

}  // namespace dlwt
