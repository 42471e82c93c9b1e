// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#pragma once

namespace dlwt {

// How out-of-range lattice indices are mapped back into [0, n).
// periodic:  i mod n
// symmetric: whole-sample reflection about both ends (0 and n-1),
//            e.g. for n=4: ... 2 1 | 0 1 2 3 | 2 1 0 1 ...
enum class BoundaryMode { periodic, symmetric };

// Maps any integer index into [0, n). Identity for in-range indices.
inline int resolve_index(int i, int n, BoundaryMode mode) {
    if (i >= 0 && i < n) return i;
    if (mode == BoundaryMode::periodic) {
        int r = i % n;
        return r < 0 ? r + n : r;
    }
    // Whole-sample symmetric reflection; the period of the reflected signal
    // is 2(n-1), except n == 1 which maps everything to 0.
    if (n == 1) return 0;
    int period = 2 * (n - 1);
    int r = i % period;
    if (r < 0) r += period;
    return r < n ? r : period - r;
}

const char* to_string(BoundaryMode mode);
BoundaryMode boundary_from_string(const char* name);

}  // namespace dlwt
