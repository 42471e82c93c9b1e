// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#include "dlwt/boundary.hpp"

#include <stdexcept>
#include <string>

namespace dlwt {

const char* to_string(BoundaryMode mode) {
    return mode == BoundaryMode::periodic ? "periodic" : "symmetric";
}

BoundaryMode boundary_from_string(const char* name) {
    std::string s(name);
    if (s == "periodic") return BoundaryMode::periodic;
    if (s == "symmetric") return BoundaryMode::symmetric;
    throw std::invalid_argument("unknown boundary mode '" + s + "' (expected periodic or symmetric)");
}

}  // namespace dlwt
