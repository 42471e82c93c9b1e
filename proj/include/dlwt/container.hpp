// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlwt/transform.hpp"

namespace dlwt {

// DLWC coefficient container.
//
// Layout:
//   magic   "DLWC1\n"
//   header  one UTF-8 JSON line terminated by '\n' with keys
//           {width, height, J, N, K, M, M_tilde, boundary, merge_default,
//            level_dims}; level_dims lists [w, h] per level from coarsest
//           to finest (the first entry is also the coarse grid's shape)
//   payload little-endian IEEE float64, row-major: the coarse grid first,
//           then for each level from coarsest to finest the 12 detail
//           grids in ascending direction index
//
// decode(encode(d)) reproduces the decomposition bit-exactly, and
// re-encoding a decoded container is byte-identical.
std::vector<std::uint8_t> encode_dlwc(const Decomposition& decomp,
                                      MergePolicy merge_default = MergePolicy::average());
Decomposition decode_dlwc(const std::vector<std::uint8_t>& bytes,
                          MergePolicy* merge_default = nullptr);

void write_dlwc(const Decomposition& decomp, const std::string& path,
                MergePolicy merge_default = MergePolicy::average());
Decomposition read_dlwc(const std::string& path, MergePolicy* merge_default = nullptr);

}  // namespace dlwt
