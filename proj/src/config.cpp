// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 dlwt Contributors

#include "dlwt/config.hpp"

#include <cmath>
#include <stdexcept>

namespace dlwt {

void LiftingConfig::validate() const {
    if (prediction_order != 0 && prediction_order != 2 && prediction_order != 4)
        throw std::invalid_argument("prediction order must be 0, 2 or 4, got " +
                                    std::to_string(prediction_order));
    if (update_order != 0 && update_order != 2 && update_order != 4)
        throw std::invalid_argument("update order must be 0, 2 or 4, got " +
                                    std::to_string(update_order));
    if (update_order > prediction_order)
        throw std::invalid_argument("update order " + std::to_string(update_order) +
                                    " exceeds prediction order " + std::to_string(prediction_order));
    if (scale == 0.0 || !std::isfinite(scale))
        throw std::invalid_argument("scale K must be nonzero and finite");
    if (stages < 1)
        throw std::invalid_argument("stage count must be >= 1, got " + std::to_string(stages));
}

MergePolicy MergePolicy::parse(const std::string& text) {
    if (text == "average") return average();
    if (text == "first") return first();
    if (text.rfind("k=", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(text.substr(2));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad merge policy '" + text + "'");
        }
        if (k < 1) throw std::invalid_argument("merge policy index must be >= 1");
        return select(k);
    }
    throw std::invalid_argument("unknown merge policy '" + text +
                                "' (expected average, first or k=<i>)");
}

std::string MergePolicy::to_string() const {
    switch (kind) {
        case Kind::average: return "average";
        case Kind::select_first: return "first";
        case Kind::select_k: return "k=" + std::to_string(index);
    }
    return "average";
}

}  // namespace dlwt
