#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagforms/common.hpp"

namespace flagforms {

// Dimension vector of a graded algebra, one entry per degree starting at 0.
struct HilbertSeries {
    std::vector<std::int64_t> coeffs;

    HilbertSeries() = default;
    explicit HilbertSeries(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}

    std::size_t size() const { return coeffs.size(); }
    std::int64_t operator[](std::size_t d) const { return d < coeffs.size() ? coeffs[d] : 0; }

    Integer total() const {
        Integer t = 0;
        for (auto c : coeffs) t += c;
        return t;
    }

    bool palindromic() const {
        for (std::size_t i = 0, j = coeffs.size(); i < j--; ++i)
            if (coeffs[i] != coeffs[j]) return false;
        return true;
    }

    bool operator==(const HilbertSeries& o) const { return coeffs == o.coeffs; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coeffs[i]);
        }
        return s + ")";
    }
};

}  // namespace flagforms
