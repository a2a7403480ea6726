#pragma once

#include <memory>
#include <string>
#include <vector>

#include "plectic/errors.hpp"

namespace plectic {

// A single global coordinate chart on R^n: an ordered list of coordinate
// names. All geometric objects carry a shared pointer to their chart and
// binary operations insist the charts agree (by content).
struct Chart {
    std::vector<std::string> coords;

    std::size_t dim() const { return coords.size(); }

    // Index of a coordinate name; throws if unknown.
    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] == name) return i;
        throw DimensionMismatch("unknown coordinate: " + name);
    }
};

using ChartPtr = std::shared_ptr<const Chart>;

inline ChartPtr make_chart(std::vector<std::string> coords) {
    return std::make_shared<const Chart>(Chart{std::move(coords)});
}

inline bool same_chart(const ChartPtr& a, const ChartPtr& b) {
    return a == b || (a && b && a->coords == b->coords);
}

inline void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (!same_chart(a, b)) throw ChartMismatch("objects live on different charts");
}

}  // namespace plectic
