#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace mcx {

// Non-increasing vector of positive lengths (component masses or excursion
// lengths), the natural coalescent observable.
struct SortedLengths {
    std::vector<double> lengths;

    SortedLengths() = default;
    explicit SortedLengths(std::vector<double> v) : lengths(std::move(v)) {
        std::sort(lengths.begin(), lengths.end(), std::greater<double>());
    }

    double largest() const { return lengths.empty() ? 0.0 : lengths.front(); }
    double kth(std::size_t k) const { return k < lengths.size() ? lengths[k] : 0.0; }
};

} // namespace mcx
