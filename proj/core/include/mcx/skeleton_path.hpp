#pragma once

#include <cstddef>
#include <vector>

namespace mcx {

struct Jump {
    double time = 0.0;
    double size = 0.0;
};

// Cadlag piecewise-linear path: slopes[i] applies on
// [breakpoints[i], breakpoints[i+1]) and the last slope extends to infinity;
// jumps are included from their time onwards. Exact evaluation, no grid.
struct SkeletonPath {
    std::vector<double> breakpoints;   // increasing, breakpoints[0] is the origin
    std::vector<double> slopes;        // one per breakpoint
    std::vector<Jump> jumps;           // sorted by time

    double value(double s) const;
};

// Divides slopes and jump sizes by scale; the time axis is unchanged.
SkeletonPath rescale(const SkeletonPath& p, double scale);

} // namespace mcx
