#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "mcx/config.hpp"
#include "mcx/exact.hpp"
#include "mcx/skeleton_path.hpp"
#include "mcx/sorted_lengths.hpp"

namespace mcx {

struct ComponentSpan {
    double start = 0.0;            // tau at the first vertex of the component
    double end = 0.0;              // tau right after the last vertex
    std::vector<int> members;      // vertex indices in discovery order
};

// Output of one breadth-first-walk build of the time-q random graph.
// order[j] is the j-th explored vertex; tau[j] = sum of masses of the first j
// explored vertices; birth[j] is the walk time at which order[j] appeared
// (the start of its own interval for component roots, the discovery time
// inside the parent's interval otherwise).
struct BfwResult {
    SkeletonPath walk;                             // drift -1 plus child jumps
    std::vector<int> order;
    std::vector<double> birth;
    std::vector<bool> is_root;                     // per order position
    std::vector<double> tau;                       // n+1 prefix sums, tau[0] = 0
    std::vector<ComponentSpan> component_spans;
    std::vector<std::pair<int, int>> surplus_edges;  // vertex index pairs
};

enum class RootJumps {
    drop,   // roots contribute no jump to the leading-block part (default)
    keep,   // roots jump at the start of their interval
};

// Builds the random graph at time q > 0 by breadth-first exploration in
// size-biased order: the first vertex of each component is chosen with
// probability proportional to its mass, children of an explored vertex v are
// the not-yet-seen vertices w whose clock falls inside v's interval (each w
// carries an independent Exp(q x_w) clock on the mass axis), ordered by
// discovery. Surplus edges between already-seen pairs are sampled on demand.
// O((n + edges) log n) time, O(n) memory.
BfwResult build_bfw(const MassConfig& x, double q, std::mt19937_64& rng);

// Component masses, sorted non-increasing.
SortedLengths components(const BfwResult& result);

// Partition of vertex indices given by the components.
Partition component_partition(const MassConfig& x, const BfwResult& result);

// Splits the walk Z into Z = Y + R, where R tracks the m largest blocks: a
// jump of the block's mass at its birth time (dropped for component roots
// under RootJumps::drop) compensated by drift -x_i^2/sigma2 per unit time.
// Y is the remainder.
std::pair<SkeletonPath, SkeletonPath> decompose(const BfwResult& result, const MassConfig& x,
                                                std::size_t m,
                                                RootJumps root_jumps = RootJumps::drop);

} // namespace mcx
