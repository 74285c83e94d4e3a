#include "mcx/bfw.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace mcx {

namespace {

// Fenwick tree over vertex masses supporting removal and sampling of an index
// with probability proportional to its remaining mass.
class MassIndex {
public:
    explicit MassIndex(const std::vector<double>& masses)
        : n_(masses.size()), tree_(masses.size() + 1, 0.0), mass_(masses) {
        for (std::size_t i = 0; i < n_; ++i) add(i, masses[i]);
    }

    // total remaining mass, read off the tree so that sampling against it is
    // consistent with the descent arithmetic
    double total() const {
        double t = 0.0;
        for (std::size_t k = n_; k != 0; k -= k & (~k + 1)) t += tree_[k];
        return t;
    }

    void remove(std::size_t i) {
        add(i, -mass_[i]);
        mass_[i] = 0.0;
    }

    // smallest index with cumulative mass >= u, for u in (0, total()]
    std::size_t sample(double u) const {
        std::size_t idx = 0;
        std::size_t bit = std::bit_floor(n_);
        for (; bit != 0; bit >>= 1) {
            const std::size_t next = idx + bit;
            if (next <= n_ && tree_[next] < u) {
                u -= tree_[next];
                idx = next;
            }
        }
        if (idx >= n_) idx = n_ - 1;
        if (mass_[idx] == 0.0) {   // roundoff guard: step to a live index
            std::size_t fwd = idx;
            while (fwd + 1 < n_ && mass_[fwd] == 0.0) ++fwd;
            if (mass_[fwd] != 0.0) return fwd;
            while (idx > 0 && mass_[idx] == 0.0) --idx;
        }
        return idx;
    }

private:
    void add(std::size_t i, double delta) {
        for (std::size_t k = i + 1; k <= n_; k += k & (~k + 1)) tree_[k] += delta;
    }

    std::size_t n_;
    std::vector<double> tree_;
    std::vector<double> mass_;
};

} // namespace

double SkeletonPath::value(double s) const {
    double v = 0.0;
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        const double lo = breakpoints[i];
        if (s <= lo) break;
        const double hi = (i + 1 < breakpoints.size()) ? std::min(breakpoints[i + 1], s) : s;
        if (hi > lo) v += slopes[i] * (hi - lo);
    }
    for (const Jump& j : jumps) {
        if (j.time > s) break;
        v += j.size;
    }
    return v;
}

SkeletonPath rescale(const SkeletonPath& p, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("rescale: scale must be > 0");
    SkeletonPath out = p;
    for (double& sl : out.slopes) sl /= scale;
    for (Jump& j : out.jumps) j.size /= scale;
    return out;
}

BfwResult build_bfw(const MassConfig& x, double q, std::mt19937_64& rng) {
    if (!(q > 0.0)) throw std::invalid_argument("build_bfw: q must be > 0");
    const std::size_t n = x.size();

    // Every vertex carries one clock on the mass axis: while unseen it is
    // under examination at every instant, and the per-parent discovery checks
    // chain into a single Exp(q x_v) variable by memorylessness. A vertex is
    // discovered when the walk's mass coordinate passes its clock.
    std::vector<double> clock(n);
    bool distinct = false;
    while (!distinct) {
        for (std::size_t v = 0; v < n; ++v) {
            do {
                clock[v] = std::exponential_distribution<double>(q * x[v])(rng);
            } while (clock[v] == 0.0);
        }
        std::vector<double> sorted(clock);
        std::sort(sorted.begin(), sorted.end());
        distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    using HeapEntry = std::pair<double, std::size_t>;  // (clock, vertex)
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> pending;
    for (std::size_t v = 0; v < n; ++v) pending.emplace(clock[v], v);

    MassIndex remaining(x.masses());
    std::vector<bool> seen(n, false);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    BfwResult res;
    res.order.reserve(n);
    res.birth.reserve(n);
    res.is_root.reserve(n);
    res.tau.reserve(n + 1);
    res.tau.push_back(0.0);
    res.walk.breakpoints = {0.0};
    res.walk.slopes = {-1.0};

    while (res.order.size() < n) {
        // size-biased root for the next component; target drawn in (0, total]
        const std::size_t root = remaining.sample((1.0 - unif(rng)) * remaining.total());
        remaining.remove(root);
        seen[root] = true;
        const std::size_t comp_first = res.order.size();
        res.order.push_back(static_cast<int>(root));
        res.birth.push_back(res.tau.back());
        res.is_root.push_back(true);

        for (std::size_t i = comp_first; i < res.order.size(); ++i) {
            const auto parent = static_cast<std::size_t>(res.order[i]);
            const double window_end = res.tau[i] + x[parent];

            // surplus edges toward vertices discovered before this interval
            for (std::size_t j = i + 1; j < res.order.size(); ++j) {
                const auto w = static_cast<std::size_t>(res.order[j]);
                const double p_edge = -std::expm1(-q * x[parent] * x[w]);
                if (unif(rng) < p_edge)
                    res.surplus_edges.emplace_back(static_cast<int>(parent), static_cast<int>(w));
            }

            // children: unseen vertices whose clock lies in this interval
            while (!pending.empty() && pending.top().first <= window_end) {
                const auto [when, v] = pending.top();
                pending.pop();
                if (seen[v]) continue;
                seen[v] = true;
                remaining.remove(v);
                res.order.push_back(static_cast<int>(v));
                res.birth.push_back(when);
                res.is_root.push_back(false);
                res.walk.jumps.push_back({when, x[v]});
            }
            res.tau.push_back(window_end);
        }

        ComponentSpan span;
        span.start = res.tau[comp_first];
        span.end = res.tau.back();
        span.members.assign(res.order.begin() + static_cast<std::ptrdiff_t>(comp_first),
                            res.order.end());
        res.component_spans.push_back(std::move(span));
    }
    return res;
}

SortedLengths components(const BfwResult& result) {
    std::vector<double> masses;
    masses.reserve(result.component_spans.size());
    for (const auto& span : result.component_spans) masses.push_back(span.end - span.start);
    return SortedLengths(std::move(masses));
}

Partition component_partition(const MassConfig& x, const BfwResult& result) {
    Partition p;
    p.blocks.reserve(result.component_spans.size());
    p.block_mass.reserve(result.component_spans.size());
    for (const auto& span : result.component_spans) {
        double mass = 0.0;
        for (int v : span.members) mass += x[static_cast<std::size_t>(v)];
        p.blocks.push_back(span.members);
        p.block_mass.push_back(mass);
    }
    p.canonicalize();
    return p;
}

std::pair<SkeletonPath, SkeletonPath> decompose(const BfwResult& result, const MassConfig& x,
                                                std::size_t m, RootJumps root_jumps) {
    if (m > x.size()) throw std::invalid_argument("decompose: m exceeds the number of blocks");
    const double sigma2 = sigma(x, 2);

    // birth time and root flag per block index
    std::vector<double> block_birth(x.size(), 0.0);
    std::vector<bool> block_is_root(x.size(), false);
    for (std::size_t j = 0; j < result.order.size(); ++j) {
        const auto v = static_cast<std::size_t>(result.order[j]);
        block_birth[v] = result.birth[j];
        block_is_root[v] = result.is_root[j];
    }

    SkeletonPath leading;  // R: tracked leading blocks
    leading.breakpoints = {0.0};
    double drift = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        drift -= x[i] * x[i] / sigma2;
        if (block_is_root[i] && root_jumps == RootJumps::drop) continue;
        leading.jumps.push_back({block_birth[i], x[i]});
    }
    leading.slopes = {drift};
    std::sort(leading.jumps.begin(), leading.jumps.end(),
              [](const Jump& a, const Jump& b) { return a.time < b.time; });

    // Y = Z - R. Tracked jumps that appear in the walk (non-root births) are
    // removed from it; a root jump kept in R has no walk counterpart and is
    // cancelled with a negative jump instead.
    SkeletonPath rest = result.walk;
    rest.slopes[0] -= drift;
    std::vector<char> removed(rest.jumps.size(), 0);
    std::vector<Jump> cancels;
    for (const Jump& j : leading.jumps) {
        auto it = std::lower_bound(rest.jumps.begin(), rest.jumps.end(), j.time,
                                   [](const Jump& a, double t) { return a.time < t; });
        bool matched = false;
        for (; it != rest.jumps.end() && it->time == j.time; ++it) {
            const auto idx = static_cast<std::size_t>(it - rest.jumps.begin());
            if (!removed[idx] && it->size == j.size) {
                removed[idx] = 1;
                matched = true;
                break;
            }
        }
        if (!matched) cancels.push_back({j.time, -j.size});
    }
    std::vector<Jump> kept;
    kept.reserve(rest.jumps.size() + cancels.size());
    for (std::size_t k = 0; k < rest.jumps.size(); ++k)
        if (!removed[k]) kept.push_back(rest.jumps[k]);
    kept.insert(kept.end(), cancels.begin(), cancels.end());
    std::sort(kept.begin(), kept.end(), [](const Jump& a, const Jump& b) { return a.time < b.time; });
    rest.jumps = std::move(kept);

    return {std::move(rest), std::move(leading)};
}

} // namespace mcx
