#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "mcx/exact.hpp"

namespace mcx {

// Independent exponential marks, one per block: xi[i] ~ Exp(x_i). pi lists
// the block indices sorted by increasing mark, so xi[pi[0]] < xi[pi[1]] < ...
struct ExpMarks {
    std::vector<double> xi;
    std::vector<int> pi;

    static ExpMarks from_xi(const MassConfig& x, std::vector<double> xi);
};

// Residuals in mark order at time s: r[k] = xi[pi[k]] - s * sum_{j<k} x[pi[j]].
struct ResidualVector {
    std::vector<double> r;
    double s = 0.0;
};

struct KsCheck {
    double statistic = 0.0;
    double pvalue = 0.0;
};

struct ResidualLawReport {
    std::size_t requested = 0;
    std::size_t accepted = 0;
    std::vector<KsCheck> per_coordinate;   // residual of block i vs Exp(x_i)
    double order_preserved_fraction = 0.0;
};

ExpMarks sample_marks(const MassConfig& x, std::mt19937_64& rng);

ResidualVector residuals(const MassConfig& x, const ExpMarks& marks, double s);

// Cluster state at time s, read off the residual sequence: scanning positions
// in mark order, a position opens a new cluster iff its residual is a strict
// running maximum; otherwise it joins the cluster of the position before it.
//
// Record rule sanity: for the first non-record to appear at position k+1 one
// needs xi[pi[k+1]] - xi[pi[k]] <= s * x[pi[k]] (two blocks merge exactly when
// the later mark falls inside the earlier block's window), and the position
// after a cluster with first mark m and total mass M opens a new cluster iff
// its mark exceeds m by more than s * M. The test suite checks the resulting
// partition law against the event-driven chain.
Partition partition_at(const MassConfig& x, const ExpMarks& marks, double s);

// Full merge history determined by the marks: position k's cluster boundary
// dies at time d_k = min_{i<k} (xi[pi[k]] - xi[pi[i]]) / sum_{i<=j<k} x[pi[j]];
// sorted boundary deaths are the merge times. Agrees with partition_at at
// every time by construction of the record rule.
Trajectory merge_trajectory(const MassConfig& x, const ExpMarks& marks);

// Conditions on no merge by time s (rejection over fresh marks) and tests the
// renewal property: each residual is again Exp(x_i) and the mark order is
// preserved. Throws if fewer than 1000 replicas are accepted.
ResidualLawReport residual_law_check(const MassConfig& x, double s, std::size_t replicas,
                                     std::mt19937_64& rng);

} // namespace mcx
