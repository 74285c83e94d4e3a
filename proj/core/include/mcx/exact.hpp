#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcx/config.hpp"

namespace mcx {

// Partition of block indices {0..n-1} into clusters. Canonical order: blocks
// sorted by their smallest element, elements ascending within a block.
struct Partition {
    std::vector<std::vector<int>> blocks;
    std::vector<double> block_mass;

    std::size_t ground_size() const;
    void canonicalize();
    // Stable text encoding of the index partition, e.g. "0,2|1|3".
    std::string key() const;

    static Partition singletons(const MassConfig& x);
};

// Continuous-time merge history. states[0] is the all-singleton state at time
// zero; states[k] is the partition right after the k-th merge at times[k-1].
struct Trajectory {
    std::vector<double> times;
    std::vector<Partition> states;

    const Partition& state_at(double s) const;
};

// Event-driven simulation of the coalescent in which two clusters of masses
// a and b merge at rate a*b. Runs until the horizon or full coalescence.
Trajectory gillespie(const MassConfig& x, double horizon, std::mt19937_64& rng);

// P(no merge by time s) = exp(-s * sum_{i<j} x_i x_j).
double prob_no_merge(const MassConfig& x, double s);

// Size-biased order law: P(pi = tau) = prod_i x_{tau_i} / sum_{j>=i} x_{tau_j}.
double prob_pi(const MassConfig& x, const std::vector<int>& tau);

// P(exactly one merge by time s, namely of blocks a and b).
double prob_first_merge_pair(const MassConfig& x, double s, int a, int b);

// Conditional weight of the adjacency class {tau, tau with a,b swapped} given
// that blocks a and b merged first. pos is the 0-based position of the pair
// inside tau (tau[pos], tau[pos+1] must be {a,b}).
double i12(const MassConfig& x, const std::vector<int>& tau, int a, int b, int pos);

// Independent evaluation of P(no merge by s) as a sum over all n! size-biased
// orders of the nested exponential integral, reduced layer by layer in closed
// form. Supports n <= 6.
double brute_force_S(const MassConfig& x, double s);

// Monte Carlo route for the same integral (samples the underlying exponential
// marks and counts the no-merge event); cross-checks the cascade.
double brute_force_S_monte_carlo(const MassConfig& x, double s, std::size_t replicas,
                                 std::mt19937_64& rng);

} // namespace mcx
