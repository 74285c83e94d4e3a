#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "mcx/config.hpp"
#include "mcx/skeleton_path.hpp"
#include "mcx/sorted_lengths.hpp"

namespace mcx {

// Jump part of the dust process: a jump of size c_j at an independent
// Exp(c_j) time, compensated by constant drift -sum_j c_j^2.
struct JumpDrift {
    double drift = 0.0;           // slope, applied from time 0
    std::vector<Jump> jumps;      // sorted by time, only those before the horizon

    double value(double s) const;
};

// Path sampled on a uniform grid. values[k] is the path at k*step; jumps are
// applied at the first grid point at or after their time and recorded with
// their raw times in jump_times.
struct GridPath {
    double step = 0.0;
    std::vector<double> values;
    std::vector<Jump> jump_times;

    double horizon() const { return step * static_cast<double>(values.size() - 1); }
};

struct ExcursionSet {
    SortedLengths lengths;        // closed excursions, longest first
    bool truncated = false;       // an excursion was still open at the horizon
    double open_length = 0.0;     // its length so far, not part of `lengths`
    double zero_measure = 0.0;    // grid measure of the zero set
};

// Dust process sample: jumps c_j at Exp(c_j) times plus compensating drift.
JumpDrift sample_Vc(const std::vector<double>& c, double horizon, std::mt19937_64& rng);

// Limit walk sample on a grid: sqrt(kappa) * (Brownian motion) + t*s -
// (kappa/2) s^2 plus an independent dust component. The Gaussian and dust
// parts use the two separate engines.
GridPath sample_W(const RegimeParams& params, double horizon, double step,
                  std::mt19937_64& gauss_rng, std::mt19937_64& jump_rng);

// Reflection above past minima: B(s) = W(s) - min_{u<=s} W(u).
GridPath reflect(const GridPath& w);

// Maximal grid intervals with b > 0, of length >= min_length, longest first.
// An excursion still open at the horizon is reported via the truncated flag
// and open_length rather than in the sorted list.
ExcursionSet excursions(const GridPath& b, double min_length);

// Defaults: the horizon is five times a rough scale of the longest excursion
// for the given regime, the grid divides the horizon into 2^12 steps, and
// excursions shorter than four grid steps are discarded as grid noise.
double default_horizon(const RegimeParams& params);
double default_step(double horizon);
double default_min_length(double step);

// Truncation error proxy for a finite dust sequence: the cubic tail mass that
// would be added by entries beyond the last one kept.
double dust_tail_bound(const std::vector<double>& c, std::size_t keep);

} // namespace mcx
