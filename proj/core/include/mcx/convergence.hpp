#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mcx/bfw.hpp"
#include "mcx/config.hpp"
#include "mcx/levy.hpp"
#include "mcx/sorted_lengths.hpp"
#include "mcx/stats.hpp"

namespace mcx {

struct BatchMeta {
    std::string source;
    std::size_t n = 0;           // configuration size, 0 for the limit arm
    double time_param = 0.0;     // q for graphs, horizon for limit paths
    std::size_t replicas = 0;
    std::uint64_t seed_base = 0;
    std::size_t truncation_count = 0;
};

// One Monte Carlo batch of ordered length vectors (component masses or
// excursion lengths).
struct SampleBatch {
    std::vector<SortedLengths> vectors;
    BatchMeta meta;

    std::vector<double> kth_values(std::size_t k) const;
};

struct ConvergenceOptions {
    std::vector<std::size_t> n_list;
    std::size_t replicas = 2000;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::size_t top_k = 3;
    double alpha = 0.01;
    double horizon = 0.0;        // 0 = default for the regime
    double step = 0.0;           // 0 = horizon / 4096
    double min_length = -1.0;    // < 0 = four grid steps
    int max_horizon_retries = 4;
};

struct ConvergenceRow {
    std::size_t n = 0;
    double q_n = 0.0;
    double ks_statistic = 0.0;   // largest component vs largest limit excursion
    double ks_pvalue = 1.0;
    double ks_prev_pvalue = 1.0; // largest component vs the previous n's batch
    double mean_largest_graph = 0.0;
    double mean_largest_limit = 0.0;
    double sorted_l2_topk = 0.0; // distance of mean top-k vectors
    bool mean_guard_ok = true;   // batch means agree within a factor of two
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    std::size_t limit_replicas = 0;
    std::size_t limit_truncation_retries = 0;
    double horizon = 0.0;
    double step = 0.0;
    double min_length = 0.0;
    bool trend_ok = false;        // KS statistic non-increasing along n_list
    bool final_not_rejected = false;
    bool verdict = false;
};

// Samples excursion-length vectors of the reflected limit walk; replicas with
// an excursion still open at the horizon are re-run with a doubled horizon.
SampleBatch sample_limit_batch(const RegimeParams& params, std::size_t replicas,
                               std::uint64_t seed, int jobs, double horizon, double step,
                               double min_length, int max_retries, std::size_t top_k);

// Samples sorted component-mass vectors of the graph at q = 1/sigma2 + t for
// the standard configuration of size n.
SampleBatch sample_graph_batch(const MassConfig& x, double q, std::size_t replicas,
                               std::uint64_t seed, int jobs, std::size_t top_k);

// For each n: compares the largest component of the graph arm against the
// largest excursion of the limit arm, plus the cross-n self-consistency
// comparison. The verdict asks the KS statistic to shrink along n_list and
// the final comparison not to be rejected at level alpha.
ConvergenceTable convergence_study(const RegimeParams& params, const ConvergenceOptions& options);

} // namespace mcx
