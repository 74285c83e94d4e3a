#include "mcx/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include "mcx/parallel.hpp"
#include "mcx/rng.hpp"

namespace mcx {

namespace {

SortedLengths top_k_of(const SortedLengths& v, std::size_t k) {
    std::vector<double> lead;
    lead.reserve(std::min(k, v.lengths.size()));
    for (std::size_t i = 0; i < k && i < v.lengths.size(); ++i) lead.push_back(v.lengths[i]);
    return SortedLengths(std::move(lead));
}

SortedLengths mean_vector(const std::vector<SortedLengths>& batch, std::size_t k) {
    std::vector<double> mean(k, 0.0);
    for (const auto& v : batch)
        for (std::size_t i = 0; i < k; ++i) mean[i] += v.kth(i);
    for (double& m : mean) m /= static_cast<double>(batch.size());
    return SortedLengths(std::move(mean));
}

} // namespace

std::vector<double> SampleBatch::kth_values(std::size_t k) const {
    std::vector<double> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) out.push_back(v.kth(k));
    return out;
}

SampleBatch sample_limit_batch(const RegimeParams& params, std::size_t replicas,
                               std::uint64_t seed, int jobs, double horizon, double step,
                               double min_length, int max_retries, std::size_t top_k) {
    if (replicas == 0) throw std::invalid_argument("sample_limit_batch: need replicas > 0");
    SampleBatch batch;
    batch.vectors.resize(replicas);
    batch.meta = {"limit", 0, horizon, replicas, seed, 0};

    std::atomic<std::size_t> retries{0};
    run_replicas(replicas, jobs, [&](std::size_t r) {
        double h = horizon;
        double dt = step;
        for (int attempt = 0;; ++attempt) {
            auto gauss = make_engine(seed, r, attempt, 0);
            auto jumps = make_engine(seed, r, attempt, 1);
            const GridPath w = sample_W(params, h, dt, gauss, jumps);
            const GridPath b = reflect(w);
            const double cut = min_length < 0.0 ? default_min_length(dt) : min_length;
            const ExcursionSet exc = excursions(b, cut);
            if (!exc.truncated || attempt >= max_retries) {
                SortedLengths lengths = exc.lengths;
                if (exc.truncated) {
                    // keep the open excursion rather than bias the tail away
                    lengths.lengths.push_back(exc.open_length);
                    std::sort(lengths.lengths.begin(), lengths.lengths.end(), std::greater<double>());
                }
                batch.vectors[r] = top_k_of(lengths, top_k);
                return;
            }
            retries.fetch_add(1, std::memory_order_relaxed);
            h *= 2.0;
            dt *= 2.0;  // keep the grid size bounded as the horizon grows
        }
    });
    batch.meta.truncation_count = retries.load();
    return batch;
}

SampleBatch sample_graph_batch(const MassConfig& x, double q, std::size_t replicas,
                               std::uint64_t seed, int jobs, std::size_t top_k) {
    if (replicas == 0) throw std::invalid_argument("sample_graph_batch: need replicas > 0");
    SampleBatch batch;
    batch.vectors.resize(replicas);
    batch.meta = {"graph", x.size(), q, replicas, seed, 0};
    run_replicas(replicas, jobs, [&](std::size_t r) {
        auto rng = make_engine(seed, 2 * r + 1);
        const BfwResult res = build_bfw(x, q, rng);
        batch.vectors[r] = top_k_of(components(res), top_k);
    });
    return batch;
}

ConvergenceTable convergence_study(const RegimeParams& params, const ConvergenceOptions& options) {
    if (options.n_list.empty()) throw std::invalid_argument("convergence_study: empty n list");

    ConvergenceTable table;
    table.horizon = options.horizon > 0.0 ? options.horizon : default_horizon(params);
    table.step = options.step > 0.0 ? options.step : default_step(table.horizon);
    table.min_length =
        options.min_length < 0.0 ? default_min_length(table.step) : options.min_length;

    const SampleBatch limit = sample_limit_batch(
        params, options.replicas, derive_seed(options.seed, 0), options.jobs,
        table.horizon, table.step, table.min_length, options.max_horizon_retries, options.top_k);
    table.limit_replicas = limit.meta.replicas;
    table.limit_truncation_retries = limit.meta.truncation_count;
    const std::vector<double> limit_largest = limit.kth_values(0);
    const SortedLengths limit_mean = mean_vector(limit.vectors, options.top_k);

    std::vector<double> prev_largest;
    for (std::size_t arm = 0; arm < options.n_list.size(); ++arm) {
        const std::size_t n = options.n_list[arm];
        const MassConfig x = make_standard_config(n, params, default_l(n, params));
        const double q_n = 1.0 / sigma(x, 2) + params.t;
        const SampleBatch graph = sample_graph_batch(
            x, q_n, options.replicas, derive_seed(options.seed, arm + 1), options.jobs,
            options.top_k);
        const std::vector<double> graph_largest = graph.kth_values(0);

        ConvergenceRow row;
        row.n = n;
        row.q_n = q_n;
        const KsResult ks = ks_two_sample(graph_largest, limit_largest);
        row.ks_statistic = ks.statistic;
        row.ks_pvalue = ks.pvalue;
        if (!prev_largest.empty())
            row.ks_prev_pvalue = ks_two_sample(graph_largest, prev_largest).pvalue;

        double mg = 0.0, ml = 0.0;
        for (double v : graph_largest) mg += v;
        for (double v : limit_largest) ml += v;
        row.mean_largest_graph = mg / static_cast<double>(graph_largest.size());
        row.mean_largest_limit = ml / static_cast<double>(limit_largest.size());
        row.mean_guard_ok = row.mean_largest_graph < 2.0 * row.mean_largest_limit &&
                            row.mean_largest_limit < 2.0 * row.mean_largest_graph;
        row.sorted_l2_topk =
            sorted_l2_distance(mean_vector(graph.vectors, options.top_k), limit_mean);

        table.rows.push_back(row);
        prev_largest = graph_largest;
    }

    table.trend_ok = true;
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i)
        if (table.rows[i + 1].ks_statistic > table.rows[i].ks_statistic) table.trend_ok = false;
    table.final_not_rejected = table.rows.back().ks_pvalue >= options.alpha;
    bool guards = true;
    for (const auto& row : table.rows) guards = guards && row.mean_guard_ok;
    table.verdict = table.trend_ok && table.final_not_rejected && guards;
    return table;
}

} // namespace mcx
