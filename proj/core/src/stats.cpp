#include "mcx/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace mcx {

KsResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::vector<double> sa(a), sb(b);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());

    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double va = sa[i], vb = sb[j];
        if (va <= vb) while (i < sa.size() && sa[i] == va) ++i;
        if (vb <= va) while (j < sb.size() && sb[j] == vb) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    d = std::max(d, std::fabs(1.0 - static_cast<double>(j) / nb));
    d = std::max(d, std::fabs(static_cast<double>(i) / na - 1.0));

    KsResult res;
    res.statistic = d;
    res.pvalue = ks_pvalue(d, na * nb / (na + nb));
    return res;
}

KsResult ks_one_sample(const std::vector<double>& values,
                       const std::function<double(double)>& cdf) {
    if (values.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
    std::vector<double> v(values);
    std::sort(v.begin(), v.end());
    const double n = static_cast<double>(v.size());
    double d = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double f = cdf(v[k]);
        d = std::max(d, std::fabs(f - static_cast<double>(k) / n));
        d = std::max(d, std::fabs(static_cast<double>(k + 1) / n - f));
    }
    KsResult res;
    res.statistic = d;
    res.pvalue = ks_pvalue(d, n);
    return res;
}

double wasserstein1(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("wasserstein1: empty sample");
    std::vector<double> sa(a), sb(b);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    // integrate |F_a - F_b| over the merged support
    std::vector<double> grid;
    grid.reserve(sa.size() + sb.size());
    grid.insert(grid.end(), sa.begin(), sa.end());
    grid.insert(grid.end(), sb.begin(), sb.end());
    std::sort(grid.begin(), grid.end());
    double w = 0.0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double dx = grid[k + 1] - grid[k];
        if (dx == 0.0) continue;
        const double fa = static_cast<double>(std::upper_bound(sa.begin(), sa.end(), grid[k]) - sa.begin()) /
                          static_cast<double>(sa.size());
        const double fb = static_cast<double>(std::upper_bound(sb.begin(), sb.end(), grid[k]) - sb.begin()) /
                          static_cast<double>(sb.size());
        w += std::fabs(fa - fb) * dx;
    }
    return w;
}

double sorted_l2_distance(const SortedLengths& a, const SortedLengths& b) {
    const std::size_t n = std::max(a.lengths.size(), b.lengths.size());
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double d = a.kth(k) - b.kth(k);
        s += d * d;
    }
    return std::sqrt(s);
}

namespace {

double tv_from_counts(const std::unordered_map<std::string, std::pair<std::size_t, std::size_t>>& counts,
                      std::size_t na, std::size_t nb) {
    double tv = 0.0;
    for (const auto& [key, c] : counts) {
        (void)key;
        tv += std::fabs(static_cast<double>(c.first) / static_cast<double>(na) -
                        static_cast<double>(c.second) / static_cast<double>(nb));
    }
    return 0.5 * tv;
}

std::string lengths_key(const SortedLengths& v) {
    std::string key;
    char buf[32];
    for (double len : v.lengths) {
        std::snprintf(buf, sizeof(buf), "%lld;", static_cast<long long>(std::llround(len * 1e9)));
        key += buf;
    }
    return key;
}

} // namespace

double tv_partition_estimate(const std::vector<Partition>& a, const std::vector<Partition>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("tv_partition_estimate: empty batch");
    const std::size_t n = a.front().ground_size();
    if (n > 6) throw std::invalid_argument("tv_partition_estimate: supports ground sets up to n = 6");
    std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> counts;
    for (const auto& p : a) {
        if (p.ground_size() != n) throw std::invalid_argument("tv_partition_estimate: mixed ground sets");
        counts[p.key()].first++;
    }
    for (const auto& p : b) {
        if (p.ground_size() != n) throw std::invalid_argument("tv_partition_estimate: mixed ground sets");
        counts[p.key()].second++;
    }
    return tv_from_counts(counts, a.size(), b.size());
}

double tv_sorted_lengths_estimate(const std::vector<SortedLengths>& a,
                                  const std::vector<SortedLengths>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("tv_sorted_lengths_estimate: empty batch");
    std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> counts;
    for (const auto& v : a) counts[lengths_key(v)].first++;
    for (const auto& v : b) counts[lengths_key(v)].second++;
    return tv_from_counts(counts, a.size(), b.size());
}

ComparisonReport compare_samples(const std::vector<double>& a, const std::vector<double>& b,
                                 double alpha) {
    ComparisonReport rep;
    const KsResult ks = ks_two_sample(a, b);
    rep.ks_statistic = ks.statistic;
    rep.ks_pvalue = ks.pvalue;
    rep.wasserstein = wasserstein1(a, b);
    rep.pass = ks.pvalue >= alpha;
    return rep;
}

} // namespace mcx
