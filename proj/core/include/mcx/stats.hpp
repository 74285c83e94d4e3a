#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mcx/exact.hpp"
#include "mcx/sorted_lengths.hpp"
#include "mcx/special.hpp"

namespace mcx {

struct KsResult {
    double statistic = 0.0;
    double pvalue = 1.0;
};

struct ComparisonReport {
    double ks_statistic = 0.0;
    double ks_pvalue = 1.0;
    double wasserstein = 0.0;
    std::optional<double> tv_estimate;
    bool pass = true;
};

// Two-sample Kolmogorov-Smirnov test with asymptotic p-value.
KsResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b);

// One-sample KS test of `values` against the continuous CDF `cdf`.
KsResult ks_one_sample(const std::vector<double>& values,
                       const std::function<double(double)>& cdf);

// First Wasserstein distance between the empirical laws of a and b.
double wasserstein1(const std::vector<double>& a, const std::vector<double>& b);

// l2 distance of non-increasing length vectors, shorter one padded with zeros.
double sorted_l2_distance(const SortedLengths& a, const SortedLengths& b);

// Plug-in total-variation estimate between two empirical partition
// distributions over the same ground set. Requires n <= 6.
double tv_partition_estimate(const std::vector<Partition>& a, const std::vector<Partition>& b);

// Same estimate for length multisets, matched after rounding at 1e-9.
double tv_sorted_lengths_estimate(const std::vector<SortedLengths>& a,
                                  const std::vector<SortedLengths>& b);

ComparisonReport compare_samples(const std::vector<double>& a, const std::vector<double>& b,
                                 double alpha);

} // namespace mcx
