#pragma once

#include <cstddef>
#include <vector>

namespace mcx {

// Finite vector of positive block masses, kept sorted non-increasing.
// Index 0 is always the largest block.
class MassConfig {
public:
    explicit MassConfig(std::vector<double> masses);

    std::size_t size() const { return masses_.size(); }
    double operator[](std::size_t i) const { return masses_[i]; }
    const std::vector<double>& masses() const { return masses_; }

private:
    std::vector<double> masses_;
};

// Parameters of the near-critical family: variance scale kappa >= 0, time
// offset t, and a finite non-increasing dust sequence c (zero entries are
// dropped at construction; a zero-rate exponential clock never rings).
struct RegimeParams {
    double kappa = 1.0;
    double t = 0.0;
    std::vector<double> c;

    RegimeParams() = default;
    RegimeParams(double kappa, double t, std::vector<double> c);
};

struct MomentReport {
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    double sigma3 = 0.0;
    double ratio3 = 0.0;               // sigma3 / sigma2^3
    std::vector<double> max_scaled;    // x_j / sigma2 for the leading entries
};

// sigma_r(x) = sum_i x_i^r for r in {1,2,3}.
double sigma(const MassConfig& x, int r);

// Canonical initial configuration for the (kappa, c) regime:
//   kappa > 0: l entries c_j kappa^{-2/3} n^{-1/3} plus n entries
//              kappa^{-1/3} n^{-2/3}, sorted;
//   kappa = 0: entries c_j n^{-1/3} for j <= l (requires l >= 1).
MassConfig make_standard_config(std::size_t n, const RegimeParams& params, std::size_t l);

// Default growth of the leading-block count l(n): slow polynomial for
// kappa > 0, and for kappa = 0 the smallest l with sum_{j<=l} c_j^2 >= n^{1/3}.
// Always capped at the length of c.
std::size_t default_l(std::size_t n, const RegimeParams& params);

MomentReport moment_report(const MassConfig& x);

// Number of blocks with x_i >= threshold * sigma2(x): the split point between
// individually tracked leading blocks and aggregated dust.
std::size_t choose_m(const MassConfig& x, double threshold);

} // namespace mcx
