#include "mcx/config.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace mcx {

MassConfig::MassConfig(std::vector<double> masses) : masses_(std::move(masses)) {
    if (masses_.empty())
        throw std::invalid_argument("mass configuration must have at least one block");
    for (double m : masses_) {
        if (!(m > 0.0) || !std::isfinite(m))
            throw std::invalid_argument("block masses must be positive and finite");
    }
    std::sort(masses_.begin(), masses_.end(), std::greater<double>());
}

RegimeParams::RegimeParams(double kappa_, double t_, std::vector<double> c_)
    : kappa(kappa_), t(t_), c(std::move(c_)) {
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("kappa must be finite and >= 0");
    if (!std::isfinite(t))
        throw std::invalid_argument("t must be finite");
    for (double cj : c) {
        if (!(cj >= 0.0) || !std::isfinite(cj))
            throw std::invalid_argument("dust entries must be finite and >= 0");
    }
    std::sort(c.begin(), c.end(), std::greater<double>());
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

double sigma(const MassConfig& x, int r) {
    if (r < 1 || r > 3) throw std::invalid_argument("sigma: r must be 1, 2 or 3");
    double s = 0.0;
    for (double m : x.masses()) {
        double term = m;
        for (int k = 1; k < r; ++k) term *= m;
        s += term;
    }
    return s;
}

MassConfig make_standard_config(std::size_t n, const RegimeParams& params, std::size_t l) {
    if (n == 0) throw std::invalid_argument("make_standard_config: n must be >= 1");
    if (l > params.c.size())
        throw std::invalid_argument("make_standard_config: l exceeds the length of c");
    std::vector<double> masses;
    const double n_d = static_cast<double>(n);
    if (params.kappa > 0.0) {
        masses.reserve(l + n);
        const double lead_scale = std::pow(params.kappa, -2.0 / 3.0) * std::pow(n_d, -1.0 / 3.0);
        for (std::size_t j = 0; j < l; ++j) masses.push_back(params.c[j] * lead_scale);
        const double dust = std::pow(params.kappa, -1.0 / 3.0) * std::pow(n_d, -2.0 / 3.0);
        masses.insert(masses.end(), n, dust);
    } else {
        if (params.c.empty() || l == 0)
            throw std::domain_error(
                "make_standard_config: kappa = 0 needs a nonempty dust sequence and l >= 1");
        masses.reserve(l);
        const double scale = std::pow(n_d, -1.0 / 3.0);
        for (std::size_t j = 0; j < l; ++j) masses.push_back(params.c[j] * scale);
    }
    return MassConfig(std::move(masses));
}

std::size_t default_l(std::size_t n, const RegimeParams& params) {
    if (params.kappa > 0.0) {
        auto l = static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), 0.125)));
        return std::min(l, params.c.size());
    }
    const double target = std::cbrt(static_cast<double>(n));
    double acc = 0.0;
    for (std::size_t j = 0; j < params.c.size(); ++j) {
        acc += params.c[j] * params.c[j];
        if (acc >= target) return j + 1;
    }
    return params.c.size();
}

MomentReport moment_report(const MassConfig& x) {
    MomentReport rep;
    rep.sigma1 = sigma(x, 1);
    rep.sigma2 = sigma(x, 2);
    rep.sigma3 = sigma(x, 3);
    rep.ratio3 = rep.sigma3 / (rep.sigma2 * rep.sigma2 * rep.sigma2);
    const std::size_t lead = std::min<std::size_t>(x.size(), 16);
    rep.max_scaled.reserve(lead);
    for (std::size_t j = 0; j < lead; ++j) rep.max_scaled.push_back(x[j] / rep.sigma2);
    return rep;
}

std::size_t choose_m(const MassConfig& x, double threshold) {
    if (!(threshold > 0.0) || !(threshold < 1.0))
        throw std::invalid_argument("choose_m: threshold must lie in (0,1)");
    const double cut = threshold * sigma(x, 2);
    std::size_t m = 0;
    while (m < x.size() && x[m] >= cut) ++m;
    return m;
}

} // namespace mcx
