#include "mcx/levy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcx {

double JumpDrift::value(double s) const {
    double v = drift * s;
    for (const Jump& j : jumps) {
        if (j.time > s) break;
        v += j.size;
    }
    return v;
}

JumpDrift sample_Vc(const std::vector<double>& c, double horizon, std::mt19937_64& rng) {
    if (!(horizon > 0.0)) throw std::invalid_argument("sample_Vc: horizon must be > 0");
    JumpDrift out;
    for (double cj : c) {
        if (!(cj > 0.0)) throw std::invalid_argument("sample_Vc: dust entries must be > 0");
        out.drift -= cj * cj;
        const double when = std::exponential_distribution<double>(cj)(rng);
        if (when <= horizon) out.jumps.push_back({when, cj});
    }
    std::sort(out.jumps.begin(), out.jumps.end(),
              [](const Jump& a, const Jump& b) { return a.time < b.time; });
    return out;
}

GridPath sample_W(const RegimeParams& params, double horizon, double step,
                  std::mt19937_64& gauss_rng, std::mt19937_64& jump_rng) {
    if (!(horizon > 0.0) || !(step > 0.0))
        throw std::invalid_argument("sample_W: horizon and step must be > 0");
    if (params.kappa == 0.0 && params.c.empty())
        throw std::domain_error("sample_W: kappa = 0 with no dust is a pure drift with no excursions");

    const auto steps = static_cast<std::size_t>(std::ceil(horizon / step));
    GridPath path;
    path.step = step;
    path.values.assign(steps + 1, 0.0);

    const JumpDrift dust = sample_Vc(params.c, horizon, jump_rng);
    path.jump_times = dust.jumps;

    // Gaussian increments, exact per grid step
    double gauss = 0.0;
    std::normal_distribution<double> normal(0.0,
                                            params.kappa > 0.0 ? std::sqrt(params.kappa * step) : 1.0);
    std::size_t next_jump = 0;
    double jumped = 0.0;
    for (std::size_t k = 1; k <= steps; ++k) {
        if (params.kappa > 0.0) gauss += normal(gauss_rng);
        const double s = step * static_cast<double>(k);
        while (next_jump < dust.jumps.size() && dust.jumps[next_jump].time <= s)
            jumped += dust.jumps[next_jump++].size;
        path.values[k] =
            gauss + params.t * s - 0.5 * params.kappa * s * s + dust.drift * s + jumped;
    }
    return path;
}

GridPath reflect(const GridPath& w) {
    if (w.values.empty()) throw std::invalid_argument("reflect: empty path");
    GridPath b = w;
    double running_min = w.values.front();
    for (std::size_t k = 0; k < w.values.size(); ++k) {
        running_min = std::min(running_min, w.values[k]);
        b.values[k] = w.values[k] - running_min;
    }
    return b;
}

ExcursionSet excursions(const GridPath& b, double min_length) {
    if (!(min_length >= 0.0)) throw std::invalid_argument("excursions: min_length must be >= 0");
    ExcursionSet out;
    std::vector<double> lengths;
    std::size_t zeros = 0;
    std::size_t run = 0;  // grid points in the current positive run
    for (std::size_t k = 1; k < b.values.size(); ++k) {
        if (b.values[k] < 0.0) throw std::invalid_argument("excursions: path must be >= 0");
        if (b.values[k] > 0.0) {
            ++run;
        } else {
            ++zeros;
            if (run > 0) {
                const double len = b.step * static_cast<double>(run);
                if (len >= min_length) lengths.push_back(len);
                run = 0;
            }
        }
    }
    if (run > 0) {
        out.truncated = true;
        out.open_length = b.step * static_cast<double>(run);
    }
    out.lengths = SortedLengths(std::move(lengths));
    out.zero_measure = b.step * static_cast<double>(zeros);
    return out;
}

double default_horizon(const RegimeParams& params) {
    double scale = 1.0;
    if (params.kappa > 0.0) {
        scale = std::max(scale, std::cbrt(1.0 / params.kappa));
        scale = std::max(scale, 2.0 * std::max(params.t, 0.0) / params.kappa);
    }
    if (!params.c.empty()) {
        double c2 = 0.0;
        for (double cj : params.c) c2 += cj * cj;
        scale = std::max(scale, 1.0 / params.c.front() + params.c.front() / c2);
        if (params.kappa == 0.0) scale = std::max(scale, 2.0 * std::max(params.t, 0.0) / c2);
    }
    return 5.0 * scale;
}

double default_step(double horizon) { return horizon / 4096.0; }

double default_min_length(double step) { return 4.0 * step; }

double dust_tail_bound(const std::vector<double>& c, std::size_t keep) {
    double tail = 0.0;
    for (std::size_t j = keep; j < c.size(); ++j) tail += c[j] * c[j] * c[j];
    return tail;
}

} // namespace mcx
