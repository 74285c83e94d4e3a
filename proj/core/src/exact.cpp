#include "mcx/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mcx {

namespace {

void check_permutation(const std::vector<int>& tau, std::size_t n) {
    if (tau.size() != n) throw std::invalid_argument("permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (int v : tau) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
            throw std::invalid_argument("not a permutation of 0..n-1");
        seen[v] = true;
    }
}

double pair_rate_sum(const std::vector<double>& m) {
    double s1 = 0.0, s2 = 0.0;
    for (double v : m) {
        s1 += v;
        s2 += v * v;
    }
    return 0.5 * (s1 * s1 - s2);
}

} // namespace

std::size_t Partition::ground_size() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    return n;
}

void Partition::canonicalize() {
    std::vector<std::size_t> idx(blocks.size());
    std::iota(idx.begin(), idx.end(), 0);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(idx.begin(), idx.end(),
              [this](std::size_t a, std::size_t b) { return blocks[a].front() < blocks[b].front(); });
    std::vector<std::vector<int>> nb;
    std::vector<double> nm;
    nb.reserve(blocks.size());
    nm.reserve(blocks.size());
    for (std::size_t i : idx) {
        nb.push_back(std::move(blocks[i]));
        nm.push_back(block_mass[i]);
    }
    blocks = std::move(nb);
    block_mass = std::move(nm);
}

std::string Partition::key() const {
    std::string out;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (k) out += '|';
        for (std::size_t j = 0; j < blocks[k].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(blocks[k][j]);
        }
    }
    return out;
}

Partition Partition::singletons(const MassConfig& x) {
    Partition p;
    p.blocks.reserve(x.size());
    p.block_mass.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        p.blocks.push_back({static_cast<int>(i)});
        p.block_mass.push_back(x[i]);
    }
    return p;
}

const Partition& Trajectory::state_at(double s) const {
    // index of the last merge time <= s
    auto it = std::upper_bound(times.begin(), times.end(), s);
    return states[static_cast<std::size_t>(it - times.begin())];
}

Trajectory gillespie(const MassConfig& x, double horizon, std::mt19937_64& rng) {
    if (!(horizon > 0.0)) throw std::invalid_argument("gillespie: horizon must be > 0");
    Trajectory traj;
    traj.states.push_back(Partition::singletons(x));

    std::vector<std::vector<int>> blocks = traj.states.front().blocks;
    std::vector<double> masses = traj.states.front().block_mass;

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double now = 0.0;
    while (blocks.size() > 1) {
        const double rate = pair_rate_sum(masses);
        std::exponential_distribution<double> wait(rate);
        now += wait(rng);
        if (now > horizon) break;

        // inverse-CDF over unordered pairs, probability m_a * m_b / rate;
        // O(k^2) per merge, which is fine at oracle sizes
        const double target = unif(rng) * rate;
        double acc = 0.0;
        std::size_t a = 0, b = 1;
        bool found = false;
        for (std::size_t i = 0; i + 1 < masses.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < masses.size(); ++j) {
                acc += masses[i] * masses[j];
                if (acc >= target) {
                    a = i;
                    b = j;
                    found = true;
                    break;
                }
            }
        }
        if (!found) {  // roundoff at the very end of the scan
            a = masses.size() - 2;
            b = masses.size() - 1;
        }

        blocks[a].insert(blocks[a].end(), blocks[b].begin(), blocks[b].end());
        masses[a] += masses[b];
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(b));
        masses.erase(masses.begin() + static_cast<std::ptrdiff_t>(b));

        Partition p;
        p.blocks = blocks;
        p.block_mass = masses;
        p.canonicalize();
        traj.times.push_back(now);
        traj.states.push_back(std::move(p));
    }
    return traj;
}

double prob_no_merge(const MassConfig& x, double s) {
    if (!(s >= 0.0)) throw std::invalid_argument("prob_no_merge: s must be >= 0");
    return std::exp(-s * pair_rate_sum(x.masses()));
}

double prob_pi(const MassConfig& x, const std::vector<int>& tau) {
    const std::size_t n = x.size();
    check_permutation(tau, n);
    double tail = sigma(x, 1);
    double p = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        p *= x[static_cast<std::size_t>(tau[i])] / tail;
        tail -= x[static_cast<std::size_t>(tau[i])];
    }
    return p;
}

double prob_first_merge_pair(const MassConfig& x, double s, int a, int b) {
    const auto n = static_cast<int>(x.size());
    if (a == b || a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("prob_first_merge_pair: need two distinct valid indices");
    if (!(s >= 0.0)) throw std::invalid_argument("prob_first_merge_pair: s must be >= 0");
    const double xa = x[static_cast<std::size_t>(a)];
    const double xb = x[static_cast<std::size_t>(b)];
    const double other_pairs = pair_rate_sum(x.masses()) - xa * xb;
    return (1.0 - std::exp(-s * xa * xb)) * std::exp(-s * other_pairs);
}

double i12(const MassConfig& x, const std::vector<int>& tau, int a, int b, int pos) {
    const std::size_t n = x.size();
    check_permutation(tau, n);
    if (a == b) throw std::invalid_argument("i12: pair must be two distinct blocks");
    if (pos < 0 || static_cast<std::size_t>(pos) + 1 >= n ||
        !((tau[static_cast<std::size_t>(pos)] == a && tau[static_cast<std::size_t>(pos) + 1] == b) ||
          (tau[static_cast<std::size_t>(pos)] == b && tau[static_cast<std::size_t>(pos) + 1] == a)))
        throw std::invalid_argument("i12: pair must sit at positions pos, pos+1 of tau");

    // suffix masses: tail[j] = sum_{k>=j} x_{tau_k}
    std::vector<double> tail(n + 1, 0.0);
    for (std::size_t j = n; j-- > 0;)
        tail[j] = tail[j + 1] + x[static_cast<std::size_t>(tau[j])];

    const auto i = static_cast<std::size_t>(pos);
    double w = 1.0;
    for (std::size_t j = 0; j < i; ++j)
        w *= x[static_cast<std::size_t>(tau[j])] / tail[j];
    if (i + 2 == n) return w;  // pair at the end: the reduced product

    const double xa = x[static_cast<std::size_t>(a)];
    const double xb = x[static_cast<std::size_t>(b)];
    w *= (xa + xb) / (xa + xb + tail[i + 2]);
    for (std::size_t j = i + 2; j + 1 < n; ++j)
        w *= x[static_cast<std::size_t>(tau[j])] / tail[j];
    return w;
}

double brute_force_S(const MassConfig& x, double s) {
    const std::size_t n = x.size();
    if (n > 6) throw std::invalid_argument("brute_force_S: supports n <= 6");
    if (!(s >= 0.0)) throw std::invalid_argument("brute_force_S: s must be >= 0");
    if (n == 1) return 1.0;

    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    const auto mass_at = [&x, &tau](std::size_t j) { return x[static_cast<std::size_t>(tau[j])]; };

    double total = 0.0;
    do {
        // fold the nested integral from the innermost layer outwards; each
        // layer is an exponential integral leaving a constant factor and a
        // heavier exponential rate for the layer above
        double coeff = 1.0;
        double rate = mass_at(n - 1);
        coeff *= std::exp(-rate * s * mass_at(n - 2));
        for (std::size_t k = n - 1; k >= 2; --k) {
            const double xk = mass_at(k - 1);
            coeff *= xk / (xk + rate);
            rate += xk;
            coeff *= std::exp(-rate * s * mass_at(k - 2));
        }
        coeff *= mass_at(0) / (mass_at(0) + rate);
        total += coeff;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return total;
}

double brute_force_S_monte_carlo(const MassConfig& x, double s, std::size_t replicas,
                                 std::mt19937_64& rng) {
    const std::size_t n = x.size();
    if (n > 6) throw std::invalid_argument("brute_force_S_monte_carlo: supports n <= 6");
    if (replicas == 0) throw std::invalid_argument("brute_force_S_monte_carlo: need replicas > 0");
    std::vector<double> xi(n);
    std::vector<std::size_t> ord(n);
    std::size_t hits = 0;
    for (std::size_t r = 0; r < replicas; ++r) {
        for (std::size_t i = 0; i < n; ++i)
            xi[i] = std::exponential_distribution<double>(x[i])(rng);
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(), [&xi](std::size_t a, std::size_t b) { return xi[a] < xi[b]; });
        bool open = true;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (!(xi[ord[k + 1]] > xi[ord[k]] + s * x[ord[k]])) {
                open = false;
                break;
            }
        }
        if (open) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(replicas);
}

} // namespace mcx
