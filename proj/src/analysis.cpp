#include "bfcwalk/analysis.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace bfc {

double TransferDistribution::total() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
}

TransferDistribution transfer_distribution(const JsiMatrix& jsi) {
    TransferDistribution dist;
    dist.u_min = jsi.j_min + jsi.k_min;
    dist.u_max = jsi.j_max + jsi.k_max;
    dist.probs.assign(static_cast<std::size_t>(dist.u_max - dist.u_min) + 1, 0.0);
    for (int j = jsi.j_min; j <= jsi.j_max; ++j)
        for (int k = jsi.k_min; k <= jsi.k_max; ++k)
            dist.probs[static_cast<std::size_t>(j + k - dist.u_min)] += jsi.at(j, k);
    return dist;
}

Moments moments(const TransferDistribution& dist) {
    double total = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        const double u = static_cast<double>(dist.u_min) + static_cast<double>(i);
        const double p = dist.probs[i];
        total += p;
        m1 += u * p;
        m2 += u * u * p;
    }
    if (total <= 0.0) return {0.0, 0.0};
    const double mean = m1 / total;
    const double var = std::max(0.0, m2 / total - mean * mean);
    return {mean, std::sqrt(var)};
}

ConfinementMetrics confinement_metrics(const JsiMatrix& jsi) {
    double total = 0.0, anti = 0.0;
    double u1 = 0.0, u2 = 0.0, v1 = 0.0, v2 = 0.0;
    for (int j = jsi.j_min; j <= jsi.j_max; ++j) {
        for (int k = jsi.k_min; k <= jsi.k_max; ++k) {
            const double p = jsi.at(j, k);
            const double u = j + k;
            const double v = j - k;
            total += p;
            if (j + k == 0) anti += p;
            u1 += u * p;
            u2 += u * u * p;
            v1 += v * p;
            v2 += v * v * p;
        }
    }
    ConfinementMetrics m;
    if (total <= 0.0) return m;
    m.antidiag_mass = anti;
    const double mu_u = u1 / total;
    const double mu_v = v1 / total;
    m.sigma_u = std::sqrt(std::max(0.0, u2 / total - mu_u * mu_u));
    m.sigma_v = std::sqrt(std::max(0.0, v2 / total - mu_v * mu_v));
    return m;
}

int worker_count() {
    if (const char* env = std::getenv("BFC_WALK_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<int>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

// Run fn(i) for i in [0, count) on up to worker_count() threads. Each index
// writes only its own output slot, so the result is order-independent.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<int>(worker_count(), static_cast<int>(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

SweepTable sweep_depth(const SpectralPhaseProfile& profile, int d,
                       const std::vector<double>& deltas, double epsilon_trunc) {
    if (d < 1) throw std::invalid_argument("sweep_depth: d must be >= 1");
    for (double delta : deltas)
        if (!std::isfinite(delta) || delta < 0.0)
            throw std::invalid_argument("sweep_depth: deltas must be finite and >= 0");

    const BfcState state = make_maximal_state(d, profile);
    SweepTable table;
    table.axis_label = "delta";
    table.axis = deltas;
    table.mean.resize(deltas.size());
    table.sigma.resize(deltas.size());
    table.ref_sigma.resize(deltas.size());
    parallel_for(deltas.size(), [&](std::size_t i) {
        ModulatorConfig cfg;
        cfg.delta = deltas[i];
        cfg.epsilon_trunc = epsilon_trunc;
        cfg.mod_freq_hz = state.fsr_hz;
        const Moments m = moments(transfer_distribution(biphoton_jsi(state, cfg)));
        table.mean[i] = m.mean;
        table.sigma[i] = m.sigma;
        table.ref_sigma[i] = deltas[i] / std::sqrt(2.0);
    });
    return table;
}

SweepTable sweep_dimension(const SpectralPhaseProfile& profile, double delta,
                           const std::vector<int>& dims, double epsilon_trunc) {
    for (int d : dims)
        if (d < 1) throw std::invalid_argument("sweep_dimension: dims must be >= 1");

    SweepTable table;
    table.axis_label = "dimension";
    table.axis.resize(dims.size());
    table.mean.resize(dims.size());
    table.sigma.resize(dims.size());
    parallel_for(dims.size(), [&](std::size_t i) {
        const BfcState state = make_maximal_state(dims[i], profile);
        ModulatorConfig cfg;
        cfg.delta = delta;
        cfg.epsilon_trunc = epsilon_trunc;
        cfg.mod_freq_hz = state.fsr_hz;
        const Moments m = moments(transfer_distribution(biphoton_jsi(state, cfg)));
        table.axis[i] = dims[i];
        table.mean[i] = m.mean;
        table.sigma[i] = m.sigma;
    });
    return table;
}

namespace {

// splitmix64; one independent stream per (seed, cell).
struct CellRng {
    std::uint64_t s;
    explicit CellRng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next_u64() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in (0, 1)
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }
};

std::uint64_t mix_cell_seed(std::uint64_t seed, std::uint64_t cell) {
    CellRng h(seed ^ (cell * 0xd6e8feb86659fd93ULL));
    return h.next_u64();
}

// Inversion by sequential search; fine for small means.
std::int64_t poisson_small(double mu, CellRng& rng) {
    const double u = rng.next_unit();
    double p = std::exp(-mu);
    double cdf = p;
    std::int64_t k = 0;
    while (u > cdf) {
        ++k;
        p *= mu / static_cast<double>(k);
        cdf += p;
        if (k > 1000000) break;
    }
    return k;
}

// Hoermann's PTRS transformed-rejection sampler for mu >= 10.
std::int64_t poisson_ptrs(double mu, CellRng& rng) {
    const double log_mu = std::log(mu);
    const double b = 0.931 + 2.53 * std::sqrt(mu);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        const double u = rng.next_unit() - 0.5;
        const double v = rng.next_unit();
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mu + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        const double k = kf;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            -mu + k * log_mu - std::lgamma(k + 1.0))
            return static_cast<std::int64_t>(kf);
    }
}

std::int64_t poisson_draw(double mu, CellRng& rng) {
    if (mu <= 0.0) return 0;
    if (mu < 10.0) return poisson_small(mu, rng);
    return poisson_ptrs(mu, rng);
}

}  // namespace

CountMatrix poisson_sample(const JsiMatrix& jsi, double total_counts,
                           std::uint64_t seed) {
    if (!(total_counts > 0.0) || !std::isfinite(total_counts))
        throw std::invalid_argument("poisson_sample: total_counts must be > 0");

    CountMatrix cm;
    cm.j_min = jsi.j_min;
    cm.j_max = jsi.j_max;
    cm.k_min = jsi.k_min;
    cm.k_max = jsi.k_max;
    cm.counts.resize(jsi.values.size());
    for (std::size_t i = 0; i < jsi.values.size(); ++i) {
        CellRng rng(mix_cell_seed(seed, static_cast<std::uint64_t>(i)));
        cm.counts[i] = poisson_draw(total_counts * jsi.values[i], rng);
    }
    return cm;
}

}  // namespace bfc
