#include "gwcpg/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gwcpg/parallel.hpp"
#include "random_streams.hpp"

namespace gwcpg {

namespace {

// Trajectory chunks for the martingale reduction; fixed so sums are ordered
// the same way for every worker count.
constexpr std::size_t kChunk = 4096;

void validate(const SimConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (cfg.n < 0) throw std::invalid_argument("generation n must be >= 0");
    if (!(cfg.population_cap >= 1.0)) throw std::invalid_argument("population cap must be >= 1");
}

long long poisson_draw(std::mt19937_64& rng, double mean) {
    if (!(mean > 0.0)) return 0;
    return std::poisson_distribution<long long>(mean)(rng);
}

// Gamma-Poisson mixture: NB with the given shape and mean.
long long nb_draw(std::mt19937_64& rng, double shape, double mean) {
    if (!(mean > 0.0)) return 0;
    const double rate = std::gamma_distribution<double>(shape, mean / shape)(rng);
    return poisson_draw(rng, rate);
}

long long initial_draw(std::mt19937_64& rng, const InitialSpec& initial) {
    switch (initial.family()) {
        case InitialFamily::Deterministic: return initial.parameter();
        case InitialFamily::Poisson: return poisson_draw(rng, initial.lambda0());
        case InitialFamily::NegBinomial: return nb_draw(rng, initial.shape(), initial.lambda0());
    }
    return 0;
}

long long next_generation(std::mt19937_64& rng, const OffspringSpec& offspring, long long z) {
    if (z == 0) return 0;
    const double zz = static_cast<double>(z);
    if (offspring.family() == OffspringFamily::Poisson) return poisson_draw(rng, offspring.lambda() * zz);
    return nb_draw(rng, offspring.shape() * zz, offspring.lambda() * zz);
}

// Runs one trajectory; path[k] = Z_k. Returns false if the cap was exceeded.
bool run_trajectory(const SimConfig& cfg, std::size_t index, std::vector<long long>& path) {
    std::mt19937_64 rng = detail::stream_for(cfg.seed, index);
    path.assign(static_cast<std::size_t>(cfg.n) + 1, 0);
    long long z = initial_draw(rng, cfg.initial);
    path[0] = z;
    if (static_cast<double>(z) > cfg.population_cap) return false;
    for (int k = 1; k <= cfg.n; ++k) {
        z = next_generation(rng, cfg.offspring, z);
        if (static_cast<double>(z) > cfg.population_cap) return false;
        path[static_cast<std::size_t>(k)] = z;
    }
    return true;
}

}  // namespace

SimResult simulate_gw(const SimConfig& cfg) {
    validate(cfg);
    constexpr long long kCapped = -1;
    std::vector<long long> finals(cfg.samples, 0);
    parallel_for(cfg.samples, resolve_thread_count(cfg.threads), [&](std::size_t begin, std::size_t end) {
        std::vector<long long> path;
        for (std::size_t i = begin; i < end; ++i) {
            finals[i] = run_trajectory(cfg, i, path) ? path.back() : kCapped;
        }
    });

    SimResult out;
    SimSummary& s = out.summary;
    s.samples = cfg.samples;
    std::vector<std::size_t> counts;
    double sum = 0.0;
    std::size_t zeros = 0;
    for (long long z : finals) {
        if (z == kCapped) {
            ++s.capped_count;
            continue;
        }
        if (z == 0) ++zeros;
        sum += static_cast<double>(z);
        const auto l = static_cast<std::size_t>(z);
        if (l > cfg.max_index) {
            ++s.beyond_table;
            continue;
        }
        if (counts.size() <= l) counts.resize(l + 1, 0);
        ++counts[l];
    }
    const std::size_t used = cfg.samples - s.capped_count;
    if (used > 0) {
        s.mean = sum / static_cast<double>(used);
        double ss = 0.0;
        for (long long z : finals) {
            if (z == kCapped) continue;
            const double d = static_cast<double>(z) - s.mean;
            ss += d * d;
        }
        s.variance = used > 1 ? ss / static_cast<double>(used - 1) : 0.0;
    }
    s.zero_fraction = static_cast<double>(zeros) / static_cast<double>(cfg.samples);
    s.cap_warning = static_cast<double>(s.capped_count) > 0.01 * static_cast<double>(cfg.samples);

    PmfTable& t = out.table;
    const bool condition1 = cfg.initial.family() == InitialFamily::Deterministic && cfg.initial.parameter() == 1;
    t.condition = condition1 ? Condition::I : Condition::II;
    t.offspring = cfg.offspring;
    if (!condition1) t.initial = cfg.initial;
    t.n = cfg.n;
    t.max_index = cfg.max_index;
    t.log_gain = cfg.n * std::log(cfg.offspring.lambda());
    t.probs.resize(std::max<std::size_t>(counts.size(), 1), 0.0);
    for (std::size_t l = 0; l < counts.size(); ++l) {
        t.probs[l] = static_cast<double>(counts[l]) / static_cast<double>(cfg.samples);
    }
    double covered = 0.0;
    for (double p : t.probs) covered += p;
    t.covered_mass = covered;
    return out;
}

MartingaleReport martingale_check(const SimConfig& cfg) {
    validate(cfg);
    const std::size_t pairs = static_cast<std::size_t>(cfg.n);
    const std::size_t chunks = (cfg.samples + kChunk - 1) / kChunk;
    // Per chunk: used count, capped count, then (sum d, sum d^2) per pair.
    const std::size_t stride = 2 + 2 * pairs;
    std::vector<double> partial(chunks * stride, 0.0);
    const double log_lambda = std::log(cfg.offspring.lambda());

    parallel_for(chunks, resolve_thread_count(cfg.threads), [&](std::size_t c0, std::size_t c1) {
        std::vector<long long> path;
        for (std::size_t c = c0; c < c1; ++c) {
            double* acc = partial.data() + c * stride;
            const std::size_t end = std::min(cfg.samples, (c + 1) * kChunk);
            for (std::size_t i = c * kChunk; i < end; ++i) {
                if (!run_trajectory(cfg, i, path)) {
                    acc[1] += 1.0;
                    continue;
                }
                acc[0] += 1.0;
                for (std::size_t k = 0; k < pairs; ++k) {
                    const double w0 = static_cast<double>(path[k]) * std::exp(-static_cast<double>(k) * log_lambda);
                    const double w1 =
                        static_cast<double>(path[k + 1]) * std::exp(-static_cast<double>(k + 1) * log_lambda);
                    const double d = w1 - w0;
                    acc[2 + 2 * k] += d;
                    acc[3 + 2 * k] += d * d;
                }
            }
        }
    });

    std::vector<double> total(stride, 0.0);
    for (std::size_t c = 0; c < chunks; ++c) {
        for (std::size_t j = 0; j < stride; ++j) total[j] += partial[c * stride + j];
    }

    MartingaleReport report;
    report.used_samples = static_cast<std::size_t>(total[0]);
    report.capped_count = static_cast<std::size_t>(total[1]);
    const double used = total[0];
    for (std::size_t k = 0; k < pairs; ++k) {
        MartingalePair p;
        p.n = static_cast<int>(k);
        if (used > 0.0) {
            p.mean_difference = total[2 + 2 * k] / used;
            const double second = total[3 + 2 * k] / used;
            const double var = std::max(0.0, second - p.mean_difference * p.mean_difference);
            p.standard_error = used > 1.0 ? std::sqrt(var * used / (used - 1.0) / used) : 0.0;
        }
        p.ci_half_width = 3.0 * p.standard_error;
        p.pass = std::abs(p.mean_difference) <= p.ci_half_width;
        report.all_pass = report.all_pass && p.pass;
        report.pairs.push_back(p);
    }
    return report;
}

}  // namespace gwcpg
