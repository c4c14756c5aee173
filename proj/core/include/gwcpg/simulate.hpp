#ifndef GWCPG_SIMULATE_HPP_
#define GWCPG_SIMULATE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gwcpg/gw_exact.hpp"
#include "gwcpg/offspring.hpp"

namespace gwcpg {

struct SimConfig {
    OffspringSpec offspring = OffspringSpec::poisson(1.0);
    InitialSpec initial = InitialSpec::deterministic(1);
    int n = 0;
    std::size_t samples = 1;
    std::uint64_t seed = 0;
    /// Trajectories whose population exceeds this are stopped and counted apart.
    double population_cap = 1e9;
    /// Largest population value tabulated in the empirical pmf.
    std::size_t max_index = kDefaultMaxIndex;
    unsigned threads = 0;
};

struct SimSummary {
    std::size_t samples = 0;
    /// Moments over trajectories that stayed below the cap.
    double mean = 0.0;
    double variance = 0.0;
    /// Fraction of all samples with Z_n = 0.
    double zero_fraction = 0.0;
    std::size_t capped_count = 0;
    /// Uncapped samples above max_index, absent from the table.
    std::size_t beyond_table = 0;
    /// More than 1% of trajectories hit the population cap.
    bool cap_warning = false;
};

struct SimResult {
    /// Empirical pmf: probs[l] = (count of Z_n = l) / samples.
    PmfTable table;
    SimSummary summary;
};

/**
 * Monte Carlo of Z_{k+1} = sum of Z_k offspring draws. Poisson offspring use
 * Z_{k+1} ~ Poisson(lambda Z_k); negative binomial offspring use the
 * gamma-Poisson mixture with shape r Z_k. Each trajectory owns a generator
 * derived from (seed, trajectory index), so results do not depend on the
 * worker count.
 */
SimResult simulate_gw(const SimConfig& cfg);

struct MartingalePair {
    int n = 0;
    /// Sample mean of W_{n+1} - W_n with W_k = Z_k / lambda^k.
    double mean_difference = 0.0;
    double standard_error = 0.0;
    /// 3 standard errors.
    double ci_half_width = 0.0;
    bool pass = false;
};

struct MartingaleReport {
    std::vector<MartingalePair> pairs;
    std::size_t used_samples = 0;
    std::size_t capped_count = 0;
    bool all_pass = true;
};

/// Checks E[W_{k+1} - W_k] = 0 for k = 0..n-1 on simulated trajectories.
/// Capped trajectories are left out.
MartingaleReport martingale_check(const SimConfig& cfg);

}  // namespace gwcpg

#endif  // GWCPG_SIMULATE_HPP_
