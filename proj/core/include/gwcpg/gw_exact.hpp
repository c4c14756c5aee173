#ifndef GWCPG_GW_EXACT_HPP_
#define GWCPG_GW_EXACT_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "gwcpg/cpg.hpp"
#include "gwcpg/offspring.hpp"

namespace gwcpg {

enum class Condition { I, II };

/// Covered mass above which a truncated table is considered valid.
inline constexpr double kValidityThreshold = 0.99;
/// Default support cap.
inline constexpr std::size_t kDefaultMaxIndex = 1'000'000;

/**
 * Truncated distribution of Z_n on {0, ..., max_index}. `probs` is trimmed
 * after its last nonzero entry, so probs.size() may be smaller than
 * max_index + 1; prob(l) returns 0 past the end.
 */
struct PmfTable {
    Condition condition = Condition::I;
    OffspringSpec offspring = OffspringSpec::poisson(1.0);
    std::optional<InitialSpec> initial;
    int n = 0;
    std::size_t max_index = 0;
    std::vector<double> probs;
    double covered_mass = 0.0;
    /// Mass flushed to zero because it fell below the smallest normal double.
    double discarded_mass = 0.0;
    /// log of the scaling gain lambda^n.
    double log_gain = 0.0;

    double prob(std::size_t l) const { return l < probs.size() ? probs[l] : 0.0; }
    double gain() const;
    bool valid() const { return covered_mass > kValidityThreshold; }
    double mean() const;
    double variance() const;
};

struct EvolveOptions {
    unsigned threads = 0;
    /// Upper bound on recursion working storage.
    std::size_t memory_cap_bytes = std::size_t{2} << 30;
    std::size_t block_size = 2048;
};

/// Produces P_0, P_1, P_2, ... one generation at a time under Condition I.
class GenerationStepper {
public:
    GenerationStepper(const OffspringSpec& offspring, std::size_t max_index, EvolveOptions options = {});

    const PmfTable& current() const { return table_; }
    /// Advances to the next generation and returns it.
    const PmfTable& advance();

private:
    EvolveOptions options_;
    PmfTable table_;
};

PmfTable evolve_condition1(const OffspringSpec& offspring, int n, std::size_t max_index,
                           const EvolveOptions& options = {});

/// Condition II with a Poisson or negative binomial Z_0.
PmfTable evolve_condition2(const OffspringSpec& offspring, const InitialSpec& initial, int n,
                           std::size_t max_index, const EvolveOptions& options = {});

/// Condition II built on an already computed Condition-I table for the same n.
PmfTable evolve_condition2_from(const PmfTable& condition1, const InitialSpec& initial,
                                const EvolveOptions& options = {});

/// Dispatches on the initial law: none -> Condition I, Deterministic(k) ->
/// k-fold convolution of Condition I, otherwise the Condition-II recursion.
PmfTable evolve(const OffspringSpec& offspring, const std::optional<InitialSpec>& initial, int n,
                std::size_t max_index, const EvolveOptions& options = {});

/// Largest generation n <= n_cap whose Condition-I table is valid, or nullopt
/// if even P_1 is not.
std::optional<PmfTable> largest_valid_condition1(const OffspringSpec& offspring, std::size_t max_index,
                                                 int n_cap, const EvolveOptions& options = {});

/// f_n(s) = (c + d s)/(a - b s) for geometric offspring. P_n(l) = head * ratio^(l-1)
/// for l >= 1; head and log_ratio are kept separately because a - b and
/// c b + a d cancel catastrophically once lambda^n is large.
struct LinearFractional {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double head = 0.0;
    double log_ratio = 0.0;

    double operator()(double s) const { return (c + d * s) / (a - b * s); }
    double prob(std::size_t l) const;
};

LinearFractional geometric_closed_form(double lambda, int n);

/// Table of the geometric-offspring P_n straight from the linear-fractional form.
PmfTable geometric_table(double lambda, int n, std::size_t max_index);

/// Law of the sum of k independent copies, truncated at the same support cap.
PmfTable convolve_power(const PmfTable& table, int k, const EvolveOptions& options = {});

/// Smallest root of f(q) = q by iteration from q = 0.
double extinction_probability(const OffspringSpec& offspring);

struct ComparisonPoint {
    double x = 0.0;
    double scaled_gw = 0.0;
    double cpg_density = 0.0;
};

struct ComparisonSummary {
    double gw_zero = 0.0;
    double cpg_zero = 0.0;
    /// Max of |scaled_gw - cpg| / cpg over the bulk region.
    double bulk_max_relative_error = 0.0;
    /// |P(0) - e^{-mu}| + sum_l |P(l) - cpg(l / g) / g| over the covered support.
    double l1_distance = 0.0;
    std::size_t bulk_points = 0;
    std::vector<ComparisonPoint> points;
};

/// Bulk region: indices whose scaled mass is at least this fraction of the peak.
inline constexpr double kBulkFraction = 0.1;

ComparisonSummary scaled_comparison(const PmfTable& table, const CpgParams& cpg);

/// Least-squares slope of log probs[l] against l over [first, last].
double tail_decay_rate(const PmfTable& table, std::size_t first, std::size_t last);

}  // namespace gwcpg

#endif  // GWCPG_GW_EXACT_HPP_
