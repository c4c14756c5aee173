#ifndef GWCPG_FIT_HPP_
#define GWCPG_FIT_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>

#include "gwcpg/cpg.hpp"
#include "gwcpg/gw_exact.hpp"

namespace gwcpg {

struct NelderMeadOptions {
    double diameter_tolerance = 1e-10;
    double spread_tolerance = 1e-14;
    int max_iterations = 10'000;
    /// Edge length of the initial simplex.
    double initial_step = 0.25;
};

struct NelderMeadResult {
    std::array<double, 2> argmin{};
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

using Objective2 = std::function<double(const std::array<double, 2>&)>;

/// Two-dimensional downhill simplex. Hitting the iteration cap is reported
/// through `converged`; the best vertex is still returned.
NelderMeadResult nelder_mead_minimize(const Objective2& objective, std::array<double, 2> start,
                                      const NelderMeadOptions& options = {});

/// Closed index interval [lo, hi].
struct FitRange {
    std::size_t lo = 1;
    std::size_t hi = 1;
};

struct FitResult {
    CpgParams params;
    /// Sum of squared log-probability errors at the fitted parameters.
    double residual = 0.0;
    /// Same sum at the starting point (mu_hat with the theoretical alpha, tau).
    double start_residual = 0.0;
    FitRange fit_range;
    int n = 0;
    CpgParams theory_params;
    std::size_t points = 0;
    /// Two or fewer usable points for two free parameters.
    bool underdetermined = false;
    int iterations = 0;
};

/// Points with scaled probability above this are used when no range is given.
inline constexpr double kDefaultFitFloor = 1e-12;

/**
 * mu from the zero probability, then (alpha, tau) by least squares in
 * log-probability space, starting from the small-(lambda-1) values. Points
 * with zero probability inside an explicit range are skipped.
 */
FitResult fit_two_step(const PmfTable& table, double lambda, std::optional<FitRange> range = std::nullopt,
                       const NelderMeadOptions& options = {});

/// lambda0 implied by the table's initial law (1 for Condition I).
double initial_mean(const PmfTable& table);

}  // namespace gwcpg

#endif  // GWCPG_FIT_HPP_
