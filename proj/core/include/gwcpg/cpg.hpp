#ifndef GWCPG_CPG_HPP_
#define GWCPG_CPG_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gwcpg {

/**
 * Compound Poisson-gamma law S = Y_1 + ... + Y_N with N ~ Poisson(mu) and
 * Y_i ~ Gamma(shape alpha, scale tau). S has an atom e^{-mu} at 0 and an
 * absolutely continuous part on (0, inf); the two are kept separate.
 */
struct CpgParams {
    double mu = 0.0;
    double alpha = 1.0;
    double tau = 1.0;

    double mean() const { return mu * alpha * tau; }
    double variance() const { return mu * alpha * (alpha + 1.0) * tau * tau; }
};

/// Validated constructor: mu >= 0, alpha > 0, tau > 0.
CpgParams make_cpg(double mu, double alpha, double tau);

/// All mass at 0 (the lambda = 1 limit, which params_condition1/2 reject).
CpgParams degenerate_cpg();

/// mu = 2(lambda-1)/k2*, alpha = 1, tau = k2*/(2(lambda-1)).
CpgParams params_condition1(double lambda, double kappa2_star);
/// mu = 2 lambda0 (lambda-1)/k2*, alpha = 1, tau = k2*/(2(lambda-1)).
CpgParams params_condition2(double lambda0, double lambda, double kappa2_star);

double mass_at_zero(const CpgParams& p);

/// Continuous density at x > 0 (the atom is excluded); throws for x <= 0.
double density(const CpgParams& p, double x);
/// log of density(); finite where density() underflows.
double log_density(const CpgParams& p, double x);

/**
 * log_density at many points (all strictly positive). Per-term constants are
 * shared across points, which makes this the fast path for fitting.
 */
void log_density(const CpgParams& p, std::span<const double> xs, std::span<double> out);

/// mu {(1 - tau t)^{-alpha} - 1}, defined for t < 1/tau.
double cgf(const CpgParams& p, double t);

double cdf(const CpgParams& p, double x);

/// Deterministic for a given seed and independent of the worker count.
std::vector<double> sample(const CpgParams& p, std::uint64_t seed, std::size_t count, unsigned threads = 0);

}  // namespace gwcpg

#endif  // GWCPG_CPG_HPP_
