#ifndef GWCPG_ASYMPTOTICS_HPP_
#define GWCPG_ASYMPTOTICS_HPP_

#include <cstddef>
#include <functional>
#include <vector>

#include "gwcpg/gw_exact.hpp"
#include "gwcpg/offspring.hpp"

namespace gwcpg {

enum class SeriesKind { Cumulants, Reciprocal, HCoefficients };

/// Coefficients c_0..c_K of a truncated series; `kind` records how to read them.
struct SeriesCoeffs {
    SeriesKind kind = SeriesKind::Cumulants;
    std::vector<double> coeffs;

    std::size_t size() const { return coeffs.size(); }
    double operator[](std::size_t k) const { return coeffs.at(k); }
};

/// Deepest cumulant order supported by wbar_cumulants.
inline constexpr int kMaxCumulantOrder = 8;

/// (lambda-1) t / (1 - k2* t / 2), the CGF of the rescaled limit near criticality.
double perturbative_cgf(double lambda, double kappa2_star, double t);

/// |K(lambda t) - psi(K(t))| with K = perturbative_cgf and psi the offspring CGF.
double functional_eq_residual(const OffspringSpec& offspring, double t);

/// Cumulants 1..K of (lambda-1) Z_m / lambda^m under Z_0 = 1, by composing the
/// truncated cumulant series generation by generation.
CumulantVector wbar_cumulants(const OffspringSpec& offspring, int m, int K);

/// Coefficients of t / K(t) from the cumulants of K. Returns c~_0..c~_{K-1}.
SeriesCoeffs reciprocal_series(const CumulantVector& cumulants);

/// Laurent coefficients of 1/K(t) minus its fixed point (1 - k2* t/(2 lambda))/((lambda-1) t).
SeriesCoeffs h_coefficients(const OffspringSpec& offspring, int m, int K);

/// h -> h(t / lambda) / lambda.
double scaling_operator(const std::function<double(double)>& h, double lambda, double t);

/// (alpha t / Delta) / (1 - (k2*/2)(1 - e^{-alpha s}) t).
double large_n_cgf(double alpha_rate, double s, double delta, double kappa2_star, double t);

/// (e^{alpha s} - 1)/alpha, continuous at alpha = 0.
double diffusion_time(double alpha_rate, double s);

/// z0 t e^{alpha s} / (1 - k2* u_s(alpha) t / 2).
double diffusion_cgf(double z0, double alpha_rate, double s, double kappa2_star, double t);

struct EmpiricalCgf {
    double value = 0.0;
    /// Share of the exponentially weighted sum carried by the top tenth of the support.
    double top_decile_share = 0.0;
    /// True when that share exceeds 1%.
    bool truncation_sensitive = false;
};

/// log sum_l probs[l] e^{t l / scale}, evaluated with a max shift.
EmpiricalCgf empirical_cgf(const PmfTable& table, double scale, double t);

}  // namespace gwcpg

#endif  // GWCPG_ASYMPTOTICS_HPP_
