#include "gwcpg/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gwcpg {

namespace {

// Product of two series truncated after degree `order`.
std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b, std::size_t order) {
    std::vector<double> out(order + 1, 0.0);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

void check_supercritical(const OffspringSpec& offspring) {
    if (!(offspring.lambda() > 1.0)) {
        throw std::invalid_argument("lambda = " + std::to_string(offspring.lambda()) + " must be > 1");
    }
}

}  // namespace

double perturbative_cgf(double lambda, double kappa2_star, double t) {
    const double denom = 1.0 - 0.5 * kappa2_star * t;
    if (!(denom > 0.0)) {
        throw std::domain_error("t = " + std::to_string(t) + " is at or beyond the pole 2/kappa2*");
    }
    return (lambda - 1.0) * t / denom;
}

double functional_eq_residual(const OffspringSpec& offspring, double t) {
    const double lambda = offspring.lambda();
    const double k2 = kappa2_star(offspring);
    const double lhs = perturbative_cgf(lambda, k2, lambda * t);
    const double rhs = cgf_eval(offspring, perturbative_cgf(lambda, k2, t));
    return std::abs(lhs - rhs);
}

CumulantVector wbar_cumulants(const OffspringSpec& offspring, int m, int K) {
    check_supercritical(offspring);
    if (m < 1) throw std::invalid_argument("generation m must be >= 1");
    if (K < 1 || K > kMaxCumulantOrder) {
        throw std::invalid_argument("cumulant order K must be in [1, " + std::to_string(kMaxCumulantOrder) + "]");
    }
    const double lambda = offspring.lambda();
    const CumulantVector kappa = cumulants(offspring, K);
    const std::size_t order = static_cast<std::size_t>(K);

    // a[k] = kbar_k / k! for the current generation; a[0] = 0.
    std::vector<double> a(order + 1, 0.0);
    const double ratio = (lambda - 1.0) / lambda;
    for (int k = 1; k <= K; ++k) a[k] = std::pow(ratio, k) * kappa.kappa(k) / factorial(k);

    for (int gen = 1; gen < m; ++gen) {
        // psi(K_m(t)) = sum_j kappa_j K_m(t)^j / j!, then t -> t / lambda.
        std::vector<double> next(order + 1, 0.0);
        std::vector<double> power = a;
        for (int j = 1; j <= K; ++j) {
            const double w = kappa.kappa(j) / factorial(j);
            for (std::size_t k = 1; k <= order; ++k) next[k] += w * power[k];
            if (j < K) power = multiply(power, a, order);
        }
        for (std::size_t k = 1; k <= order; ++k) next[k] /= std::pow(lambda, static_cast<double>(k));
        a = std::move(next);
    }

    CumulantVector out;
    out.values.resize(order);
    for (int k = 1; k <= K; ++k) out.values[k - 1] = a[k] * factorial(k);
    return out;
}

SeriesCoeffs reciprocal_series(const CumulantVector& cumulants) {
    if (cumulants.size() == 0) throw std::invalid_argument("reciprocal_series needs at least one cumulant");
    const double k1 = cumulants.kappa(1);
    if (!(k1 > 0.0)) throw std::domain_error("reciprocal_series needs a positive first cumulant");
    const std::size_t K = cumulants.size();
    SeriesCoeffs out;
    out.kind = SeriesKind::Reciprocal;
    out.coeffs.assign(K, 0.0);
    out.coeffs[0] = 1.0 / k1;
    for (std::size_t k = 1; k < K; ++k) {
        double s = 0.0;
        for (std::size_t i = 1; i <= k; ++i) {
            s += cumulants.kappa(static_cast<int>(i + 1)) / factorial(static_cast<int>(i + 1)) * out.coeffs[k - i];
        }
        out.coeffs[k] = -s / k1;
    }
    return out;
}

SeriesCoeffs h_coefficients(const OffspringSpec& offspring, int m, int K) {
    const double lambda = offspring.lambda();
    SeriesCoeffs out = reciprocal_series(wbar_cumulants(offspring, m, K));
    out.kind = SeriesKind::HCoefficients;
    out.coeffs[0] -= 1.0 / (lambda - 1.0);
    if (out.coeffs.size() > 1) out.coeffs[1] += kappa2_star(offspring) / (2.0 * lambda * (lambda - 1.0));
    return out;
}

double scaling_operator(const std::function<double(double)>& h, double lambda, double t) {
    return h(t / lambda) / lambda;
}

double large_n_cgf(double alpha_rate, double s, double delta, double kappa2_star, double t) {
    if (!(delta > 0.0)) throw std::invalid_argument("Delta must be > 0");
    const double denom = 1.0 - 0.5 * kappa2_star * (-std::expm1(-alpha_rate * s)) * t;
    if (!(denom > 0.0)) throw std::domain_error("t = " + std::to_string(t) + " is at or beyond the pole");
    return alpha_rate * t / delta / denom;
}

double diffusion_time(double alpha_rate, double s) {
    const double x = alpha_rate * s;
    if (std::abs(x) < 1e-6) return s * (1.0 + x / 2.0 + x * x / 6.0);
    return std::expm1(x) / alpha_rate;
}

double diffusion_cgf(double z0, double alpha_rate, double s, double kappa2_star, double t) {
    const double denom = 1.0 - 0.5 * kappa2_star * diffusion_time(alpha_rate, s) * t;
    if (!(denom > 0.0)) throw std::domain_error("t = " + std::to_string(t) + " is at or beyond the pole");
    return z0 * t * std::exp(alpha_rate * s) / denom;
}

EmpiricalCgf empirical_cgf(const PmfTable& table, double scale, double t) {
    if (!(scale > 0.0)) throw std::invalid_argument("scale must be > 0");
    const std::size_t n = table.probs.size();
    double shift = -std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < n; ++l) {
        if (table.probs[l] > 0.0) shift = std::max(shift, std::log(table.probs[l]) + t * static_cast<double>(l) / scale);
    }
    EmpiricalCgf out;
    if (!std::isfinite(shift)) throw std::domain_error("empirical_cgf of an all-zero table");

    const std::size_t top_start = n - n / 10;
    double total = 0.0;
    double top = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        if (!(table.probs[l] > 0.0)) continue;
        const double v = std::exp(std::log(table.probs[l]) + t * static_cast<double>(l) / scale - shift);
        total += v;
        if (l >= top_start) top += v;
    }
    out.value = shift + std::log(total);
    out.top_decile_share = top / total;
    out.truncation_sensitive = out.top_decile_share > 0.01;
    return out;
}

}  // namespace gwcpg
