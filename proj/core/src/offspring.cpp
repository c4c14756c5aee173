#include "gwcpg/offspring.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gwcpg {

namespace {

void require_positive_mean(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be finite and > 0");
    }
}

// (r / (r + mean - mean*s))^r, the NB generating function with mean `mean`.
double nb_pgf(double r, double mean, double s) {
    const double denom = r + mean - mean * s;
    if (!(denom > 0.0)) {
        throw std::domain_error("negative binomial pgf evaluated at or beyond its pole s = (r+lambda)/lambda");
    }
    return std::pow(r / denom, r);
}

double nb_log_pmf(double r, double mean, long long k) {
    const double kk = static_cast<double>(k);
    const double log_p = std::log(r / (r + mean));
    const double log_q = std::log(mean / (r + mean));
    return std::lgamma(kk + r) - std::lgamma(r) - std::lgamma(kk + 1.0) + r * log_p + kk * log_q;
}

double poisson_log_pmf(double mean, long long k) {
    const double kk = static_cast<double>(k);
    return kk * std::log(mean) - mean - std::lgamma(kk + 1.0);
}

// Eulerian polynomial E_n(q) = sum_j A(n, j) q^j, with E_0 = 1.
double eulerian_polynomial(int n, double q) {
    if (n == 0) return 1.0;
    std::vector<double> row{1.0};  // A(1, .)
    for (int i = 2; i <= n; ++i) {
        std::vector<double> next(static_cast<std::size_t>(i), 0.0);
        for (int j = 0; j < i; ++j) {
            const double keep = j < i - 1 ? (j + 1) * row[static_cast<std::size_t>(j)] : 0.0;
            const double shift = j > 0 ? (i - j) * row[static_cast<std::size_t>(j - 1)] : 0.0;
            next[static_cast<std::size_t>(j)] = keep + shift;
        }
        row = std::move(next);
    }
    double acc = 0.0;
    for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * q + *it;
    return acc;
}

}  // namespace

OffspringSpec OffspringSpec::poisson(double lambda) {
    require_positive_mean(lambda, "lambda");
    return OffspringSpec(OffspringFamily::Poisson, 1, lambda);
}

OffspringSpec OffspringSpec::geometric(double lambda) {
    return negative_binomial(2, lambda);
}

OffspringSpec OffspringSpec::negative_binomial(int m, double lambda) {
    require_positive_mean(lambda, "lambda");
    if (m < 2) throw std::invalid_argument("negative binomial index m must be an integer >= 2");
    return OffspringSpec(OffspringFamily::NegBinomial, m, lambda);
}

double OffspringSpec::shape() const {
    return 1.0 / static_cast<double>(power_ - 1);
}

double OffspringSpec::success_probability() const {
    const double r = shape();
    return r / (r + lambda_);
}

std::string OffspringSpec::label() const {
    if (family_ == OffspringFamily::Poisson) return "poisson";
    if (power_ == 2) return "geometric";
    return "nb:" + std::to_string(power_);
}

InitialSpec InitialSpec::deterministic(int k) {
    if (k < 1) throw std::invalid_argument("deterministic initial population must be >= 1");
    return InitialSpec(InitialFamily::Deterministic, k, static_cast<double>(k));
}

InitialSpec InitialSpec::poisson(double lambda0) {
    require_positive_mean(lambda0, "lambda0");
    return InitialSpec(InitialFamily::Poisson, 1, lambda0);
}

InitialSpec InitialSpec::negative_binomial(int q, double lambda0) {
    require_positive_mean(lambda0, "lambda0");
    if (q < 2) throw std::invalid_argument("negative binomial index q must be an integer >= 2");
    return InitialSpec(InitialFamily::NegBinomial, q, lambda0);
}

double InitialSpec::shape() const {
    return 1.0 / static_cast<double>(parameter_ - 1);
}

double InitialSpec::success_probability() const {
    const double r = shape();
    return r / (r + lambda0_);
}

std::string InitialSpec::label() const {
    switch (family_) {
        case InitialFamily::Deterministic: return "det:" + std::to_string(parameter_);
        case InitialFamily::Poisson: return "poisson";
        case InitialFamily::NegBinomial: return "nb:" + std::to_string(parameter_);
    }
    return {};
}

double pgf_eval(const OffspringSpec& spec, double s) {
    if (s == 1.0) return 1.0;
    if (spec.family() == OffspringFamily::Poisson) return std::exp(spec.lambda() * (s - 1.0));
    return nb_pgf(spec.shape(), spec.lambda(), s);
}

double log_pmf(const OffspringSpec& spec, long long k) {
    if (k < 0) return -INFINITY;
    if (spec.family() == OffspringFamily::Poisson) return poisson_log_pmf(spec.lambda(), k);
    return nb_log_pmf(spec.shape(), spec.lambda(), k);
}

double pmf(const OffspringSpec& spec, long long k) {
    if (k < 0) return 0.0;
    if (spec.is_geometric()) {
        const double p = spec.success_probability();
        return p * std::pow(1.0 - p, static_cast<double>(k));
    }
    return std::exp(log_pmf(spec, k));
}

double cgf_eval(const OffspringSpec& spec, double t) {
    if (t == 0.0) return 0.0;
    if (spec.family() == OffspringFamily::Poisson) return spec.lambda() * std::expm1(t);
    const double r = spec.shape();
    const double lambda = spec.lambda();
    const double denom = r - lambda * std::expm1(t);
    if (!(denom > 0.0)) {
        throw std::domain_error("offspring cgf evaluated at or beyond its divergence point");
    }
    return r * (std::log(r) - std::log(denom));
}

CumulantVector cumulants(const OffspringSpec& spec, int count) {
    if (count < 1) throw std::invalid_argument("cumulant count must be >= 1");
    CumulantVector out;
    out.values.resize(static_cast<std::size_t>(count));
    if (spec.family() == OffspringFamily::Poisson) {
        for (auto& v : out.values) v = spec.lambda();
        return out;
    }
    const double r = spec.shape();
    const double p = spec.success_probability();
    const double q = 1.0 - p;
    for (int k = 1; k <= count; ++k) {
        out.values[static_cast<std::size_t>(k - 1)] = r * q * eulerian_polynomial(k - 1, q) / std::pow(p, k);
    }
    return out;
}

double kappa2_star(const OffspringSpec& spec) {
    if (spec.family() == OffspringFamily::Poisson) return 1.0;
    return static_cast<double>(spec.power());
}

double initial_pgf_eval(const InitialSpec& spec, double s) {
    if (s == 1.0) return 1.0;
    switch (spec.family()) {
        case InitialFamily::Deterministic: return std::pow(s, spec.parameter());
        case InitialFamily::Poisson: return std::exp(spec.lambda0() * (s - 1.0));
        case InitialFamily::NegBinomial: return nb_pgf(spec.shape(), spec.lambda0(), s);
    }
    return 0.0;
}

double initial_pmf(const InitialSpec& spec, long long k) {
    if (k < 0) return 0.0;
    switch (spec.family()) {
        case InitialFamily::Deterministic: return k == spec.parameter() ? 1.0 : 0.0;
        case InitialFamily::Poisson: return std::exp(poisson_log_pmf(spec.lambda0(), k));
        case InitialFamily::NegBinomial: return std::exp(nb_log_pmf(spec.shape(), spec.lambda0(), k));
    }
    return 0.0;
}

}  // namespace gwcpg
