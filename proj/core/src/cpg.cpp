#include "gwcpg/cpg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "gwcpg/parallel.hpp"
#include "random_streams.hpp"

namespace gwcpg {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Terms below this fraction of the running sum are dropped.
constexpr double kRelativeCut = 1e-16;

// lgamma(k + 1) + lgamma(k * alpha), grown on demand.
class TermConstants {
public:
    explicit TermConstants(double alpha) : alpha_(alpha), table_{0.0} {}

    double operator()(std::size_t k) {
        while (table_.size() <= k) {
            const double kk = static_cast<double>(table_.size());
            table_.push_back(std::lgamma(kk + 1.0) + std::lgamma(kk * alpha_));
        }
        return table_[k];
    }

private:
    double alpha_;
    std::vector<double> table_;
};

// log sum_{k>=1} exp(k log_y - c_k), evaluated outward from the largest term.
double log_series(double log_y, double alpha, TermConstants& constants) {
    const double guess = std::exp((log_y - alpha * std::log(alpha)) / (1.0 + alpha));
    std::size_t k0 = 1;
    if (guess > 1.0) k0 = guess > 1e15 ? static_cast<std::size_t>(1e15) : static_cast<std::size_t>(std::llround(guess));

    auto log_term = [&](std::size_t k) { return static_cast<double>(k) * log_y - constants(k); };
    // Step to the actual maximum: the terms are log-concave in k.
    double ref = log_term(k0);
    while (true) {
        const double up = log_term(k0 + 1);
        if (up > ref) {
            ++k0;
            ref = up;
            continue;
        }
        if (k0 > 1) {
            const double down = log_term(k0 - 1);
            if (down > ref) {
                --k0;
                ref = down;
                continue;
            }
        }
        break;
    }

    double sum = 1.0;
    for (std::size_t k = k0 + 1;; ++k) {
        const double r = std::exp(log_term(k) - ref);
        sum += r;
        if (r < kRelativeCut * sum) break;
    }
    for (std::size_t k = k0 - 1; k >= 1; --k) {
        const double r = std::exp(log_term(k) - ref);
        sum += r;
        if (r < kRelativeCut * sum) break;
    }
    return ref + std::log(sum);
}

void require_valid(const CpgParams& p) {
    if (!(p.mu >= 0.0) || !std::isfinite(p.mu)) throw std::invalid_argument("CPG mu must be finite and >= 0");
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) throw std::invalid_argument("CPG alpha must be finite and > 0");
    if (!(p.tau > 0.0) || !std::isfinite(p.tau)) throw std::invalid_argument("CPG tau must be finite and > 0");
}

}  // namespace

CpgParams make_cpg(double mu, double alpha, double tau) {
    CpgParams p{mu, alpha, tau};
    require_valid(p);
    return p;
}

CpgParams degenerate_cpg() {
    return CpgParams{0.0, 1.0, 1.0};
}

CpgParams params_condition1(double lambda, double kappa2_star) {
    return params_condition2(1.0, lambda, kappa2_star);
}

CpgParams params_condition2(double lambda0, double lambda, double kappa2_star) {
    if (!(lambda > 1.0)) {
        throw std::invalid_argument("CPG limit needs lambda > 1; use degenerate_cpg() for the critical limit");
    }
    if (!(kappa2_star > 0.0)) throw std::invalid_argument("kappa2* must be > 0");
    if (!(lambda0 > 0.0)) throw std::invalid_argument("lambda0 must be > 0");
    const double eps = lambda - 1.0;
    return make_cpg(2.0 * lambda0 * eps / kappa2_star, 1.0, kappa2_star / (2.0 * eps));
}

double mass_at_zero(const CpgParams& p) {
    return std::exp(-p.mu);
}

double log_density(const CpgParams& p, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("density is defined for x > 0; the atom at 0 is mass_at_zero()");
    if (p.mu == 0.0) return kNegInf;
    TermConstants constants(p.alpha);
    const double log_y = std::log(p.mu) + p.alpha * (std::log(x) - std::log(p.tau));
    return -p.mu - x / p.tau - std::log(x) + log_series(log_y, p.alpha, constants);
}

double density(const CpgParams& p, double x) {
    return std::exp(log_density(p, x));
}

void log_density(const CpgParams& p, std::span<const double> xs, std::span<double> out) {
    if (out.size() != xs.size()) throw std::invalid_argument("log_density: output span size mismatch");
    for (double x : xs) {
        if (!(x > 0.0)) throw std::invalid_argument("density is defined for x > 0; the atom at 0 is mass_at_zero()");
    }
    if (p.mu == 0.0) {
        std::fill(out.begin(), out.end(), kNegInf);
        return;
    }
    TermConstants constants(p.alpha);
    const double log_mu = std::log(p.mu);
    const double log_tau = std::log(p.tau);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const double lx = std::log(x);
        const double log_y = log_mu + p.alpha * (lx - log_tau);
        out[i] = -p.mu - x / p.tau - lx + log_series(log_y, p.alpha, constants);
    }
}

double cgf(const CpgParams& p, double t) {
    if (!(t * p.tau < 1.0)) throw std::domain_error("CPG cgf is undefined for t >= 1/tau");
    return p.mu * std::expm1(-p.alpha * std::log1p(-p.tau * t));
}

double cdf(const CpgParams& p, double x) {
    if (x < 0.0) return 0.0;
    double total = std::exp(-p.mu);
    if (x == 0.0 || p.mu == 0.0) return total;
    const double z = x / p.tau;
    const double log_mu = std::log(p.mu);
    for (std::size_t k = 1;; ++k) {
        const double kk = static_cast<double>(k);
        const double w = std::exp(-p.mu + kk * log_mu - std::lgamma(kk + 1.0));
        if (w > 0.0) total += w * boost::math::gamma_p(kk * p.alpha, z);
        // Poisson weights decay faster than geometrically past the mode.
        if (kk > p.mu && w < 1e-18) break;
    }
    return std::min(total, 1.0);
}

std::vector<double> sample(const CpgParams& p, std::uint64_t seed, std::size_t count, unsigned threads) {
    require_valid(p);
    std::vector<double> out(count, 0.0);
    parallel_for(count, resolve_thread_count(threads), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            std::mt19937_64 rng = detail::stream_for(seed, i);
            const long long n = p.mu > 0.0 ? std::poisson_distribution<long long>(p.mu)(rng) : 0;
            if (n == 0) continue;
            out[i] = std::gamma_distribution<double>(static_cast<double>(n) * p.alpha, p.tau)(rng);
        }
    });
    return out;
}

}  // namespace gwcpg
