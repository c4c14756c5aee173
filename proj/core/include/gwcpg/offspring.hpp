#ifndef GWCPG_OFFSPRING_HPP_
#define GWCPG_OFFSPRING_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace gwcpg {

enum class OffspringFamily { Poisson, NegBinomial };

/**
 * Offspring law of a Galton-Watson process, restricted to the family whose
 * generating function satisfies f'(s) = lambda * f(s)^m: Poisson (m = 1) and
 * negative binomial with shape r = 1/(m-1) for integer m >= 2. The geometric
 * law is the m = 2 member.
 */
class OffspringSpec {
public:
    static OffspringSpec poisson(double lambda);
    static OffspringSpec geometric(double lambda);
    static OffspringSpec negative_binomial(int m, double lambda);

    OffspringFamily family() const { return family_; }
    double lambda() const { return lambda_; }

    /// Exponent m in f' = lambda f^m (1 for Poisson).
    int power() const { return power_; }

    /// NB shape r = 1/(m-1). Only meaningful for NegBinomial.
    double shape() const;
    /// NB success probability p = r/(r+lambda). Only meaningful for NegBinomial.
    double success_probability() const;

    bool is_geometric() const { return family_ == OffspringFamily::NegBinomial && power_ == 2; }

    /// Short label: "poisson", "geometric" or "nb:<m>".
    std::string label() const;

private:
    OffspringSpec(OffspringFamily family, int power, double lambda)
        : family_(family), power_(power), lambda_(lambda) {}

    OffspringFamily family_;
    int power_;
    double lambda_;
};

enum class InitialFamily { Deterministic, Poisson, NegBinomial };

/// Law of Z_0 under a random initial population.
class InitialSpec {
public:
    static InitialSpec deterministic(int k);
    static InitialSpec poisson(double lambda0);
    static InitialSpec negative_binomial(int q, double lambda0);

    InitialFamily family() const { return family_; }
    double lambda0() const { return lambda0_; }
    /// k for Deterministic, q for NegBinomial, 1 for Poisson.
    int parameter() const { return parameter_; }
    double shape() const;
    double success_probability() const;

    std::string label() const;

private:
    InitialSpec(InitialFamily family, int parameter, double lambda0)
        : family_(family), parameter_(parameter), lambda0_(lambda0) {}

    InitialFamily family_;
    int parameter_;
    double lambda0_;
};

/// Cumulants kappa_1..kappa_K, stored in order.
struct CumulantVector {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    /// 1-based access: kappa(1) is the mean.
    double kappa(int nu) const { return values.at(static_cast<std::size_t>(nu - 1)); }
};

double pgf_eval(const OffspringSpec& spec, double s);
double pmf(const OffspringSpec& spec, long long k);
double log_pmf(const OffspringSpec& spec, long long k);

/// psi(t) = log f(e^t).
double cgf_eval(const OffspringSpec& spec, double t);

/// Closed-form cumulants of the offspring law. NB cumulants use the Eulerian
/// polynomial representation kappa_k = r q E_{k-1}(q) / p^k with q = 1 - p.
CumulantVector cumulants(const OffspringSpec& spec, int count);

/// Limit of kappa_2 as lambda decreases to 1: 1 for Poisson, m for NB(m).
double kappa2_star(const OffspringSpec& spec);

double initial_pgf_eval(const InitialSpec& spec, double s);
double initial_pmf(const InitialSpec& spec, long long k);

}  // namespace gwcpg

#endif  // GWCPG_OFFSPRING_HPP_
