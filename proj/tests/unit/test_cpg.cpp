#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "gwcpg/cpg.hpp"
#include "oracles.hpp"

using namespace gwcpg;

namespace {

// e^{-mu} plus the integral of the density, split into panels around the bulk.
double total_mass(const CpgParams& p) {
    const double sd = std::sqrt(p.variance());
    const double hi = p.mean() + 60.0 * sd + 60.0 * p.tau;
    const int panels = 400;
    double s = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double a = hi * i / panels;
        const double b = hi * (i + 1) / panels;
        s += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            [&](double x) { return x > 0.0 ? density(p, x) : density(p, 1e-300); }, a, b, 0, 1e-14);
    }
    return mass_at_zero(p) + s;
}

const CpgParams kCases[] = {CpgParams{0.2, 1.0, 5.0}, CpgParams{8.0, 1.0, 0.125}, CpgParams{200.0, 1.0, 0.5}};

}  // namespace

TEST(Cpg, ConditionOneParameters) {
    const CpgParams a = params_condition1(1.1, 1.0);
    EXPECT_NEAR(a.mu, 0.2, 1e-12);
    EXPECT_EQ(a.alpha, 1.0);
    EXPECT_NEAR(a.tau, 5.0, 1e-12);
    const CpgParams b = params_condition1(1.1, 2.0);
    EXPECT_NEAR(b.mu, 0.1, 1e-12);
    EXPECT_NEAR(b.tau, 10.0, 1e-11);
    for (double lam : {1.001, 1.3, 7.0}) {
        for (double k2 : {0.5, 1.0, 3.0}) EXPECT_NEAR(params_condition1(lam, k2).mean(), 1.0, 1e-12);
    }
}

TEST(Cpg, ConditionTwoParametersFromTheTable) {
    const CpgParams a = params_condition2(1, 5, 1);
    EXPECT_NEAR(a.mu, 8.0, 8.0 * 1e-12);
    EXPECT_NEAR(a.tau, 0.125, 0.125 * 1e-12);
    const CpgParams b = params_condition2(12, 2.7, 1);
    EXPECT_NEAR(b.mu, 40.8, 40.8 * 1e-12);
    EXPECT_NEAR(b.tau, 0.294, 0.0005);
    const CpgParams c = params_condition2(100, 2, 1);
    EXPECT_NEAR(c.mu, 200.0, 200.0 * 1e-12);
    EXPECT_NEAR(c.tau, 0.5, 0.5 * 1e-12);
}

TEST(Cpg, ParameterValidation) {
    EXPECT_THROW(params_condition1(1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(params_condition1(0.9, 1.0), std::invalid_argument);
    EXPECT_THROW(params_condition1(1.1, 0.0), std::invalid_argument);
    EXPECT_THROW(params_condition2(0.0, 1.1, 1.0), std::invalid_argument);
    EXPECT_THROW(make_cpg(-1.0, 1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(make_cpg(1.0, 0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(make_cpg(1.0, 1.0, 0.0), std::invalid_argument);
    EXPECT_EQ(degenerate_cpg().mu, 0.0);
}

TEST(Cpg, MassAtZero) {
    EXPECT_EQ(mass_at_zero(CpgParams{0.0, 1.0, 1.0}), 1.0);
    EXPECT_NEAR(mass_at_zero(CpgParams{8.0, 1.0, 1.0}), 3.3546e-4, 1e-8);
    EXPECT_NEAR(mass_at_zero(CpgParams{0.2, 1.0, 1.0}), 0.81873, 1e-5);
}

TEST(Cpg, DensityEdgeCases) {
    EXPECT_EQ(density(CpgParams{0.0, 1.0, 1.0}, 2.0), 0.0);
    EXPECT_THROW(density(CpgParams{1.0, 1.0, 1.0}, 0.0), std::invalid_argument);
    EXPECT_THROW(density(CpgParams{1.0, 1.0, 1.0}, -1.0), std::invalid_argument);
}

TEST(Cpg, BesselOracleAgreesWithStandardLibrary) {
    for (double x : {0.01, 0.5, 3.0, 19.9, 20.0, 35.0, 150.0, 600.0}) {
        EXPECT_NEAR(oracle::log_bessel_i1(x), std::log(std::cyl_bessel_i(1.0, x)), 1e-13) << x;
    }
}

TEST(Cpg, DensityMatchesBesselClosedForm) {
    EXPECT_NEAR(density(CpgParams{0.2, 1.0, 5.0}, 1.0) / oracle::cpg_bessel_density(0.2, 5.0, 1.0), 1.0, 1e-10);
    for (const CpgParams& p : kCases) {
        const double m = p.mean();
        for (int i = 0; i <= 200; ++i) {
            const double x = 0.01 * m * std::pow(1000.0, i / 200.0);
            // Compared in logs: the far tail underflows as a density.
            const double ref = oracle::log_cpg_bessel_density(p.mu, p.tau, x);
            EXPECT_NEAR(log_density(p, x), ref, 1e-10) << "mu=" << p.mu << " x=" << x;
        }
    }
}

TEST(Cpg, BatchMatchesScalar) {
    const CpgParams p{3.0, 2.5, 0.4};
    std::vector<double> xs;
    for (int i = 1; i <= 300; ++i) xs.push_back(0.05 * i);
    std::vector<double> out(xs.size());
    log_density(p, xs, out);
    for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(out[i], log_density(p, xs[i]));
    std::vector<double> wrong(3);
    EXPECT_THROW(log_density(p, xs, wrong), std::invalid_argument);
}

TEST(Cpg, GeneralShapeDensityIsTheMixture) {
    // Direct sum of Poisson-weighted gamma densities at moderate parameters.
    const CpgParams p{2.0, 3.8, 0.275};
    for (double x : {0.1, 0.7, 2.0, 5.0}) {
        double ref = 0.0;
        for (int k = 1; k < 80; ++k) {
            const double shape = k * p.alpha;
            ref += oracle::poisson_pmf(p.mu, k) *
                   std::exp((shape - 1) * std::log(x) - x / p.tau - std::lgamma(shape) - shape * std::log(p.tau));
        }
        EXPECT_NEAR(density(p, x) / ref, 1.0, 1e-12) << x;
    }
}

TEST(Cpg, Normalisation) {
    for (const CpgParams& p : kCases) EXPECT_NEAR(total_mass(p), 1.0, 1e-8) << "mu=" << p.mu;
    EXPECT_NEAR(total_mass(CpgParams{0.99, 3.8, 0.275}), 1.0, 1e-8);
}

TEST(Cpg, CgfValues) {
    const CpgParams p{8.0, 1.0, 0.125};
    EXPECT_EQ(cgf(p, 0.0), 0.0);
    EXPECT_NEAR(cgf(p, 1.0), 8.0 / 7.0, 1e-14);
    EXPECT_THROW(cgf(p, 8.0), std::domain_error);
    EXPECT_THROW(cgf(p, 9.0), std::domain_error);
    const double h = 1e-5;
    EXPECT_NEAR((cgf(p, h) - cgf(p, -h)) / (2 * h), p.mean(), 1e-8);
}

TEST(Cpg, CdfBasics) {
    for (const CpgParams& p : kCases) {
        EXPECT_EQ(cdf(p, 0.0), mass_at_zero(p));
        EXPECT_EQ(cdf(p, -1.0), 0.0);
        EXPECT_NEAR(cdf(p, p.mean() + 50.0 * std::sqrt(p.variance())), 1.0, 1e-8);
    }
}

TEST(Cpg, CdfMedianByBisection) {
    const CpgParams p{0.2, 1.0, 5.0};
    // The atom at 0 holds e^{-0.2} > 0.5 of the mass; the 0.9 quantile is in the continuous part.
    double lo = 0.0;
    double hi = 200.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(p, mid) < 0.9 ? lo : hi) = mid;
    }
    EXPECT_NEAR(cdf(p, 0.5 * (lo + hi)), 0.9, 1e-10);

    const CpgParams q{8.0, 1.0, 0.125};
    lo = 0.0;
    hi = 20.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(q, mid) < 0.5 ? lo : hi) = mid;
    }
    EXPECT_NEAR(cdf(q, 0.5 * (lo + hi)), 0.5, 1e-10);
}

TEST(Cpg, CdfAgreesWithIntegratedDensity) {
    const CpgParams p{8.0, 1.0, 0.125};
    for (double x : {0.3, 1.0, 2.5}) {
        const double integral =
            boost::math::quadrature::gauss_kronrod<double, 61>::integrate([&](double y) { return density(p, y); }, 0.0, x, 15, 1e-14);
        EXPECT_NEAR(cdf(p, x), mass_at_zero(p) + integral, 1e-10) << x;
    }
}

TEST(CpgProperty, CumulantsFromCgf) {
    for (const CpgParams& p : {CpgParams{8.0, 1.0, 0.125}, CpgParams{0.99, 3.8, 0.275}, CpgParams{2.0, 0.5, 3.0}}) {
        auto K = [&](double t) { return cgf(p, t); };
        const double h = 1e-3 / p.tau;
        const double k1 = p.mu * p.alpha * p.tau;
        const double k2 = p.mu * p.alpha * (p.alpha + 1) * p.tau * p.tau;
        const double k3 = p.mu * p.alpha * (p.alpha + 1) * (p.alpha + 2) * std::pow(p.tau, 3);
        EXPECT_NEAR(oracle::central_derivative(K, 1, h) / k1, 1.0, 1e-5);
        EXPECT_NEAR(oracle::central_derivative(K, 2, h) / k2, 1.0, 1e-5);
        const double d3 = (4 * oracle::central_derivative(K, 3, 5 * h) - oracle::central_derivative(K, 3, 10 * h)) / 3;
        EXPECT_NEAR(d3 / k3, 1.0, 1e-5);
        EXPECT_NEAR(p.variance(), k2, 1e-12 * k2);
    }
}

TEST(CpgProperty, CdfIsMonotone) {
    for (const CpgParams& p : kCases) {
        const double top = p.mean() + 10 * std::sqrt(p.variance());
        double prev = cdf(p, 0.0);
        for (int i = 1; i <= 1000; ++i) {
            const double v = cdf(p, top * i / 1000.0);
            ASSERT_GE(v, prev) << "mu=" << p.mu << " i=" << i;
            prev = v;
        }
    }
}

TEST(Cpg, SampleDegenerate) {
    const std::vector<double> s = sample(CpgParams{0.0, 1.0, 1.0}, 3, 1000);
    EXPECT_TRUE(std::all_of(s.begin(), s.end(), [](double v) { return v == 0.0; }));
}

TEST(Cpg, SampleMoments) {
    const CpgParams p{8.0, 1.0, 0.125};
    const std::vector<double> s = sample(p, 42, 1'000'000);
    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= s.size();
    EXPECT_LT(std::abs(mean - 1.0), 3.0 * std::sqrt(p.variance() / 1e6));

    const CpgParams q{0.2, 1.0, 5.0};
    const std::vector<double> z = sample(q, 43, 1'000'000);
    const double zeros = static_cast<double>(std::count(z.begin(), z.end(), 0.0)) / 1e6;
    const double e = std::exp(-0.2);
    EXPECT_LT(std::abs(zeros - e), 3.0 * std::sqrt(e * (1 - e) / 1e6));
}

TEST(Cpg, SampleIsReproducibleAcrossWorkerCounts) {
    const CpgParams p{3.0, 2.0, 0.5};
    const auto a = sample(p, 9, 20000, 1);
    const auto b = sample(p, 9, 20000, 3);
    const auto c = sample(p, 10, 20000, 1);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
}

TEST(CpgProperty, KolmogorovSmirnov) {
    const CpgParams p{8.0, 1.0, 0.125};
    std::vector<double> s = sample(p, 2024, 100000);
    std::sort(s.begin(), s.end());
    double d = 0.0;
    const double n = static_cast<double>(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 1 < s.size() && s[i + 1] == s[i]) continue;  // evaluate at the top of each tie block
        const double f = cdf(p, s[i]);
        const std::size_t first = static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), s[i]) - s.begin());
        d = std::max({d, std::abs((i + 1) / n - f), std::abs(first / n - (s[i] == 0.0 ? 0.0 : f))});
    }
    EXPECT_LE(d, 1.63 / std::sqrt(n));
}
