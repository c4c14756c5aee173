#include "gwcpg/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwcpg {

namespace {

using Point = std::array<double, 2>;

double finite_or_inf(double v) {
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

Point affine(const Point& base, const Point& toward, double coef) {
    return {base[0] + coef * (toward[0] - base[0]), base[1] + coef * (toward[1] - base[1])};
}

double distance(const Point& a, const Point& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

}  // namespace

NelderMeadResult nelder_mead_minimize(const Objective2& objective, Point start, const NelderMeadOptions& options) {
    const double f0 = objective(start);
    if (!std::isfinite(f0)) throw std::invalid_argument("objective is not finite at the starting point");

    std::array<Point, 3> x{start, Point{start[0] + options.initial_step, start[1]},
                           Point{start[0], start[1] + options.initial_step}};
    std::array<double, 3> f{f0, finite_or_inf(objective(x[1])), finite_or_inf(objective(x[2]))};

    auto order = [&]() {
        std::array<int, 3> idx{0, 1, 2};
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return f[a] < f[b]; });
        const std::array<Point, 3> xs{x[idx[0]], x[idx[1]], x[idx[2]]};
        const std::array<double, 3> fs{f[idx[0]], f[idx[1]], f[idx[2]]};
        x = xs;
        f = fs;
    };

    NelderMeadResult result;
    order();
    for (int it = 0;; ++it) {
        const double diameter = std::max(distance(x[0], x[1]), distance(x[0], x[2]));
        const double spread = f[2] - f[0];
        if (diameter < options.diameter_tolerance || spread < options.spread_tolerance) {
            result.converged = true;
            result.iterations = it;
            break;
        }
        if (it >= options.max_iterations) {
            result.iterations = it;
            break;
        }

        const Point centroid{(x[0][0] + x[1][0]) / 2.0, (x[0][1] + x[1][1]) / 2.0};
        const Point xr = affine(centroid, x[2], -1.0);
        const double fr = finite_or_inf(objective(xr));

        if (fr < f[0]) {
            const Point xe = affine(centroid, x[2], -2.0);
            const double fe = finite_or_inf(objective(xe));
            if (fe < fr) {
                x[2] = xe;
                f[2] = fe;
            } else {
                x[2] = xr;
                f[2] = fr;
            }
        } else if (fr < f[1]) {
            x[2] = xr;
            f[2] = fr;
        } else {
            const bool outside = fr < f[2];
            const Point xc = outside ? affine(centroid, x[2], -0.5) : affine(centroid, x[2], 0.5);
            const double fc = finite_or_inf(objective(xc));
            if (fc < (outside ? fr : f[2])) {
                x[2] = xc;
                f[2] = fc;
            } else {
                for (int i = 1; i < 3; ++i) {
                    x[i] = affine(x[0], x[i], 0.5);
                    f[i] = finite_or_inf(objective(x[i]));
                }
            }
        }
        order();
    }
    result.argmin = x[0];
    result.value = f[0];
    return result;
}

double initial_mean(const PmfTable& table) {
    if (table.condition == Condition::I || !table.initial) return 1.0;
    if (table.initial->family() == InitialFamily::Deterministic) return table.initial->parameter();
    return table.initial->lambda0();
}

FitResult fit_two_step(const PmfTable& table, double lambda, std::optional<FitRange> range,
                       const NelderMeadOptions& options) {
    const double p0 = table.prob(0);
    if (!(p0 > 0.0)) throw std::domain_error("fit needs a positive zero probability (mu is undefined otherwise)");
    if (!(p0 < 1.0)) throw std::domain_error("fit needs a zero probability below 1");
    if (!(lambda > 1.0)) throw std::invalid_argument("fit needs lambda > 1");
    if (!table.valid()) throw std::invalid_argument("fit needs a valid table (covered mass > 0.99)");

    const double log_gain = table.n * std::log(lambda);
    std::vector<double> xs;
    std::vector<double> ys;
    FitResult out;
    out.n = table.n;

    if (range) {
        if (range->lo < 1) throw std::invalid_argument("fit range must start at an index >= 1");
        if (range->hi < range->lo) throw std::invalid_argument("fit range is empty (hi < lo)");
        for (std::size_t l = range->lo; l <= range->hi; ++l) {
            const double p = table.prob(l);
            if (!(p > 0.0)) continue;
            xs.push_back(std::exp(std::log(static_cast<double>(l)) - log_gain));
            ys.push_back(log_gain + std::log(p));
        }
        out.fit_range = *range;
    } else {
        const double floor_log = std::log(kDefaultFitFloor);
        bool any = false;
        for (std::size_t l = 1; l < table.probs.size(); ++l) {
            const double p = table.probs[l];
            if (!(p > 0.0)) continue;
            const double y = log_gain + std::log(p);
            if (!(y > floor_log)) continue;
            if (!any) out.fit_range.lo = l;
            any = true;
            out.fit_range.hi = l;
            xs.push_back(std::exp(std::log(static_cast<double>(l)) - log_gain));
            ys.push_back(y);
        }
        if (!any) throw std::domain_error("no table entries above the default fit floor");
    }
    out.points = xs.size();
    out.underdetermined = out.points <= 2;
    if (out.points == 0) throw std::domain_error("fit range contains no positive probabilities");

    const double mu_hat = -std::log(p0);
    out.theory_params = params_condition2(initial_mean(table), lambda, kappa2_star(table.offspring));

    std::vector<double> model(xs.size());
    auto residual_at = [&](double alpha, double tau) {
        log_density(CpgParams{mu_hat, alpha, tau}, xs, model);
        double s = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double d = ys[i] - model[i];
            s += d * d;
        }
        return s;
    };
    const Objective2 objective = [&](const Point& v) { return residual_at(std::exp(v[0]), std::exp(v[1])); };

    const Point start{std::log(out.theory_params.alpha), std::log(out.theory_params.tau)};
    const NelderMeadResult nm = nelder_mead_minimize(objective, start, options);
    if (!nm.converged) {
        throw std::runtime_error("fit did not converge within " + std::to_string(options.max_iterations) +
                                 " simplex iterations");
    }
    out.params = CpgParams{mu_hat, std::exp(nm.argmin[0]), std::exp(nm.argmin[1])};
    out.residual = nm.value;
    out.start_residual = residual_at(out.theory_params.alpha, out.theory_params.tau);
    out.iterations = nm.iterations;
    return out;
}

}  // namespace gwcpg
