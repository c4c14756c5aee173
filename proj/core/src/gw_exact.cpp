#include "gwcpg/gw_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gwcpg/online_recursion.hpp"
#include "gwcpg/parallel.hpp"

namespace gwcpg {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

double ordered_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

void trim_trailing_zeros(std::vector<double>& v) {
    std::size_t n = v.size();
    while (n > 1 && v[n - 1] == 0.0) --n;
    v.resize(std::max<std::size_t>(n, 1));
}

void check_memory(int power, std::size_t max_index, std::size_t weights, const EvolveOptions& options) {
    const std::size_t need = power_recursion_workspace_bytes(power, max_index, weights);
    if (need > options.memory_cap_bytes) {
        throw std::length_error("support cap " + std::to_string(max_index) + " needs " + std::to_string(need) +
                                " bytes of recursion workspace, above the configured cap of " +
                                std::to_string(options.memory_cap_bytes));
    }
}

PowerRecursionOptions recursion_options(const EvolveOptions& options) {
    PowerRecursionOptions out;
    out.threads = options.threads;
    out.block_size = options.block_size;
    return out;
}

std::vector<double> weights_from(const std::vector<double>& probs) {
    std::vector<double> w(probs.size(), 0.0);
    for (std::size_t j = 1; j < probs.size(); ++j) w[j] = static_cast<double>(j) * probs[j];
    return w;
}

// Truncated product a*b on {0..max_index}.
std::vector<double> convolve_truncated(const std::vector<double>& a, const std::vector<double>& b,
                                       std::size_t max_index) {
    const std::size_t len = std::min(max_index + 1, a.size() + b.size() - 1);
    std::vector<double> out(len, 0.0);
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
        const std::size_t hi = std::min(k, a.size() - 1);
        if (lo > hi) continue;
        const double v = detail::dot_reversed(a.data() + lo, b.data() + (k - lo), hi - lo + 1);
        out[k] = v < kTiny ? 0.0 : v;
    }
    trim_trailing_zeros(out);
    return out;
}

}  // namespace

double PmfTable::gain() const {
    return std::exp(log_gain);
}

double PmfTable::mean() const {
    double s = 0.0;
    for (std::size_t l = 1; l < probs.size(); ++l) s += static_cast<double>(l) * probs[l];
    return s;
}

double PmfTable::variance() const {
    const double m = mean();
    double s = 0.0;
    for (std::size_t l = 0; l < probs.size(); ++l) {
        const double d = static_cast<double>(l) - m;
        s += d * d * probs[l];
    }
    return s;
}

GenerationStepper::GenerationStepper(const OffspringSpec& offspring, std::size_t max_index, EvolveOptions options)
    : options_(options) {
    if (max_index < 1) throw std::invalid_argument("support cap must be >= 1");
    table_.condition = Condition::I;
    table_.offspring = offspring;
    table_.n = 0;
    table_.max_index = max_index;
    table_.probs = {0.0, 1.0};
    table_.covered_mass = 1.0;
    table_.log_gain = 0.0;
}

const PmfTable& GenerationStepper::advance() {
    const OffspringSpec& spec = table_.offspring;
    const std::size_t L = table_.max_index;
    std::vector<double> next;
    double discarded = table_.discarded_mass;

    if (table_.n == 0) {
        // P_1 is the offspring law itself.
        const double mode = std::floor(spec.lambda());
        for (std::size_t l = 0; l <= L; ++l) {
            const double v = pmf(spec, static_cast<long long>(l));
            if (v < kTiny) {
                if (static_cast<double>(l) > mode) {
                    discarded += v;
                    break;
                }
                next.push_back(0.0);
                continue;
            }
            next.push_back(v);
        }
    } else {
        check_memory(spec.power(), L, table_.probs.size(), options_);
        const std::vector<double> w = weights_from(table_.probs);
        PowerRecursionProblem problem;
        problem.rate = spec.lambda();
        problem.power = spec.power();
        problem.weights = w;
        problem.first = pgf_eval(spec, table_.probs[0]);
        problem.max_index = L;
        PowerRecursionResult solved = solve_power_recursion(problem, recursion_options(options_));
        next = std::move(solved.values);
        discarded += solved.discarded_mass;
    }

    trim_trailing_zeros(next);
    table_.probs = std::move(next);
    table_.n += 1;
    table_.covered_mass = ordered_sum(table_.probs);
    table_.discarded_mass = discarded;
    table_.log_gain = table_.n * std::log(spec.lambda());
    return table_;
}

PmfTable evolve_condition1(const OffspringSpec& offspring, int n, std::size_t max_index,
                           const EvolveOptions& options) {
    if (n < 0) throw std::invalid_argument("generation n must be >= 0");
    GenerationStepper stepper(offspring, max_index, options);
    for (int i = 0; i < n; ++i) stepper.advance();
    return stepper.current();
}

PmfTable evolve_condition2_from(const PmfTable& condition1, const InitialSpec& initial,
                                const EvolveOptions& options) {
    if (condition1.condition != Condition::I) {
        throw std::invalid_argument("evolve_condition2_from expects a Condition-I table");
    }
    if (initial.family() == InitialFamily::Deterministic) {
        throw std::invalid_argument("deterministic initial populations are handled by convolve_power");
    }
    const std::size_t L = condition1.max_index;
    const int power = initial.family() == InitialFamily::Poisson ? 1 : initial.parameter();
    check_memory(power, L, condition1.probs.size(), options);

    const std::vector<double> w = weights_from(condition1.probs);
    PowerRecursionProblem problem;
    problem.rate = initial.lambda0();
    problem.power = power;
    problem.weights = w;
    problem.first = initial_pgf_eval(initial, condition1.probs[0]);
    problem.max_index = L;
    PowerRecursionResult solved = solve_power_recursion(problem, recursion_options(options));

    PmfTable out;
    out.condition = Condition::II;
    out.offspring = condition1.offspring;
    out.initial = initial;
    out.n = condition1.n;
    out.max_index = L;
    out.probs = std::move(solved.values);
    trim_trailing_zeros(out.probs);
    out.covered_mass = ordered_sum(out.probs);
    out.discarded_mass = solved.discarded_mass;
    out.log_gain = condition1.log_gain;
    return out;
}

PmfTable evolve_condition2(const OffspringSpec& offspring, const InitialSpec& initial, int n,
                           std::size_t max_index, const EvolveOptions& options) {
    if (n < 1) throw std::invalid_argument("Condition-II recursion needs n >= 1");
    if (initial.family() == InitialFamily::Deterministic) {
        throw std::invalid_argument("deterministic initial populations are handled by convolve_power");
    }
    return evolve_condition2_from(evolve_condition1(offspring, n, max_index, options), initial, options);
}

PmfTable evolve(const OffspringSpec& offspring, const std::optional<InitialSpec>& initial, int n,
                std::size_t max_index, const EvolveOptions& options) {
    if (!initial) return evolve_condition1(offspring, n, max_index, options);
    if (initial->family() == InitialFamily::Deterministic) {
        return convolve_power(evolve_condition1(offspring, n, max_index, options), initial->parameter(), options);
    }
    if (n == 0) {
        PmfTable out;
        out.condition = Condition::II;
        out.offspring = offspring;
        out.initial = initial;
        out.n = 0;
        out.max_index = max_index;
        const double mode = std::floor(initial->lambda0());
        for (std::size_t l = 0; l <= max_index; ++l) {
            const double v = initial_pmf(*initial, static_cast<long long>(l));
            if (v < kTiny && static_cast<double>(l) > mode) break;
            out.probs.push_back(v < kTiny ? 0.0 : v);
        }
        trim_trailing_zeros(out.probs);
        out.covered_mass = ordered_sum(out.probs);
        return out;
    }
    return evolve_condition2(offspring, *initial, n, max_index, options);
}

std::optional<PmfTable> largest_valid_condition1(const OffspringSpec& offspring, std::size_t max_index,
                                                 int n_cap, const EvolveOptions& options) {
    if (offspring.is_geometric()) {
        // Covered mass from the closed form: c/a + (cb+ad)/a^2 * (1 - r^L)/(1 - r), r = b/a.
        int best = 0;
        for (int n = 1; n <= n_cap; ++n) {
            const LinearFractional f = geometric_closed_form(offspring.lambda(), n);
            const double covered = f.prob(0) + f.head * (-std::expm1(static_cast<double>(max_index) * f.log_ratio)) /
                                                   (-std::expm1(f.log_ratio));
            if (!(covered > kValidityThreshold)) break;
            best = n;
        }
        if (best == 0) return std::nullopt;
        return geometric_table(offspring.lambda(), best, max_index);
    }

    GenerationStepper stepper(offspring, max_index, options);
    std::optional<PmfTable> best;
    while (stepper.current().n < n_cap) {
        const PmfTable& t = stepper.advance();
        if (!t.valid()) break;
        best = t;
    }
    return best;
}

double LinearFractional::prob(std::size_t l) const {
    if (l == 0) return c / a;
    return head * std::exp(static_cast<double>(l - 1) * log_ratio);
}

LinearFractional geometric_closed_form(double lambda, int n) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    if (n < 1) throw std::invalid_argument("generation n must be >= 1");
    LinearFractional f;
    if (n == 1) {
        f = LinearFractional{1.0 + lambda, lambda, 1.0, 0.0};
        f.head = lambda / ((1.0 + lambda) * (1.0 + lambda));
        f.log_ratio = std::log(lambda / (1.0 + lambda));
        return f;
    }
    const double nn = static_cast<double>(n);
    if (lambda == 1.0) {
        f = LinearFractional{1.0, nn / (nn + 1.0), nn / (nn + 1.0), -(nn - 1.0) / (nn + 1.0)};
        f.head = 1.0 / ((nn + 1.0) * (nn + 1.0));
        f.log_ratio = std::log(nn / (nn + 1.0));
        return f;
    }
    // Fixed points 1 and q = 1/lambda: (f_n - q)/(f_n - 1) = K (s - q)/(s - 1) with K = lambda^-n.
    const double q = 1.0 / lambda;
    const double K = std::exp(-nn * std::log(lambda));
    const double kq = K * q;
    const double a = 1.0 - kq;
    f = LinearFractional{1.0, (1.0 - K) / a, q * (1.0 - K) / a, -(q - K) / a};
    const double one_minus_q = 1.0 - q;
    f.head = K * one_minus_q * one_minus_q / (a * a);
    f.log_ratio = K < 0.5 ? std::log1p(-K) - std::log1p(-kq) : std::log((1.0 - K) / a);
    return f;
}

PmfTable geometric_table(double lambda, int n, std::size_t max_index) {
    if (max_index < 1) throw std::invalid_argument("support cap must be >= 1");
    PmfTable out;
    out.condition = Condition::I;
    out.offspring = OffspringSpec::geometric(lambda);
    out.n = n;
    out.max_index = max_index;
    out.log_gain = n * std::log(lambda);
    if (n == 0) {
        out.probs = {0.0, 1.0};
        out.covered_mass = 1.0;
        return out;
    }
    const LinearFractional f = geometric_closed_form(lambda, n);
    out.probs.reserve(std::min<std::size_t>(max_index + 1, 1u << 20));
    for (std::size_t l = 0; l <= max_index; ++l) {
        const double v = f.prob(l);
        if (v < kTiny) {
            if (l > 0) {
                out.discarded_mass += v;
                break;
            }
            out.probs.push_back(0.0);
            continue;
        }
        out.probs.push_back(v);
    }
    trim_trailing_zeros(out.probs);
    out.covered_mass = ordered_sum(out.probs);
    return out;
}

PmfTable convolve_power(const PmfTable& table, int k, const EvolveOptions& options) {
    if (k < 1) throw std::invalid_argument("convolution power k must be >= 1");
    const std::size_t L = table.max_index;
    const std::size_t need = 3 * (L + 1) * sizeof(double);
    if (need > options.memory_cap_bytes) throw std::length_error("convolve_power exceeds the configured memory cap");

    ScopedFlushDenormals ftz;
    std::vector<double> result{1.0};
    std::vector<double> base = table.probs;
    for (int e = k;;) {
        if (e & 1) result = convolve_truncated(result, base, L);
        e >>= 1;
        if (e == 0) break;
        base = convolve_truncated(base, base, L);
    }

    PmfTable out = table;
    out.condition = Condition::II;
    out.initial = InitialSpec::deterministic(k);
    out.probs = std::move(result);
    out.covered_mass = ordered_sum(out.probs);
    out.discarded_mass = table.discarded_mass * k;
    return out;
}

double extinction_probability(const OffspringSpec& offspring) {
    if (!(offspring.lambda() > 1.0)) {
        throw std::invalid_argument("extinction_probability needs a supercritical offspring law (lambda > 1)");
    }
    double q = 0.0;
    for (int it = 0; it < 1'000'000; ++it) {
        const double next = pgf_eval(offspring, q);
        if (std::abs(next - q) < 1e-14) return next;
        q = next;
    }
    throw std::runtime_error("extinction probability iteration did not converge");
}

ComparisonSummary scaled_comparison(const PmfTable& table, const CpgParams& cpg) {
    ComparisonSummary out;
    out.gw_zero = table.prob(0);
    out.cpg_zero = mass_at_zero(cpg);
    out.l1_distance = std::abs(out.gw_zero - out.cpg_zero);

    const std::size_t count = table.probs.size() > 1 ? table.probs.size() - 1 : 0;
    if (count == 0) return out;

    const double inv_gain = std::exp(-table.log_gain);
    std::vector<double> xs(count);
    for (std::size_t i = 0; i < count; ++i) xs[i] = static_cast<double>(i + 1) * inv_gain;
    std::vector<double> log_cpg(count);
    log_density(cpg, xs, log_cpg);

    out.points.resize(count);
    double peak = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double p = table.probs[i + 1];
        ComparisonPoint& pt = out.points[i];
        pt.x = xs[i];
        pt.scaled_gw = p > 0.0 ? std::exp(table.log_gain + std::log(p)) : 0.0;
        pt.cpg_density = std::exp(log_cpg[i]);
        peak = std::max(peak, pt.scaled_gw);
        out.l1_distance += std::abs(p - std::exp(log_cpg[i] - table.log_gain));
    }
    for (const ComparisonPoint& pt : out.points) {
        if (pt.scaled_gw < kBulkFraction * peak) continue;
        ++out.bulk_points;
        const double rel = pt.cpg_density > 0.0 ? std::abs(pt.scaled_gw - pt.cpg_density) / pt.cpg_density
                                                : std::numeric_limits<double>::infinity();
        out.bulk_max_relative_error = std::max(out.bulk_max_relative_error, rel);
    }
    return out;
}

double tail_decay_rate(const PmfTable& table, std::size_t first, std::size_t last) {
    if (last <= first) throw std::invalid_argument("tail window needs at least two points");
    const double n = static_cast<double>(last - first + 1);
    double mean_l = 0.0;
    double mean_y = 0.0;
    for (std::size_t l = first; l <= last; ++l) {
        const double p = table.prob(l);
        if (!(p > 0.0)) {
            throw std::domain_error("tail window contains a zero probability at index " + std::to_string(l));
        }
        mean_l += static_cast<double>(l);
        mean_y += std::log(p);
    }
    mean_l /= n;
    mean_y /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t l = first; l <= last; ++l) {
        const double dx = static_cast<double>(l) - mean_l;
        sxy += dx * (std::log(table.prob(l)) - mean_y);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace gwcpg
