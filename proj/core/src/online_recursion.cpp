#include "gwcpg/online_recursion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gwcpg/parallel.hpp"

namespace gwcpg {

namespace detail {

double dot(const double* a, const double* b, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    double s4 = 0.0, s5 = 0.0, s6 = 0.0, s7 = 0.0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
        s4 += a[i + 4] * b[i + 4];
        s5 += a[i + 5] * b[i + 5];
        s6 += a[i + 6] * b[i + 6];
        s7 += a[i + 7] * b[i + 7];
    }
    for (; i < n; ++i) s0 += a[i] * b[i];
    return ((s0 + s1) + (s2 + s3)) + ((s4 + s5) + (s6 + s7));
}

double dot_reversed(const double* a, const double* b_last, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * *(b_last - i);
        s1 += a[i + 1] * *(b_last - i - 1);
        s2 += a[i + 2] * *(b_last - i - 2);
        s3 += a[i + 3] * *(b_last - i - 3);
    }
    for (; i < n; ++i) s0 += a[i] * *(b_last - i);
    return (s0 + s1) + (s2 + s3);
}

}  // namespace detail

namespace {

constexpr std::size_t kTile = 1024;
// Below this many multiply-adds per block, threads cost more than they save.
constexpr double kParallelWorkThreshold = 4.0e6;

double flush(double v, double& discarded) {
    if (v < std::numeric_limits<double>::min()) {
        if (v > 0.0) discarded += v;
        return 0.0;
    }
    return v;
}

}  // namespace

std::size_t power_recursion_workspace_bytes(int power, std::size_t max_index, std::size_t weight_count) {
    const std::size_t n = max_index + 1;
    const std::size_t p = static_cast<std::size_t>(std::max(power, 1));
    return sizeof(double) * (n * p + weight_count);
}

PowerRecursionResult solve_power_recursion(const PowerRecursionProblem& problem,
                                           const PowerRecursionOptions& options) {
    if (problem.power < 1) throw std::invalid_argument("recursion power must be >= 1");
    if (options.block_size < 1) throw std::invalid_argument("block size must be >= 1");

    ScopedFlushDenormals ftz;
    PowerRecursionResult result;
    const std::size_t L = problem.max_index;
    const std::size_t p = static_cast<std::size_t>(problem.power);

    std::vector<double>& x = result.values;
    x.assign(L + 1, 0.0);
    x[0] = flush(problem.first, result.discarded_mass);

    // Effective weight support 1..S.
    std::size_t S = problem.weights.empty() ? 0 : problem.weights.size() - 1;
    while (S > 0 && problem.weights[S] == 0.0) --S;
    if (S == 0 || L == 0) {
        x.resize(1);
        return result;
    }
    // wr[t] = w[S - t], so w(l - k) = wr[S - l + k] runs forward in k.
    std::vector<double> wr(S + 1);
    for (std::size_t t = 0; t <= S; ++t) wr[t] = problem.weights[S - t];
    wr[S] = 0.0;  // w(0) never participates

    // conv[j] holds C_{j+1}; conv[0] aliases x.
    std::vector<std::vector<double>> conv(p);
    for (std::size_t j = 1; j < p; ++j) {
        conv[j].assign(L + 1, 0.0);
        conv[j][0] = std::pow(x[0], static_cast<double>(j + 1));
    }
    auto series = [&](std::size_t j) -> const double* { return j == 0 ? x.data() : conv[j].data(); };
    const double* top = series(p - 1);

    const unsigned threads = resolve_thread_count(options.threads);
    const std::size_t B = options.block_size;
    std::vector<double> pre_x(B);
    std::vector<std::vector<double>> pre_conv(p);
    for (std::size_t j = 1; j < p; ++j) pre_conv[j].assign(B, 0.0);

    std::size_t last_nonzero = 0;
    bool finished = false;

    for (std::size_t b0 = 1; b0 <= L && !finished; b0 += B) {
        const std::size_t b1 = std::min(L + 1, b0 + B);
        const std::size_t count = b1 - b0;

        // Phase A: contributions from indices < b0 only.
        auto precompute = [&](std::size_t r0, std::size_t r1) {
            for (std::size_t r = r0; r < r1; ++r) pre_x[r] = 0.0;
            const std::size_t l_first = b0 + r0;
            const std::size_t k_min_first = l_first > S ? l_first - S : 0;
            for (std::size_t tile = (k_min_first / kTile) * kTile; tile < b0; tile += kTile) {
                const std::size_t tile_end = std::min(tile + kTile, b0);
                for (std::size_t r = r0; r < r1; ++r) {
                    const std::size_t l = b0 + r;
                    const std::size_t k_min = l > S ? l - S : 0;
                    const std::size_t lo = std::max(k_min, tile);
                    if (lo >= tile_end) continue;
                    pre_x[r] += detail::dot(top + lo, wr.data() + (S - l + lo), tile_end - lo);
                }
            }
            for (std::size_t j = 1; j < p; ++j) {
                const double* prev = series(j - 1);
                for (std::size_t r = r0; r < r1; ++r) {
                    const std::size_t l = b0 + r;
                    // i in [l - b0 + 1, b0 - 1]: both factors already known
                    const std::size_t lo = l - b0 + 1;
                    double acc = 0.0;
                    for (std::size_t tile = (lo / kTile) * kTile; tile < b0; tile += kTile) {
                        const std::size_t a = std::max(lo, tile);
                        const std::size_t e = std::min(tile + kTile, b0);
                        if (a >= e) continue;
                        acc += detail::dot_reversed(x.data() + a, prev + (l - a), e - a);
                    }
                    pre_conv[j][r] = acc;
                }
            }
        };
        const double work = static_cast<double>(count) * static_cast<double>(std::min(b0, S)) * static_cast<double>(p);
        parallel_for(count, work > kParallelWorkThreshold ? threads : 1u, precompute);

        // Phase B: sequential completion inside the block.
        for (std::size_t l = b0; l < b1; ++l) {
            const std::size_t r = l - b0;
            const std::size_t k_lo = std::max(b0, l > S ? l - S : 0);
            double s = pre_x[r];
            if (k_lo < l) s += detail::dot(top + k_lo, wr.data() + (S - l + k_lo), l - k_lo);
            x[l] = flush(problem.rate * s / static_cast<double>(l), result.discarded_mass);

            for (std::size_t j = 1; j < p; ++j) {
                const double* prev = series(j - 1);
                double c = pre_conv[j][r];
                // x old, C_{j} new: i in [0, min(l - b0, b0 - 1)]
                const std::size_t old_hi = std::min(l - b0, b0 - 1);
                c += detail::dot_reversed(x.data(), prev + l, old_hi + 1);
                // x new: i in [b0, l]
                c += detail::dot_reversed(x.data() + b0, prev + (l - b0), l - b0 + 1);
                conv[j][l] = c < std::numeric_limits<double>::min() ? 0.0 : c;
            }

            if (x[l] > 0.0) {
                last_nonzero = l;
            } else if (l > p * last_nonzero + S) {
                // Every later sum only sees zero terms.
                finished = true;
                break;
            }
        }
    }

    x.resize(last_nonzero + 1);
    return result;
}

}  // namespace gwcpg
