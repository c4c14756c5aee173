#ifndef GWCPG_ONLINE_RECURSION_HPP_
#define GWCPG_ONLINE_RECURSION_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace gwcpg {

/**
 * Self-referential power recursion shared by both generating-function
 * recursions:
 *
 *   x(0) = first
 *   x(l) = (rate / l) * sum_{k=0}^{l-1} C_p(k) w(l-k),    l = 1..max_index
 *
 * with C_1 = x and C_j = x * C_{j-1} (discrete convolution). The weight
 * sequence is w(j) = j * base(j) for the previous-generation pmf `base`;
 * weights[0] is ignored.
 *
 * The sum only references x at indices below l, so x is produced in increasing
 * l. Work is organised in fixed-size blocks: the part of each sum that touches
 * only finished blocks is evaluated first (optionally in parallel), the
 * in-block remainder sequentially. The summation order of every output is a
 * function of the block size alone, so results are bitwise identical for any
 * thread count.
 *
 * Values below the smallest normal double are flushed to zero and added to
 * `discarded_mass`. The result is trimmed after its last nonzero entry.
 */
struct PowerRecursionProblem {
    double rate = 1.0;
    int power = 1;
    std::span<const double> weights;
    double first = 0.0;
    std::size_t max_index = 0;
};

struct PowerRecursionResult {
    std::vector<double> values;
    double discarded_mass = 0.0;
};

struct PowerRecursionOptions {
    unsigned threads = 0;
    std::size_t block_size = 2048;
};

PowerRecursionResult solve_power_recursion(const PowerRecursionProblem& problem,
                                           const PowerRecursionOptions& options = {});

/// Bytes of working storage solve_power_recursion needs for this problem.
std::size_t power_recursion_workspace_bytes(int power, std::size_t max_index, std::size_t weight_count);

namespace detail {
/// sum_i a[i] * b[i] with a fixed eight-way accumulation order.
double dot(const double* a, const double* b, std::size_t n);
/// sum_i a[i] * b_last[-i].
double dot_reversed(const double* a, const double* b_last, std::size_t n);
}  // namespace detail

}  // namespace gwcpg

#endif  // GWCPG_ONLINE_RECURSION_HPP_
