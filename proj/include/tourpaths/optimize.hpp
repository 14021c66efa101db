#ifndef TOURPATHS_OPTIMIZE_HPP
#define TOURPATHS_OPTIMIZE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tourpaths/kernel.hpp"

namespace tourpaths {

// Tolerance for comparing the analytic density gradient with finite
// differences.
inline constexpr double kGradientCheckTolerance = 1e-6;

// Partial derivatives of path_density with respect to every cell value,
// row-major m x m:
//   d density / d w[a][b] = (1/m^2) sum_{t=0}^{k-1} fwd_t[a] * bwd_{k-1-t}[b]
// where fwd_t is the g-recursion and bwd_s[b] = (1/m) sum_c w[b][c] bwd_{s-1}[c]
// with bwd_0 = 1.
std::vector<double> density_gradient(const FloatKernel& kernel, std::size_t k);

// Kernel on the tournament-limit boundary: diagonal 1/2 and
// w[i][j] = 1/2 + s, w[j][i] = 1/2 - s for the strict upper entries s of
// `skew` (row-major over i < j, each in [-1/2, 1/2]).
FloatKernel kernel_from_skew(std::size_t m, const std::vector<double>& skew);

// Gradient of path_density with respect to the strict upper skew entries.
std::vector<double> skew_gradient(const FloatKernel& kernel, std::size_t k);

struct OptimizeResult {
    FloatKernel kernel;
    double density = 0;
    double gap = 0;  // 2^{-k} - density
    std::size_t best_iteration = 0;
    std::uint64_t seed = 0;
};

// Projected gradient ascent of path_density over antisymmetric skews with a
// constant step. The starting skew is drawn uniformly from [-1/2, 1/2] by
// std::mt19937_64(seed); each step is followed by an entrywise clamp back
// into [-1/2, 1/2]. Returns the best iterate seen.
OptimizeResult maximize_density(std::size_t m, std::size_t k, std::size_t iterations,
                                double step_size, std::uint64_t seed);

// Runs `starts` independent ascents, start i seeded with seed + i, and keeps
// the best (lowest start index on ties).
OptimizeResult maximize_density_multistart(std::size_t m, std::size_t k, std::size_t iterations,
                                           double step_size, std::uint64_t seed,
                                           std::size_t starts);

}  // namespace tourpaths

#endif  // TOURPATHS_OPTIMIZE_HPP
