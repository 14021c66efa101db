#ifndef TOURPATHS_PATHS_HPP
#define TOURPATHS_PATHS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tourpaths/numeric.hpp"
#include "tourpaths/tournament.hpp"

namespace tourpaths {

// A directed k-edge path is a sequence (x_0, ..., x_k) of distinct vertices
// with x_i -> x_{i+1}. In a tournament every path subgraph has exactly one
// consistent direction, so sequence counts equal subgraph counts.
using PathCount = BigInt;

// Largest tournament the subset DP accepts (table of n * 2^n entries).
inline constexpr std::size_t kMaxSubsetDpVertices = 24;

enum class Engine { Dfs, SubsetDp };

// Backtracking over path prefixes, visiting out-neighbours in increasing
// label order. k = 0 gives n, k >= n gives 0.
PathCount count_paths_dfs(const Tournament& t, std::size_t k);

// Paths whose first vertex is `root`. Summing over all roots reproduces
// count_paths_dfs, which lets callers split the work by x_0.
PathCount count_paths_dfs_from(const Tournament& t, std::size_t k, std::size_t root);

// Held-Karp style table over (vertex subset, endpoint). Entry k of the
// result is the number of k-edge paths, for k = 0..n-1.
// Throws InfeasibleError when n > kMaxSubsetDpVertices.
std::vector<PathCount> count_all_paths(const Tournament& t);

PathCount count_paths_subset_dp(const Tournament& t, std::size_t k);

PathCount count_paths(const Tournament& t, std::size_t k, Engine engine);

// 1^T A^k 1: sequences of k+1 not necessarily distinct vertices joined by
// forward edges.
BigInt count_walks(const Tournament& t, std::size_t k);

PathCount hamilton_path_count(const Tournament& t);

struct BoundPair {
    Rational upper;  // n^{k+1} / 2^k
    BigInt lower;    // binom(n, k+1)
};

BoundPair bounds(std::size_t n, std::size_t k);

// Exact comparisons against both bounds. The upper comparison is done as
// count * 2^k <= n^{k+1} over integers.
struct PathBoundCertificate {
    std::size_t n = 0;
    std::size_t k = 0;
    PathCount count;
    BoundPair bounds;
    bool lower_holds = false;
    bool upper_holds = false;

    bool passed() const noexcept { return lower_holds && upper_holds; }
};

PathBoundCertificate check_path_bounds(const Tournament& t, std::size_t k, Engine engine);

namespace detail {

// Subset DP on raw out-masks with 64-bit counts. Exact for n <= 20, where
// every count is bounded by n! < 2^64. Used by the census hot loop.
std::vector<std::uint64_t> count_all_paths_small(std::span<const std::uint64_t> out_masks);

}  // namespace detail

}  // namespace tourpaths

#endif  // TOURPATHS_PATHS_HPP
