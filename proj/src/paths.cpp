#include "tourpaths/paths.hpp"

#include <bit>
#include <string>

namespace tourpaths {

namespace {

// Counts extensions of the current prefix ending at `v` by `remaining` edges.
std::uint64_t extend_masked(std::span<const std::uint64_t> out, std::size_t v,
                            std::uint64_t visited, std::size_t remaining) {
    std::uint64_t next = out[v] & ~visited;
    if (remaining == 1) return static_cast<std::uint64_t>(std::popcount(next));
    std::uint64_t total = 0;
    while (next != 0) {
        const auto u = static_cast<std::size_t>(std::countr_zero(next));
        next &= next - 1;
        total += extend_masked(out, u, visited | (std::uint64_t{1} << u), remaining - 1);
    }
    return total;
}

std::uint64_t extend_listed(const std::vector<std::vector<std::size_t>>& out, std::size_t v,
                            std::vector<char>& visited, std::size_t remaining) {
    std::uint64_t total = 0;
    for (std::size_t u : out[v]) {
        if (visited[u]) continue;
        if (remaining == 1) {
            ++total;
            continue;
        }
        visited[u] = 1;
        total += extend_listed(out, u, visited, remaining - 1);
        visited[u] = 0;
    }
    return total;
}

std::vector<std::uint64_t> masks_of(const Tournament& t) {
    std::vector<std::uint64_t> out(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) out[v] = t.out_mask(v);
    return out;
}

// Arithmetic policies for the subset DP. Wrapping 64-bit addition is exact
// while counts stay below 2^64; the Mersenne-61 residue gives a second
// modulus so larger counts can be recovered by CRT.
struct Wrap64 {
    static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return a + b; }
};

struct Mersenne61 {
    static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;
    static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = a + b;
        return s >= kModulus ? s - kModulus : s;
    }
};

template <class Ring>
std::vector<std::uint64_t> subset_dp(std::span<const std::uint64_t> out_masks) {
    const std::size_t n = out_masks.size();
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::uint64_t> totals(n, 0);
    std::vector<std::uint64_t> table(subsets * n, 0);
    for (std::size_t v = 0; v < n; ++v) table[(std::size_t{1} << v) * n + v] = 1;

    // S | {u} > S numerically, so ascending order finishes every subset
    // before any superset reads it.
    for (std::size_t set = 1; set < subsets; ++set) {
        const std::size_t layer = static_cast<std::size_t>(std::popcount(set)) - 1;
        std::uint64_t members = set;
        while (members != 0) {
            const auto v = static_cast<std::size_t>(std::countr_zero(members));
            members &= members - 1;
            const std::uint64_t here = table[set * n + v];
            if (here == 0) continue;
            totals[layer] = Ring::add(totals[layer], here);
            std::uint64_t next = out_masks[v] & ~static_cast<std::uint64_t>(set);
            while (next != 0) {
                const auto u = static_cast<std::size_t>(std::countr_zero(next));
                next &= next - 1;
                auto& cell = table[(set | (std::size_t{1} << u)) * n + u];
                cell = Ring::add(cell, here);
            }
        }
    }
    return totals;
}

// Unique x in [0, 2^64 * p) with x = a mod 2^64 and x = b mod p.
BigInt crt_recover(std::uint64_t a, std::uint64_t b) {
    const BigInt two64 = power(2, 64);
    const BigInt p(static_cast<unsigned long>(Mersenne61::kModulus));
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), BigInt(two64 % p).get_mpz_t(), p.get_mpz_t());
    BigInt a_big(static_cast<unsigned long>(a));
    BigInt diff = BigInt(static_cast<unsigned long>(b)) - a_big;
    BigInt m = (diff % p + p) % p;
    m = (m * inv) % p;
    return a_big + two64 * m;
}

void require_subset_dp_feasible(const Tournament& t) {
    if (t.size() > kMaxSubsetDpVertices) {
        throw InfeasibleError("subset-dp supports at most " + std::to_string(kMaxSubsetDpVertices) +
                              " vertices (n=" + std::to_string(t.size()) + ")");
    }
}

}  // namespace

namespace detail {

std::vector<std::uint64_t> count_all_paths_small(std::span<const std::uint64_t> out_masks) {
    return subset_dp<Wrap64>(out_masks);
}

}  // namespace detail

PathCount count_paths_dfs_from(const Tournament& t, std::size_t k, std::size_t root) {
    const std::size_t n = t.size();
    if (root >= n) throw ValidationError("VertexOutOfRange(" + std::to_string(root) + ")");
    if (k >= n) return 0;
    if (k == 0) return 1;
    std::uint64_t total = 0;
    if (n <= Tournament::kMaskVertices) {
        const auto masks = masks_of(t);
        total = extend_masked(masks, root, std::uint64_t{1} << root, k);
    } else {
        std::vector<std::vector<std::size_t>> out(n);
        for (std::size_t v = 0; v < n; ++v) out[v] = t.out_neighbors(v);
        std::vector<char> visited(n, 0);
        visited[root] = 1;
        total = extend_listed(out, root, visited, k);
    }
    return BigInt(static_cast<unsigned long>(total));
}

PathCount count_paths_dfs(const Tournament& t, std::size_t k) {
    const std::size_t n = t.size();
    if (k >= n) return 0;
    if (k == 0) return BigInt(static_cast<unsigned long>(n));
    PathCount total = 0;
    for (std::size_t root = 0; root < n; ++root) total += count_paths_dfs_from(t, k, root);
    return total;
}

std::vector<PathCount> count_all_paths(const Tournament& t) {
    require_subset_dp_feasible(t);
    const auto masks = masks_of(t);
    const auto wrapped = subset_dp<Wrap64>(masks);
    std::vector<PathCount> out(t.size());
    // Every count is at most n!, which fits in 64 bits up to n = 20.
    if (t.size() <= 20) {
        for (std::size_t k = 0; k < t.size(); ++k) out[k] = BigInt(static_cast<unsigned long>(wrapped[k]));
        return out;
    }
    const auto residues = subset_dp<Mersenne61>(masks);
    for (std::size_t k = 0; k < t.size(); ++k) out[k] = crt_recover(wrapped[k], residues[k]);
    return out;
}

PathCount count_paths_subset_dp(const Tournament& t, std::size_t k) {
    require_subset_dp_feasible(t);
    if (k >= t.size()) return 0;
    return count_all_paths(t)[k];
}

PathCount count_paths(const Tournament& t, std::size_t k, Engine engine) {
    return engine == Engine::Dfs ? count_paths_dfs(t, k) : count_paths_subset_dp(t, k);
}

BigInt count_walks(const Tournament& t, std::size_t k) {
    const std::size_t n = t.size();
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t v = 0; v < n; ++v) out[v] = t.out_neighbors(v);
    // walks[v] = number of walks of the current length starting at v
    std::vector<BigInt> walks(n, BigInt(1));
    std::vector<BigInt> next(n);
    for (std::size_t step = 0; step < k; ++step) {
        for (std::size_t v = 0; v < n; ++v) {
            next[v] = 0;
            for (std::size_t u : out[v]) next[v] += walks[u];
        }
        walks.swap(next);
    }
    BigInt total = 0;
    for (const auto& w : walks) total += w;
    return total;
}

PathCount hamilton_path_count(const Tournament& t) {
    return count_paths_subset_dp(t, t.size() - 1);
}

BoundPair bounds(std::size_t n, std::size_t k) {
    if (n == 0) throw ValidationError("EmptyTournament");
    BoundPair out;
    out.upper = Rational(power(BigInt(static_cast<unsigned long>(n)), k + 1), power(2, k));
    out.upper.canonicalize();
    out.lower = binomial(n, k + 1);
    return out;
}

PathBoundCertificate check_path_bounds(const Tournament& t, std::size_t k, Engine engine) {
    PathBoundCertificate cert;
    cert.n = t.size();
    cert.k = k;
    cert.count = count_paths(t, k, engine);
    cert.bounds = bounds(cert.n, k);
    cert.lower_holds = cert.bounds.lower <= cert.count;
    cert.upper_holds = cert.count * power(2, k) <= power(BigInt(static_cast<unsigned long>(cert.n)), k + 1);
    return cert;
}

}  // namespace tourpaths
