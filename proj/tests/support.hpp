#ifndef TOURPATHS_TESTS_SUPPORT_HPP
#define TOURPATHS_TESTS_SUPPORT_HPP

// Test-only oracles. Each one works straight from the adjacency matrix or
// the kernel cells and shares no code path with the library engines.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "tourpaths/kernel.hpp"
#include "tourpaths/tournament.hpp"

namespace tourpaths::testing {

// Every sequence of k+1 vertices (repeats allowed), filtered afterwards.
inline void for_each_sequence(std::size_t n, std::size_t length,
                              const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> seq(length, 0);
    while (true) {
        visit(seq);
        std::size_t pos = 0;
        while (pos < length && ++seq[pos] == n) seq[pos++] = 0;
        if (pos == length) return;
    }
}

inline std::uint64_t brute_force_paths(const Tournament& t, std::size_t k) {
    const auto a = t.matrix();
    std::uint64_t count = 0;
    for_each_sequence(t.size(), k + 1, [&](const std::vector<std::size_t>& s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (s[i] == s[j]) return;
            }
        }
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (!a[s[i]][s[i + 1]]) return;
        }
        ++count;
    });
    return count;
}

inline std::uint64_t brute_force_walks(const Tournament& t, std::size_t k) {
    const auto a = t.matrix();
    std::uint64_t count = 0;
    for_each_sequence(t.size(), k + 1, [&](const std::vector<std::size_t>& s) {
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (!a[s[i]][s[i + 1]]) return;
        }
        ++count;
    });
    return count;
}

// Direct summation of the multilinear form over all m^{k+1} cell sequences.
template <class Scalar>
Scalar brute_force_density(const BasicKernel<Scalar>& kernel, std::size_t k) {
    const std::size_t m = kernel.blocks();
    Scalar total(0);
    std::size_t sequences = 0;
    for_each_sequence(m, k + 1, [&](const std::vector<std::size_t>& s) {
        Scalar prod(1);
        for (std::size_t i = 0; i + 1 < s.size(); ++i) prod *= kernel(s[i], s[i + 1]);
        total += prod;
        ++sequences;
    });
    return Scalar(total / Scalar(static_cast<double>(sequences)));
}

inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Random valid float kernel: cells uniform in [0,1], each off-diagonal pair
// rescaled onto the simplex when it overshoots, diagonal uniform in [0,1/2].
inline FloatKernel random_kernel(std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> raw(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        raw[i][i] = 0.5 * uniform01(rng);
        for (std::size_t j = i + 1; j < m; ++j) {
            double a = uniform01(rng);
            double b = uniform01(rng);
            if (a + b > 1.0) {
                const double s = a + b;
                a /= s;
                b = 1.0 - a;
            }
            raw[i][j] = a;
            raw[j][i] = b;
        }
    }
    return FloatKernel::validate(raw);
}

// Kernel on the w + w^T = 1 boundary near the constant 1/2 kernel: skews
// uniform in [-amplitude, amplitude], diagonal 1/2. Densities sit just
// under 2^-k, which is where rounding slack matters.
inline FloatKernel random_boundary_kernel(std::size_t m, std::uint64_t seed, double amplitude) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> raw(m, std::vector<double>(m, 0.5));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double s = amplitude * (2 * uniform01(rng) - 1);
            raw[i][j] = 0.5 + s;
            raw[j][i] = 0.5 - s;
        }
    }
    return FloatKernel::validate(raw);
}

// Central difference of path_density in cell (a, b), moving only that cell.
inline double central_difference(const FloatKernel& kernel, std::size_t k, std::size_t a,
                                 std::size_t b, double h) {
    const std::size_t m = kernel.blocks();
    auto shifted = [&](double delta) {
        std::vector<double> cells(kernel.values().begin(), kernel.values().end());
        cells[a * m + b] += delta;
        // Multilinear sum evaluated directly; no feasibility check so the
        // probe may step just outside the box.
        std::vector<double> g(m, 1.0);
        for (std::size_t t = 0; t < k; ++t) {
            std::vector<double> next(m, 0.0);
            for (std::size_t j = 0; j < m; ++j) {
                for (std::size_t i = 0; i < m; ++i) next[j] += g[i] * cells[i * m + j];
                next[j] /= static_cast<double>(m);
            }
            g = next;
        }
        double total = 0;
        for (double v : g) total += v;
        return total / static_cast<double>(m);
    };
    return (shifted(h) - shifted(-h)) / (2 * h);
}

}  // namespace tourpaths::testing

#endif  // TOURPATHS_TESTS_SUPPORT_HPP
