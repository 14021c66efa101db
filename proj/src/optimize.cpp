#include "tourpaths/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace tourpaths {

std::vector<double> density_gradient(const FloatKernel& kernel, std::size_t k) {
    const std::size_t m = kernel.blocks();
    std::vector<double> grad(m * m, 0.0);
    if (k == 0) return grad;

    const auto forward = g_recursion(kernel, k - 1);
    std::vector<std::vector<double>> backward;
    backward.reserve(k);
    backward.emplace_back(m, 1.0);
    for (std::size_t s = 1; s < k; ++s) {
        const auto& prev = backward.back();
        std::vector<double> next(m, 0.0);
        for (std::size_t b = 0; b < m; ++b) {
            double acc = 0;
            for (std::size_t c = 0; c < m; ++c) acc += kernel(b, c) * prev[c];
            next[b] = acc / static_cast<double>(m);
        }
        backward.push_back(std::move(next));
    }

    const double scale = 1.0 / static_cast<double>(m * m);
    for (std::size_t t = 0; t < k; ++t) {
        const auto& fwd = forward[t].g;
        const auto& bwd = backward[k - 1 - t];
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) grad[a * m + b] += scale * fwd[a] * bwd[b];
        }
    }
    return grad;
}

FloatKernel kernel_from_skew(std::size_t m, const std::vector<double>& skew) {
    if (skew.size() != m * (m - 1) / 2) throw ValidationError("SkewSizeMismatch");
    std::vector<std::vector<double>> raw(m, std::vector<double>(m, 0.5));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j, ++idx) {
            raw[i][j] = 0.5 + skew[idx];
            raw[j][i] = 0.5 - skew[idx];
        }
    }
    return FloatKernel::validate(raw);
}

std::vector<double> skew_gradient(const FloatKernel& kernel, std::size_t k) {
    const std::size_t m = kernel.blocks();
    const auto grad = density_gradient(kernel, k);
    std::vector<double> out;
    out.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) out.push_back(grad[i * m + j] - grad[j * m + i]);
    }
    return out;
}

OptimizeResult maximize_density(std::size_t m, std::size_t k, std::size_t iterations,
                                double step_size, std::uint64_t seed) {
    if (m == 0) throw ValidationError("block count must be positive");
    if (k == 0) throw ValidationError("path length must be positive");
    if (iterations == 0) throw ValidationError("iterations must be positive");
    if (!(step_size > 0) || !std::isfinite(step_size)) {
        throw ValidationError("step size must be positive (got " + format_double(step_size) + ")");
    }

    std::mt19937_64 rng(seed);
    std::vector<double> skew(m * (m - 1) / 2);
    for (auto& s : skew) s = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;

    const double target = std::ldexp(1.0, -static_cast<int>(k));
    OptimizeResult best{kernel_from_skew(m, skew), 0.0, 0.0, 0, seed};
    best.density = path_density(best.kernel, k);

    for (std::size_t it = 1; it <= iterations; ++it) {
        const auto current = kernel_from_skew(m, skew);
        const auto grad = skew_gradient(current, k);
        for (std::size_t i = 0; i < skew.size(); ++i) {
            skew[i] = std::clamp(skew[i] + step_size * grad[i], -0.5, 0.5);
        }
        auto next = kernel_from_skew(m, skew);
        const double density = path_density(next, k);
        if (density > best.density) {
            best.kernel = std::move(next);
            best.density = density;
            best.best_iteration = it;
        }
    }
    best.gap = target - best.density;
    return best;
}

OptimizeResult maximize_density_multistart(std::size_t m, std::size_t k, std::size_t iterations,
                                           double step_size, std::uint64_t seed,
                                           std::size_t starts) {
    if (starts == 0) throw ValidationError("starts must be positive");
    OptimizeResult best = maximize_density(m, k, iterations, step_size, seed);
    for (std::size_t s = 1; s < starts; ++s) {
        auto candidate = maximize_density(m, k, iterations, step_size, seed + s);
        if (candidate.density > best.density) best = std::move(candidate);
    }
    return best;
}

}  // namespace tourpaths
