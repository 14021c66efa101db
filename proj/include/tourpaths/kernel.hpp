#ifndef TOURPATHS_KERNEL_HPP
#define TOURPATHS_KERNEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "tourpaths/numeric.hpp"
#include "tourpaths/tournament.hpp"

namespace tourpaths {

// Slack used for every inequality check done in floating point.
inline constexpr double kFloatInequalitySlack = 1e-12;

// Step function on [0,1]^2, constant on the cells of the uniform m x m grid,
// with values in [0,1] and w[i][j] + w[j][i] <= 1 (so the diagonal is at
// most 1/2). Scalar is Rational for exact mode or double for float mode.
// Float kernels are validated with kFloatInequalitySlack and then clamped
// into the feasible set.
template <class Scalar>
class BasicKernel {
public:
    static BasicKernel validate(const std::vector<std::vector<Scalar>>& raw);
    static BasicKernel constant(std::size_t m, const Scalar& value);

    std::size_t blocks() const noexcept { return m_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const noexcept { return w_[i * m_ + j]; }
    std::span<const Scalar> values() const noexcept { return w_; }

    // Same kernel with every diagonal cell replaced by `value` (<= 1/2).
    BasicKernel with_diagonal(const Scalar& value) const;

    friend bool operator==(const BasicKernel&, const BasicKernel&) = default;

private:
    BasicKernel(std::size_t m, std::vector<Scalar> w) : m_(m), w_(std::move(w)) {}
    static BasicKernel checked(std::size_t m, std::vector<Scalar> w);

    std::size_t m_ = 0;
    std::vector<Scalar> w_;
};

using ExactKernel = BasicKernel<Rational>;
using FloatKernel = BasicKernel<double>;
using StepKernel = std::variant<ExactKernel, FloatKernel>;

// g_t on the blocks: g_0 = 1, g_t[j] = (1/m) sum_i g_{t-1}[i] w[i][j].
template <class Scalar>
struct GVector {
    std::size_t t = 0;
    std::vector<Scalar> g;
};

// A_t = (1/m^2) sum_{y,z} g_t[y]^2 w[y][z] for t = 1..k-1, with the ratio to
// A_{t-1} (A_0 is the edge density). Absent ratio means A_{t-1} = 0.
template <class Scalar>
struct ChainStep {
    std::size_t t = 0;
    Scalar a;
    std::optional<Scalar> ratio;
};

template <class Scalar>
struct ChainTrace {
    std::size_t k = 0;
    Scalar edge_density;              // e = A_0
    std::vector<ChainStep<Scalar>> steps;
    Scalar density;                   // mean of g_k
    Scalar final_a;                   // A_{k-1}
    Scalar cauchy_schwarz_squared;    // A_{k-1} * e
};

ExactKernel tournament_to_kernel(const Tournament& t);

// ".knl" text: decimal m, then m rows of m tokens (decimal or "p/q"). Any
// "p/q" token puts the whole kernel in exact mode.
StepKernel parse_knl(std::string_view text);
std::string to_knl(const ExactKernel& kernel);
std::string to_knl(const FloatKernel& kernel);

FloatKernel to_float(const ExactKernel& kernel);

namespace detail {

template <class Scalar>
Scalar from_count(std::size_t value) {
    if constexpr (std::is_floating_point_v<Scalar>) {
        return static_cast<Scalar>(value);
    } else {
        return Scalar(static_cast<unsigned long>(value));
    }
}

template <class Scalar>
Scalar magnitude(const Scalar& x) {
    if constexpr (std::is_floating_point_v<Scalar>) {
        return std::fabs(x);
    } else {
        return Scalar(abs(x));
    }
}

template <class Scalar>
Scalar two_to_minus(std::size_t k) {
    if constexpr (std::is_floating_point_v<Scalar>) {
        return std::ldexp(1.0, -static_cast<int>(k));
    } else {
        return Rational(BigInt(1), power(2, k));
    }
}

std::string index_pair(std::size_t i, std::size_t j);

}  // namespace detail

template <class Scalar>
BasicKernel<Scalar> BasicKernel<Scalar>::checked(std::size_t m, std::vector<Scalar> w) {
    if (m == 0) throw ValidationError("EmptyKernel");
    const Scalar zero(0);
    const Scalar one(1);
    if constexpr (std::is_floating_point_v<Scalar>) {
        const double tol = kFloatInequalitySlack;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const double v = w[i * m + j];
                if (!(v >= -tol && v <= 1.0 + tol)) {
                    throw ValidationError("OutOfRange" + detail::index_pair(i, j));
                }
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                if (w[i * m + j] + w[j * m + i] > 1.0 + tol) {
                    throw ValidationError("SkewSumExceeded" + detail::index_pair(i, j));
                }
            }
        }
        for (auto& v : w) v = std::clamp(v, 0.0, 1.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                double& a = w[i * m + j];
                double& b = w[j * m + i];
                if (i == j) {
                    a = std::min(a, 0.5);
                } else if (a + b > 1.0) {
                    const double excess = (a + b - 1.0) / 2;
                    a = std::max(0.0, a - excess);
                    b = std::min(b - excess, 1.0 - a);
                }
            }
        }
    } else {
        for (auto& v : w) v.canonicalize();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const Scalar& v = w[i * m + j];
                if (v < zero || v > one) throw ValidationError("OutOfRange" + detail::index_pair(i, j));
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                if (Scalar(w[i * m + j] + w[j * m + i]) > one) {
                    throw ValidationError("SkewSumExceeded" + detail::index_pair(i, j));
                }
            }
        }
    }
    return BasicKernel(m, std::move(w));
}

template <class Scalar>
BasicKernel<Scalar> BasicKernel<Scalar>::validate(const std::vector<std::vector<Scalar>>& raw) {
    const std::size_t m = raw.size();
    std::vector<Scalar> w;
    w.reserve(m * m);
    for (const auto& row : raw) {
        if (row.size() != m) throw ValidationError("NotSquare");
        w.insert(w.end(), row.begin(), row.end());
    }
    return checked(m, std::move(w));
}

template <class Scalar>
BasicKernel<Scalar> BasicKernel<Scalar>::constant(std::size_t m, const Scalar& value) {
    return checked(m, std::vector<Scalar>(m * m, value));
}

template <class Scalar>
BasicKernel<Scalar> BasicKernel<Scalar>::with_diagonal(const Scalar& value) const {
    std::vector<Scalar> w = w_;
    for (std::size_t i = 0; i < m_; ++i) w[i * m_ + i] = value;
    return checked(m_, std::move(w));
}

template <class Scalar>
std::vector<GVector<Scalar>> g_recursion(const BasicKernel<Scalar>& kernel, std::size_t k) {
    const std::size_t m = kernel.blocks();
    const Scalar inv_m = Scalar(1) / detail::from_count<Scalar>(m);
    std::vector<GVector<Scalar>> out;
    out.reserve(k + 1);
    out.push_back({0, std::vector<Scalar>(m, Scalar(1))});
    for (std::size_t t = 1; t <= k; ++t) {
        const auto& prev = out.back().g;
        std::vector<Scalar> g(m, Scalar(0));
        for (std::size_t j = 0; j < m; ++j) {
            Scalar acc(0);
            for (std::size_t i = 0; i < m; ++i) acc += prev[i] * kernel(i, j);
            g[j] = acc * inv_m;
        }
        out.push_back({t, std::move(g)});
    }
    return out;
}

template <class Scalar>
Scalar mean(std::span<const Scalar> values) {
    Scalar acc(0);
    for (const auto& v : values) acc += v;
    return Scalar(acc / detail::from_count<Scalar>(values.size()));
}

// Integral of f(x_0,x_1)...f(x_{k-1},x_k); k = 0 gives 1.
template <class Scalar>
Scalar path_density(const BasicKernel<Scalar>& kernel, std::size_t k) {
    const auto g = g_recursion(kernel, k);
    return mean<Scalar>(g.back().g);
}

template <class Scalar>
Scalar edge_density(const BasicKernel<Scalar>& kernel) {
    return mean<Scalar>(kernel.values());
}

// d[i] = (1/m) sum_x w[x][i]
template <class Scalar>
std::vector<Scalar> in_densities(const BasicKernel<Scalar>& kernel) {
    const std::size_t m = kernel.blocks();
    std::vector<Scalar> d(m, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
        Scalar acc(0);
        for (std::size_t x = 0; x < m; ++x) acc += kernel(x, i);
        d[i] = acc / detail::from_count<Scalar>(m);
    }
    return d;
}

// (1/m) sum_j w[i][j]
template <class Scalar>
std::vector<Scalar> out_densities(const BasicKernel<Scalar>& kernel) {
    const std::size_t m = kernel.blocks();
    std::vector<Scalar> d(m, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
        Scalar acc(0);
        for (std::size_t j = 0; j < m; ++j) acc += kernel(i, j);
        d[i] = acc / detail::from_count<Scalar>(m);
    }
    return d;
}

namespace detail {

template <class Scalar>
Scalar gap_of(const std::vector<Scalar>& densities) {
    std::vector<Scalar> terms;
    terms.reserve(densities.size());
    for (const auto& d : densities) terms.push_back(magnitude<Scalar>(Scalar(1) - Scalar(2) * d));
    return mean<Scalar>(terms);
}

}  // namespace detail

// Integral of |1 - 2 d(x)| over the in-densities. Zero iff every block has
// in-density exactly 1/2.
template <class Scalar>
Scalar regularity_gap(const BasicKernel<Scalar>& kernel) {
    return detail::gap_of(in_densities(kernel));
}

template <class Scalar>
Scalar out_regularity_gap(const BasicKernel<Scalar>& kernel) {
    return detail::gap_of(out_densities(kernel));
}

// Requires k >= 2.
template <class Scalar>
ChainTrace<Scalar> chain_trace(const BasicKernel<Scalar>& kernel, std::size_t k) {
    if (k < 2) throw ValidationError("chain trace needs k >= 2 (k=" + std::to_string(k) + ")");
    const std::size_t m = kernel.blocks();
    const auto g = g_recursion(kernel, k);
    const Scalar cells = detail::from_count<Scalar>(m * m);

    ChainTrace<Scalar> trace;
    trace.k = k;
    trace.edge_density = edge_density(kernel);
    Scalar previous = trace.edge_density;
    for (std::size_t t = 1; t + 1 <= k; ++t) {
        Scalar acc(0);
        for (std::size_t y = 0; y < m; ++y) {
            Scalar row(0);
            for (std::size_t z = 0; z < m; ++z) row += kernel(y, z);
            acc += g[t].g[y] * g[t].g[y] * row;
        }
        ChainStep<Scalar> step;
        step.t = t;
        step.a = acc / cells;
        if (previous != Scalar(0)) step.ratio = Scalar(step.a / previous);
        previous = step.a;
        trace.steps.push_back(std::move(step));
    }
    trace.density = mean<Scalar>(g[k].g);
    trace.final_a = trace.steps.back().a;
    trace.cauchy_schwarz_squared = trace.final_a * trace.edge_density;
    return trace;
}

// Verdicts on a chain trace. Exact traces are compared without slack;
// float traces allow kFloatInequalitySlack on each comparison.
struct ChainVerdict {
    bool edge_density_at_most_half = false;
    bool contraction = false;         // A_t <= A_{t-1}/4 for every t >= 1
    bool cauchy_schwarz = false;      // density <= sqrt(A_{k-1} e)
    bool final_bound = false;         // sqrt(A_{k-1} e) <= 2^{-k}
    bool density_bound = false;       // density <= 2^{-k}

    bool passed() const noexcept {
        return edge_density_at_most_half && contraction && cauchy_schwarz && final_bound &&
               density_bound;
    }
};

template <class Scalar>
ChainVerdict judge(const ChainTrace<Scalar>& trace) {
    ChainVerdict v;
    const Scalar limit = detail::two_to_minus<Scalar>(trace.k);
    if constexpr (std::is_floating_point_v<Scalar>) {
        const double s = kFloatInequalitySlack;
        v.edge_density_at_most_half = trace.edge_density <= 0.5 + s;
        v.contraction = true;
        double previous = trace.edge_density;
        for (const auto& step : trace.steps) {
            if (step.a > previous / 4 + s) v.contraction = false;
            previous = step.a;
        }
        const double cs = std::sqrt(trace.cauchy_schwarz_squared);
        v.cauchy_schwarz = trace.density <= cs + s;
        v.final_bound = cs <= limit + s;
        v.density_bound = trace.density <= limit + s;
    } else {
        v.edge_density_at_most_half = trace.edge_density <= Rational(1, 2);
        v.contraction = true;
        Rational previous = trace.edge_density;
        for (const auto& step : trace.steps) {
            if (step.a * 4 > previous) v.contraction = false;
            previous = step.a;
        }
        v.cauchy_schwarz = Rational(trace.density * trace.density) <= trace.cauchy_schwarz_squared;
        v.final_bound = trace.cauchy_schwarz_squared <= Rational(limit * limit);
        v.density_bound = trace.density <= limit;
    }
    return v;
}

}  // namespace tourpaths

#endif  // TOURPATHS_KERNEL_HPP
