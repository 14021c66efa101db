#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "tourpaths/kernel.hpp"
#include "tourpaths/paths.hpp"

using namespace tourpaths;
using tourpaths::testing::brute_force_density;
using tourpaths::testing::random_kernel;

namespace {

ExactKernel half(std::size_t m) { return ExactKernel::constant(m, Rational(1, 2)); }

ExactKernel upper_ones(std::size_t m) {
    std::vector<std::vector<Rational>> raw(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) raw[i][j] = 1;
    }
    return ExactKernel::validate(raw);
}

Rational pow2_inverse(std::size_t k) { return Rational(BigInt(1), power(2, k)); }

}  // namespace

TEST_CASE("kernel validation") {
    for (std::size_t m = 1; m <= 5; ++m) CHECK_NOTHROW(half(m));
    CHECK_THROWS_WITH(FloatKernel::validate({{0.0, 0.7}, {0.7, 0.0}}), "SkewSumExceeded(0,1)");
    CHECK_THROWS_WITH(ExactKernel::validate({{Rational(0), Rational(7, 10)}, {Rational(7, 10), Rational(0)}}),
                      "SkewSumExceeded(0,1)");
    CHECK_THROWS_WITH(ExactKernel::validate({{Rational(3, 5)}}), "SkewSumExceeded(0,0)");
    CHECK_THROWS_WITH(FloatKernel::validate({{0.0, 1.5}, {-0.5, 0.0}}), "OutOfRange(0,1)");
    CHECK_THROWS_WITH(FloatKernel::validate({{0.0, 0.2}, {0.1}}), "NotSquare");
    CHECK_THROWS_AS(FloatKernel::validate({}), ValidationError);
    CHECK_NOTHROW(upper_ones(6));

    // Float mode tolerates 1e-12 overshoot and clamps it away.
    const FloatKernel nudged = FloatKernel::validate({{0.5 + 1e-13, 1.0 + 5e-13}, {-1e-13, 0.5}});
    CHECK(nudged(0, 0) <= 0.5);
    CHECK(nudged(0, 1) <= 1.0);
    CHECK(nudged(1, 0) >= 0.0);
    CHECK(nudged(0, 1) + nudged(1, 0) <= 1.0);
    CHECK_THROWS_AS(FloatKernel::validate({{0.5 + 1e-9}}), ValidationError);
}

TEST_CASE("with_diagonal") {
    const ExactKernel k = tournament_to_kernel(rotational(5)).with_diagonal(Rational(1, 2));
    for (std::size_t i = 0; i < 5; ++i) CHECK(k(i, i) == Rational(1, 2));
    CHECK(k(0, 1) == 1);
    CHECK_THROWS_AS(half(2).with_diagonal(Rational(3, 4)), ValidationError);
}

TEST_CASE("tournament kernels") {
    const ExactKernel tri = tournament_to_kernel(rotational(3));
    CHECK(tri(0, 1) == 1);
    CHECK(tri(1, 2) == 1);
    CHECK(tri(2, 0) == 1);
    CHECK(tri(1, 0) == 0);
    CHECK(tri(0, 0) == 0);
    CHECK(tournament_to_kernel(transitive(3)) == upper_ones(3));
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK_NOTHROW(tournament_to_kernel(random_tournament(9, seed)));
}

TEST_CASE("g recursion") {
    const auto g = g_recursion(half(4), 6);
    REQUIRE(g.size() == 7);
    for (const auto& gv : g) {
        for (const auto& v : gv.g) CHECK(v == pow2_inverse(gv.t));
    }
    const auto tri = g_recursion(tournament_to_kernel(rotational(3)), 1);
    CHECK(tri[1].g == std::vector<Rational>(3, Rational(1, 3)));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto gs = g_recursion(random_kernel(1 + seed, seed), 5);
        CHECK(gs[0].g == std::vector<double>(1 + seed, 1.0));
        for (const auto& gv : gs) {
            for (double v : gv.g) {
                REQUIRE(v >= 0.0);
                REQUIRE(v <= 1.0);
            }
        }
    }
}

TEST_CASE("path density") {
    for (std::size_t k = 1; k <= 10; ++k) CHECK(path_density(half(3), k) == pow2_inverse(k));
    for (std::size_t m = 1; m <= 6; ++m) {
        for (std::size_t k = 1; k <= 4; ++k) {
            Rational expected(binomial(m, k + 1), power(BigInt(static_cast<unsigned long>(m)), k + 1));
            expected.canonicalize();
            const Rational density = path_density(upper_ones(m), k);
            CHECK(density == expected);
            CHECK(density == brute_force_density(upper_ones(m), k));
        }
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const FloatKernel kern = random_kernel(1 + seed % 5, seed);
        for (std::size_t k = 1; k <= 4; ++k) {
            CHECK(path_density(kern, k) == Catch::Approx(brute_force_density(kern, k)).epsilon(1e-12));
        }
    }
}

TEST_CASE("tournament kernels reproduce walk counts exactly") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Tournament t = random_tournament(1 + seed % 12, seed);
        const ExactKernel kern = tournament_to_kernel(t);
        const BigInt n(static_cast<unsigned long>(t.size()));
        for (std::size_t k = 0; k <= 6; ++k) {
            REQUIRE(path_density(kern, k) * Rational(power(n, k + 1)) == Rational(count_walks(t, k)));
        }
    }
}

TEST_CASE("chain trace on the constant kernel") {
    const auto trace = chain_trace(half(3), 6);
    CHECK(trace.edge_density == Rational(1, 2));
    REQUIRE(trace.steps.size() == 5);
    for (const auto& step : trace.steps) {
        CHECK(step.a == Rational(BigInt(1), power(2, 2 * step.t + 1)));
        REQUIRE(step.ratio.has_value());
        CHECK(*step.ratio == Rational(1, 4));
    }
    CHECK(trace.density == pow2_inverse(6));
    CHECK(trace.cauchy_schwarz_squared == Rational(BigInt(1), power(2, 12)));
    CHECK(judge(trace).passed());
    CHECK_THROWS_AS(chain_trace(half(3), 1), ValidationError);
}

TEST_CASE("chain trace holds exactly on tournament kernels") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const ExactKernel kern = tournament_to_kernel(random_tournament(2 + seed % 8, seed));
        for (std::size_t k = 2; k <= 5; ++k) {
            const auto trace = chain_trace(kern, k);
            const auto verdict = judge(trace);
            REQUIRE(verdict.edge_density_at_most_half);
            REQUIRE(verdict.contraction);
            REQUIRE(verdict.cauchy_schwarz);
            REQUIRE(verdict.final_bound);
            REQUIRE(verdict.density_bound);
        }
    }
    // Zero kernel: every A_t vanishes and ratios past A_0 are undefined.
    const auto zero = chain_trace(ExactKernel::constant(2, Rational(0)), 3);
    CHECK_FALSE(zero.steps[1].ratio.has_value());
    CHECK(judge(zero).passed());
}

TEST_CASE("regularity gap") {
    CHECK(regularity_gap(half(4)) == 0);
    CHECK(regularity_gap(tournament_to_kernel(rotational(3))) == Rational(1, 3));
    CHECK(regularity_gap(upper_ones(2)) == Rational(1, 2));
    CHECK(out_regularity_gap(upper_ones(2)) == Rational(1, 2));
    CHECK(in_densities(upper_ones(2)) == std::vector<Rational>{Rational(0), Rational(1, 2)});
    CHECK(out_densities(upper_ones(2)) == std::vector<Rational>{Rational(1, 2), Rational(0)});
}

TEST_CASE("balanced kernels attain 2^-k exactly") {
    // Rotational tournaments with the diagonal raised to 1/2 have every in-
    // and out-density equal to 1/2.
    for (std::size_t n : {1u, 3u, 5u, 7u, 9u}) {
        const ExactKernel kern = tournament_to_kernel(rotational(n)).with_diagonal(Rational(1, 2));
        CHECK(regularity_gap(kern) == 0);
        CHECK(out_regularity_gap(kern) == 0);
        for (std::size_t k = 1; k <= 8; ++k) CHECK(path_density(kern, k) == pow2_inverse(k));
    }
    const ExactKernel paley7 = tournament_to_kernel(paley(7)).with_diagonal(Rational(1, 2));
    for (std::size_t k = 1; k <= 8; ++k) CHECK(path_density(paley7, k) == pow2_inverse(k));
    // The raw zero-diagonal kernel falls short at finite m.
    CHECK(path_density(tournament_to_kernel(rotational(5)), 3) < pow2_inverse(3));
}

TEST_CASE(".knl parsing") {
    const StepKernel exact = parse_knl("2\n1/2 1/2\n1/2 1/2\n");
    REQUIRE(std::holds_alternative<ExactKernel>(exact));
    CHECK(std::get<ExactKernel>(exact) == half(2));

    const StepKernel mixed = parse_knl("2\n0.5 1/2\n0.25 0\n");
    REQUIRE(std::holds_alternative<ExactKernel>(mixed));
    CHECK(std::get<ExactKernel>(mixed)(1, 0) == Rational(1, 4));

    const StepKernel floats = parse_knl("2\n0.5 0.75\n0.25 0.5\n");
    REQUIRE(std::holds_alternative<FloatKernel>(floats));
    CHECK(std::get<FloatKernel>(floats)(0, 1) == 0.75);

    CHECK_THROWS_WITH(parse_knl("2\n0 0.7\n0.7 0\n"), "SkewSumExceeded(0,1)");
    CHECK_THROWS_AS(parse_knl("2\n0 0.5\n0.5\n"), ValidationError);
    CHECK_THROWS_AS(parse_knl("2\n0 x\n0.5 0\n"), ValidationError);
    CHECK_THROWS_AS(parse_knl("0\n"), ValidationError);
    CHECK_THROWS_AS(parse_knl(""), ValidationError);
    CHECK_THROWS_AS(parse_knl("1\n1/2\n\n"), ValidationError);
    CHECK_THROWS_AS(parse_knl("1\nnan\n"), ValidationError);

    // Serialized kernels parse back to the same kernel in the same mode.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const FloatKernel kern = random_kernel(1 + seed % 7, seed);
        REQUIRE(std::get<FloatKernel>(parse_knl(to_knl(kern))) == kern);
        const ExactKernel ex = tournament_to_kernel(random_tournament(1 + seed % 7, seed));
        REQUIRE(std::get<ExactKernel>(parse_knl(to_knl(ex))) == ex);
    }
}
