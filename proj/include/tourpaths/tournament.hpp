#ifndef TOURPATHS_TOURNAMENT_HPP
#define TOURPATHS_TOURNAMENT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tourpaths/numeric.hpp"

namespace tourpaths {

// An orientation of the complete graph on vertices 0..n-1.
//
// Out-neighbourhoods are stored as rows of 64-bit words; for n <= 64 every
// row is a single word and out_mask() exposes it directly. Larger n use the
// same layout with ceil(n/64) words per row. Instances are immutable once
// constructed and can only be obtained through validating factories.
class Tournament {
public:
    static constexpr std::size_t kMaskVertices = 64;

    // Validates an n x n adjacency matrix, A[i][j] = true meaning i -> j.
    // Throws ValidationError with "NotSquare", "SelfLoop(i)" or
    // "NotAntisymmetric(i,j)".
    static Tournament from_matrix(const std::vector<std::vector<bool>>& adjacency);

    std::size_t size() const noexcept { return n_; }
    bool has_edge(std::size_t from, std::size_t to) const noexcept;

    // Out-neighbour bitmask of a vertex; only valid when size() <= 64.
    std::uint64_t out_mask(std::size_t vertex) const noexcept { return bits_[vertex * words_]; }

    std::vector<std::size_t> out_neighbors(std::size_t vertex) const;
    std::size_t outdegree(std::size_t vertex) const noexcept;
    std::size_t indegree(std::size_t vertex) const noexcept { return n_ - 1 - outdegree(vertex); }

    std::vector<std::vector<bool>> matrix() const;

    friend bool operator==(const Tournament& a, const Tournament& b) = default;

private:
    friend class TournamentBuilder;
    Tournament(std::size_t n, std::size_t words, std::vector<std::uint64_t> bits)
        : n_(n), words_(words), bits_(std::move(bits)) {}

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Orients each pair of a tournament exactly once. Pairs left unset keep
// the default orientation j -> i for i < j.
class TournamentBuilder {
public:
    explicit TournamentBuilder(std::size_t n);
    // Orients the pair {a, b} as a -> b.
    TournamentBuilder& orient(std::size_t from, std::size_t to);
    Tournament build() &&;

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

struct DegreeStats {
    std::vector<std::size_t> indegrees;
    std::vector<std::size_t> outdegrees;
    // sum_v |indeg(v) - n/2|
    Rational deviation_sum;
    // deviation_sum / n^2
    Rational epsilon;
};

DegreeStats degree_stats(const Tournament& t);

// Edge i -> j iff i < j.
Tournament transitive(std::size_t n);

// Odd n only: edge i -> j iff (j - i) mod n lies in {1, ..., (n-1)/2}.
Tournament rotational(std::size_t n);

// Paley tournament on Z_q, q prime with q = 3 mod 4: i -> j iff j - i is a
// nonzero quadratic residue.
Tournament paley(std::size_t q);

// Each pair {i < j}, visited in row-major order, draws one 64-bit output of
// std::mt19937_64 seeded with `seed`; the top bit set means i -> j.
Tournament random_tournament(std::size_t n, std::uint64_t seed);

// ".trn" text: decimal n, then n rows of '0'/'1'. Single trailing newline.
std::string to_trn(const Tournament& t);
Tournament parse_trn(std::string_view text);

}  // namespace tourpaths

#endif  // TOURPATHS_TOURNAMENT_HPP
