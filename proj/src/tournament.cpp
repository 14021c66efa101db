#include "tourpaths/tournament.hpp"

#include <bit>
#include <random>

namespace tourpaths {

namespace {

std::size_t words_for(std::size_t n) { return n == 0 ? 1 : (n + 63) / 64; }

}  // namespace

bool Tournament::has_edge(std::size_t from, std::size_t to) const noexcept {
    return (bits_[from * words_ + to / 64] >> (to % 64)) & 1u;
}

std::vector<std::size_t> Tournament::out_neighbors(std::size_t vertex) const {
    std::vector<std::size_t> out;
    out.reserve(outdegree(vertex));
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = bits_[vertex * words_ + w];
        while (word != 0) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

std::size_t Tournament::outdegree(std::size_t vertex) const noexcept {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        total += static_cast<std::size_t>(std::popcount(bits_[vertex * words_ + w]));
    }
    return total;
}

std::vector<std::vector<bool>> Tournament::matrix() const {
    std::vector<std::vector<bool>> out(n_, std::vector<bool>(n_, false));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = has_edge(i, j);
    }
    return out;
}

Tournament Tournament::from_matrix(const std::vector<std::vector<bool>>& adjacency) {
    const std::size_t n = adjacency.size();
    if (n == 0) throw ValidationError("EmptyTournament");
    for (const auto& row : adjacency) {
        if (row.size() != n) throw ValidationError("NotSquare");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (adjacency[i][i]) throw ValidationError("SelfLoop(" + std::to_string(i) + ")");
    }
    TournamentBuilder builder(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (adjacency[i][j] == adjacency[j][i]) {
                throw ValidationError("NotAntisymmetric(" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
            }
            if (adjacency[i][j]) builder.orient(i, j);
        }
    }
    return std::move(builder).build();
}

TournamentBuilder::TournamentBuilder(std::size_t n)
    : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
}

TournamentBuilder& TournamentBuilder::orient(std::size_t from, std::size_t to) {
    bits_[from * words_ + to / 64] |= std::uint64_t{1} << (to % 64);
    bits_[to * words_ + from / 64] &= ~(std::uint64_t{1} << (from % 64));
    return *this;
}

Tournament TournamentBuilder::build() && {
    if (n_ == 0) throw ValidationError("EmptyTournament");
    return Tournament(n_, words_, std::move(bits_));
}

DegreeStats degree_stats(const Tournament& t) {
    const std::size_t n = t.size();
    DegreeStats stats;
    stats.indegrees.resize(n);
    stats.outdegrees.resize(n);
    // |indeg - n/2| = |2 indeg - n| / 2
    BigInt twice_deviation = 0;
    for (std::size_t v = 0; v < n; ++v) {
        stats.outdegrees[v] = t.outdegree(v);
        stats.indegrees[v] = n - 1 - stats.outdegrees[v];
        const long diff = 2 * static_cast<long>(stats.indegrees[v]) - static_cast<long>(n);
        twice_deviation += diff < 0 ? -diff : diff;
    }
    stats.deviation_sum = Rational(twice_deviation, 2);
    stats.deviation_sum.canonicalize();
    stats.epsilon = stats.deviation_sum / Rational(BigInt(static_cast<unsigned long>(n * n)));
    stats.epsilon.canonicalize();
    return stats;
}

Tournament transitive(std::size_t n) {
    if (n == 0) throw ValidationError("EmptyTournament");
    TournamentBuilder builder(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) builder.orient(i, j);
    }
    return std::move(builder).build();
}

Tournament rotational(std::size_t n) {
    if (n == 0) throw ValidationError("EmptyTournament");
    if (n % 2 == 0) throw ValidationError("NotOdd(n=" + std::to_string(n) + ")");
    const std::size_t half = (n - 1) / 2;
    TournamentBuilder builder(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j - i <= half) builder.orient(i, j);
        }
    }
    return std::move(builder).build();
}

namespace {

bool is_prime(std::size_t q) {
    if (q < 2) return false;
    for (std::size_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

}  // namespace

Tournament paley(std::size_t q) {
    if (!is_prime(q)) throw ValidationError("NotPrime(q=" + std::to_string(q) + ")");
    if (q % 4 != 3) {
        throw ValidationError("NotThreeModFour: q ≢ 3 mod 4 (q=" + std::to_string(q) + ")");
    }
    std::vector<bool> residue(q, false);
    for (std::size_t x = 1; x < q; ++x) residue[(x * x) % q] = true;
    TournamentBuilder builder(q);
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = i + 1; j < q; ++j) {
            if (residue[j - i]) builder.orient(i, j);
        }
    }
    return std::move(builder).build();
}

Tournament random_tournament(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ValidationError("EmptyTournament");
    std::mt19937_64 rng(seed);
    TournamentBuilder builder(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng() >> 63) builder.orient(i, j);
        }
    }
    return std::move(builder).build();
}

}  // namespace tourpaths
