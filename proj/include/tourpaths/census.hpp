#ifndef TOURPATHS_CENSUS_HPP
#define TOURPATHS_CENSUS_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "tourpaths/numeric.hpp"
#include "tourpaths/paths.hpp"
#include "tourpaths/tournament.hpp"

namespace tourpaths {

// Largest n the census accepts without `force`.
inline constexpr std::size_t kCensusMaxVertices = 7;
// Largest n any census accepts: the encoding must fit in 64 bits.
inline constexpr std::size_t kCensusHardMaxVertices = 11;

// Labeled tournaments are encoded by their upper triangle: pair (i, j),
// i < j, taken in row-major order, is bit p of the code (p = 0 is the pair
// (0, 1)); a set bit means i -> j.
std::uint64_t labeled_count(std::size_t n);
Tournament tournament_from_code(std::size_t n, std::uint64_t code);
std::uint64_t tournament_code(const Tournament& t);

// All 2^{n(n-1)/2} labeled tournaments on n vertices in increasing code
// order. Throws InfeasibleError for n > kCensusMaxVertices unless forced.
class LabeledTournaments {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Tournament;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(std::size_t n, std::uint64_t code) : n_(n), code_(code) {}
        Tournament operator*() const { return tournament_from_code(n_, code_); }
        iterator& operator++() {
            ++code_;
            return *this;
        }
        void operator++(int) { ++code_; }
        std::uint64_t code() const noexcept { return code_; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_; }

    private:
        std::size_t n_ = 0;
        std::uint64_t code_ = 0;
    };

    LabeledTournaments(std::size_t n, bool force = false);
    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, count_}; }
    std::uint64_t size() const noexcept { return count_; }

private:
    std::size_t n_;
    std::uint64_t count_;
};

// Worker threads are capped here; results do not depend on the count.
inline constexpr std::size_t kCensusMaxWorkers = 256;

struct CensusOptions {
    std::size_t jobs = 1;
    bool force = false;
};

struct CensusRecord {
    std::size_t n = 0;
    std::size_t k = 0;
    PathCount min_count;
    PathCount max_count;
    std::uint64_t min_witness = 0;  // smallest code attaining the minimum
    std::uint64_t max_witness = 0;  // smallest code attaining the maximum
    BoundPair bounds;
    std::uint64_t tournaments_scanned = 0;
    // Every labeled transitive tournament has exactly binom(n, k+1) paths.
    bool transitive_attains_lower = false;
    // Some non-transitive tournament also attains the minimum.
    bool nontransitive_ties_min = false;

    // lower <= min <= max, max * 2^k <= n^{k+1}, transitive minimum.
    bool passed() const;
};

// One scan over all labeled tournaments; record k for k = 0..n-1.
std::vector<CensusRecord> census_all(std::size_t n, const CensusOptions& options = {});

CensusRecord census(std::size_t n, std::size_t k, const CensusOptions& options = {});

struct HamiltonCensus {
    std::size_t n = 0;
    PathCount min_h;
    PathCount max_h;
    PathCount szele_lower;  // ceil(n! / 2^{n-1})
    bool passed() const { return min_h >= 1 && max_h >= szele_lower; }
};

HamiltonCensus hamilton_census(std::size_t n, const CensusOptions& options = {});
HamiltonCensus hamilton_summary(const CensusRecord& hamilton_record);

BigInt szele_lower_bound(std::size_t n);

// Fixed field order: n, k, min_count, max_count, upper, lower,
// witnesses {min, max}, tournaments_scanned, transitive_attains_lower,
// nontransitive_ties_min, passed. Serialized with two-space indent and a
// trailing newline.
std::string census_json(const CensusRecord& record);

// Header plus one row per record.
std::string census_csv(const std::vector<CensusRecord>& records);

}  // namespace tourpaths

#endif  // TOURPATHS_CENSUS_HPP
