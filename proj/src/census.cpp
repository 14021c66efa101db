#include "tourpaths/census.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include <json.hpp>

namespace tourpaths {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

void check_census_size(std::size_t n, bool force) {
    if (n == 0) throw ValidationError("EmptyTournament");
    if (n > kCensusHardMaxVertices) {
        throw InfeasibleError("census encoding supports at most " +
                              std::to_string(kCensusHardMaxVertices) + " vertices");
    }
    if (n > kCensusMaxVertices && !force) {
        throw InfeasibleError("census of n=" + std::to_string(n) + " exceeds n<=" +
                              std::to_string(kCensusMaxVertices) + " (use force to override)");
    }
}

void masks_from_code(std::size_t n, std::uint64_t code, std::uint64_t* masks) {
    for (std::size_t v = 0; v < n; ++v) masks[v] = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++bit) {
            if ((code >> bit) & 1u) {
                masks[i] |= std::uint64_t{1} << j;
            } else {
                masks[j] |= std::uint64_t{1} << i;
            }
        }
    }
}

bool is_transitive(std::size_t n, const std::uint64_t* masks) {
    // Transitive iff the score sequence is a permutation of 0..n-1.
    std::uint64_t seen = 0;
    for (std::size_t v = 0; v < n; ++v) seen |= std::uint64_t{1} << std::popcount(masks[v]);
    return seen == (std::uint64_t{1} << n) - 1;
}

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct Extremum {
    std::uint64_t value = 0;
    std::uint64_t code = kNone;

    void offer_min(std::uint64_t v, std::uint64_t c) {
        if (code == kNone || v < value || (v == value && c < code)) {
            value = v;
            code = c;
        }
    }
    void offer_max(std::uint64_t v, std::uint64_t c) {
        if (code == kNone || v > value || (v == value && c < code)) {
            value = v;
            code = c;
        }
    }
};

// Partial census over a contiguous code range; merging is associative and
// commutative under the smallest-code tie break.
struct Partial {
    std::vector<Extremum> min;
    std::vector<Extremum> max;
    std::vector<Extremum> nontransitive_min;
    std::vector<bool> transitive_ok;
    std::uint64_t scanned = 0;

    explicit Partial(std::size_t n)
        : min(n), max(n), nontransitive_min(n), transitive_ok(n, true) {}

    void merge(const Partial& other) {
        for (std::size_t k = 0; k < min.size(); ++k) {
            if (other.min[k].code != kNone) min[k].offer_min(other.min[k].value, other.min[k].code);
            if (other.max[k].code != kNone) max[k].offer_max(other.max[k].value, other.max[k].code);
            if (other.nontransitive_min[k].code != kNone) {
                nontransitive_min[k].offer_min(other.nontransitive_min[k].value,
                                               other.nontransitive_min[k].code);
            }
            transitive_ok[k] = transitive_ok[k] && other.transitive_ok[k];
        }
        scanned += other.scanned;
    }
};

Partial scan_range(std::size_t n, std::uint64_t first, std::uint64_t last) {
    Partial partial(n);
    std::vector<std::uint64_t> lower(n);
    for (std::size_t k = 0; k < n; ++k) lower[k] = binomial(n, k + 1).get_ui();
    std::uint64_t masks[64];
    for (std::uint64_t code = first; code < last; ++code) {
        masks_from_code(n, code, masks);
        const auto counts = detail::count_all_paths_small(std::span<const std::uint64_t>(masks, n));
        const bool transitive = is_transitive(n, masks);
        for (std::size_t k = 0; k < n; ++k) {
            partial.min[k].offer_min(counts[k], code);
            partial.max[k].offer_max(counts[k], code);
            if (transitive) {
                if (counts[k] != lower[k]) partial.transitive_ok[k] = false;
            } else {
                partial.nontransitive_min[k].offer_min(counts[k], code);
            }
        }
        ++partial.scanned;
    }
    return partial;
}

}  // namespace

std::uint64_t labeled_count(std::size_t n) {
    if (n == 0 || n > kCensusHardMaxVertices) {
        throw InfeasibleError("labeled enumeration supports 1 <= n <= " +
                              std::to_string(kCensusHardMaxVertices));
    }
    return std::uint64_t{1} << pair_count(n);
}

Tournament tournament_from_code(std::size_t n, std::uint64_t code) {
    if (code >= labeled_count(n)) throw ValidationError("CodeOutOfRange");
    TournamentBuilder builder(n);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++bit) {
            if ((code >> bit) & 1u) builder.orient(i, j);
        }
    }
    return std::move(builder).build();
}

std::uint64_t tournament_code(const Tournament& t) {
    const std::size_t n = t.size();
    labeled_count(n);
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++bit) {
            if (t.has_edge(i, j)) code |= std::uint64_t{1} << bit;
        }
    }
    return code;
}

LabeledTournaments::LabeledTournaments(std::size_t n, bool force) : n_(n) {
    check_census_size(n, force);
    count_ = labeled_count(n);
}

bool CensusRecord::passed() const {
    const bool sandwich = bounds.lower <= min_count && min_count <= max_count &&
                          max_count * power(2, k) <=
                              power(BigInt(static_cast<unsigned long>(n)), k + 1);
    return sandwich && transitive_attains_lower && min_count == bounds.lower;
}

std::vector<CensusRecord> census_all(std::size_t n, const CensusOptions& options) {
    check_census_size(n, options.force);
    const std::uint64_t total = labeled_count(n);
    const std::uint64_t jobs =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>({options.jobs, total, kCensusMaxWorkers}));

    std::vector<Partial> partials(jobs, Partial(n));
    std::vector<std::thread> workers;
    const std::uint64_t chunk = total / jobs;
    const std::uint64_t extra = total % jobs;
    std::uint64_t begin = 0;
    for (std::uint64_t w = 0; w < jobs; ++w) {
        const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
        if (jobs == 1) {
            partials[w] = scan_range(n, begin, end);
        } else {
            workers.emplace_back([&partials, w, n, begin, end] { partials[w] = scan_range(n, begin, end); });
        }
        begin = end;
    }
    for (auto& worker : workers) worker.join();

    Partial merged(n);
    for (const auto& p : partials) merged.merge(p);

    std::vector<CensusRecord> records;
    records.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        CensusRecord r;
        r.n = n;
        r.k = k;
        r.min_count = BigInt(static_cast<unsigned long>(merged.min[k].value));
        r.max_count = BigInt(static_cast<unsigned long>(merged.max[k].value));
        r.min_witness = merged.min[k].code;
        r.max_witness = merged.max[k].code;
        r.bounds = bounds(n, k);
        r.tournaments_scanned = merged.scanned;
        r.transitive_attains_lower = merged.transitive_ok[k];
        r.nontransitive_ties_min = merged.nontransitive_min[k].code != kNone &&
                                   merged.nontransitive_min[k].value == merged.min[k].value;
        records.push_back(std::move(r));
    }
    return records;
}

CensusRecord census(std::size_t n, std::size_t k, const CensusOptions& options) {
    if (k < n) return census_all(n, options)[k];
    check_census_size(n, options.force);
    // No tournament on n vertices has a path with more than n-1 edges.
    CensusRecord r;
    r.n = n;
    r.k = k;
    r.min_count = 0;
    r.max_count = 0;
    r.bounds = bounds(n, k);
    r.tournaments_scanned = labeled_count(n);
    r.transitive_attains_lower = true;
    r.nontransitive_ties_min = n >= 3;
    return r;
}

BigInt szele_lower_bound(std::size_t n) {
    BigInt out;
    const BigInt num = factorial(n);
    const BigInt den = power(2, n - 1);
    mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

HamiltonCensus hamilton_summary(const CensusRecord& hamilton_record) {
    HamiltonCensus h;
    h.n = hamilton_record.n;
    h.min_h = hamilton_record.min_count;
    h.max_h = hamilton_record.max_count;
    h.szele_lower = szele_lower_bound(h.n);
    return h;
}

HamiltonCensus hamilton_census(std::size_t n, const CensusOptions& options) {
    return hamilton_summary(census(n, n - 1, options));
}

std::string census_json(const CensusRecord& record) {
    nlohmann::ordered_json j;
    j["n"] = record.n;
    j["k"] = record.k;
    j["min_count"] = to_string(record.min_count);
    j["max_count"] = to_string(record.max_count);
    j["upper"] = to_string(record.bounds.upper);
    j["lower"] = to_string(record.bounds.lower);
    j["witnesses"] = {
        {"min", to_trn(tournament_from_code(record.n, record.min_witness))},
        {"max", to_trn(tournament_from_code(record.n, record.max_witness))},
    };
    j["tournaments_scanned"] = record.tournaments_scanned;
    j["transitive_attains_lower"] = record.transitive_attains_lower;
    j["nontransitive_ties_min"] = record.nontransitive_ties_min;
    j["passed"] = record.passed();
    return j.dump(2) + "\n";
}

std::string census_csv(const std::vector<CensusRecord>& records) {
    std::string out =
        "n,k,min_count,max_count,upper,lower,tournaments_scanned,transitive_attains_lower,"
        "nontransitive_ties_min,passed\n";
    for (const auto& r : records) {
        out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + to_string(r.min_count) + "," +
               to_string(r.max_count) + "," + to_string(r.bounds.upper) + "," +
               to_string(r.bounds.lower) + "," + std::to_string(r.tournaments_scanned) + "," +
               (r.transitive_attains_lower ? "true" : "false") + "," +
               (r.nontransitive_ties_min ? "true" : "false") + "," +
               (r.passed() ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace tourpaths
