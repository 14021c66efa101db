#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "tourpaths/census.hpp"

using namespace tourpaths;

namespace {

struct Expected {
    std::uint64_t min;
    std::uint64_t max;
    std::uint64_t max_code;
};

// Brute-force enumeration of every injective vertex sequence over every
// labeled tournament (independent script), frozen here.
const std::vector<std::vector<Expected>> kOracle = {
    {},
    {{1, 1, 0}},
    {{2, 2, 0}, {1, 1, 0}},
    {{3, 3, 0}, {3, 3, 0}, {1, 3, 2}},
    {{4, 4, 0}, {6, 6, 0}, {4, 8, 4}, {1, 5, 4}},
    {{5, 5, 0}, {10, 10, 0}, {10, 20, 76}, {5, 25, 76}, {1, 15, 40}},
    {{6, 6, 0}, {15, 15, 0}, {20, 36, 280}, {15, 63, 280}, {6, 78, 1332}, {1, 45, 408}},
};

bool is_transitive(const Tournament& t) {
    std::vector<bool> seen(t.size(), false);
    for (std::size_t v = 0; v < t.size(); ++v) seen[t.indegree(v)] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

TEST_CASE("labeled enumeration") {
    CHECK(LabeledTournaments(2).size() == 2);
    CHECK(LabeledTournaments(4).size() == 64);

    std::size_t count = 0;
    std::size_t transitive_count = 0;
    for (const Tournament& t : LabeledTournaments(3)) {
        ++count;
        if (is_transitive(t)) ++transitive_count;
    }
    CHECK(count == 8);
    CHECK(transitive_count == 6);

    // Codes stream in increasing order and decode/encode consistently.
    std::uint64_t expected_code = 0;
    for (auto it = LabeledTournaments(4).begin(); it != LabeledTournaments(4).end(); ++it) {
        REQUIRE(it.code() == expected_code);
        REQUIRE(tournament_code(*it) == expected_code);
        ++expected_code;
    }
    CHECK(tournament_from_code(3, 0) == Tournament::from_matrix({{false, false, false},
                                                                 {true, false, false},
                                                                 {true, true, false}}));
    CHECK(tournament_code(transitive(5)) == 1023);

    CHECK_THROWS_AS(LabeledTournaments(8), InfeasibleError);
    CHECK_NOTHROW(LabeledTournaments(8, true));
    CHECK_THROWS_AS(LabeledTournaments(12, true), InfeasibleError);
}

TEST_CASE("census matches the brute-force oracle") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto records = census_all(n);
        REQUIRE(records.size() == n);
        for (std::size_t k = 0; k < n; ++k) {
            const auto& r = records[k];
            INFO("n=" << n << " k=" << k);
            CHECK(r.min_count == kOracle[n][k].min);
            CHECK(r.max_count == kOracle[n][k].max);
            CHECK(r.max_witness == kOracle[n][k].max_code);
            CHECK(r.min_witness == 0);
            CHECK(r.min_count == binomial(n, k + 1));
            CHECK(r.tournaments_scanned == labeled_count(n));
            CHECK(r.transitive_attains_lower);
            CHECK(r.passed());
        }
    }
}

TEST_CASE("census of three vertices, k = 2") {
    const auto r = census(3, 2);
    CHECK(r.min_count == 1);
    CHECK(r.max_count == 3);
    CHECK(is_transitive(tournament_from_code(3, r.min_witness)));
    const Tournament max_witness = tournament_from_code(3, r.max_witness);
    CHECK_FALSE(is_transitive(max_witness));
    CHECK(r.bounds.upper == Rational(27, 4));
    // Cyclic triangles have 3 paths; no non-transitive tournament ties 1.
    CHECK_FALSE(r.nontransitive_ties_min);
}

TEST_CASE("census with k = 1 and past the longest path") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto r = census(n, 1);
        if (n >= 2) {
            CHECK(r.min_count == n * (n - 1) / 2);
            CHECK(r.max_count == n * (n - 1) / 2);
        }
        const auto past = census(n, n + 1);
        CHECK(past.min_count == 0);
        CHECK(past.max_count == 0);
        CHECK(past.passed());
    }
}

TEST_CASE("witnesses recount to the recorded extremes") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const auto& r : census_all(n)) {
            CHECK(count_paths_dfs(tournament_from_code(n, r.min_witness), r.k) == r.min_count);
            CHECK(count_paths_dfs(tournament_from_code(n, r.max_witness), r.k) == r.max_count);
        }
    }
}

TEST_CASE("census output is independent of the worker count") {
    const auto one = census_all(6, {1, false});
    for (std::size_t jobs : {2u, 3u, 8u, 100000u}) {
        const auto many = census_all(6, {jobs, false});
        for (std::size_t k = 0; k < 6; ++k) REQUIRE(census_json(one[k]) == census_json(many[k]));
        REQUIRE(census_csv(one) == census_csv(many));
    }
}

TEST_CASE("Hamilton census and the Szele bound") {
    CHECK(szele_lower_bound(3) == 2);
    CHECK(szele_lower_bound(4) == 3);
    CHECK(szele_lower_bound(5) == 8);
    CHECK(szele_lower_bound(6) == 23);

    const auto h3 = hamilton_census(3);
    CHECK(h3.min_h == 1);
    CHECK(h3.max_h == 3);
    CHECK(h3.szele_lower == 2);
    CHECK(h3.passed());

    const auto h4 = hamilton_census(4);
    CHECK(h4.max_h == 5);
    CHECK(h4.passed());

    const auto h5 = hamilton_census(5);
    CHECK(h5.max_h == 15);
    CHECK(h5.max_h >= 8);
    CHECK(h5.passed());
}

TEST_CASE("census JSON layout") {
    const auto r = census(3, 2);
    const std::string text = census_json(r);
    CHECK(text.back() == '\n');
    const auto j = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"n", "k", "min_count", "max_count", "upper", "lower", "witnesses",
                                           "tournaments_scanned", "transitive_attains_lower",
                                           "nontransitive_ties_min", "passed"});
    CHECK(j["min_count"] == "1");
    CHECK(j["max_count"] == "3");
    CHECK(j["upper"] == "27/4");
    CHECK(j["lower"] == "1");
    CHECK(j["witnesses"]["min"] == "3\n000\n100\n110\n");
    CHECK(parse_trn(j["witnesses"]["max"].get<std::string>()) == tournament_from_code(3, 2));
    CHECK(j["tournaments_scanned"] == 8);

    const std::string csv = census_csv(census_all(3));
    CHECK(csv.substr(0, csv.find('\n')) ==
          "n,k,min_count,max_count,upper,lower,tournaments_scanned,transitive_attains_lower,"
          "nontransitive_ties_min,passed");
    CHECK(csv.find("3,2,1,3,27/4,1,8,true,false,true\n") != std::string::npos);
}
