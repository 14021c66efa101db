#ifndef TOURPATHS_STABILITY_HPP
#define TOURPATHS_STABILITY_HPP

#include <cstddef>

#include "tourpaths/numeric.hpp"
#include "tourpaths/paths.hpp"
#include "tourpaths/tournament.hpp"

namespace tourpaths {

// Compares the k-edge path count against (1 - 2 eps^2) n^{k+1} / 2^k where
// eps = sum_v |indeg v - n/2| / n^2. Everything is exact.
//
// The comparison is reported as-is; for k = 0 (and n = 1) the bound can
// fall below the count, which is outside the regime the inequality covers.
struct StabilityCertificate {
    std::size_t n = 0;
    std::size_t k = 0;
    Rational epsilon;
    Rational bound;
    PathCount count;
    bool holds = false;
};

Rational stability_bound(std::size_t n, std::size_t k, const Rational& epsilon);

StabilityCertificate stability_check(const Tournament& t, std::size_t k, Engine engine);

}  // namespace tourpaths

#endif  // TOURPATHS_STABILITY_HPP
