#include "tourpaths/stability.hpp"

namespace tourpaths {

Rational stability_bound(std::size_t n, std::size_t k, const Rational& epsilon) {
    Rational factor = Rational(1) - Rational(2) * epsilon * epsilon;
    Rational out = factor * bounds(n, k).upper;
    out.canonicalize();
    return out;
}

StabilityCertificate stability_check(const Tournament& t, std::size_t k, Engine engine) {
    StabilityCertificate cert;
    cert.n = t.size();
    cert.k = k;
    cert.epsilon = degree_stats(t).epsilon;
    cert.bound = stability_bound(cert.n, k, cert.epsilon);
    cert.count = count_paths(t, k, engine);
    cert.holds = Rational(cert.count) <= cert.bound;
    return cert;
}

}  // namespace tourpaths
