#include "tourpaths/numeric.hpp"

#include <cctype>
#include <cstdio>

namespace tourpaths {

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
    Rational canonical(value);
    canonical.canonicalize();
    return canonical.get_str();
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ValidationError("BadNumber(" + std::string(s) + ")");
    }
    BigInt out(std::string(s), 10);
    return negative ? BigInt(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string original(text);
    if (text.empty()) throw ValidationError("BadNumber()");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw ValidationError("BadNumber(" + original + ")");
        BigInt den(std::string(den_text), 10);
        if (den == 0) throw ValidationError("ZeroDenominator(" + original + ")");
        Rational out(num, den);
        out.canonicalize();
        return out;
    }

    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            throw ValidationError("BadNumber(" + original + ")");
        }
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
        text = text.substr(0, e);
    }

    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw ValidationError("BadNumber(" + original + ")");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
            throw ValidationError("BadNumber(" + original + ")");
        }
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(text)) throw ValidationError("BadNumber(" + original + ")");
        digits = std::string(text);
    }

    BigInt mantissa(digits, 10);
    if (negative) mantissa = -mantissa;
    Rational out;
    if (exponent >= 0) {
        out = Rational(mantissa * power(10, static_cast<unsigned long>(exponent)));
    } else {
        out = Rational(mantissa, power(10, static_cast<unsigned long>(-exponent)));
    }
    out.canonicalize();
    return out;
}

BigInt power(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    if (k > n) return out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt from_u128(unsigned __int128 value) {
    const auto high = static_cast<std::uint64_t>(value >> 64);
    const auto low = static_cast<std::uint64_t>(value);
    BigInt out(static_cast<unsigned long>(high));
    out <<= 64;
    out += BigInt(static_cast<unsigned long>(low));
    return out;
}

}  // namespace tourpaths
