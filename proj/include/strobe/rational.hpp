#pragma once

/// Exact rational arithmetic for angle bookkeeping.  Angles that arrive as
/// decimal or fractional text (degrees or multiples of pi) are kept as exact
/// ratios so that closure arithmetic never touches floating point.

#include <boost/rational.hpp>

#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strobe {

using Rational = boost::rational<long long>;

// Accepts "2", "-1.5", "0.0205", "41/40".  Throws std::invalid_argument on
// anything else or on values that would overflow 64-bit bookkeeping.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&]() -> Rational {
        throw std::invalid_argument("parse_rational: cannot parse '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    long long num = 0;
    long long den = 1;
    int digits = 0;
    bool seen_dot = false, seen_slash = false, any_digit = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (++digits > 18) fail();
            if (seen_slash) {
                den = den * 10 + (c - '0');
            } else {
                num = num * 10 + (c - '0');
                if (seen_dot) den *= 10;
            }
            any_digit = true;
        } else if (c == '.' && !seen_dot && !seen_slash) {
            seen_dot = true;
        } else if (c == '/' && !seen_slash && !seen_dot && any_digit) {
            seen_slash = true;
            den = 0;
        } else {
            fail();
        }
    }
    if (!any_digit || den == 0) fail();
    return Rational(neg ? -num : num, den);
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Exact annotations a config may carry for its strobe angles.  RationalPi
// stores alpha/pi and beta/pi; Irrational marks angle ratios known not to be
// rational multiples of pi (e.g. lambda = sqrt(2) - 0.389), for which no
// finite closure index exists.
struct ExactAngles {
    enum class Kind { RationalPi, Irrational };
    Kind kind = Kind::RationalPi;
    Rational alpha_over_pi{0};
    Rational beta_over_pi{0};

    static ExactAngles from_degrees(const Rational& alpha_deg, const Rational& beta_deg) {
        return {Kind::RationalPi, alpha_deg / 180, beta_deg / 180};
    }
    static ExactAngles irrational() { return {Kind::Irrational, Rational{0}, Rational{0}}; }
};

struct ClosureResult {
    std::int64_t k_star = 0;  // smallest K >= 1 closing the orbit
    std::int64_t m = 0;       // K beta = 2 m pi
    std::int64_t n = 0;       // 2 K alpha = 2 n pi
};

// Smallest K >= 1 with K*(beta/pi) an even integer and K*(alpha/pi) an
// integer.  Pure integer congruence work on the reduced ratios.
inline ClosureResult closure_from_ratios(const Rational& alpha_over_pi,
                                         const Rational& beta_over_pi) {
    if (alpha_over_pi == Rational{0}) {
        throw std::invalid_argument("closure_from_ratios: alpha must be nonzero");
    }
    const long long a_den = alpha_over_pi.denominator();
    long long k_beta = 1;
    if (beta_over_pi != Rational{0}) {
        const long long b_num = std::llabs(beta_over_pi.numerator());
        const long long b_den = beta_over_pi.denominator();
        k_beta = 2 * b_den / std::gcd(b_num, 2 * b_den);
    }
    const long long k_star = std::lcm(a_den, k_beta);
    const Rational m2 = Rational(k_star) * beta_over_pi / 2;
    const Rational n1 = Rational(k_star) * alpha_over_pi;
    // both are integers by construction of k_star
    return {k_star, m2.numerator() / m2.denominator(), n1.numerator() / n1.denominator()};
}

inline Rational reduce_fraction(long long num, long long den) { return Rational(num, den); }

}  // namespace strobe
