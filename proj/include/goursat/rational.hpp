#ifndef GOURSAT_RATIONAL_HPP
#define GOURSAT_RATIONAL_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include <goursat/errors.hpp>

namespace goursat
{

// Exact rational in lowest terms with positive denominator (GMP mpq).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer numerator_of(const Rational &q)
{
    return boost::multiprecision::numerator(q);
}

inline Integer denominator_of(const Rational &q)
{
    return boost::multiprecision::denominator(q);
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational &q)
{
    auto num = numerator_of(q);
    auto den = denominator_of(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

// Parses an optionally signed "p" or "p/q" with no surrounding whitespace.
inline Rational parse_rational(std::string_view text)
{
    auto digits_ok = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        for (char ch : s) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                return false;
            }
        }
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den)) {
        throw error(errc::parse_error, "not a rational number: '" + std::string(text) + "'");
    }
    Integer d(std::string{den});
    if (d == 0) {
        throw error(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    Rational q(Integer(std::string{num}), d);
    return negative ? Rational(-q) : q;
}

} // namespace goursat

#endif
