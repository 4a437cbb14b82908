#ifndef GOURSAT_SERIES_HPP
#define GOURSAT_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <goursat/errors.hpp>
#include <goursat/rational.hpp>

namespace goursat
{

inline constexpr std::size_t default_precision = 64;

// Formal power series in t, known exactly for the exponents
// 0..precision()-1 and unknown from there on.
class TruncatedSeries
{
public:
    TruncatedSeries() : coeffs_(default_precision) {}

    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static TruncatedSeries zero(std::size_t precision)
    {
        return TruncatedSeries(std::vector<Rational>(precision));
    }

    static TruncatedSeries constant(const Rational &c, std::size_t precision = default_precision)
    {
        return monomial(c, 0, precision);
    }

    // c*t^k. Terms beyond the precision are dropped.
    static TruncatedSeries monomial(const Rational &c, std::size_t k, std::size_t precision = default_precision)
    {
        std::vector<Rational> v(precision);
        if (k < precision) {
            v[k] = c;
        }
        return TruncatedSeries(std::move(v));
    }

    // Sum of (exponent, coefficient) pairs; repeated exponents accumulate.
    static TruncatedSeries from_terms(const std::vector<std::pair<std::size_t, Rational>> &terms,
                                      std::size_t precision = default_precision)
    {
        std::vector<Rational> v(precision);
        for (const auto &[k, c] : terms) {
            if (k < precision) {
                v[k] += c;
            }
        }
        return TruncatedSeries(std::move(v));
    }

    std::size_t precision() const noexcept
    {
        return coeffs_.size();
    }

    const std::vector<Rational> &coefficients() const noexcept
    {
        return coeffs_;
    }

    const Rational &coefficient(std::size_t k) const
    {
        if (k >= coeffs_.size()) {
            throw error(errc::insufficient_precision,
                        "coefficient of t^" + std::to_string(k) + " is beyond precision " + std::to_string(precision()));
        }
        return coeffs_[k];
    }

    const Rational &constant_term() const
    {
        return coefficient(0);
    }

    // Index of the first nonzero stored coefficient, if any.
    std::optional<std::size_t> find_valuation() const noexcept
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] != 0) {
                return k;
            }
        }
        return std::nullopt;
    }

    bool is_indeterminate() const noexcept
    {
        return !find_valuation().has_value();
    }

    std::size_t valuation() const
    {
        auto v = find_valuation();
        if (!v) {
            throw error(errc::indeterminate_valuation,
                        "series vanishes to precision " + std::to_string(precision()));
        }
        return *v;
    }

    // The valuation when determinate, otherwise the precision (a lower bound).
    std::size_t valuation_lower_bound() const noexcept
    {
        return find_valuation().value_or(precision());
    }

    TruncatedSeries truncated(std::size_t precision) const
    {
        std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + std::min(precision, coeffs_.size()));
        return TruncatedSeries(std::move(v));
    }

    // Exponents with nonzero stored coefficients, ascending.
    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] != 0) {
                out.push_back(k);
            }
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    friend TruncatedSeries operator-(const TruncatedSeries &a)
    {
        std::vector<Rational> v(a.coeffs_.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] = -a.coeffs_[k];
        }
        return TruncatedSeries(std::move(v));
    }

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const auto p = std::min(a.precision(), b.precision());
        std::vector<Rational> v(p);
        for (std::size_t k = 0; k < p; ++k) {
            v[k] = a.coeffs_[k] + b.coeffs_[k];
        }
        return TruncatedSeries(std::move(v));
    }

    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a + (-b);
    }

    // A product is known up to min(pa + val(b), pb + val(a)), using the
    // precision as the valuation of an indeterminate factor.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const auto p = std::min(a.precision() + b.valuation_lower_bound(), b.precision() + a.valuation_lower_bound());
        std::vector<Rational> v(p);
        for (std::size_t i = 0; i < a.precision() && i < p; ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.precision() && i + j < p; ++j) {
                if (b.coeffs_[j] != 0) {
                    v[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return TruncatedSeries(std::move(v));
    }

    friend TruncatedSeries operator*(const Rational &c, const TruncatedSeries &a)
    {
        std::vector<Rational> v(a.coeffs_.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] = c * a.coeffs_[k];
        }
        return TruncatedSeries(std::move(v));
    }

private:
    std::vector<Rational> coeffs_;
};

// d/dt; the precision drops by one.
inline TruncatedSeries derivative(const TruncatedSeries &a)
{
    if (a.precision() == 0) {
        throw error(errc::insufficient_precision, "cannot differentiate a series of precision 0");
    }
    std::vector<Rational> v(a.precision() - 1);
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = a.coefficient(k + 1) * static_cast<unsigned long>(k + 1);
    }
    return TruncatedSeries(std::move(v));
}

// num/den as a power series. Requires val(num) >= val(den); a numerator
// vanishing to its precision is accepted as long as that precision reaches
// val(den).
inline TruncatedSeries quotient(const TruncatedSeries &num, const TruncatedSeries &den)
{
    const auto vd = den.valuation();
    const auto vn = num.find_valuation();
    if (vn && *vn < vd) {
        throw error(errc::negative_valuation,
                    "numerator valuation " + std::to_string(*vn) + " < denominator valuation " + std::to_string(vd));
    }
    if (!vn && num.precision() < vd) {
        throw error(errc::indeterminate_valuation, "numerator vanishes only to precision "
                                                       + std::to_string(num.precision()) + " below denominator valuation "
                                                       + std::to_string(vd));
    }
    const auto ln = num.valuation_lower_bound();
    const auto p = std::min(num.precision() - vd, den.precision() + ln - 2 * vd);
    const auto dp = den.precision() - vd;
    const Rational inv = 1 / den.coefficient(vd);

    std::vector<Rational> q(p);
    for (std::size_t k = 0; k < p; ++k) {
        Rational acc = num.coefficient(k + vd);
        // q has valuation >= ln - vd, so only known den coefficients are touched.
        for (std::size_t j = ln - vd; j < k; ++j) {
            if (q[j] == 0) {
                continue;
            }
            const auto i = k - j;
            if (i < dp) {
                acc -= den.coefficient(i + vd) * q[j];
            }
        }
        q[k] = acc * inv;
    }
    return TruncatedSeries(std::move(q));
}

struct Recentered {
    Rational constant;
    TruncatedSeries tail;
};

// Splits off the value at t = 0.
inline Recentered recenter(const TruncatedSeries &a)
{
    Rational c = a.constant_term();
    auto v = a.coefficients();
    v[0] = 0;
    return {c, TruncatedSeries(std::move(v))};
}

// The series f with f(0) = constant and df/dt = integrand * d(wrt)/dt.
inline TruncatedSeries integrate(const TruncatedSeries &integrand, const TruncatedSeries &wrt, const Rational &constant)
{
    (void)wrt.valuation();
    const auto prod = integrand * derivative(wrt);
    std::vector<Rational> v(prod.precision() + 1);
    v[0] = constant;
    for (std::size_t k = 0; k < prod.precision(); ++k) {
        v[k + 1] = prod.coefficient(k) / static_cast<unsigned long>(k + 1);
    }
    return TruncatedSeries(std::move(v));
}

// Renders "7/5*t^2 + t^3"; with_order appends "+ O(t^p)".
inline std::string to_string(const TruncatedSeries &s, bool with_order = false)
{
    std::string out;
    for (std::size_t k = 0; k < s.precision(); ++k) {
        const auto &c = s.coefficient(k);
        if (c == 0) {
            continue;
        }
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) {
            out += to_string(mag) + "*";
        }
        out += k == 1 ? std::string("t") : "t^" + std::to_string(k);
    }
    if (out.empty()) {
        out = "0";
    }
    if (with_order) {
        out += " + O(t^" + std::to_string(s.precision()) + ")";
    }
    return out;
}

} // namespace goursat

#endif
