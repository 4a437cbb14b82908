#ifndef GOURSAT_PARSE_HPP
#define GOURSAT_PARSE_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <goursat/errors.hpp>
#include <goursat/rational.hpp>
#include <goursat/series.hpp>
#include <goursat/tower.hpp>

namespace goursat
{

namespace detail
{

class Scanner
{
public:
    Scanner(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool at_end()
    {
        skip_space();
        return pos_ == text_.size();
    }
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }
    std::string digits()
    {
        skip_space();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a digit");
        }
        return std::string(text_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string &what) const
    {
        throw error(errc::parse_error, what + " at position " + std::to_string(offset_ + pos_), offset_ + pos_);
    }

private:
    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

inline std::size_t parse_exponent(Scanner &s)
{
    const auto d = s.digits();
    if (d.size() > 6) {
        s.fail("exponent too large");
    }
    return std::stoul(d);
}

} // namespace detail

// Sum of terms c*t^k, c an integer or p/q: "7/5*t^2 + t^3", "-t", "3".
// Terms at or beyond the precision are dropped.
inline TruncatedSeries parse_series(std::string_view text, std::size_t precision = default_precision,
                                    std::size_t offset = 0)
{
    detail::Scanner s(text, offset);
    std::vector<std::pair<std::size_t, Rational>> terms;
    bool first = true;
    if (s.at_end()) {
        s.fail("empty series");
    }
    while (!s.at_end()) {
        Rational sign(1);
        if (s.accept('-')) {
            sign = -1;
        } else if (!s.accept('+') && !first) {
            s.fail("expected '+' or '-'");
        }
        first = false;
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
            Integer num(s.digits());
            Integer den(1);
            if (s.accept('/')) {
                den = Integer(s.digits());
                if (den == 0) {
                    s.fail("zero denominator");
                }
            }
            coeff = Rational(num, den);
            have_coeff = true;
        }
        std::size_t k = 0;
        if (have_coeff && s.peek() == '*') {
            s.expect('*');
            if (s.peek() != 't') {
                s.fail("expected 't' after '*'");
            }
        }
        if (s.accept('t')) {
            k = 1;
            if (s.accept('^')) {
                k = detail::parse_exponent(s);
            }
        } else if (!have_coeff) {
            s.fail("expected a coefficient or 't'");
        }
        terms.emplace_back(k, sign * coeff);
    }
    return TruncatedSeries::from_terms(terms, precision);
}

// A germ as read from text. level > 0 means the text described the germ C(k)
// by its chart path and active coordinates; germ is then the rebuilt base curve.
struct ParsedCurve {
    CurveGerm germ;
    std::size_t level = 0;
    std::optional<ChartPath> path;
};

namespace detail
{

struct Field {
    std::string key;
    std::string value;
    std::size_t offset;
};

// "k=v, k=v" with commas inside parentheses left alone.
inline std::vector<Field> split_fields(std::string_view text, std::size_t offset)
{
    std::vector<Field> out;
    std::size_t depth = 0, start = 0;
    auto flush = [&](std::size_t end) {
        const auto piece = text.substr(start, end - start);
        const auto eq = piece.find('=');
        if (eq == std::string_view::npos) {
            throw error(errc::parse_error, "expected key=value at position " + std::to_string(offset + start),
                        offset + start);
        }
        auto trim = [](std::string_view v) {
            while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) {
                v.remove_prefix(1);
            }
            while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) {
                v.remove_suffix(1);
            }
            return std::string(v);
        };
        out.push_back({trim(piece.substr(0, eq)), std::string(piece.substr(eq + 1)), offset + start + eq + 1});
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')' && depth > 0) {
            --depth;
        } else if (text[i] == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(text.size());
    return out;
}

// "(x,y;n_1,...,n_k)"
inline std::vector<Rational> parse_data_point(std::string_view text, std::size_t offset)
{
    Scanner s(text, offset);
    std::vector<Rational> out;
    s.expect('(');
    auto read = [&] {
        Rational sign = s.accept('-') ? Rational(-1) : Rational(1);
        Integer num(s.digits()), den(1);
        if (s.accept('/')) {
            den = Integer(s.digits());
            if (den == 0) {
                s.fail("zero denominator");
            }
        }
        out.push_back(sign * Rational(num, den));
    };
    read();
    s.expect(',');
    read();
    if (s.accept(';')) {
        read();
        while (s.accept(',')) {
            read();
        }
    }
    s.expect(')');
    if (!s.at_end()) {
        s.fail("trailing text after data point");
    }
    return out;
}

} // namespace detail

// "x=<series>, y=<series>", or
// "@level k, path=<o|i...>, r=<series>, n=<series>[, data=(x,y;n_1,...)]".
inline ParsedCurve parse_curve(std::string_view text, std::size_t precision = default_precision)
{
    std::size_t offset = 0;
    while (offset < text.size() && std::isspace(static_cast<unsigned char>(text[offset]))) {
        ++offset;
    }
    ParsedCurve out;
    std::optional<std::size_t> level;
    if (text.substr(offset).starts_with("@level")) {
        offset += 6;
        const auto comma = text.find(',', offset);
        const auto head = text.substr(offset, comma == std::string_view::npos ? text.size() - offset : comma - offset);
        detail::Scanner s(head, offset);
        level = std::stoul(s.digits());
        if (!s.at_end()) {
            s.fail("expected ',' after the level");
        }
        if (comma == std::string_view::npos) {
            throw error(errc::parse_error, "a level germ needs path, r and n", text.size());
        }
        offset = comma + 1;
    }
    const auto fields = detail::split_fields(text.substr(offset), offset);
    auto find = [&](const std::string &key) -> const detail::Field * {
        const detail::Field *hit = nullptr;
        for (const auto &f : fields) {
            if (f.key == key) {
                if (hit) {
                    throw error(errc::parse_error, "duplicate field '" + key + "'", f.offset);
                }
                hit = &f;
            }
        }
        return hit;
    };
    auto require = [&](const std::string &key) -> const detail::Field & {
        const auto *f = find(key);
        if (!f) {
            throw error(errc::parse_error, "missing field '" + key + "'", text.size());
        }
        return *f;
    };
    const std::vector<std::string> allowed =
        level ? std::vector<std::string>{"path", "r", "n", "data"} : std::vector<std::string>{"x", "y"};
    for (const auto &f : fields) {
        if (std::find(allowed.begin(), allowed.end(), f.key) == allowed.end()) {
            throw error(errc::parse_error, "unexpected field '" + f.key + "'", f.offset);
        }
    }
    if (!level) {
        const auto &x = require("x");
        const auto &y = require("y");
        out.germ =
            CurveGerm::from_series(parse_series(x.value, precision, x.offset), parse_series(y.value, precision, y.offset));
        return out;
    }
    const auto &p = require("path");
    std::string letters;
    for (char c : p.value) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            letters += c;
        }
    }
    auto path = ChartPath::parse(letters);
    if (path.size() != *level) {
        throw error(errc::parse_error,
                    "path has " + std::to_string(path.size()) + " letters for level " + std::to_string(*level), p.offset);
    }
    const auto &r = require("r");
    const auto &n = require("n");
    std::vector<Rational> data;
    if (const auto *d = find("data")) {
        data = detail::parse_data_point(d->value, d->offset);
    }
    out.germ = curve_from_chart_data(path, parse_series(r.value, precision, r.offset),
                                     parse_series(n.value, precision, n.offset), std::move(data));
    out.level = *level;
    out.path = std::move(path);
    return out;
}

} // namespace goursat

#endif
