#ifndef GOURSAT_ERRORS_HPP
#define GOURSAT_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace goursat
{

enum class errc {
    // series-core
    indeterminate_valuation,
    negative_valuation,
    insufficient_precision,
    // words
    invalid_symbol,
    leading_non_r,
    orphan_t,
    empty_word,
    not_critical,
    level_out_of_range,
    malformed_string,
    // puiseux
    invalid_characteristic,
    trivial_characteristic,
    not_coprime,
    bad_order,
    remainder_invalid,
    // tower / blowup
    max_level_exceeded,
    non_primitive_parameterization,
    constant_parameterization,
    integration_mismatch,
    // cli / parsing / cross-checks
    parse_error,
    mismatch,
};

inline constexpr std::string_view errc_name(errc c) noexcept
{
    switch (c) {
        case errc::indeterminate_valuation: return "IndeterminateValuation";
        case errc::negative_valuation: return "NegativeValuation";
        case errc::insufficient_precision: return "InsufficientPrecision";
        case errc::invalid_symbol: return "InvalidSymbol";
        case errc::leading_non_r: return "LeadingNonR";
        case errc::orphan_t: return "OrphanT";
        case errc::empty_word: return "EmptyWord";
        case errc::not_critical: return "NotCritical";
        case errc::level_out_of_range: return "LevelOutOfRange";
        case errc::malformed_string: return "MalformedString";
        case errc::invalid_characteristic: return "InvalidCharacteristic";
        case errc::trivial_characteristic: return "TrivialCharacteristic";
        case errc::not_coprime: return "NotCoprime";
        case errc::bad_order: return "BadOrder";
        case errc::remainder_invalid: return "RemainderInvalid";
        case errc::max_level_exceeded: return "MaxLevelExceeded";
        case errc::non_primitive_parameterization: return "NonPrimitiveParameterization";
        case errc::constant_parameterization: return "ConstantParameterization";
        case errc::integration_mismatch: return "IntegrationMismatch";
        case errc::parse_error: return "ParseError";
        case errc::mismatch: return "Mismatch";
    }
    return "Unknown";
}

// Single exception type for the library; the code identifies the failure.
// Parse failures additionally carry the offending character position.
class error : public std::runtime_error
{
public:
    error(errc code, const std::string &what, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), position_(position)
    {
    }

    errc code() const noexcept
    {
        return code_;
    }
    std::optional<std::size_t> position() const noexcept
    {
        return position_;
    }

private:
    errc code_;
    std::optional<std::size_t> position_;
};

// Input errors map to CLI exit code 1, consistency mismatches to 2.
inline constexpr bool is_mismatch(errc c) noexcept
{
    return c == errc::mismatch;
}

} // namespace goursat

#endif
