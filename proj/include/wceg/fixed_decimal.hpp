#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wceg {

// Weights are fixed-point decimals: an int64 count of 10^-scale units.
// All arithmetic on them is exact; overflow raises instead of wrapping.

class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

constexpr int kMaxScale = 9;

constexpr std::int64_t pow10_units(int scale) {
    std::int64_t p = 1;
    for (int i = 0; i < scale; ++i) p *= 10;
    return p;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("fixed-point addition overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("fixed-point multiplication overflow");
    return r;
}

// Parses a non-negative decimal literal ("15", "0.125") into units of
// 10^-scale. More fractional digits than the scale admits is an error:
// values must be represented exactly or not at all.
inline std::int64_t parse_decimal(std::string_view text, int scale) {
    if (scale < 0 || scale > kMaxScale) throw std::invalid_argument("scale out of range");
    if (text.empty()) throw std::invalid_argument("empty decimal literal");
    std::size_t pos = 0;
    std::int64_t int_part = 0;
    bool any_digit = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        int_part = checked_add(checked_mul(int_part, 10), text[pos] - '0');
        ++pos;
        any_digit = true;
    }
    std::int64_t frac_units = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        int digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++digits;
            if (digits > scale) {
                // trailing zeros beyond the scale are harmless
                if (text[pos] != '0')
                    throw std::invalid_argument("decimal '" + std::string(text) +
                                                "' has more fractional digits than scale " +
                                                std::to_string(scale));
            } else {
                frac_units = frac_units * 10 + (text[pos] - '0');
            }
            ++pos;
            any_digit = true;
        }
        for (int i = digits; i < scale; ++i) frac_units *= 10;
    } else {
        frac_units = 0;
    }
    if (!any_digit || pos != text.size())
        throw std::invalid_argument("malformed decimal literal '" + std::string(text) + "'");
    return checked_add(checked_mul(int_part, pow10_units(scale)), frac_units);
}

// Canonical rendering: no exponent, no trailing fractional zeros.
inline std::string format_decimal(std::int64_t units, int scale) {
    if (scale < 0 || scale > kMaxScale) throw std::invalid_argument("scale out of range");
    if (units < 0) throw std::invalid_argument("negative weight");
    const std::int64_t one = pow10_units(scale);
    std::string out = std::to_string(units / one);
    std::int64_t frac = units % one;
    if (frac != 0) {
        std::string digits = std::to_string(frac);
        digits.insert(digits.begin(), static_cast<std::size_t>(scale) - digits.size(), '0');
        while (!digits.empty() && digits.back() == '0') digits.pop_back();
        out += '.';
        out += digits;
    }
    return out;
}

}  // namespace wceg
