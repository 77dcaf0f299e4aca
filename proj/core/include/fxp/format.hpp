#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "fxp/errors.hpp"

namespace fxp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number; the intermediate for every operation.
/// cpp_rational keeps values normalized (lowest terms, denominator > 0).
using ExactValue = boost::multiprecision::cpp_rational;

/// Fixed-point format {s,u}X.Y: optional sign bit, X integer bits,
/// Y fraction bits. Value of a raw integer r is r * 2^-Y.
struct FixedFormat {
    bool is_signed = true;
    int int_bits = 0;  // X
    int frac_bits = 0; // Y

    constexpr int storage_bits() const {
        return int_bits + frac_bits + (is_signed ? 1 : 0);
    }
    constexpr bool valid() const {
        return int_bits >= 0 && frac_bits >= 0 && storage_bits() >= 1 &&
               storage_bits() <= 64;
    }
    constexpr bool operator==(const FixedFormat&) const = default;

    ExactValue epsilon() const; // 2^-Y
    ExactValue min_value() const;
    ExactValue max_value() const;
    BigInt raw_min() const; // signed: -2^(X+Y); unsigned: 0
    BigInt raw_max() const; // 2^(X+Y)-1

    std::string name() const; // "s16.15"
    static FixedFormat parse(std::string_view text);
    static bool looks_like_format(std::string_view text);
};

/// A raw two's-complement bit pattern paired with its format.
/// Stored as the low storage_bits() of a uint64, so 64-bit unsigned
/// formats fit too.
class FixedValue {
public:
    FixedValue() = default;
    FixedValue(FixedFormat fmt, std::uint64_t bits)
        : fmt_(fmt), bits_(bits & mask(fmt)) {}

    /// Construct from a signed raw integer; throws if out of range.
    static FixedValue from_raw(FixedFormat fmt, const BigInt& raw);

    const FixedFormat& format() const { return fmt_; }
    std::uint64_t bits() const { return bits_; }

    /// Raw as a signed integer (two's-complement interpretation).
    BigInt raw() const;

    /// raw * 2^-Y, exactly.
    ExactValue value() const;

    std::string raw_hex() const; // canonical 0x... of the masked bits

    bool operator==(const FixedValue&) const = default;

    static std::uint64_t mask(FixedFormat fmt) {
        int s = fmt.storage_bits();
        return s >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << s) - 1);
    }

private:
    FixedFormat fmt_{};
    std::uint64_t bits_ = 0;
};

/// 2^e as an exact rational, e may be negative.
ExactValue pow2(int e);

namespace formats {
// The formats named by gcc plus the internal promotion formats.
inline constexpr FixedFormat s16_15{true, 16, 15};
inline constexpr FixedFormat u16_16{false, 16, 16};
inline constexpr FixedFormat s0_31{true, 0, 31};
inline constexpr FixedFormat u0_32{false, 0, 32};
inline constexpr FixedFormat s8_7{true, 8, 7};
inline constexpr FixedFormat u8_8{false, 8, 8};
inline constexpr FixedFormat s0_15{true, 0, 15};
inline constexpr FixedFormat u0_16{false, 0, 16};
inline constexpr FixedFormat s32_31{true, 32, 31};
inline constexpr FixedFormat s32_30{true, 32, 30};
} // namespace formats

} // namespace fxp
