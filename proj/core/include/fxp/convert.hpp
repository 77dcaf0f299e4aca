#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fxp/exact.hpp"

namespace fxp {

/// A finite IEEE 754 value carried as its exact bit pattern.
struct IeeeFloat {
    int width = 64;          // 32 or 64
    std::uint64_t bits = 0;

    static IeeeFloat from_float(float f);
    static IeeeFloat from_double(double d);

    bool is_finite() const;
    bool is_nan() const;

    /// Exact dyadic value; throws NonFiniteError for NaN/Inf.
    ExactValue value() const;

    std::string bits_hex() const;
};

/// Parse "-12.34e-5" style text to its exact rational value.
/// No precision limit, no intermediate rounding.
ExactValue parse_decimal_exact(std::string_view text);

/// Decimal-constant path: exact literal value rounded once to dst.
FixedValue parse_decimal(std::string_view literal, FixedFormat dst,
                         RoundingMode mode, OverflowPolicy policy);

/// Fixed-to-fixed conversion through the exact value.
FixedValue convert_fixed(const FixedValue& v, FixedFormat dst,
                         RoundingMode mode, OverflowPolicy policy);

FixedValue from_ieee(const IeeeFloat& f, FixedFormat dst, RoundingMode mode,
                     OverflowPolicy policy);

/// Correctly rounded fixed-to-float conversion; default mode is
/// nearest-even. Never overflows an IEEE range.
IeeeFloat to_ieee(const FixedValue& v, int width,
                  RoundingMode mode = RoundingMode::NearestEven);

/// Truncation toward zero; the rounding direction is not configurable.
BigInt to_integer(const FixedValue& v);

FixedValue from_integer(const BigInt& i, FixedFormat dst, OverflowPolicy policy);

/// Exact decimal expansion. Dyadic (and 10-smooth) denominators terminate;
/// anything else renders as "n/d".
std::string render_exact_decimal(const ExactValue& x);

} // namespace fxp
