#pragma once

#include <string>
#include <string_view>

#include "fxp/format.hpp"

namespace fxp {

enum class RoundingMode {
    Down,        // toward -inf
    Up,          // toward +inf
    TowardZero,
    NearestEven, // ties to even
    NearestAway, // ties away from zero
};

enum class OverflowPolicy {
    Saturate,
    Wrap,  // mod 2^storage, two's complement
    Error,
};

std::string_view to_token(RoundingMode m);
std::string_view to_token(OverflowPolicy p);
RoundingMode parse_rounding_mode(std::string_view token);
OverflowPolicy parse_overflow_policy(std::string_view token);

/// Round an exact rational to an integer under the given mode.
BigInt round_rational_to_integer(const ExactValue& q, RoundingMode mode);

/// The single rounding kernel: scale x by 2^Y, round to an integer raw,
/// then apply the overflow policy against the format's raw range.
FixedValue round_to(const ExactValue& x, FixedFormat fmt, RoundingMode mode,
                    OverflowPolicy policy);

/// |value_of(round_to(x, ...)) - x|; assumes the rounding did not overflow.
ExactValue rounding_error(const ExactValue& x, FixedFormat fmt, RoundingMode mode);

} // namespace fxp
