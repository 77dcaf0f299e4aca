#pragma once

#include <string>
#include <string_view>

#include "fxp/convert.hpp"
#include "fxp/ops.hpp"

namespace fxp {

/// A named bundle of rounding/promotion choices under which operations
/// are evaluated. `correct` rounds the exact result once, with
/// caller-chosen modes and no promotion; `gcc` truncates constants,
/// conversions and results, and promotes mixed-format operands to a
/// common internal format first.
struct BehaviorProfile {
    std::string name;
    RoundingMode constant_rounding = RoundingMode::NearestEven;
    RoundingMode conversion_rounding = RoundingMode::NearestEven;
    RoundingMode result_rounding = RoundingMode::NearestEven;
    bool common_format_promotion = false;

    static BehaviorProfile correct(RoundingMode mode = RoundingMode::NearestEven);
    static BehaviorProfile gcc();
    static BehaviorProfile parse(std::string_view token); // "correct" | "gcc"
};

/// The common internal format mixed operands are promoted to.
///
/// The two pairs observed on real gcc pin the rule: (s16.15, u0.32) ->
/// s32.31 and (s16.15, u0.16) -> s16.15. Generalized as a ladder of
/// power-of-two containers: the result container is the larger operand
/// container, widened once when a signed result has to absorb an
/// unsigned operand that already fills that container. Fract-category
/// results (both X = 0) keep X = 0; accum-category results split the
/// container evenly.
FixedFormat common_format(FixedFormat a, FixedFormat b);

// gcc-like arithmetic: promote both operands to the common format by
// truncation, operate exactly in it, truncate the result to dst.
FixedValue emulated_add(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst);
FixedValue emulated_sub(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst);
FixedValue emulated_mul(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst);
FixedValue emulated_div(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst);
FixedValue emulated_neg(const FixedValue& v, FixedFormat dst);

FixedValue emulated_convert(const FixedValue& v, FixedFormat dst);
FixedValue emulated_parse(std::string_view literal, FixedFormat dst);
FixedValue emulated_from_ieee(const IeeeFloat& f, FixedFormat dst);

} // namespace fxp
