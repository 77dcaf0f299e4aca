#include "fxp/emulation.hpp"

#include <algorithm>

namespace fxp {
namespace {

int container_bits(FixedFormat f) {
    int c = 8;
    while (c < f.storage_bits())
        c *= 2;
    return c;
}

FixedValue promote(const FixedValue& v, FixedFormat common) {
    return round_to(v.value(), common, RoundingMode::Down, OverflowPolicy::Wrap);
}

FixedValue trunc_result(const ExactValue& x, FixedFormat dst) {
    return round_to(x, dst, RoundingMode::Down, OverflowPolicy::Wrap);
}

} // namespace

BehaviorProfile BehaviorProfile::correct(RoundingMode mode) {
    return {"correct", mode, mode, mode, false};
}

BehaviorProfile BehaviorProfile::gcc() {
    return {"gcc", RoundingMode::Down, RoundingMode::Down, RoundingMode::Down,
            true};
}

BehaviorProfile BehaviorProfile::parse(std::string_view token) {
    if (token == "correct")
        return correct();
    if (token == "gcc")
        return gcc();
    throw ParseError("unknown profile '" + std::string(token) + "'");
}

FixedFormat common_format(FixedFormat a, FixedFormat b) {
    bool sign = a.is_signed || b.is_signed;
    bool accum = a.int_bits > 0 || b.int_bits > 0;
    int max_int = std::max(a.int_bits, b.int_bits);

    int c = std::max(container_bits(a), container_bits(b));
    // A signed result converting an unsigned operand that fills the
    // container needs the next container for the sign bit.
    if (sign && ((!a.is_signed && container_bits(a) == c) ||
                 (!b.is_signed && container_bits(b) == c)))
        c *= 2;
    // The accum split must still cover the integer range.
    while (accum && c / 2 < max_int)
        c *= 2;
    if (c > 64)
        throw UnsupportedPromotionError("no 64-bit-storable common format for " +
                                        a.name() + " and " + b.name());
    if (accum)
        return {sign, c / 2, c / 2 - (sign ? 1 : 0)};
    return {sign, 0, c - (sign ? 1 : 0)};
}

FixedValue emulated_add(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst) {
    FixedFormat cf = common_format(lhs.format(), rhs.format());
    return trunc_result(promote(lhs, cf).value() + promote(rhs, cf).value(), dst);
}

FixedValue emulated_sub(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst) {
    FixedFormat cf = common_format(lhs.format(), rhs.format());
    return trunc_result(promote(lhs, cf).value() - promote(rhs, cf).value(), dst);
}

FixedValue emulated_mul(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst) {
    FixedFormat cf = common_format(lhs.format(), rhs.format());
    return trunc_result(promote(lhs, cf).value() * promote(rhs, cf).value(), dst);
}

FixedValue emulated_div(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst) {
    FixedFormat cf = common_format(lhs.format(), rhs.format());
    ExactValue d = promote(rhs, cf).value();
    if (d == 0)
        throw DivideByZeroError("division by zero (after promotion)");
    return trunc_result(promote(lhs, cf).value() / d, dst);
}

FixedValue emulated_neg(const FixedValue& v, FixedFormat dst) {
    return trunc_result(-v.value(), dst);
}

FixedValue emulated_convert(const FixedValue& v, FixedFormat dst) {
    return round_to(v.value(), dst, RoundingMode::Down, OverflowPolicy::Wrap);
}

FixedValue emulated_parse(std::string_view literal, FixedFormat dst) {
    return parse_decimal(literal, dst, RoundingMode::Down, OverflowPolicy::Wrap);
}

FixedValue emulated_from_ieee(const IeeeFloat& f, FixedFormat dst) {
    return from_ieee(f, dst, RoundingMode::Down, OverflowPolicy::Wrap);
}

} // namespace fxp
