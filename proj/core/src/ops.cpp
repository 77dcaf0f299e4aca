#include "fxp/ops.hpp"

namespace fxp {

FixedValue add(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst,
               RoundingMode mode, OverflowPolicy policy) {
    return round_to(lhs.value() + rhs.value(), dst, mode, policy);
}

FixedValue sub(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst,
               RoundingMode mode, OverflowPolicy policy) {
    return round_to(lhs.value() - rhs.value(), dst, mode, policy);
}

FixedValue mul(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst,
               RoundingMode mode, OverflowPolicy policy) {
    // The exact product has at most Y_lhs + Y_rhs fraction bits; no
    // intermediate ever narrows it before this single rounding.
    return round_to(lhs.value() * rhs.value(), dst, mode, policy);
}

FixedValue div(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst,
               RoundingMode mode, OverflowPolicy policy) {
    ExactValue d = rhs.value();
    if (d == 0)
        throw DivideByZeroError("division by zero");
    return round_to(lhs.value() / d, dst, mode, policy);
}

FixedValue neg(const FixedValue& v, FixedFormat dst, RoundingMode mode,
               OverflowPolicy policy) {
    return round_to(-v.value(), dst, mode, policy);
}

std::strong_ordering compare(const FixedValue& lhs, const FixedValue& rhs) {
    // Cross-multiplied raw comparison; never lossy.
    BigInt a = lhs.raw() << rhs.format().frac_bits;
    BigInt b = rhs.raw() << lhs.format().frac_bits;
    if (a < b)
        return std::strong_ordering::less;
    if (a > b)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace fxp
