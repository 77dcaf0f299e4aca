#include "fxp/conformance/oracle.hpp"

#include <algorithm>

namespace fxp::oracle {
namespace {

// Round num/den (den > 0) to an integer. Written from scratch on top of
// truncating divide_qr; independent of the library's rounding kernel.
BigInt round_fraction(const BigInt& num, const BigInt& den, RoundingMode mode) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r); // trunc toward zero
    if (r == 0)
        return q;
    bool negative = num < 0;
    switch (mode) {
    case RoundingMode::TowardZero:
        return q;
    case RoundingMode::Down:
        return negative ? q - 1 : q;
    case RoundingMode::Up:
        return negative ? q : q + 1;
    case RoundingMode::NearestEven:
    case RoundingMode::NearestAway: {
        BigInt r2 = 2 * boost::multiprecision::abs(r);
        BigInt away = negative ? BigInt(q - 1) : BigInt(q + 1); // further from zero
        if (r2 > den)
            return away;
        if (r2 < den)
            return q;
        if (mode == RoundingMode::NearestAway)
            return away;
        return (q % 2 == 0) ? q : away;
    }
    }
    return q;
}

BigInt apply_policy(const BigInt& raw, FixedFormat dst, OverflowPolicy policy) {
    BigInt lo = dst.is_signed ? BigInt(-(BigInt(1) << (dst.int_bits + dst.frac_bits)))
                              : BigInt(0);
    BigInt hi = (BigInt(1) << (dst.int_bits + dst.frac_bits)) - 1;
    if (raw >= lo && raw <= hi)
        return raw;
    switch (policy) {
    case OverflowPolicy::Saturate:
        return raw < lo ? lo : hi;
    case OverflowPolicy::Wrap: {
        BigInt span = BigInt(1) << dst.storage_bits();
        BigInt m = raw % span;
        if (m < 0)
            m += span;
        if (dst.is_signed && m > hi)
            m -= span;
        return m;
    }
    case OverflowPolicy::Error:
        throw OverflowError("oracle: raw out of range");
    }
    return raw;
}

} // namespace

BigInt eval_raw(OpKind op, FixedFormat fa, const BigInt& ra, FixedFormat fb,
                const BigInt& rb, FixedFormat dst, RoundingMode mode,
                OverflowPolicy policy) {
    const int ya = fa.frac_bits, yb = fb.frac_bits, yd = dst.frac_bits;
    BigInt num, den;
    switch (op) {
    case OpKind::Add:
    case OpKind::Sub: {
        int s = std::max({ya, yb, yd});
        BigInt a = ra << (s - ya);
        BigInt b = rb << (s - yb);
        num = (op == OpKind::Add) ? BigInt(a + b) : BigInt(a - b);
        den = BigInt(1) << (s - yd);
        break;
    }
    case OpKind::Mul: {
        num = ra * rb;
        int shift = yd - ya - yb;
        if (shift >= 0) {
            num <<= shift;
            den = 1;
        } else {
            den = BigInt(1) << -shift;
        }
        break;
    }
    case OpKind::Div: {
        if (rb == 0)
            throw DivideByZeroError("oracle: division by zero");
        num = ra << (yb + yd);
        den = rb << ya;
        if (den < 0) {
            den = -den;
            num = -num;
        }
        break;
    }
    case OpKind::Neg:
    case OpKind::Convert: {
        num = (op == OpKind::Neg) ? BigInt(-ra) : ra;
        if (yd >= ya) {
            num <<= (yd - ya);
            den = 1;
        } else {
            den = BigInt(1) << (ya - yd);
        }
        break;
    }
    }
    return apply_policy(round_fraction(num, den, mode), dst, policy);
}

} // namespace fxp::oracle
