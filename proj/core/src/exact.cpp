#include "fxp/exact.hpp"

namespace fxp {

std::string_view to_token(RoundingMode m) {
    switch (m) {
    case RoundingMode::Down:        return "down";
    case RoundingMode::Up:          return "up";
    case RoundingMode::TowardZero:  return "tozero";
    case RoundingMode::NearestEven: return "nearest-even";
    case RoundingMode::NearestAway: return "nearest-away";
    }
    return "?";
}

std::string_view to_token(OverflowPolicy p) {
    switch (p) {
    case OverflowPolicy::Saturate: return "sat";
    case OverflowPolicy::Wrap:     return "wrap";
    case OverflowPolicy::Error:    return "err";
    }
    return "?";
}

RoundingMode parse_rounding_mode(std::string_view token) {
    if (token == "down")         return RoundingMode::Down;
    if (token == "up")           return RoundingMode::Up;
    if (token == "tozero")       return RoundingMode::TowardZero;
    if (token == "nearest-even") return RoundingMode::NearestEven;
    if (token == "nearest-away") return RoundingMode::NearestAway;
    throw ParseError("unknown rounding mode '" + std::string(token) + "'");
}

OverflowPolicy parse_overflow_policy(std::string_view token) {
    if (token == "sat")  return OverflowPolicy::Saturate;
    if (token == "wrap") return OverflowPolicy::Wrap;
    if (token == "err")  return OverflowPolicy::Error;
    throw ParseError("unknown overflow policy '" + std::string(token) + "'");
}

BigInt round_rational_to_integer(const ExactValue& q, RoundingMode mode) {
    BigInt n = numerator(q);
    BigInt d = denominator(q); // > 0
    BigInt quot = n / d;       // truncates toward zero
    BigInt rem = n - quot * d;
    if (rem == 0)
        return quot;

    BigInt floor_q = (n < 0) ? quot - 1 : quot;
    switch (mode) {
    case RoundingMode::Down:
        return floor_q;
    case RoundingMode::Up:
        return floor_q + 1;
    case RoundingMode::TowardZero:
        return quot;
    case RoundingMode::NearestEven:
    case RoundingMode::NearestAway: {
        // distance to floor is frac = (n - floor*d)/d; compare 2*frac vs 1
        BigInt twice = 2 * (n - floor_q * d);
        if (twice < d)
            return floor_q;
        if (twice > d)
            return floor_q + 1;
        // exact tie
        if (mode == RoundingMode::NearestEven)
            return (floor_q % 2 == 0) ? floor_q : floor_q + 1;
        // away from zero: the candidate further from zero
        return (n < 0) ? floor_q : floor_q + 1;
    }
    }
    return quot;
}

FixedValue round_to(const ExactValue& x, FixedFormat fmt, RoundingMode mode,
                    OverflowPolicy policy) {
    BigInt raw = round_rational_to_integer(x * pow2(fmt.frac_bits), mode);
    BigInt lo = fmt.raw_min(), hi = fmt.raw_max();
    if (raw >= lo && raw <= hi)
        return FixedValue::from_raw(fmt, raw);
    switch (policy) {
    case OverflowPolicy::Saturate:
        return FixedValue::from_raw(fmt, raw < lo ? lo : hi);
    case OverflowPolicy::Wrap: {
        BigInt span = BigInt(1) << fmt.storage_bits();
        BigInt bits = raw % span;
        if (bits < 0)
            bits += span;
        return FixedValue(fmt, bits.convert_to<std::uint64_t>());
    }
    case OverflowPolicy::Error:
        throw OverflowError("value does not fit " + fmt.name() +
                            " (raw " + raw.str() + ")");
    }
    throw Error("unreachable");
}

ExactValue rounding_error(const ExactValue& x, FixedFormat fmt, RoundingMode mode) {
    ExactValue r = round_to(x, fmt, mode, OverflowPolicy::Error).value();
    ExactValue e = r - x;
    return e < 0 ? ExactValue(-e) : e;
}

} // namespace fxp
