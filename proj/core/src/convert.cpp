#include "fxp/convert.hpp"

#include <bit>
#include <cctype>
#include <sstream>

namespace fxp {
namespace {

struct IeeeLayout {
    int mant_bits;
    int exp_bits;
    int bias;
};

IeeeLayout layout(int width) {
    if (width == 32)
        return {23, 8, 127};
    if (width == 64)
        return {52, 11, 1023};
    throw ParseError("IEEE width must be 32 or 64");
}

} // namespace

IeeeFloat IeeeFloat::from_float(float f) {
    return {32, std::bit_cast<std::uint32_t>(f)};
}

IeeeFloat IeeeFloat::from_double(double d) {
    return {64, std::bit_cast<std::uint64_t>(d)};
}

bool IeeeFloat::is_finite() const {
    auto l = layout(width);
    std::uint64_t exp = (bits >> l.mant_bits) & ((std::uint64_t{1} << l.exp_bits) - 1);
    return exp != (std::uint64_t{1} << l.exp_bits) - 1;
}

bool IeeeFloat::is_nan() const {
    auto l = layout(width);
    std::uint64_t exp = (bits >> l.mant_bits) & ((std::uint64_t{1} << l.exp_bits) - 1);
    std::uint64_t mant = bits & ((std::uint64_t{1} << l.mant_bits) - 1);
    return exp == (std::uint64_t{1} << l.exp_bits) - 1 && mant != 0;
}

ExactValue IeeeFloat::value() const {
    auto l = layout(width);
    if (!is_finite())
        throw NonFiniteError(is_nan() ? "NaN has no value" : "infinity has no value");
    bool sign = (bits >> (l.mant_bits + l.exp_bits)) & 1;
    std::int64_t exp =
        static_cast<std::int64_t>((bits >> l.mant_bits) & ((std::uint64_t{1} << l.exp_bits) - 1));
    std::uint64_t mant = bits & ((std::uint64_t{1} << l.mant_bits) - 1);
    BigInt m;
    int e;
    if (exp == 0) { // subnormal (or zero)
        m = mant;
        e = static_cast<int>(1 - l.bias - l.mant_bits);
    } else {
        m = BigInt(mant) + (BigInt(1) << l.mant_bits);
        e = static_cast<int>(exp - l.bias - l.mant_bits);
    }
    ExactValue v = ExactValue(m) * pow2(e);
    return sign ? ExactValue(-v) : v;
}

std::string IeeeFloat::bits_hex() const {
    std::ostringstream os;
    os << "0x" << std::hex << bits;
    return os.str();
}

ExactValue parse_decimal_exact(std::string_view text) {
    auto fail = [&] {
        throw ParseError("bad decimal literal: '" + std::string(text) + "'");
    };
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-'))
        neg = text[i++] == '-';

    BigInt digits = 0;
    int frac_digits = 0;
    bool any = false, in_frac = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (in_frac)
                fail();
            in_frac = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = digits * 10 + (c - '0');
            if (in_frac)
                ++frac_digits;
            any = true;
        } else {
            break;
        }
    }
    if (!any)
        fail();

    long long exp10 = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-'))
            eneg = text[i++] == '-';
        if (i >= text.size())
            fail();
        for (; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                fail();
            exp10 = exp10 * 10 + (text[i] - '0');
            if (exp10 > 1'000'000)
                fail();
        }
        if (eneg)
            exp10 = -exp10;
    }
    if (i != text.size())
        fail();

    exp10 -= frac_digits;
    ExactValue v(digits);
    if (exp10 > 0)
        v *= ExactValue(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exp10)));
    else if (exp10 < 0)
        v /= ExactValue(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-exp10)));
    return neg ? ExactValue(-v) : v;
}

FixedValue parse_decimal(std::string_view literal, FixedFormat dst,
                         RoundingMode mode, OverflowPolicy policy) {
    return round_to(parse_decimal_exact(literal), dst, mode, policy);
}

FixedValue convert_fixed(const FixedValue& v, FixedFormat dst,
                         RoundingMode mode, OverflowPolicy policy) {
    return round_to(v.value(), dst, mode, policy);
}

FixedValue from_ieee(const IeeeFloat& f, FixedFormat dst, RoundingMode mode,
                     OverflowPolicy policy) {
    return round_to(f.value(), dst, mode, policy);
}

IeeeFloat to_ieee(const FixedValue& v, int width, RoundingMode mode) {
    auto l = layout(width);
    BigInt raw = v.raw();
    bool sign = raw < 0;
    if (raw == 0)
        return {width, 0};
    BigInt mag = sign ? BigInt(-raw) : raw;

    // value = mag * 2^-Y; normalize so the significand has mant_bits+1 bits.
    int msb = static_cast<int>(boost::multiprecision::msb(mag));
    int e = msb - v.format().frac_bits; // value in [2^e, 2^(e+1))
    // Fixed values with <=64 storage bits stay inside the normal range of
    // both binary32 and binary64.
    int shift = l.mant_bits - msb;
    RoundingMode m = mode;
    if (sign) { // round the magnitude with the direction flipped
        if (m == RoundingMode::Down)
            m = RoundingMode::Up;
        else if (m == RoundingMode::Up)
            m = RoundingMode::Down;
    }
    BigInt sig = round_rational_to_integer(ExactValue(mag) * pow2(shift), m);
    if (sig == (BigInt(1) << (l.mant_bits + 1))) { // carried out
        sig >>= 1;
        ++e;
    }
    std::uint64_t mant =
        (sig - (BigInt(1) << l.mant_bits)).convert_to<std::uint64_t>();
    std::uint64_t exp_field = static_cast<std::uint64_t>(e + l.bias);
    std::uint64_t bits = (exp_field << l.mant_bits) | mant;
    if (sign)
        bits |= std::uint64_t{1} << (l.mant_bits + l.exp_bits);
    return {width, bits};
}

BigInt to_integer(const FixedValue& v) {
    return round_rational_to_integer(v.value(), RoundingMode::TowardZero);
}

FixedValue from_integer(const BigInt& i, FixedFormat dst, OverflowPolicy policy) {
    return round_to(ExactValue(i), dst, RoundingMode::Down, policy);
}

std::string render_exact_decimal(const ExactValue& x) {
    BigInt n = numerator(x);
    BigInt d = denominator(x);
    bool neg = n < 0;
    if (neg)
        n = -n;

    // factor the denominator as 2^a * 5^b * rest
    BigInt rest = d;
    int a = 0, b = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++a;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++b;
    }
    if (rest != 1) { // non-terminating; keep it a fraction
        std::ostringstream os;
        if (neg)
            os << '-';
        os << n << '/' << d;
        return os.str();
    }

    int k = std::max(a, b); // scale to denominator 10^k
    n *= boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(k - a));
    n *= boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(k - b));
    BigInt ten_k = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k));
    BigInt whole = n / ten_k;
    BigInt frac = n % ten_k;

    std::ostringstream os;
    if (neg)
        os << '-';
    os << whole;
    if (frac != 0) {
        std::string f = frac.str();
        f.insert(f.begin(), k - f.size(), '0');
        while (!f.empty() && f.back() == '0')
            f.pop_back();
        os << '.' << f;
    }
    return os.str();
}

} // namespace fxp
