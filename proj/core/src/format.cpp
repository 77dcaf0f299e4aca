#include "fxp/format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace fxp {

ExactValue pow2(int e) {
    if (e >= 0)
        return ExactValue(BigInt(1) << e);
    return ExactValue(BigInt(1), BigInt(1) << -e);
}

ExactValue FixedFormat::epsilon() const { return pow2(-frac_bits); }

ExactValue FixedFormat::min_value() const {
    if (!is_signed)
        return ExactValue(0);
    return -pow2(int_bits);
}

ExactValue FixedFormat::max_value() const {
    return pow2(int_bits) - pow2(-frac_bits);
}

BigInt FixedFormat::raw_min() const {
    if (!is_signed)
        return 0;
    return -(BigInt(1) << (int_bits + frac_bits));
}

BigInt FixedFormat::raw_max() const {
    return (BigInt(1) << (int_bits + frac_bits)) - 1;
}

std::string FixedFormat::name() const {
    std::ostringstream os;
    os << (is_signed ? 's' : 'u') << int_bits << '.' << frac_bits;
    return os.str();
}

FixedFormat FixedFormat::parse(std::string_view text) {
    auto fail = [&] {
        throw ParseError("bad format name: '" + std::string(text) + "'");
    };
    if (text.size() < 4)
        fail();
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
    if (c != 's' && c != 'u')
        fail();
    auto dot = text.find('.');
    if (dot == std::string_view::npos || dot == 1 || dot + 1 == text.size())
        fail();
    int x = 0, y = 0;
    auto r1 = std::from_chars(text.data() + 1, text.data() + dot, x);
    auto r2 = std::from_chars(text.data() + dot + 1, text.data() + text.size(), y);
    if (r1.ec != std::errc{} || r1.ptr != text.data() + dot ||
        r2.ec != std::errc{} || r2.ptr != text.data() + text.size())
        fail();
    FixedFormat fmt{c == 's', x, y};
    if (!fmt.valid())
        throw ParseError("format '" + std::string(text) +
                         "' needs storage outside [1, 64] bits");
    return fmt;
}

bool FixedFormat::looks_like_format(std::string_view text) {
    if (text.size() < 4)
        return false;
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
    if (c != 's' && c != 'u')
        return false;
    auto dot = text.find('.');
    if (dot == std::string_view::npos || dot == 1 || dot + 1 == text.size())
        return false;
    for (size_t i = 1; i < text.size(); ++i)
        if (i != dot && !std::isdigit(static_cast<unsigned char>(text[i])))
            return false;
    return true;
}

FixedValue FixedValue::from_raw(FixedFormat fmt, const BigInt& raw) {
    if (raw < fmt.raw_min() || raw > fmt.raw_max())
        throw OverflowError("raw " + raw.str() + " out of range for " + fmt.name());
    BigInt bits = raw;
    if (bits < 0)
        bits += BigInt(1) << fmt.storage_bits();
    return FixedValue(fmt, bits.convert_to<std::uint64_t>());
}

BigInt FixedValue::raw() const {
    BigInt r = bits_;
    int s = fmt_.storage_bits();
    if (fmt_.is_signed && (bits_ >> (s - 1)) & 1)
        r -= BigInt(1) << s;
    return r;
}

ExactValue FixedValue::value() const {
    return ExactValue(raw()) * pow2(-fmt_.frac_bits);
}

std::string FixedValue::raw_hex() const {
    std::ostringstream os;
    os << "0x" << std::hex << bits_;
    return os.str();
}

} // namespace fxp
