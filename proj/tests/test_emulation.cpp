#include <doctest.h>

#include "fxp/emulation.hpp"

using namespace fxp;

namespace {
const RoundingMode kNear = RoundingMode::NearestEven;
const OverflowPolicy kSat = OverflowPolicy::Saturate;
} // namespace

TEST_CASE("profiles") {
    auto g = BehaviorProfile::gcc();
    CHECK(g.constant_rounding == RoundingMode::Down);
    CHECK(g.conversion_rounding == RoundingMode::Down);
    CHECK(g.result_rounding == RoundingMode::Down);
    CHECK(g.common_format_promotion);
    auto c = BehaviorProfile::correct(RoundingMode::Up);
    CHECK_FALSE(c.common_format_promotion);
    CHECK(c.result_rounding == RoundingMode::Up);
    CHECK(BehaviorProfile::parse("gcc").name == "gcc");
    CHECK_THROWS_AS(BehaviorProfile::parse("clang"), ParseError);
}

TEST_CASE("common_format reproduces the documented promotion pairs") {
    CHECK(common_format(formats::s16_15, formats::u0_32) == formats::s32_31);
    CHECK(common_format(formats::u0_32, formats::s16_15) == formats::s32_31);
    CHECK(common_format(formats::s16_15, formats::u0_16) == formats::s16_15);
    CHECK(common_format(formats::s0_31, formats::s0_31) == formats::s0_31);
}

TEST_CASE("common_format generalization stays in the ladder") {
    CHECK(common_format(formats::s16_15, formats::s16_15) == formats::s16_15);
    CHECK(common_format(formats::u0_32, formats::u0_32) == formats::u0_32);
    CHECK(common_format(formats::u8_8, formats::u8_8) == formats::u8_8);
    CHECK(common_format(formats::s8_7, formats::s8_7) == formats::s8_7);
    // unsigned pure fraction joining a signed type loses a fraction bit
    CHECK(common_format(FixedFormat{true, 0, 7}, FixedFormat{false, 0, 8}) ==
          FixedFormat{true, 0, 15});
    CHECK(common_format(formats::s0_31, formats::u0_32) == FixedFormat{true, 0, 63});
    // no 64-bit-storable signed common format above u32.32-sized operands
    CHECK_THROWS_AS(common_format(FixedFormat{false, 32, 32}, formats::s16_15),
                    UnsupportedPromotionError);
}

TEST_CASE("promotion drops the last bit of eps(u0.32), making the product 0") {
    FixedValue a = FixedValue(formats::u0_32, 1);
    FixedValue b = FixedValue::from_raw(formats::s16_15, BigInt(65535) << 15);
    CHECK(emulated_mul(a, b, formats::u0_32).raw() == 0);
    // ... for any b (the paper: "irrespective of what b is set to")
    for (std::uint64_t braw : {1ull, 0x8000ull, 0x12345ull})
        CHECK(emulated_mul(a, FixedValue(formats::s16_15, braw), formats::u0_32)
                  .raw() == 0);
    // same-format s0.31 needs no promotion and multiplies correctly
    FixedValue tiny = FixedValue(formats::s0_31, 1);
    FixedValue minus_one =
        FixedValue::from_raw(formats::s0_31, formats::s0_31.raw_min());
    CHECK(emulated_mul(tiny, minus_one, formats::s0_31).raw() == -1);
}

TEST_CASE("result truncation: 0.75 eps product becomes 0") {
    FixedValue a = FixedValue(formats::s16_15, 3);
    FixedValue b = FixedValue(formats::s16_15, 0x2000);
    CHECK(emulated_mul(a, b, formats::s16_15).raw() == 0);
}

TEST_CASE("emulated conversions truncate") {
    CHECK(emulated_parse("0.04", formats::s16_15).raw() == 1310);
    CHECK(emulated_convert(FixedValue(formats::s0_31, 3u << 14), formats::s16_15)
              .raw() == 0);
    // exactly representable values convert unchanged
    FixedValue v = FixedValue(formats::s16_15, 49152);
    CHECK(emulated_convert(v, formats::s32_31).value() == v.value());
    CHECK(emulated_from_ieee(IeeeFloat::from_float(0.04f), formats::s16_15).raw() ==
          1310);
}

TEST_CASE("divergence witness: defects diverge, the healthy case agrees") {
    struct Case {
        FixedValue a, b;
        FixedFormat dst;
        bool diverges;
    };
    const Case cases[] = {
        {FixedValue(formats::u0_32, 1),
         FixedValue::from_raw(formats::s16_15, BigInt(65535) << 15), formats::u0_32,
         true},
        {FixedValue(formats::s16_15, 3), FixedValue(formats::s16_15, 0x2000),
         formats::s16_15, true},
        {FixedValue(formats::s0_31, 1),
         FixedValue::from_raw(formats::s0_31, formats::s0_31.raw_min()),
         formats::s0_31, false},
    };
    for (const auto& c : cases) {
        FixedValue correct = mul(c.a, c.b, c.dst, kNear, kSat);
        FixedValue emulated = emulated_mul(c.a, c.b, c.dst);
        CHECK((correct.raw() != emulated.raw()) == c.diverges);
    }
}

TEST_CASE("scaling sanity holds only in the correct profile") {
    // a != 0 and |b| >= 1: correct-profile mul never returns 0
    FixedValue a = FixedValue(formats::u0_32, 1);
    for (long long i = 1; i <= 200; ++i) {
        FixedValue b = FixedValue::from_raw(formats::s16_15, i << 15);
        CHECK(mul(a, b, formats::u0_32, kNear, kSat).raw() != 0);
    }
}
