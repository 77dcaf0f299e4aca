// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Heavier than the unit tests; the exhaustive sweep is the bulk
// of the runtime.

#include <chrono>
#include <future>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "fxp/conformance/corpus.hpp"
#include "fxp/conformance/fuzz.hpp"
#include "fxp/conformance/oracle.hpp"

using namespace fxp;

namespace {

int g_failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << name;
    if (!detail.empty())
        std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok)
        ++g_failures;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

// --- 1: Table II reproduction ----------------------------------------------

void criterion1() {
    struct Row {
        FixedFormat fmt;
        RoundingMode mode;
        long long raw;
        std::string digits;
    };
    const Row rows[] = {
        {formats::s16_15, RoundingMode::NearestEven, 1311, "0.040008544921875"},
        {formats::s16_15, RoundingMode::Down, 1310, "0.03997802734375"},
        {formats::s0_31, RoundingMode::NearestEven, 85899346, "0.04000000003725"},
        {formats::s0_31, RoundingMode::Down, 85899345, "0.0399999995715"},
        {formats::u0_32, RoundingMode::NearestEven, 171798692, "0.04000000003725"},
        {formats::u0_32, RoundingMode::Down, 171798691, "0.0399999998044"},
    };
    bool ok = true;
    std::string detail;
    for (const auto& r : rows) {
        FixedValue v = parse_decimal("0.04", r.fmt, r.mode, OverflowPolicy::Saturate);
        std::string rendered = render_exact_decimal(v.value());
        if (v.raw() != r.raw || !starts_with(rendered, r.digits)) {
            ok = false;
            detail = r.fmt.name() + " " + std::string(to_token(r.mode)) + " got raw " +
                     v.raw().str() + " = " + rendered;
            break;
        }
    }
    report(1, "Table II constant rounding, digit-for-digit", ok, detail);
}

// --- 2: paper defect corpus -------------------------------------------------

void criterion2() {
    auto results = run_corpus(load_corpus(FXP_CORPUS_PATH));
    int failed = 0;
    std::string first;
    for (const auto& r : results) {
        if (r.status != CaseResult::Status::Pass) {
            ++failed;
            if (first.empty())
                first = r.id + " got " + r.got + " expected " + r.expected;
        }
    }
    report(2, "paper defect corpus bit-exact under both profiles", failed == 0,
           failed ? first : std::to_string(results.size()) + " cases");
}

// --- 3: exhaustive oracle equivalence ---------------------------------------

long long sweep_pair(FixedFormat fa, FixedFormat fb,
                     const std::vector<FixedFormat>& dsts) {
    using oracle::OpKind;
    const RoundingMode modes[] = {RoundingMode::Down, RoundingMode::Up,
                                  RoundingMode::TowardZero, RoundingMode::NearestEven,
                                  RoundingMode::NearestAway};
    const OverflowPolicy policies[] = {OverflowPolicy::Saturate, OverflowPolicy::Wrap};
    long long mismatches = 0;
    for (BigInt ra = fa.raw_min(); ra <= fa.raw_max(); ++ra) {
        FixedValue a = FixedValue::from_raw(fa, ra);
        for (BigInt rb = fb.raw_min(); rb <= fb.raw_max(); ++rb) {
            FixedValue b = FixedValue::from_raw(fb, rb);
            for (FixedFormat dst : dsts) {
                for (auto mode : modes) {
                    for (auto policy : policies) {
                        auto check = [&](OpKind op, const FixedValue& got) {
                            BigInt want = oracle::eval_raw(op, fa, ra, fb, rb, dst,
                                                           mode, policy);
                            if (got.raw() != want)
                                ++mismatches;
                        };
                        check(OpKind::Add, add(a, b, dst, mode, policy));
                        check(OpKind::Sub, sub(a, b, dst, mode, policy));
                        check(OpKind::Mul, mul(a, b, dst, mode, policy));
                        if (rb != 0)
                            check(OpKind::Div, div(a, b, dst, mode, policy));
                    }
                }
            }
        }
    }
    return mismatches;
}

void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<FixedFormat> fmts = {FixedFormat{true, 0, 7},
                                           FixedFormat{false, 0, 8},
                                           FixedFormat{true, 4, 3}};
    std::vector<std::future<long long>> jobs;
    for (FixedFormat fa : fmts)
        for (FixedFormat fb : fmts)
            jobs.push_back(std::async(std::launch::async, sweep_pair, fa, fb, fmts));
    long long mismatches = 0;
    for (auto& j : jobs)
        mismatches += j.get();

    // convert, unary, across all source raws and destinations
    const RoundingMode modes[] = {RoundingMode::Down, RoundingMode::Up,
                                  RoundingMode::TowardZero, RoundingMode::NearestEven,
                                  RoundingMode::NearestAway};
    for (FixedFormat fa : fmts) {
        for (BigInt ra = fa.raw_min(); ra <= fa.raw_max(); ++ra) {
            FixedValue a = FixedValue::from_raw(fa, ra);
            for (FixedFormat dst : fmts)
                for (auto mode : modes)
                    for (auto policy : {OverflowPolicy::Saturate, OverflowPolicy::Wrap})
                        if (convert_fixed(a, dst, mode, policy).raw() !=
                            oracle::eval_raw(oracle::OpKind::Convert, fa, ra, fa, 0,
                                             dst, mode, policy))
                            ++mismatches;
        }
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    report(3, "exhaustive add/sub/mul/div/convert vs oracle on s0.7/u0.8/s4.3",
           mismatches == 0,
           mismatches ? std::to_string(mismatches) + " mismatches"
                      : std::to_string(secs) + "s");
}

// --- 4: rounding error bounds -----------------------------------------------

void criterion4() {
    const std::vector<FixedFormat> fmts = {formats::s16_15, formats::u16_16,
                                           formats::s0_31, formats::u0_32,
                                           formats::s8_7, formats::u8_8,
                                           formats::s0_15, formats::u0_16};
    std::mt19937_64 rng(2024);
    long long violations = 0, checked = 0;
    const int kSamples = 1'000'000;
    for (int i = 0; i < kSamples; ++i) {
        FixedFormat fa = fmts[rng() % fmts.size()];
        FixedFormat fb = fmts[rng() % fmts.size()];
        FixedFormat dst = fmts[rng() % fmts.size()];
        BigInt spa = fa.raw_max() - fa.raw_min() + 1;
        BigInt spb = fb.raw_max() - fb.raw_min() + 1;
        FixedValue a = FixedValue::from_raw(fa, fa.raw_min() + BigInt(rng()) % spa);
        FixedValue b = FixedValue::from_raw(fb, fb.raw_min() + BigInt(rng()) % spb);
        ExactValue exact;
        switch (rng() % 3) {
        case 0: exact = a.value() + b.value(); break;
        case 1: exact = a.value() * b.value(); break;
        default:
            if (b.value() == 0)
                continue;
            exact = a.value() / b.value();
        }
        if (exact < dst.min_value() || exact > dst.max_value())
            continue; // overflow cases excluded
        ++checked;
        ExactValue eps = dst.epsilon();
        for (auto mode : {RoundingMode::Down, RoundingMode::Up, RoundingMode::TowardZero,
                          RoundingMode::NearestEven, RoundingMode::NearestAway}) {
            ExactValue err =
                round_to(exact, dst, mode, OverflowPolicy::Saturate).value() - exact;
            switch (mode) {
            case RoundingMode::Down:
                if (err > 0 || -err >= eps)
                    ++violations;
                break;
            case RoundingMode::Up:
                if (err < 0 || err >= eps)
                    ++violations;
                break;
            case RoundingMode::TowardZero: {
                // error points toward zero
                bool sign_ok = (exact >= 0) ? err <= 0 : err >= 0;
                ExactValue mag = err < 0 ? ExactValue(-err) : err;
                if (!sign_ok || mag >= eps)
                    ++violations;
                break;
            }
            default: {
                ExactValue mag = err < 0 ? ExactValue(-err) : err;
                if (2 * mag > eps)
                    ++violations;
            }
            }
        }
    }
    report(4, "rounding error bounds over random paper-format samples",
           violations == 0,
           std::to_string(checked) + " in-range samples, " +
               std::to_string(violations) + " violations");
}

// --- 5: truncation == round-down --------------------------------------------

void criterion5() {
    std::mt19937_64 rng(77);
    long long violations = 0;
    const int kSamples = 1'000'000;
    for (int i = 0; i < kSamples; ++i) {
        bool sign = rng() % 2;
        int x = static_cast<int>(rng() % 17);
        int y_src = 1 + static_cast<int>(rng() % (40 - x));
        int y_dst = static_cast<int>(rng() % y_src);
        FixedFormat src{sign, x, y_src};
        FixedFormat dst{sign, x, y_dst};
        BigInt span = src.raw_max() - src.raw_min() + 1;
        FixedValue v = FixedValue::from_raw(src, src.raw_min() + BigInt(rng()) % span);

        // arithmetic shift of the bit pattern, sign-extended
        int k = y_src - y_dst;
        std::uint64_t shifted = v.bits() >> k;
        if (sign) {
            int top = src.storage_bits() - 1;
            if ((v.bits() >> top) & 1)
                shifted |= ~std::uint64_t{0} << (top - k + 1);
        }
        FixedValue truncated(dst, shifted);

        FixedValue rounded =
            round_to(v.value(), dst, RoundingMode::Down, OverflowPolicy::Error);
        if (truncated.raw() != rounded.raw())
            ++violations;
    }
    report(5, "bit truncation equals round-down on random narrowings",
           violations == 0, std::to_string(violations) + " violations");
}

// --- 6: to_integer toward zero, all s8.7 values ------------------------------

void criterion6() {
    long long violations = 0;
    for (long long raw = -32768; raw <= 32767; ++raw) {
        BigInt got = to_integer(FixedValue::from_raw(formats::s8_7, BigInt(raw)));
        long long want = raw / 128; // C integer division truncates toward zero
        if (got != want)
            ++violations;
    }
    report(6, "to_integer truncates toward zero on all s8.7 values",
           violations == 0, std::to_string(violations) + " violations");
}

// --- 7: fuzz divergence accounting -------------------------------------------

void criterion7() {
    FuzzConfig cfg;
    cfg.seed = 1;
    cfg.count = 100'000;
    cfg.formats = {formats::s16_15, formats::u0_32, formats::s0_31, formats::u0_16};
    auto rep = fuzz(cfg);
    bool ok = rep.oracle_mismatches == 0 && rep.unbucketed == 0 &&
              rep.gcc_divergences > 0;
    std::string detail = std::to_string(rep.gcc_divergences) + " divergences; " +
                         std::to_string(rep.oracle_mismatches) +
                         " oracle mismatches; " + std::to_string(rep.unbucketed) +
                         " unbucketed";
    report(7, "seeded fuzz: oracle-clean, all divergences in defect buckets", ok,
           detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (g_failures)
        std::cout << g_failures << " criterion(s) FAILED" << std::endl;
    else
        std::cout << "all acceptance criteria passed" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
