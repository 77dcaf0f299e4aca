#include "fxp/conformance/fuzz.hpp"

#include <random>
#include <sstream>

#include "fxp/conformance/oracle.hpp"

namespace fxp {
namespace {

using oracle::OpKind;

const char* op_name(OpKind op) {
    switch (op) {
    case OpKind::Add:     return "add";
    case OpKind::Sub:     return "sub";
    case OpKind::Mul:     return "mul";
    case OpKind::Div:     return "div";
    case OpKind::Neg:     return "neg";
    case OpKind::Convert: return "convert";
    }
    return "?";
}

BigInt random_raw(std::mt19937_64& rng, FixedFormat fmt) {
    // 25% boundary values; the paper's defects all live at boundaries.
    if (rng() % 4 == 0) {
        switch (rng() % 5) {
        case 0: return 0;
        case 1: return 1;
        case 2: return fmt.raw_min();
        case 3: return fmt.raw_max();
        default: return fmt.is_signed ? BigInt(-1) : fmt.raw_max() / 2;
        }
    }
    BigInt span = fmt.raw_max() - fmt.raw_min() + 1;
    BigInt r = 0;
    for (int i = 0; i < 2; ++i)
        r = (r << 64) | BigInt(rng());
    return fmt.raw_min() + r % span;
}

RoundingMode random_mode(std::mt19937_64& rng) {
    switch (rng() % 5) {
    case 0: return RoundingMode::Down;
    case 1: return RoundingMode::Up;
    case 2: return RoundingMode::TowardZero;
    case 3: return RoundingMode::NearestEven;
    default: return RoundingMode::NearestAway;
    }
}

FixedValue run_correct(OpKind op, const FixedValue& a, const FixedValue& b,
                       FixedFormat dst, RoundingMode mode, OverflowPolicy policy) {
    switch (op) {
    case OpKind::Add:     return add(a, b, dst, mode, policy);
    case OpKind::Sub:     return sub(a, b, dst, mode, policy);
    case OpKind::Mul:     return mul(a, b, dst, mode, policy);
    case OpKind::Div:     return div(a, b, dst, mode, policy);
    case OpKind::Neg:     return neg(a, dst, mode, policy);
    case OpKind::Convert: return convert_fixed(a, dst, mode, policy);
    }
    throw Error("unreachable");
}

FixedValue run_gcc(OpKind op, const FixedValue& a, const FixedValue& b,
                   FixedFormat dst) {
    switch (op) {
    case OpKind::Add:     return emulated_add(a, b, dst);
    case OpKind::Sub:     return emulated_sub(a, b, dst);
    case OpKind::Mul:     return emulated_mul(a, b, dst);
    case OpKind::Div:     return emulated_div(a, b, dst);
    case OpKind::Neg:     return emulated_neg(a, dst);
    case OpKind::Convert: return emulated_convert(a, dst);
    }
    throw Error("unreachable");
}

ExactValue exact_result(OpKind op, const FixedValue& a, const FixedValue& b) {
    switch (op) {
    case OpKind::Add:     return a.value() + b.value();
    case OpKind::Sub:     return a.value() - b.value();
    case OpKind::Mul:     return a.value() * b.value();
    case OpKind::Div:     return a.value() / b.value();
    case OpKind::Neg:     return -a.value();
    case OpKind::Convert: return a.value();
    }
    throw Error("unreachable");
}

} // namespace

std::string_view to_token(DefectBucket b) {
    switch (b) {
    case DefectBucket::ConversionTruncation: return "conversion-truncation";
    case DefectBucket::PromotionLoss:        return "promotion-loss";
    case DefectBucket::ResultTruncation:     return "result-truncation";
    }
    return "?";
}

FuzzReport fuzz(const FuzzConfig& config) {
    if (config.formats.empty())
        throw Error("fuzz needs at least one format");
    std::mt19937_64 rng(config.seed);
    FuzzReport report;
    std::map<std::string, ExactValue> max_err;

    auto pick_format = [&] {
        return config.formats[rng() % config.formats.size()];
    };

    for (int i = 0; i < config.count; ++i) {
        OpKind op = static_cast<OpKind>(rng() % 6);
        FixedFormat fa = pick_format();
        FixedFormat fb = pick_format();
        FixedFormat dst = pick_format();
        RoundingMode mode = random_mode(rng);
        OverflowPolicy policy =
            (rng() % 2 == 0) ? OverflowPolicy::Saturate : OverflowPolicy::Wrap;

        FixedValue a = FixedValue::from_raw(fa, random_raw(rng, fa));
        BigInt rb = random_raw(rng, fb);
        if (op == OpKind::Div && rb == 0)
            rb = 1;
        FixedValue b = FixedValue::from_raw(fb, rb);
        ++report.cases;

        // correct profile vs the independent oracle, same mode/policy
        FixedValue got = run_correct(op, a, b, dst, mode, policy);
        BigInt want = oracle::eval_raw(op, fa, a.raw(), fb, b.raw(), dst, mode, policy);
        if (got.raw() != want) {
            ++report.oracle_mismatches;
            if (report.oracle_mismatch_samples.size() < 20) {
                std::ostringstream os;
                os << op_name(op) << ' ' << fa.name() << ':' << a.raw_hex() << ' '
                   << fb.name() << ':' << b.raw_hex() << " -> " << dst.name()
                   << ' ' << to_token(mode) << ' ' << to_token(policy)
                   << " impl=" << got.raw() << " oracle=" << want;
                report.oracle_mismatch_samples.push_back(os.str());
            }
        }

        if (!config.run_gcc)
            continue;

        // gcc emulation vs the correct profile at nearest-even (the
        // reference rounding the paper measures gcc against), wrap
        // overflow to match gcc's non-saturating types.
        FixedValue correct_near = run_correct(op, a, b, dst,
                                              RoundingMode::NearestEven,
                                              OverflowPolicy::Wrap);
        FixedValue emulated;
        try {
            emulated = run_gcc(op, a, b, dst);
        } catch (const DivideByZeroError&) {
            // nonzero divisor truncated to zero by promotion
            ++report.gcc_divergences;
            ++report.buckets[DefectBucket::PromotionLoss];
            if (report.samples.size() < 20)
                report.samples.push_back({std::string(op_name(op)) +
                                              " divisor lost to promotion: " +
                                              fb.name() + ":" + b.raw_hex(),
                                          DefectBucket::PromotionLoss});
            continue;
        }
        if (emulated == correct_near)
            continue;
        ++report.gcc_divergences;

        DefectBucket bucket;
        bool bucketed = true;
        if (op == OpKind::Convert) {
            // must be explainable as pure round-down on the same value
            bucketed = emulated ==
                       convert_fixed(a, dst, RoundingMode::Down, OverflowPolicy::Wrap);
            bucket = DefectBucket::ConversionTruncation;
        } else {
            FixedFormat cf = common_format(a.format(), b.format());
            bool lossy = round_to(a.value(), cf, RoundingMode::Down,
                                  OverflowPolicy::Wrap).value() != a.value() ||
                         (op != OpKind::Neg &&
                          round_to(b.value(), cf, RoundingMode::Down,
                                   OverflowPolicy::Wrap).value() != b.value());
            if (lossy) {
                bucket = DefectBucket::PromotionLoss;
            } else {
                bucket = DefectBucket::ResultTruncation;
                // with lossless promotion the divergence must equal plain
                // round-down of the exact result
                bucketed = emulated == run_correct(op, a, b, dst,
                                                   RoundingMode::Down,
                                                   OverflowPolicy::Wrap);
            }
        }
        if (!bucketed) {
            ++report.unbucketed;
        } else {
            ++report.buckets[bucket];
        }

        if (op != OpKind::Div || b.value() != 0) {
            ExactValue err = emulated.value() - exact_result(op, a, b);
            if (err < 0)
                err = -err;
            std::string key = a.format().name() + "," + b.format().name();
            auto it = max_err.find(key);
            if (it == max_err.end() || err > it->second)
                max_err[key] = err;
        }

        if (report.samples.size() < 20) {
            std::ostringstream os;
            os << op_name(op) << ' ' << fa.name() << ':' << a.raw_hex() << ' '
               << fb.name() << ':' << b.raw_hex() << " -> " << dst.name()
               << " correct=" << correct_near.raw_hex()
               << " gcc=" << emulated.raw_hex();
            report.samples.push_back({os.str(), bucket});
        }
    }
    for (const auto& [key, err] : max_err)
        report.max_error_by_format_pair[key] = render_exact_decimal(err);
    return report;
}

} // namespace fxp
