#pragma once

#include "fxp/exact.hpp"

namespace fxp::oracle {

enum class OpKind { Add, Sub, Mul, Div, Neg, Convert };

/// Brute-force reference evaluator working on raw integers only: scale,
/// multiply, divide with remainder, apply the tie rule. Deliberately
/// shares no rounding code with fxp::round_to so the two can check each
/// other.
BigInt eval_raw(OpKind op, FixedFormat fa, const BigInt& ra, FixedFormat fb,
                const BigInt& rb, FixedFormat dst, RoundingMode mode,
                OverflowPolicy policy);

} // namespace fxp::oracle
