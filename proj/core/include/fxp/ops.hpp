#pragma once

#include <compare>

#include "fxp/exact.hpp"

namespace fxp {

// Arithmetic in the correct profile: the mathematically exact result is
// formed first, then rounded once into the caller-stated destination
// format. Operand formats may differ; nothing is pre-converted.

FixedValue add(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst,
               RoundingMode mode, OverflowPolicy policy);
FixedValue sub(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst,
               RoundingMode mode, OverflowPolicy policy);
FixedValue mul(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst,
               RoundingMode mode, OverflowPolicy policy);
FixedValue div(const FixedValue& lhs, const FixedValue& rhs, FixedFormat dst,
               RoundingMode mode, OverflowPolicy policy);
FixedValue neg(const FixedValue& v, FixedFormat dst, RoundingMode mode,
               OverflowPolicy policy);

/// Exact mathematical comparison across any pair of formats.
std::strong_ordering compare(const FixedValue& lhs, const FixedValue& rhs);

} // namespace fxp
