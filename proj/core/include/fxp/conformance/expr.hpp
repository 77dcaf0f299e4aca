#pragma once

#include <string>
#include <string_view>

#include "fxp/emulation.hpp"

namespace fxp {

/// Small expression language mirroring the C snippets conformance cases
/// come from:
///
///   stmt  := 'let' ident [':' fmt] '=' expr | expr
///   expr  := term (('+'|'-') term)*
///   term  := factor (('*'|'/') factor)*
///   factor:= '-' factor | '(' fmt ')' factor | '(' expr ')' | literal | ident
///
/// Statements are ';'-separated; the last one is the result. Literals
/// take the paper's suffixes: k = s16.15, lr = s0.31, ulr = u0.32. A
/// suffix-less literal must be bound by a cast or a typed let.
/// Binary operations round into the left operand's format.
struct EvalOptions {
    BehaviorProfile profile = BehaviorProfile::correct();
    RoundingMode mode = RoundingMode::NearestEven;
    OverflowPolicy policy = OverflowPolicy::Saturate;
};

struct EvalResult {
    FixedValue value;
    std::string exact_decimal; // exact decimal of the final value
};

EvalResult eval_expression(std::string_view text, const EvalOptions& options);

} // namespace fxp
