#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fxp/emulation.hpp"

namespace fxp {

/// One operand of a corpus case. Token forms:
///   s16.15:0xC000   raw bits in a fixed format
///   dec:0.04        decimal literal
///   b32:0x3d23d70a  IEEE bit pattern (b64 likewise)
///   int:65535       machine integer
struct CorpusInput {
    enum class Kind { Fixed, Decimal, Ieee, Integer };
    Kind kind = Kind::Fixed;
    FixedValue fixed;
    std::string literal;
    IeeeFloat ieee;
    BigInt integer;

    static CorpusInput parse(std::string_view token);
    std::string to_string() const;
};

/// One bit-exact conformance testcase. Line format (whitespace separated,
/// `#` comments, `-` for fields an op ignores):
///   id profile op input [input] dst mode policy expected
struct CorpusCase {
    std::string id;
    std::string profile; // "correct" | "gcc"
    std::string op;      // add sub mul div neg convert parse from_ieee to_int compare
    std::vector<CorpusInput> inputs;
    FixedFormat dst{};
    RoundingMode mode = RoundingMode::NearestEven;
    OverflowPolicy policy = OverflowPolicy::Saturate;
    std::string expected; // raw-hex, int:N, lt/eq/gt, or an error token
};

struct CaseResult {
    enum class Status { Pass, Fail, ErrorMismatch };
    std::string id;
    Status status = Status::Pass;
    std::string got;
    std::string expected;
    std::string exact_value; // exact decimal of the unrounded result

    static std::string_view status_token(Status s);
};

std::vector<CorpusCase> parse_corpus(std::istream& in);
std::vector<CorpusCase> load_corpus(const std::string& path);

CaseResult run_case(const CorpusCase& c);
std::vector<CaseResult> run_corpus(const std::vector<CorpusCase>& cases);

} // namespace fxp
