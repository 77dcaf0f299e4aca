#include "fxp/conformance/corpus.hpp"

#include <fstream>
#include <sstream>

namespace fxp {
namespace {

std::uint64_t parse_hex(std::string_view text) {
    if (text.size() < 3 || text.substr(0, 2) != "0x")
        throw ParseError("expected 0x hex value, got '" + std::string(text) + "'");
    std::uint64_t v = 0;
    for (char c : text.substr(2)) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            throw ParseError("bad hex digit in '" + std::string(text) + "'");
        if (v >> 60 > 0 && text.size() > 18)
            throw ParseError("hex value too wide: '" + std::string(text) + "'");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return v;
}

int arity(const std::string& op) {
    if (op == "add" || op == "sub" || op == "mul" || op == "div" || op == "compare")
        return 2;
    return 1;
}

bool is_known_op(const std::string& op) {
    static const char* ops[] = {"add", "sub", "mul", "div", "neg", "convert",
                                "parse", "from_ieee", "to_int", "compare"};
    for (auto* o : ops)
        if (op == o)
            return true;
    return false;
}

FixedValue as_fixed(const CorpusInput& in) {
    if (in.kind != CorpusInput::Kind::Fixed)
        throw ParseError("operand must be a fixed-point value");
    return in.fixed;
}

} // namespace

CorpusInput CorpusInput::parse(std::string_view token) {
    auto colon = token.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("bad input token '" + std::string(token) + "'");
    std::string_view tag = token.substr(0, colon);
    std::string_view rest = token.substr(colon + 1);
    CorpusInput in;
    if (tag == "dec") {
        in.kind = Kind::Decimal;
        in.literal = std::string(rest);
        parse_decimal_exact(in.literal); // validate now
    } else if (tag == "b32" || tag == "b64") {
        in.kind = Kind::Ieee;
        in.ieee = {tag == "b32" ? 32 : 64, parse_hex(rest)};
    } else if (tag == "int") {
        in.kind = Kind::Integer;
        in.integer = BigInt(std::string(rest));
    } else {
        in.kind = Kind::Fixed;
        in.fixed = FixedValue(FixedFormat::parse(tag), parse_hex(rest));
    }
    return in;
}

std::string CorpusInput::to_string() const {
    switch (kind) {
    case Kind::Fixed:
        return fixed.format().name() + ":" + fixed.raw_hex();
    case Kind::Decimal:
        return "dec:" + literal;
    case Kind::Ieee:
        return (ieee.width == 32 ? "b32:" : "b64:") + ieee.bits_hex();
    case Kind::Integer:
        return "int:" + integer.str();
    }
    return "?";
}

std::string_view CaseResult::status_token(Status s) {
    switch (s) {
    case Status::Pass:          return "pass";
    case Status::Fail:          return "fail";
    case Status::ErrorMismatch: return "error-mismatch";
    }
    return "?";
}

std::vector<CorpusCase> parse_corpus(std::istream& in) {
    std::vector<CorpusCase> cases;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t)
            tok.push_back(t);
        if (tok.empty())
            continue;
        try {
            CorpusCase c;
            size_t i = 0;
            auto next = [&]() -> std::string {
                if (i >= tok.size())
                    throw ParseError("truncated case");
                return tok[i++];
            };
            c.id = next();
            c.profile = next();
            if (c.profile != "correct" && c.profile != "gcc")
                throw ParseError("unknown profile '" + c.profile + "'");
            c.op = next();
            if (!is_known_op(c.op))
                throw ParseError("unknown op '" + c.op + "'");
            for (int k = 0; k < arity(c.op); ++k)
                c.inputs.push_back(CorpusInput::parse(next()));
            std::string dst = next(), mode = next(), policy = next();
            if (dst != "-")
                c.dst = FixedFormat::parse(dst);
            else if (c.op != "to_int" && c.op != "compare")
                throw ParseError("op '" + c.op + "' needs a dst format");
            if (mode != "-")
                c.mode = parse_rounding_mode(mode);
            if (policy != "-")
                c.policy = parse_overflow_policy(policy);
            c.expected = next();
            if (i != tok.size())
                throw ParseError("trailing fields");
            cases.push_back(std::move(c));
        } catch (const ParseError& e) {
            throw CorpusParseError(e.what(), lineno);
        }
    }
    return cases;
}

std::vector<CorpusCase> load_corpus(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw Error("cannot open corpus file '" + path + "'");
    return parse_corpus(f);
}

CaseResult run_case(const CorpusCase& c) {
    CaseResult r;
    r.id = c.id;
    r.expected = c.expected;
    const bool gcc = c.profile == "gcc";

    try {
        if (c.op == "compare") {
            auto ord = compare(as_fixed(c.inputs[0]), as_fixed(c.inputs[1]));
            r.got = ord < 0 ? "lt" : (ord > 0 ? "gt" : "eq");
        } else if (c.op == "to_int") {
            FixedValue v = as_fixed(c.inputs[0]);
            r.exact_value = render_exact_decimal(v.value());
            r.got = "int:" + to_integer(v).str();
        } else if (c.op == "parse") {
            if (c.inputs[0].kind != CorpusInput::Kind::Decimal)
                throw ParseError("parse op needs a dec: input");
            r.exact_value = render_exact_decimal(parse_decimal_exact(c.inputs[0].literal));
            FixedValue out = gcc ? emulated_parse(c.inputs[0].literal, c.dst)
                                 : parse_decimal(c.inputs[0].literal, c.dst, c.mode, c.policy);
            r.got = out.raw_hex();
        } else if (c.op == "from_ieee") {
            if (c.inputs[0].kind != CorpusInput::Kind::Ieee)
                throw ParseError("from_ieee op needs a b32:/b64: input");
            const IeeeFloat& f = c.inputs[0].ieee;
            r.exact_value = render_exact_decimal(f.value());
            FixedValue out = gcc ? emulated_from_ieee(f, c.dst)
                                 : from_ieee(f, c.dst, c.mode, c.policy);
            r.got = out.raw_hex();
        } else if (c.op == "convert" || c.op == "neg") {
            FixedValue v = as_fixed(c.inputs[0]);
            ExactValue exact = c.op == "neg" ? ExactValue(-v.value()) : v.value();
            r.exact_value = render_exact_decimal(exact);
            FixedValue out;
            if (c.op == "convert")
                out = gcc ? emulated_convert(v, c.dst)
                          : convert_fixed(v, c.dst, c.mode, c.policy);
            else
                out = gcc ? emulated_neg(v, c.dst) : neg(v, c.dst, c.mode, c.policy);
            r.got = out.raw_hex();
        } else {
            FixedValue a = as_fixed(c.inputs[0]);
            FixedValue b = as_fixed(c.inputs[1]);
            ExactValue exact;
            if (c.op == "add")
                exact = a.value() + b.value();
            else if (c.op == "sub")
                exact = a.value() - b.value();
            else if (c.op == "mul")
                exact = a.value() * b.value();
            else if (b.value() != 0)
                exact = a.value() / b.value();
            r.exact_value = render_exact_decimal(exact);
            FixedValue out;
            if (gcc) {
                if (c.op == "add")
                    out = emulated_add(a, b, c.dst);
                else if (c.op == "sub")
                    out = emulated_sub(a, b, c.dst);
                else if (c.op == "mul")
                    out = emulated_mul(a, b, c.dst);
                else
                    out = emulated_div(a, b, c.dst);
            } else {
                if (c.op == "add")
                    out = add(a, b, c.dst, c.mode, c.policy);
                else if (c.op == "sub")
                    out = sub(a, b, c.dst, c.mode, c.policy);
                else if (c.op == "mul")
                    out = mul(a, b, c.dst, c.mode, c.policy);
                else
                    out = div(a, b, c.dst, c.mode, c.policy);
            }
            r.got = out.raw_hex();
        }
    } catch (const OverflowError&) {
        r.got = "overflow";
    } catch (const DivideByZeroError&) {
        r.got = "divzero";
    } catch (const NonFiniteError&) {
        r.got = "nonfinite";
    }

    auto is_error_token = [](const std::string& s) {
        return s == "overflow" || s == "divzero" || s == "nonfinite";
    };
    if (r.got == r.expected)
        r.status = CaseResult::Status::Pass;
    else if (is_error_token(r.got) != is_error_token(r.expected))
        r.status = CaseResult::Status::ErrorMismatch;
    else
        r.status = CaseResult::Status::Fail;
    return r;
}

std::vector<CaseResult> run_corpus(const std::vector<CorpusCase>& cases) {
    std::vector<CaseResult> results;
    results.reserve(cases.size());
    for (const auto& c : cases)
        results.push_back(run_case(c));
    return results;
}

} // namespace fxp
