#include "fxp/conformance/expr.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "fxp/convert.hpp"
#include "fxp/ops.hpp"

namespace fxp {
namespace {

struct Token {
    enum class Kind { Ident, Number, Punct, End };
    Kind kind = Kind::End;
    std::string text;   // ident name / punct char
    std::string number; // numeric part of a literal
    std::string suffix; // k / lr / ulr / empty
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size()) {
            tok_ = {};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_' || text_[pos_] == '.'))
                ++pos_;
            tok_ = {Token::Kind::Ident, std::string(text_.substr(start, pos_ - start)), "", ""};
            return;
        }
        tok_ = {Token::Kind::Punct, std::string(1, c), "", ""};
        ++pos_;
    }

    void lex_number() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '.'))
            ++pos_;
        // exponent part, careful not to eat a suffix letter
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            size_t e = pos_ + 1;
            if (e < text_.size() && (text_[e] == '+' || text_[e] == '-'))
                ++e;
            if (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) {
                pos_ = e;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
        }
        std::string number(text_.substr(start, pos_ - start));
        size_t sstart = pos_;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        tok_ = {Token::Kind::Number, "", number,
                std::string(text_.substr(sstart, pos_ - sstart))};
    }

    std::string_view text_;
    size_t pos_ = 0;
    Token tok_;
};

std::optional<FixedFormat> suffix_format(const std::string& suffix) {
    if (suffix.empty())
        return std::nullopt;
    if (suffix == "k")
        return formats::s16_15;
    if (suffix == "lr")
        return formats::s0_31;
    if (suffix == "ulr")
        return formats::u0_32;
    throw ParseError("unknown literal suffix '" + suffix + "'");
}

// Either a typed fixed-point value or a still-unbound exact literal.
struct Val {
    bool bound = false;
    FixedValue fv;
    ExactValue ex;
};

class Evaluator {
public:
    Evaluator(std::string_view text, const EvalOptions& opt)
        : lex_(text), opt_(opt), gcc_(opt.profile.name == "gcc") {}

    EvalResult run() {
        std::optional<Val> last;
        for (;;) {
            last = statement();
            if (lex_.peek().kind == Token::Kind::End)
                break;
            expect(";");
        }
        if (!last || !last->bound)
            throw ParseError("expression result has no format; add a suffix or cast");
        return {last->fv, render_exact_decimal(last->fv.value())};
    }

private:
    Val bind_constant(const ExactValue& x, FixedFormat fmt) {
        RoundingMode m = gcc_ ? opt_.profile.constant_rounding : opt_.mode;
        OverflowPolicy p = gcc_ ? OverflowPolicy::Wrap : opt_.policy;
        return {true, round_to(x, fmt, m, p), {}};
    }

    Val cast_to(const Val& v, FixedFormat fmt) {
        if (!v.bound)
            return bind_constant(v.ex, fmt);
        if (gcc_)
            return {true, emulated_convert(v.fv, fmt), {}};
        return {true, convert_fixed(v.fv, fmt, opt_.mode, opt_.policy), {}};
    }

    Val statement() {
        if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "let") {
            lex_.take();
            Token name = lex_.take();
            if (name.kind != Token::Kind::Ident)
                throw ParseError("expected a name after 'let'");
            std::optional<FixedFormat> fmt;
            if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == ":") {
                lex_.take();
                Token f = lex_.take();
                if (f.kind != Token::Kind::Ident)
                    throw ParseError("expected a format after ':'");
                fmt = FixedFormat::parse(f.text);
            }
            expect("=");
            Val v = expression();
            if (fmt)
                v = cast_to(v, *fmt);
            if (!v.bound)
                throw ParseError("'" + name.text + "' has no format; annotate the let");
            vars_[name.text] = v;
            return v;
        }
        return expression();
    }

    Val expression() {
        Val lhs = term();
        while (lex_.peek().kind == Token::Kind::Punct &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            bool plus = lex_.take().text == "+";
            Val rhs = term();
            lhs = binary(plus ? '+' : '-', lhs, rhs);
        }
        return lhs;
    }

    Val term() {
        Val lhs = factor();
        while (lex_.peek().kind == Token::Kind::Punct &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            bool times = lex_.take().text == "*";
            Val rhs = factor();
            lhs = binary(times ? '*' : '/', lhs, rhs);
        }
        return lhs;
    }

    Val factor() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Punct && t.text == "-") {
            lex_.take();
            Val v = factor();
            if (!v.bound)
                return {false, {}, -v.ex};
            if (gcc_)
                return {true, emulated_neg(v.fv, v.fv.format()), {}};
            return {true, neg(v.fv, v.fv.format(), opt_.mode, opt_.policy), {}};
        }
        if (t.kind == Token::Kind::Punct && t.text == "(") {
            lex_.take();
            if (lex_.peek().kind == Token::Kind::Ident &&
                FixedFormat::looks_like_format(lex_.peek().text)) {
                FixedFormat fmt = FixedFormat::parse(lex_.take().text);
                expect(")");
                return cast_to(factor(), fmt);
            }
            Val v = expression();
            expect(")");
            return v;
        }
        if (t.kind == Token::Kind::Number) {
            Token n = lex_.take();
            ExactValue x = parse_decimal_exact(n.number);
            if (auto fmt = suffix_format(n.suffix))
                return bind_constant(x, *fmt);
            return {false, {}, x};
        }
        if (t.kind == Token::Kind::Ident) {
            Token id = lex_.take();
            auto it = vars_.find(id.text);
            if (it == vars_.end())
                throw ParseError("unknown name '" + id.text + "'");
            return it->second;
        }
        throw ParseError("unexpected token '" + t.text + "'");
    }

    Val binary(char op, const Val& lhs, const Val& rhs) {
        if (!lhs.bound || !rhs.bound)
            throw ParseError("operands need formats; add suffixes or casts");
        FixedFormat dst = lhs.fv.format();
        if (gcc_) {
            switch (op) {
            case '+': return {true, emulated_add(lhs.fv, rhs.fv, dst), {}};
            case '-': return {true, emulated_sub(lhs.fv, rhs.fv, dst), {}};
            case '*': return {true, emulated_mul(lhs.fv, rhs.fv, dst), {}};
            default:  return {true, emulated_div(lhs.fv, rhs.fv, dst), {}};
            }
        }
        switch (op) {
        case '+': return {true, add(lhs.fv, rhs.fv, dst, opt_.mode, opt_.policy), {}};
        case '-': return {true, sub(lhs.fv, rhs.fv, dst, opt_.mode, opt_.policy), {}};
        case '*': return {true, mul(lhs.fv, rhs.fv, dst, opt_.mode, opt_.policy), {}};
        default:  return {true, div(lhs.fv, rhs.fv, dst, opt_.mode, opt_.policy), {}};
        }
    }

    void expect(const std::string& punct) {
        Token t = lex_.take();
        if (t.kind != Token::Kind::Punct || t.text != punct)
            throw ParseError("expected '" + punct + "'");
    }

    Lexer lex_;
    EvalOptions opt_;
    bool gcc_;
    std::map<std::string, Val> vars_;
};

} // namespace

EvalResult eval_expression(std::string_view text, const EvalOptions& options) {
    return Evaluator(text, options).run();
}

} // namespace fxp
