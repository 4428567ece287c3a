#include "pbq/parse.hpp"

#include <cctype>
#include <optional>

#include "pbq/errors.hpp"

namespace pbq {

namespace {

enum class TokKind { Integer, Aplus, Aminus, KGen, QSym, Zeta, LParen, RParen, Plus, Minus, Star, Caret, Slash, End };

struct Token {
    TokKind kind;
    Integer value;  // for Integer tokens
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_{TokKind::End, 0, 0};

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {TokKind::End, 0, start};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
            current_ = {TokKind::Integer, Integer(text_.substr(pos_, end - pos_)), start};
            pos_ = end;
            return;
        }
        if (c == 'a') {
            if (pos_ + 1 < text_.size() && (text_[pos_ + 1] == '+' || text_[pos_ + 1] == '-')) {
                current_ = {text_[pos_ + 1] == '+' ? TokKind::Aplus : TokKind::Aminus, 0, start};
                pos_ += 2;
                return;
            }
            throw ParseError("unknown symbol 'a' (expected 'a+' or 'a-')", start);
        }
        if (text_.compare(pos_, 4, "zeta") == 0) {
            current_ = {TokKind::Zeta, 0, start};
            pos_ += 4;
            return;
        }
        switch (c) {
            case 'K': current_ = {TokKind::KGen, 0, start}; break;
            case 'q': current_ = {TokKind::QSym, 0, start}; break;
            case '(': current_ = {TokKind::LParen, 0, start}; break;
            case ')': current_ = {TokKind::RParen, 0, start}; break;
            case '+': current_ = {TokKind::Plus, 0, start}; break;
            case '-': current_ = {TokKind::Minus, 0, start}; break;
            case '*': current_ = {TokKind::Star, 0, start}; break;
            case '^': current_ = {TokKind::Caret, 0, start}; break;
            case '/': current_ = {TokKind::Slash, 0, start}; break;
            default:
                throw ParseError(std::string("unknown symbol '") + c + "'", start);
        }
        ++pos_;
    }
};

class Parser {
  public:
    Parser(const std::string& text, const QContext& ctx) : lex_(text), ctx_(ctx) {}

    AlgebraElement parse() {
        AlgebraElement e = parse_expr();
        if (lex_.peek().kind != TokKind::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
        return e;
    }

  private:
    Lexer lex_;
    const QContext& ctx_;

    AlgebraElement parse_expr() {
        bool negate = false;
        if (lex_.peek().kind == TokKind::Minus) {
            lex_.take();
            negate = true;
        }
        AlgebraElement acc = parse_term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus) {
            bool minus = lex_.take().kind == TokKind::Minus;
            AlgebraElement rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    static bool starts_factor(TokKind k) {
        switch (k) {
            case TokKind::Integer:
            case TokKind::Aplus:
            case TokKind::Aminus:
            case TokKind::KGen:
            case TokKind::QSym:
            case TokKind::Zeta:
            case TokKind::LParen:
                return true;
            default:
                return false;
        }
    }

    AlgebraElement parse_term() {
        AlgebraElement acc = parse_factor();
        for (;;) {
            if (lex_.peek().kind == TokKind::Star) {
                lex_.take();
                acc = acc * parse_factor();
            } else if (starts_factor(lex_.peek().kind)) {
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    long take_exponent() {
        bool neg = false;
        if (lex_.peek().kind == TokKind::Minus) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.peek();
        if (t.kind != TokKind::Integer) throw ParseError("expected integer exponent", t.pos);
        lex_.take();
        if (!t.value.fits_slong_p()) throw ParseError("exponent does not fit in a machine word", t.pos);
        long e = t.value.get_si();
        return neg ? -e : e;
    }

    AlgebraElement parse_factor() {
        AlgebraElement base = parse_primary();
        if (lex_.peek().kind == TokKind::Caret) {
            std::size_t caret_pos = lex_.take().pos;
            long e = take_exponent();
            try {
                return pow(base, e);
            } catch (const OutOfRangeError& err) {
                throw ParseError(err.what(), caret_pos);
            }
        }
        return base;
    }

    AlgebraElement parse_primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case TokKind::Integer: {
                Rational r(t.value);
                if (lex_.peek().kind == TokKind::Slash) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.kind != TokKind::Integer)
                        throw ParseError("expected integer denominator", d.pos);
                    if (d.value == 0) throw ParseError("zero denominator", d.pos);
                    r = Rational(t.value) / Rational(d.value);
                    r.canonicalize();
                }
                return AlgebraElement::from_scalar(ctx_, Scalar::exact_rational(r));
            }
            case TokKind::QSym:
                return AlgebraElement::from_scalar(ctx_, ctx_.q_scalar(1));
            case TokKind::Zeta: {
                Token lp = lex_.take();
                if (lp.kind != TokKind::LParen) throw ParseError("expected '(' after zeta", lp.pos);
                Token n = lex_.take();
                if (n.kind != TokKind::Integer || n.value <= 0)
                    throw ParseError("expected positive root-of-unity order", n.pos);
                if (!n.value.fits_slong_p())
                    throw ParseError("root-of-unity order does not fit in a machine word", n.pos);
                Token rp = lex_.take();
                if (rp.kind != TokKind::RParen) throw ParseError("expected ')'", rp.pos);
                return AlgebraElement::from_scalar(
                    ctx_, Scalar(CyclotomicNumber::zeta(n.value.get_si(), 1)));
            }
            case TokKind::Aplus:
                return AlgebraElement::generator(ctx_, Generator::Aplus);
            case TokKind::Aminus:
                return AlgebraElement::generator(ctx_, Generator::Aminus);
            case TokKind::KGen:
                return AlgebraElement::generator(ctx_, Generator::K);
            case TokKind::LParen: {
                AlgebraElement inner = parse_expr();
                Token rp = lex_.take();
                if (rp.kind != TokKind::RParen) throw ParseError("expected ')'", rp.pos);
                return inner;
            }
            default:
                throw ParseError("expected a scalar, generator, or '('", t.pos);
        }
    }
};

}  // namespace

AlgebraElement parse_expression(const std::string& text, const QContext& ctx) {
    return Parser(text, ctx).parse();
}

}  // namespace pbq
