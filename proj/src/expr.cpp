#include "lcalg/expr.hpp"

#include "lcalg/errors.hpp"

#include <cctype>

namespace lcalg {

namespace {

class Parser {
public:
    Parser(std::string_view text, const ConstantTable* constants, int line, int column_offset)
        : text_(text), constants_(constants), line_(line), offset_(column_offset)
    {}

    MultiPoly parse()
    {
        skip_space();
        if (at_end()) fail("empty expression");
        MultiPoly out = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return out;
    }

private:
    MultiPoly expr()
    {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        MultiPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            MultiPoly rhs = term();
            if (c == '+')
                acc += rhs;
            else
                acc -= rhs;
        }
        return acc;
    }

    MultiPoly term()
    {
        MultiPoly acc = factor();
        for (;;) {
            skip_space();
            if (peek() != '*') break;
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    MultiPoly factor()
    {
        MultiPoly base = atom();
        skip_space();
        if (peek() != '^') return base;
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
        unsigned long e = read_uint();
        if (e > 64) fail("exponent too large");
        return base.pow(static_cast<unsigned>(e));
    }

    MultiPoly atom()
    {
        skip_space();
        if (at_end()) fail("unexpected end of expression");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(rational());
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            skip_space();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '$') {
            std::size_t start = pos_++;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
            std::string_view name = text_.substr(start + 1, pos_ - start - 1);
            if (name.empty()) fail_at(start, "expected constant name after '$'");
            if (!constants_) fail_at(start, "constants are not available here");
            auto it = constants_->find(name);
            if (it == constants_->end()) fail_at(start, "unknown constant '" + std::string(name) + "'");
            return it->second;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
            std::string_view word = text_.substr(start, pos_ - start);
            if (word == "d") return d_var();
            if (word == "l") return l_var();
            if (word == "m") return m_var();
            if (word == "i") return MultiPoly(Scalar::imaginary_unit());
            fail_at(start, "unknown symbol '" + std::string(word) + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    Scalar rational()
    {
        std::size_t start = pos_;
        mpz_class num{std::string(digits())};
        if (peek() != '/') return Scalar(mpq_class(num));
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator after '/'");
        mpz_class den{std::string(digits())};
        if (den == 0) fail_at(start, "zero denominator");
        return Scalar(mpq_class(num, den));
    }

    std::string_view digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    unsigned long read_uint()
    {
        std::string_view d = digits();
        if (d.size() > 6) fail("exponent too large");
        return std::stoul(std::string(d));
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const
    {
        throw ParseError(msg, line_, offset_ + static_cast<int>(pos) + 1);
    }

    std::string_view text_;
    const ConstantTable* constants_;
    int line_;
    int offset_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const ConstantTable* constants, int line, int column_offset)
{
    return Parser(text, constants, line, column_offset).parse();
}

Scalar parse_scalar(std::string_view text)
{
    MultiPoly p = parse_poly(text);
    if (!p.is_constant()) throw ParseError("expected a constant, got '" + std::string(text) + "'");
    return p.constant_term();
}

}  // namespace lcalg
