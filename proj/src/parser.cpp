#include <cctype>

#include "lefsurf/mpoly.hpp"

namespace lefsurf {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void error(const std::string& what)
    {
        fail(ErrorCode::UsageError,
             "parse error at position " + std::to_string(pos) + ": " + what);
    }

    MPoly parse_expr()
    {
        MPoly acc = parse_term();
        for (;;) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else return acc;
        }
    }

    MPoly parse_term()
    {
        MPoly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    MPoly parse_factor()
    {
        MPoly base = parse_base();
        if (eat('^')) {
            skip_ws();
            unsigned long e = parse_uint();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    unsigned long parse_uint()
    {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            error("expected exponent");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
            if (v > 100000) error("exponent too large");
            ++pos;
        }
        return v;
    }

    MPoly parse_base()
    {
        skip_ws();
        if (eat('(')) {
            MPoly inner = parse_expr();
            if (!eat(')')) error("expected ')'");
            return inner;
        }
        if (eat('-')) return -parse_factor();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            // integer or rational literal a or a/b
            Int num = parse_int();
            if (eat('/')) {
                Int den = parse_int();
                if (den == 0) error("division by zero in literal");
                Rat q(num, den);
                q.canonicalize();
                return MPoly::constant(vars, q);
            }
            return MPoly::constant(vars, Rat(num));
        }
        if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])))) {
            std::string name;
            name += s[pos++];
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                name += s[pos++];
            return MPoly::variable(vars, name);
        }
        error("unexpected character");
    }

    Int parse_int()
    {
        skip_ws();
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits += s[pos++];
        if (digits.empty()) error("expected number");
        return Int(digits);
    }
};

} // namespace

MPoly parse_poly(const std::string& text, std::vector<std::string> vars)
{
    Parser p{text, 0, vars};
    MPoly result = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.error("trailing input");
    return result;
}

std::vector<std::string> standard_vars(int projective_n)
{
    std::vector<std::string> v{"x", "y", "t", "T"};
    if (projective_n >= 0)
        for (int i = 0; i <= projective_n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

} // namespace lefsurf
