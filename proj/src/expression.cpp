#include "contact/expression.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace contact
{

namespace
{

constexpr int kMaxVars = 4;

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return p;
    }

    int max_var() const { return max_var_; }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static int var_index(char c)
    {
        switch (c) {
        case 'x': return 0;
        case 'y': return 1;
        case 'z': return 2;
        case 'w': return 3;
        default: return -1;
        }
    }

    bool starts_factor()
    {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || var_index(c) >= 0;
    }

    Polynomial expr()
    {
        Polynomial acc(kMaxVars);
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        Polynomial t = term();
        acc = negate ? acc - t : acc + t;
        for (;;) {
            c = peek();
            if (c != '+' && c != '-') {
                break;
            }
            ++pos_;
            Polynomial next = term();
            acc = c == '-' ? acc - next : acc + next;
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor()
    {
        Polynomial base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected exponent");
            }
            unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (k > 1000) {
                fail("exponent too large");
            }
            base = base.pow(static_cast<unsigned>(k));
        }
        return base;
    }

    Polynomial primary()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            Integer v(std::string(text_.substr(start, pos_ - start)));
            return Polynomial::constant(kMaxVars, Rational(v));
        }
        int idx = var_index(c);
        if (idx >= 0) {
            ++pos_;
            max_var_ = std::max(max_var_, idx);
            return Polynomial::variable(kMaxVars, idx);
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int max_var_ = -1;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, int min_vars)
{
    Parser parser(text);
    Polynomial p = parser.parse();
    int n = std::max({parser.max_var() + 1, min_vars, 1});
    return p.with_nvars(n);
}

} // namespace contact
