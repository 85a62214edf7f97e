#include "cobord/expr.hpp"

#include <cctype>

#include "cobord/errors.hpp"

namespace cobord {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected number at '" + text.substr(start) + "'");
        return text.substr(start, pos - start);
    }
    std::string identifier() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
        }
        if (start == pos)
            throw ParseError("expected identifier at '" + text.substr(start) + "'");
        return text.substr(start, pos - start);
    }
};

} // namespace

GradedPoly parse_polynomial(const std::string& text, const VarTablePtr& vars) {
    Lexer lex{text};
    GradedPoly poly(vars);
    if (lex.done())
        throw ParseError("empty polynomial expression");

    bool first = true;
    while (!lex.done()) {
        Rational sign = 1;
        if (lex.accept('-'))
            sign = -1;
        else if (lex.accept('+')) {
            if (first)
                throw ParseError("expression may not start with '+'");
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms in '" + text + "'");
        }
        first = false;

        Rational coeff = sign;
        Exponents exps(vars->size(), 0);
        bool saw_factor = false;
        while (true) {
            char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lex.number();
                if (lex.accept('/')) {
                    std::string den = lex.number();
                    coeff *= make_rational(Int(num), Int(den));
                } else {
                    coeff *= Rational(Int(num));
                }
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string name = lex.identifier();
                auto index = vars->find(name);
                if (!index)
                    throw ParseError("unknown symbol '" + name + "' in '" + text + "'");
                int exponent = 1;
                if (lex.accept('^'))
                    exponent = std::stoi(lex.number());
                exps[*index] += exponent;
            } else {
                throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + text +
                                 "'");
            }
            saw_factor = true;
            if (!lex.accept('*'))
                break;
        }
        if (!saw_factor)
            throw ParseError("empty term in '" + text + "'");
        poly.add_term(exps, coeff);
    }
    return poly;
}

std::vector<std::string> collect_identifiers(const std::string& text) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (std::isalpha(c)) {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            bool seen = false;
            for (const auto& existing : out)
                if (existing == name)
                    seen = true;
            if (!seen)
                out.push_back(name);
        } else {
            ++pos;
        }
    }
    return out;
}

} // namespace cobord
