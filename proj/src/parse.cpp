#include "bhdual/intmat.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace bhdual {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw SyntaxError("expected '" + std::string(1, c) + "' at position " +
                              std::to_string(pos));
    }
    Int integer() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw SyntaxError("expected integer at position " + std::to_string(pos));
        Int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? Int(-v) : v;
    }
    std::optional<std::string> identifier() {
        skip_ws();
        if (pos >= s.size())
            return std::nullopt;
        char c = s[pos];
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
            return std::nullopt;
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

struct Monomial {
    Rat coefficient = 1;
    std::map<std::string, Int> exponents;
};

Monomial parse_term(Lexer& lx) {
    Monomial m;
    if (std::isdigit(static_cast<unsigned char>(lx.peek())) || lx.peek() == '-') {
        m.coefficient = Rat(lx.integer());
        if (m.coefficient == 0)
            throw SyntaxError("zero coefficient");
        lx.expect('*');
    }
    for (;;) {
        auto name = lx.identifier();
        if (!name)
            throw SyntaxError("expected variable at position " + std::to_string(lx.pos));
        Int exp = 1;
        if (lx.accept('^')) {
            exp = lx.integer();
            if (exp <= 0)
                throw SyntaxError("exponent must be positive");
        }
        m.exponents[*name] += exp; // repeated factors multiply
        if (!lx.accept('*'))
            break;
    }
    return m;
}

// 'x' followed by digits sorts numerically; anything else by first appearance
bool numeric_name(const std::string& s, long& idx) {
    if (s.size() < 2 || s[0] != 'x')
        return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    idx = std::stol(s.substr(1));
    return true;
}

} // namespace

InvertiblePolynomial parse_polynomial(const std::string& text) {
    Lexer lx{text};
    std::vector<Monomial> monomials;
    monomials.push_back(parse_term(lx));
    while (lx.accept('+'))
        monomials.push_back(parse_term(lx));
    if (!lx.eof())
        throw SyntaxError("unexpected trailing input at position " + std::to_string(lx.pos));

    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (std::size_t j = i + 1; j < monomials.size(); ++j)
            if (monomials[i].exponents == monomials[j].exponents)
                throw DuplicateMonomial("monomials " + std::to_string(i + 1) + " and " +
                                        std::to_string(j + 1) + " coincide");

    std::vector<std::string> names;
    for (const auto& m : monomials)
        for (const auto& [name, _] : m.exponents)
            if (std::find(names.begin(), names.end(), name) == names.end())
                names.push_back(name);

    bool all_numeric = true;
    for (const auto& name : names) {
        long idx;
        if (!numeric_name(name, idx))
            all_numeric = false;
    }
    if (all_numeric)
        std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
            long ia, ib;
            numeric_name(a, ia);
            numeric_name(b, ib);
            return ia < ib;
        });

    if (monomials.size() != names.size())
        throw NotSquare("polynomial has " + std::to_string(monomials.size()) +
                        " monomials but " + std::to_string(names.size()) + " variables");

    const std::size_t n = names.size();
    IntMatrix e(n, n);
    std::vector<Rat> coeffs;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [name, exp] : monomials[i].exponents) {
            std::size_t j = std::find(names.begin(), names.end(), name) - names.begin();
            e(i, j) = exp;
        }
        coeffs.push_back(monomials[i].coefficient);
    }
    return InvertiblePolynomial{ExponentMatrix(std::move(e)), std::move(names),
                                std::move(coeffs)};
}

} // namespace bhdual
