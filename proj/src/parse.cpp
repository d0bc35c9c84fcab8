#include "qqm/parse.hpp"

#include <cctype>
#include <sstream>

namespace qqm {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(byte(pos_))) advance();
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, col_);
    }

    // Unsigned integer literal.
    std::int64_t integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(byte(pos_)))
            fail("expected a number");
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(byte(pos_))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v < 0) fail("number too large");
            advance();
        }
        return v;
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(byte(pos_));
    }
    bool at_letter() {
        skip_ws();
        char c = peek();
        return c == 'X' || c == 't';
    }

private:
    unsigned char byte(std::size_t i) const {
        return static_cast<unsigned char>(text_[i]);
    }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    Parser(const std::string& text, std::size_t n, bool char2)
        : sc_(text), n_(n), char2_(char2) {}

    Series parse() {
        Series result(n_, char2_);
        bool neg = false;
        if (sc_.accept('-'))
            neg = true;
        else
            sc_.accept('+');
        term_into(result, neg);
        while (!sc_.eof()) {
            if (sc_.accept('+'))
                term_into(result, false);
            else if (sc_.accept('-'))
                term_into(result, true);
            else
                sc_.fail("expected '+' or '-'");
        }
        return result;
    }

private:
    // One product of factors, added into `out` with an optional leading sign.
    void term_into(Series& out, bool neg) {
        Rat coeff = neg ? -1 : 1;
        GroupElem exp = GroupElem::zero(n_);
        bool saw_factor = false;
        for (;;) {
            if (sc_.at_digit()) {
                coeff *= rational();
            } else if (sc_.at_letter()) {
                auto [idx, power] = variable_power();
                exp.coords[idx] = exp.coords[idx] + power;
            } else if (!saw_factor) {
                sc_.fail("expected a coefficient or a variable");
            } else {
                break;
            }
            saw_factor = true;
            if (sc_.accept('*')) continue;
            if (sc_.at_letter() || sc_.at_digit()) continue;  // juxtaposition
            break;
        }
        out.add_term(exp, coeff);
    }

    Rat rational() {
        std::int64_t num = sc_.integer();
        if (sc_.accept('/')) {
            std::int64_t den = sc_.integer();
            if (den == 0) sc_.fail("zero denominator");
            return Rat(num) / den;
        }
        return Rat(num);
    }

    std::pair<std::size_t, Dyadic> variable_power() {
        std::size_t idx;
        if (sc_.accept('X')) {
            if (n_ != 1) sc_.fail("'X' is only available when n = 1");
            idx = 0;
        } else {
            sc_.accept('t');
            std::int64_t i = sc_.integer();
            if (i < 1 || static_cast<std::size_t>(i) > n_)
                sc_.fail("variable index out of range");
            idx = static_cast<std::size_t>(i) - 1;
        }
        Dyadic power(1);
        if (sc_.accept('^')) power = exponent();
        return {idx, power};
    }

    Dyadic exponent() {
        bool neg = sc_.accept('-');
        std::int64_t num = sc_.integer();
        if (neg) num = -num;
        if (sc_.accept('/')) {
            std::int64_t den = sc_.integer();
            if (den <= 0 || (den & (den - 1)) != 0)
                sc_.fail("exponent denominator must be a power of two");
            if (!char2_)
                sc_.fail("fractional exponents need char-2 mode");
            int k = 0;
            while ((std::int64_t(1) << k) != den) ++k;
            return Dyadic(num, k);
        }
        return Dyadic(num);
    }

    Scanner sc_;
    std::size_t n_;
    bool char2_;
};

}  // namespace

Series parse_series(const std::string& text, std::size_t n, bool char2) {
    return Parser(text, n, char2).parse();
}

std::string format_series(const Series& s) {
    if (s.no_visible_terms()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : s.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1) {
            out << a;
            printed = true;
        }
        for (std::size_t i = 0; i < e.dim(); ++i) {
            if (e.coords[i].num == 0) continue;
            if (printed) out << "*";
            if (s.dim() == 1)
                out << "X";
            else
                out << "t" << (i + 1);
            if (!(e.coords[i] == Dyadic(1))) out << "^" << e.coords[i].str();
            printed = true;
        }
        if (!printed) out << "1";
    }
    return out.str();
}

}  // namespace qqm
