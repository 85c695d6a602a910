// Concrete syntax for differential operators, e.g. "z*D + z*D^2" or
// "z^2*D^2 + D^7" or "(1 + z^2)*D^3". Rational coefficients only; repeated
// D-orders accumulate by addition. print_operator() emits a canonical form
// that parses back to a structurally equal operator.
#ifndef EIGENROOT_PARSER_HPP
#define EIGENROOT_PARSER_HPP

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "eigenroot/bigfloat.hpp"
#include "eigenroot/errors.hpp"
#include "eigenroot/operator.hpp"

namespace eigenroot {

namespace detail {

class OperatorParser {
public:
    explicit OperatorParser(std::string_view text) : text_(text) {}

    DifferentialOperator parse() {
        std::map<int, ExactPolynomial> terms;
        bool negate = false;
        parse_term(terms, negate);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                negate = (c == '-');
                parse_term(terms, negate);
            } else {
                fail("'+' or '-'");
            }
        }
        return DifferentialOperator::from_terms(std::move(terms));
    }

private:
    void parse_term(std::map<int, ExactPolynomial>& terms, bool negate) {
        skip_ws();
        if (!at_end() && peek() == '-') {
            ++pos_;
            negate = !negate;
            skip_ws();
        }
        Rational coeff(1);
        bool saw_coeff = false;
        if (at_end()) fail("a term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            saw_coeff = true;
            skip_optional_star();
        }
        ExactPolynomial zpoly = ExactPolynomial::constant(Rational(1));
        bool saw_z = false;
        skip_ws();
        if (!at_end() && (peek() == 'z' || peek() == '(')) {
            zpoly = parse_zpart();
            saw_z = true;
            skip_optional_star();
        }
        skip_ws();
        if (at_end() || peek() != 'D') {
            fail(saw_coeff || saw_z ? "'D'" : "a term (rational, 'z', '(' or 'D')");
        }
        ++pos_;
        const int order = parse_optional_exponent();
        ExactPolynomial q = coeff * zpoly;
        if (negate) q = -q;
        auto [it, inserted] = terms.emplace(order, q);
        if (!inserted) it->second = it->second + q;
    }

    // 'z' ['^' uint] or a parenthesised polynomial in z.
    ExactPolynomial parse_zpart() {
        skip_ws();
        if (peek() == 'z') {
            ++pos_;
            const int e = parse_optional_exponent();
            return ExactPolynomial::monomial(Rational(1), e);
        }
        // '('
        ++pos_;
        ExactPolynomial acc = ExactPolynomial::zero();
        bool negate = false;
        acc = acc + parse_zterm(negate);
        for (;;) {
            skip_ws();
            if (at_end()) fail("')'");
            const char c = peek();
            if (c == ')') {
                ++pos_;
                return acc;
            }
            if (c == '+' || c == '-') {
                ++pos_;
                negate = (c == '-');
                acc = acc + parse_zterm(negate);
            } else {
                fail("'+', '-' or ')'");
            }
        }
    }

    // [rational ['*']] ['z' ['^' uint]] with at least one present.
    ExactPolynomial parse_zterm(bool negate) {
        skip_ws();
        if (!at_end() && peek() == '-') {
            ++pos_;
            negate = !negate;
            skip_ws();
        }
        Rational coeff(1);
        bool saw_coeff = false;
        if (at_end()) fail("a polynomial term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            saw_coeff = true;
            skip_optional_star();
        }
        int power = 0;
        skip_ws();
        if (!at_end() && peek() == 'z') {
            ++pos_;
            power = parse_optional_exponent();
        } else if (!saw_coeff) {
            fail("a rational or 'z'");
        }
        if (negate) coeff = -coeff;
        return ExactPolynomial::monomial(coeff, power);
    }

    int parse_optional_exponent() {
        skip_ws();
        if (at_end() || peek() != '^') return 1;
        ++pos_;
        return static_cast<int>(parse_uint());
    }

    Rational parse_rational() {
        skip_ws();
        bool neg = false;
        if (!at_end() && peek() == '-') {
            neg = true;
            ++pos_;
        }
        BigInt num = parse_uint();
        BigInt den(1);
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            den = parse_uint();
            if (den == 0) fail("a nonzero denominator");
        }
        Rational q(num, den);
        return neg ? Rational(-q) : q;
    }

    BigInt parse_uint() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("a digit");
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(peek());
            ++pos_;
        }
        return BigInt(digits);
    }

    void skip_optional_star() {
        skip_ws();
        if (!at_end() && peek() == '*') ++pos_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(pos_, expected);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Empty result means "coefficient 1, power 0": the caller drops the factor.
inline std::string format_monomial(const Rational& coeff, int power) {
    std::string out;
    const bool unit = (coeff == 1);
    if (!unit) out += fraction_string(coeff);
    if (power > 0) {
        if (!out.empty()) out += "*";
        out += "z";
        if (power > 1) out += "^" + std::to_string(power);
    }
    return out;
}

} // namespace detail

// Syntax only; shape validation is classify()'s job.
inline DifferentialOperator parse_operator(std::string_view text) {
    return detail::OperatorParser(text).parse();
}

// Parse and insist the operator satisfies the exactly-solvable conditions.
inline DifferentialOperator parse_operator_validated(std::string_view text) {
    DifferentialOperator t = parse_operator(text);
    const OperatorClassification c = classify(t);
    if (c.kind == OperatorKind::invalid) throw ValidationError(c.reason);
    return t;
}

inline std::string print_operator(const DifferentialOperator& t) {
    std::string out;
    for (const auto& [j, q] : t.terms()) {
        std::string term;
        // Monomial Q_j prints inline; anything else parenthesised, ascending.
        int nonzero = 0;
        for (const auto& c : q.coefficients())
            if (c != 0) ++nonzero;
        bool negative_head = false;
        if (nonzero == 1) {
            const int deg = q.degree();
            Rational c = q.coefficient(deg);
            if (c < 0) {
                negative_head = true;
                c = -c;
            }
            term = detail::format_monomial(c, deg);
            if (term.empty() && negative_head) term = "1";
            if (!term.empty()) term += "*";
        } else {
            auto mono = [](const Rational& c, int i) {
                const std::string m = detail::format_monomial(c, i);
                return m.empty() ? std::string("1") : m;
            };
            term = "(";
            bool first = true;
            for (int i = 0; i <= q.degree(); ++i) {
                const Rational& c = q.coefficient(i);
                if (c == 0) continue;
                if (first) {
                    if (c < 0) term += "-";
                    term += mono(c < 0 ? Rational(-c) : c, i);
                    first = false;
                } else {
                    term += c < 0 ? " - " : " + ";
                    term += mono(c < 0 ? Rational(-c) : c, i);
                }
            }
            term += ")*";
        }
        term += "D";
        if (j > 1) term += "^" + std::to_string(j);
        if (out.empty()) {
            out = negative_head ? "-" + term : term;
        } else {
            out += negative_head ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

// Complex literal for CLI sample points: "3", "-1.5", "2+2i", "-1-3i", "2i",
// "i", "-i". Decimal real/imag parts, no exponent notation.
inline Complex parse_complex(const std::string& text, long prec_bits) {
    const std::string s = [&] {
        std::string t;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
        return t;
    }();
    if (s.empty()) throw std::invalid_argument("parse_complex: empty literal");

    auto part = [&](const std::string& p) -> BigFloat {
        if (p.empty() || p == "+") return BigFloat(1L, prec_bits);
        if (p == "-") return BigFloat(-1L, prec_bits);
        return BigFloat::from_string(p, prec_bits);
    };

    if (s.back() == 'i') {
        const std::string body = s.substr(0, s.size() - 1);
        // Split at the last sign that is not the leading one.
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if (body[i] == '+' || body[i] == '-') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos)
            return Complex(BigFloat(0L, prec_bits), part(body));
        return Complex(part(body.substr(0, split)), part(body.substr(split)));
    }
    return Complex(part(s), BigFloat(0L, prec_bits));
}

} // namespace eigenroot

#endif
