// Dense univariate polynomials: exact rational coefficients for the algebra,
// complex big-float coefficients for evaluation-heavy numerics.
#ifndef EIGENROOT_POLYNOMIAL_HPP
#define EIGENROOT_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eigenroot/bigfloat.hpp"
#include "eigenroot/errors.hpp"
#include "eigenroot/rational.hpp"

namespace eigenroot {

// Exact dense polynomial over the rationals, coefficients ascending in the
// power of z. The zero polynomial stores no coefficients and has no degree;
// callers must branch on is_zero() before asking for degree().
class ExactPolynomial {
public:
    ExactPolynomial() = default;

    static ExactPolynomial zero() { return ExactPolynomial(); }

    static ExactPolynomial constant(Rational c) {
        ExactPolynomial p;
        if (c != 0) p.c_.push_back(std::move(c));
        return p;
    }

    static ExactPolynomial monomial(Rational coeff, int power) {
        ExactPolynomial p;
        if (power < 0) throw std::invalid_argument("monomial: negative power");
        if (coeff != 0) {
            p.c_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    static ExactPolynomial from_coefficients(std::vector<Rational> ascending) {
        ExactPolynomial p;
        p.c_ = std::move(ascending);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    int degree() const {
        if (is_zero()) throw std::logic_error("degree() of the zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }

    // q_i, zero outside the stored range.
    const Rational& coefficient(int i) const {
        static const Rational kZero(0);
        if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return kZero;
        return c_[static_cast<std::size_t>(i)];
    }

    const Rational& leading() const {
        if (is_zero()) throw std::logic_error("leading() of the zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    const std::vector<Rational>& coefficients() const { return c_; }

    friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return from_coefficients(std::move(c));
    }

    friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return from_coefficients(std::move(c));
    }

    friend ExactPolynomial operator-(const ExactPolynomial& a) {
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x = -x;
        return from_coefficients(std::move(c));
    }

    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return from_coefficients(std::move(c));
    }

    friend ExactPolynomial operator*(const Rational& s, const ExactPolynomial& a) {
        if (s == 0) return zero();
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x *= s;
        return from_coefficients(std::move(c));
    }
    friend ExactPolynomial operator*(const ExactPolynomial& a, const Rational& s) { return s * a; }

    friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
        return a.c_ == b.c_;
    }

    // Exact quotient; throws if the division leaves a remainder.
    ExactPolynomial divide_exact(const ExactPolynomial& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("divide_exact: zero divisor");
        if (is_zero()) return zero();
        if (degree() < divisor.degree())
            throw std::domain_error("divide_exact: division is not exact");
        std::vector<Rational> rem(c_);
        const int dd = divisor.degree();
        const Rational& lead = divisor.leading();
        std::vector<Rational> q(c_.size() - static_cast<std::size_t>(dd), Rational(0));
        for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
            Rational f = rem[static_cast<std::size_t>(i)] / lead;
            if (f == 0) continue;
            q[static_cast<std::size_t>(i - dd)] = f;
            for (int k = 0; k <= dd; ++k)
                rem[static_cast<std::size_t>(i - dd + k)] -= f * divisor.c_[static_cast<std::size_t>(k)];
        }
        for (const auto& r : rem)
            if (r != 0) throw std::domain_error("divide_exact: division is not exact");
        return from_coefficients(std::move(q));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Exact j-th derivative. Differentiating past the degree yields zero.
inline ExactPolynomial differentiate(const ExactPolynomial& p, int j = 1) {
    if (j < 0) throw std::invalid_argument("differentiate: negative order");
    if (j == 0) return p;
    if (p.is_zero() || p.degree() < j) return ExactPolynomial::zero();
    const auto& c = p.coefficients();
    std::vector<Rational> out(c.size() - static_cast<std::size_t>(j), Rational(0));
    for (std::size_t m = 0; m < out.size(); ++m) {
        // c_{m+j} * (m+j)(m+j-1)...(m+1)
        out[m] = c[m + static_cast<std::size_t>(j)] *
                 Rational(falling_factorial(static_cast<long>(m) + j, j));
    }
    return ExactPolynomial::from_coefficients(std::move(out));
}

// Exact evaluation at a rational point.
inline Rational evaluate(const ExactPolynomial& p, const Rational& z) {
    Rational acc(0);
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

// Exact evaluation at a Gaussian-rational point re + im*i.
inline std::pair<Rational, Rational> evaluate(const ExactPolynomial& p, const Rational& re,
                                              const Rational& im) {
    Rational ar(0), ai(0);
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        Rational nr = ar * re - ai * im + c[i];
        Rational ni = ar * im + ai * re;
        ar = std::move(nr);
        ai = std::move(ni);
    }
    return {ar, ai};
}

// Horner evaluation at the precision of z. Coefficients enter each step
// exactly (rational addend, rounded once per step).
inline Complex evaluate(const ExactPolynomial& p, const Complex& z) {
    if (!z.is_finite()) throw PreconditionViolation("evaluate: non-finite point");
    const long prec = z.precision();
    Complex acc(prec);
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= z;
        mpfr_add_q(acc.real().raw(), acc.real().raw(), c[i].backend().data(), MPFR_RNDN);
    }
    if (!acc.is_finite())
        throw std::overflow_error("evaluate: overflow at precision " + std::to_string(prec));
    return acc;
}

// Dense polynomial with complex big-float coefficients, ascending powers.
// Used by the root finder and by circle-maximum evaluation.
class ComplexPolynomial {
public:
    ComplexPolynomial() = default;

    explicit ComplexPolynomial(std::vector<Complex> ascending) : c_(std::move(ascending)) {}

    static ComplexPolynomial from_exact(const ExactPolynomial& p, long prec_bits) {
        std::vector<Complex> c;
        c.reserve(p.coefficients().size());
        for (const auto& q : p.coefficients())
            c.emplace_back(BigFloat(q, prec_bits), BigFloat(0L, prec_bits));
        return ComplexPolynomial(std::move(c));
    }

    // Monic product of (z - r) over the given roots, expanded at prec_bits.
    static ComplexPolynomial from_roots(std::span<const Complex> roots, long prec_bits) {
        std::vector<Complex> c;
        c.emplace_back(BigFloat(1L, prec_bits), BigFloat(0L, prec_bits));
        for (const auto& raw_root : roots) {
            if (!raw_root.is_finite())
                throw PreconditionViolation("from_roots: non-finite root");
            Complex r(BigFloat(raw_root.real()), BigFloat(raw_root.imag()));
            r.real().set_precision(prec_bits);
            r.imag().set_precision(prec_bits);
            c.emplace_back(BigFloat(0L, prec_bits), BigFloat(0L, prec_bits));
            for (std::size_t i = c.size() - 1; i > 0; --i)
                c[i] = c[i - 1] - r * c[i];
            c[0] = -(r * c[0]);
        }
        return ComplexPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    int degree() const {
        if (is_zero()) throw std::logic_error("degree() of the zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }

    const std::vector<Complex>& coefficients() const { return c_; }

    Complex evaluate(const Complex& z) const {
        const long prec = std::min(z.precision(), precision());
        Complex acc(prec);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
        return acc;
    }

    // Value and first-derivative value in one Horner pass.
    std::pair<Complex, Complex> evaluate_with_derivative(const Complex& z) const {
        const long prec = std::min(z.precision(), precision());
        Complex b(prec), db(prec);
        for (std::size_t i = c_.size(); i-- > 0;) {
            db = db * z + b;
            b = b * z + c_[i];
        }
        return {b, db};
    }

    ComplexPolynomial derivative() const {
        if (c_.size() <= 1) return ComplexPolynomial();
        std::vector<Complex> out;
        out.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            out.push_back(c_[i] * BigFloat(static_cast<long>(i), c_[i].precision()));
        return ComplexPolynomial(std::move(out));
    }

    long precision() const {
        if (c_.empty()) return kMinPrecisionBits;
        long p = c_.front().precision();
        for (const auto& c : c_) p = std::min(p, c.precision());
        return p;
    }

private:
    std::vector<Complex> c_;
};

} // namespace eigenroot

#endif
