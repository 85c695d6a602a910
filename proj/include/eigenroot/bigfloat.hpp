// Arbitrary-precision binary floats (MPFR) with per-value precision, and a
// complex type built from two of them.
//
// Precision policy: every value carries its precision in bits; an operation
// with two big-float operands computes at the minimum of the operand
// precisions and the result records that precision. Exact operands
// (machine integers, rationals) do not reduce the precision.
#ifndef EIGENROOT_BIGFLOAT_HPP
#define EIGENROOT_BIGFLOAT_HPP

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eigenroot/rational.hpp"

namespace eigenroot {

constexpr long kMinPrecisionBits = 64;

class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, kMinPrecisionBits); mpfr_set_zero(v_, 1); }

    explicit BigFloat(long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_zero(v_, 1);
    }

    BigFloat(double x, long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_d(v_, x, MPFR_RNDN);
    }

    BigFloat(long x, long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_si(v_, x, MPFR_RNDN);
    }

    BigFloat(const Rational& q, long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_q(v_, q.backend().data(), MPFR_RNDN);
    }

    BigFloat(const BigInt& z, long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_z(v_, z.backend().data(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, kMinPrecisionBits);
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    long precision() const { return mpfr_get_prec(v_); }

    // Rounds the value to a new precision (in place).
    void set_precision(long prec_bits) {
        mpfr_prec_round(v_, clamp(prec_bits), MPFR_RNDN);
    }

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static BigFloat pi(long prec_bits) {
        BigFloat r(prec_bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    static BigFloat from_string(const std::string& s, long prec_bits) {
        BigFloat r(prec_bits);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigFloat: bad numeric literal '" + s + "'");
        return r;
    }

private:
    static long clamp(long prec_bits) { return std::max(prec_bits, kMinPrecisionBits); }

    mpfr_t v_;
};

inline long min_precision(const BigFloat& a, const BigFloat& b) {
    return std::min(a.precision(), b.precision());
}

#define EIGENROOT_BF_BINOP(op, fn)                                  \
    inline BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
        BigFloat r(min_precision(a, b));                            \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                   \
        return r;                                                   \
    }

EIGENROOT_BF_BINOP(+, mpfr_add)
EIGENROOT_BF_BINOP(-, mpfr_sub)
EIGENROOT_BF_BINOP(*, mpfr_mul)
EIGENROOT_BF_BINOP(/, mpfr_div)
#undef EIGENROOT_BF_BINOP

inline BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r(a.precision());
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
inline BigFloat operator*(long a, const BigFloat& b) { return b * a; }

inline BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r(a.precision());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

inline BigFloat operator+(const BigFloat& a, long b) {
    BigFloat r(a.precision());
    mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
inline BigFloat operator+(long a, const BigFloat& b) { return b + a; }

inline BigFloat operator-(const BigFloat& a, long b) {
    BigFloat r(a.precision());
    mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
inline BigFloat operator-(long a, const BigFloat& b) {
    BigFloat r(b.precision());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat operator/(long a, const BigFloat& b) {
    BigFloat r(b.precision());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat& operator+=(BigFloat& a, const BigFloat& b) { a = a + b; return a; }
inline BigFloat& operator-=(BigFloat& a, const BigFloat& b) { a = a - b; return a; }
inline BigFloat& operator*=(BigFloat& a, const BigFloat& b) { a = a * b; return a; }
inline BigFloat& operator/=(BigFloat& a, const BigFloat& b) { a = a / b; return a; }

inline bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
inline bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

inline bool operator<(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
inline bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

inline BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(min_precision(a, b));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat pow(const BigFloat& base, const BigFloat& e) {
    BigFloat r(min_precision(base, e));
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat pow(const BigFloat& base, long e) {
    BigFloat r(base.precision());
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}

inline BigFloat exp(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat log(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline void sin_cos(BigFloat& s, BigFloat& c, const BigFloat& theta) {
    s = BigFloat(theta.precision());
    c = BigFloat(theta.precision());
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
}

inline BigFloat min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }
inline BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }

// Decimal string with round-trip fidelity at the value's own precision when
// digits10 == 0.
inline std::string to_string(const BigFloat& x, int digits10 = 0) {
    if (digits10 <= 0)
        digits10 = static_cast<int>(std::ceil(static_cast<double>(x.precision()) * 0.30103)) + 2;
    const int len = mpfr_snprintf(nullptr, 0, "%.*Re", digits10 - 1, x.raw());
    std::string buf(static_cast<std::size_t>(len) + 1, '\0');
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits10 - 1, x.raw());
    buf.resize(static_cast<std::size_t>(len));
    return buf;
}

// 10^e at the given precision.
inline BigFloat pow10(long e, long prec_bits) {
    BigFloat ten(10L, prec_bits);
    return pow(ten, e);
}

// n^d for exact rational d; big-float only at the use site.
inline BigFloat rational_power(long n, const Rational& d, long prec_bits) {
    if (n <= 0) throw std::domain_error("rational_power: n must be positive");
    BigFloat base(static_cast<long>(n), prec_bits);
    BigFloat e(d, prec_bits);
    return pow(base, e);
}

class Complex {
public:
    Complex() = default;

    explicit Complex(long prec_bits) : re_(prec_bits), im_(prec_bits) {}

    Complex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

    Complex(double re, double im, long prec_bits) : re_(re, prec_bits), im_(im, prec_bits) {}

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }
    BigFloat& real() { return re_; }
    BigFloat& imag() { return im_; }

    long precision() const { return std::min(re_.precision(), im_.precision()); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    static Complex polar(const BigFloat& radius, const BigFloat& theta) {
        BigFloat s, c;
        sin_cos(s, c, theta);
        return Complex(radius * c, radius * s);
    }

private:
    BigFloat re_;
    BigFloat im_;
};

inline Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.real() + b.real(), a.imag() + b.imag());
}
inline Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.real() - b.real(), a.imag() - b.imag());
}
inline Complex operator-(const Complex& a) { return Complex(-a.real(), -a.imag()); }

inline Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.real() * b.real() - a.imag() * b.imag(),
                   a.real() * b.imag() + a.imag() * b.real());
}

inline Complex operator*(const Complex& a, const BigFloat& s) {
    return Complex(a.real() * s, a.imag() * s);
}
inline Complex operator*(const BigFloat& s, const Complex& a) { return a * s; }

inline Complex operator/(const Complex& a, const Complex& b) {
    const BigFloat den = b.real() * b.real() + b.imag() * b.imag();
    return Complex((a.real() * b.real() + a.imag() * b.imag()) / den,
                   (a.imag() * b.real() - a.real() * b.imag()) / den);
}

inline Complex operator/(const Complex& a, const BigFloat& s) {
    return Complex(a.real() / s, a.imag() / s);
}

inline Complex operator/(long a, const Complex& b) {
    const BigFloat den = b.real() * b.real() + b.imag() * b.imag();
    return Complex(a * b.real() / den, -(a * b.imag()) / den);
}

inline Complex& operator+=(Complex& a, const Complex& b) { a = a + b; return a; }
inline Complex& operator-=(Complex& a, const Complex& b) { a = a - b; return a; }
inline Complex& operator*=(Complex& a, const Complex& b) { a = a * b; return a; }
inline Complex& operator/=(Complex& a, const Complex& b) { a = a / b; return a; }

inline bool operator==(const Complex& a, const Complex& b) {
    return a.real() == b.real() && a.imag() == b.imag();
}

inline Complex conj(const Complex& a) { return Complex(a.real(), -a.imag()); }

inline BigFloat abs(const Complex& a) { return hypot(a.real(), a.imag()); }

// |a|^2 without the square root.
inline BigFloat norm(const Complex& a) {
    return a.real() * a.real() + a.imag() * a.imag();
}

inline Complex pow(const Complex& base, long e) {
    if (e < 0) throw std::domain_error("pow(Complex, e): negative exponent");
    Complex acc(BigFloat(1L, base.precision()), BigFloat(0L, base.precision()));
    for (long i = 0; i < e; ++i) acc *= base;
    return acc;
}

inline std::string to_string(const Complex& z, int digits10 = 0) {
    const std::string im = to_string(z.imag(), digits10);
    const bool neg = !im.empty() && im[0] == '-';
    return to_string(z.real(), digits10) + (neg ? " - " + im.substr(1) : " + " + im) + "i";
}

} // namespace eigenroot

#endif
