#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eigenroot/operator.hpp"
#include "eigenroot/parser.hpp"
#include "oracles.hpp"

using namespace eigenroot;

namespace {
const char* kT1 = "z*D + z*D^2 + z*D^3 + z*D^4 + z*D^5";
const char* kT2 = "z^2*D^2 + D^7";
const char* kT3 = "z^3*D^3 + z^2*D^4 + z*D^5";
} // namespace

TEST_CASE("classification of the three reference operators") {
    {
        const auto cls = classify(parse_operator(kT1));
        CHECK(cls.kind == OperatorKind::degenerate);
        CHECK(cls.j0 == 1);
        CHECK(cls.d == Rational(1));
        CHECK(cls.A == std::set<int>{2, 3, 4, 5});
        CHECK(cls.jm == 5);
    }
    {
        const auto cls = classify(parse_operator(kT2));
        CHECK(cls.kind == OperatorKind::degenerate);
        CHECK(cls.j0 == 2);
        CHECK(cls.d == Rational(5, 7));
        CHECK(cls.A == std::set<int>{7});
        CHECK(cls.jm == 7);
    }
    {
        const auto cls = classify(parse_operator(kT3));
        CHECK(cls.kind == OperatorKind::degenerate);
        CHECK(cls.j0 == 3);
        CHECK(cls.d == Rational(1, 2));
        CHECK(cls.A == std::set<int>{4, 5});
        CHECK(cls.jm == 5);
    }
}

TEST_CASE("invalid and non-degenerate cases") {
    CHECK(classify(parse_operator("D^2")).kind == OperatorKind::invalid);
    CHECK(classify(parse_operator("z^3*D^2")).kind == OperatorKind::invalid);
    CHECK(classify(parse_operator("z^2*D^2 + z*D")).kind == OperatorKind::non_degenerate);
    // Dropped zero terms leave the order at the largest surviving j.
    const auto t = parse_operator("z*D + 0*D^5");
    CHECK(t.order() == 1);
    CHECK(classify(t).kind == OperatorKind::non_degenerate);
}

TEST_CASE("exact eigenvalues") {
    CHECK(eigenvalue(parse_operator(kT1), 100) == Rational(100));
    CHECK(eigenvalue(parse_operator(kT2), 7) == Rational(42));
    CHECK(eigenvalue(parse_operator(kT3), 3) == Rational(6));
    // n below the derivative order: the falling factorial kills the term.
    CHECK(eigenvalue(parse_operator(kT3), 2) == Rational(0));
}

TEST_CASE("operator application") {
    const auto t = parse_operator("z*D + D^2");
    const ExactPolynomial p =
        ExactPolynomial::from_coefficients({Rational(1), Rational(0), Rational(1)});
    CHECK(apply(t, p) == ExactPolynomial::from_coefficients({Rational(2), Rational(0), Rational(2)}));
    CHECK(apply(parse_operator(kT1), ExactPolynomial::constant(Rational(3))).is_zero());
    CHECK(apply(parse_operator(kT1), ExactPolynomial::monomial(Rational(1), 1)) ==
          ExactPolynomial::monomial(Rational(1), 1));
}

TEST_CASE("apply is linear and never raises the degree") {
    oracles::Rng rng(607);
    const auto t1 = parse_operator(kT1);
    const auto t3 = parse_operator(kT3);
    for (int trial = 0; trial < 30; ++trial) {
        const ExactPolynomial p = rng.polynomial(15);
        const ExactPolynomial q = rng.polynomial(15);
        const Rational a = rng.rational();
        const Rational b = rng.rational();
        for (const auto& t : {t1, t3}) {
            CHECK(apply(t, a * p + b * q) == a * apply(t, p) + b * apply(t, q));
            if (!p.is_zero() && !apply(t, p).is_zero())
                CHECK(apply(t, p).degree() <= p.degree());
        }
    }
}

TEST_CASE("leading coefficient of T(z^n) is the eigenvalue") {
    for (const char* text : {kT1, kT2, kT3, "z*D + D^2"}) {
        const auto t = parse_operator(text);
        for (long n = 1; n <= 50; ++n) {
            const ExactPolynomial zn = ExactPolynomial::monomial(Rational(1), static_cast<int>(n));
            CHECK(apply(t, zn).coefficient(static_cast<int>(n)) == eigenvalue(t, n));
        }
    }
}

TEST_CASE("classification is scale invariant") {
    oracles::Rng rng(11);
    for (const char* text : {kT1, kT2, kT3}) {
        const auto t = parse_operator(text);
        const auto base = classify(t);
        for (int trial = 0; trial < 5; ++trial) {
            Rational c = rng.rational();
            if (c == 0) c = Rational(2, 3);
            const auto scaled = classify(scale(t, c));
            CHECK(scaled.kind == base.kind);
            CHECK(scaled.j0 == base.j0);
            CHECK(scaled.d == base.d);
            CHECK(scaled.A == base.A);
            CHECK(scaled.jm == base.jm);
        }
    }
}
