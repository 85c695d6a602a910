#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eigenroot/curve.hpp"
#include "eigenroot/parser.hpp"
#include "eigenroot/scaling.hpp"
#include "oracles.hpp"

using namespace eigenroot;

namespace {

// Naive cofactor-expansion determinant, usable only for small matrices;
// the independent oracle for the Bareiss elimination.
ExactPolynomial cofactor_determinant(const std::vector<std::vector<ExactPolynomial>>& m) {
    const std::size_t s = m.size();
    if (s == 1) return m[0][0];
    ExactPolynomial det = ExactPolynomial::zero();
    for (std::size_t c = 0; c < s; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<ExactPolynomial>> minor;
        for (std::size_t i = 1; i < s; ++i) {
            std::vector<ExactPolynomial> row;
            for (std::size_t j = 0; j < s; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        ExactPolynomial term = m[0][c] * cofactor_determinant(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace

TEST_CASE("curve construction from the reference operators") {
    {
        const CurveSpec c = curve_from_operator(parse_operator("z*D + D^2"));
        CHECK(c.j0 == 1);
        CHECK(c.lead == 1);
        CHECK(c.jm == 2);
        REQUIRE(c.terms.size() == 1);
        CHECK(c.terms[0].j == 2);
        CHECK(c.terms[0].q == 1);
        CHECK(c.terms[0].z_power == 0);
    }
    {
        const CurveSpec c = curve_from_operator(parse_operator("z^2*D^2 + D^7"));
        CHECK(c.j0 == 2);
        CHECK(c.jm == 7);
        REQUIRE(c.terms.size() == 1);
        CHECK(c.terms[0].j == 7);
        CHECK(c.terms[0].z_power == 0);
    }
    {
        const CurveSpec c = curve_from_operator(parse_operator("z^3*D^3 + z^2*D^4 + z*D^5"));
        CHECK(c.j0 == 3);
        CHECK(c.jm == 5);
        REQUIRE(c.terms.size() == 2);
        CHECK(c.terms[0].j == 4);
        CHECK(c.terms[0].z_power == 2);
        CHECK(c.terms[1].j == 5);
        CHECK(c.terms[1].z_power == 1);
    }
}

TEST_CASE("Bareiss elimination agrees with cofactor expansion") {
    // Sylvester matrix of (y^2 + z y - 1, 2y + z): resultant -(z^2 + 4).
    const CurveSpec c = curve_from_operator(parse_operator("z*D + D^2"));
    const auto f = c.y_coefficients();
    std::vector<ExactPolynomial> fy = {f[1], Rational(2) * f[2]};
    const auto sylv = detail::sylvester(f, fy);
    const ExactPolynomial bareiss = detail::bareiss_determinant(sylv);
    const ExactPolynomial naive = cofactor_determinant(sylv);
    CHECK(bareiss == naive);

    const ExactPolynomial res = discriminant_resultant(c);
    // Up to overall sign the resultant is z^2 + 4.
    const ExactPolynomial plus = ExactPolynomial::from_coefficients({Rational(4), Rational(0), Rational(1)});
    CHECK((res == plus || res == -plus));
}

TEST_CASE("constant-in-z resultant yields an empty locus") {
    // y^2 - 1 against its derivative: Sylvester determinant is constant.
    std::vector<ExactPolynomial> f = {ExactPolynomial::constant(Rational(-1)),
                                      ExactPolynomial::zero(),
                                      ExactPolynomial::constant(Rational(1))};
    std::vector<ExactPolynomial> fy = {ExactPolynomial::zero(),
                                       ExactPolynomial::constant(Rational(2))};
    const ExactPolynomial res = detail::bareiss_determinant(detail::sylvester(f, fy));
    CHECK_FALSE(res.is_zero());
    CHECK(res.degree() == 0);
    CHECK(res == cofactor_determinant(detail::sylvester(f, fy)));
}

TEST_CASE("discriminant locus of z y + y^2 - 1 is {2i, -2i}") {
    const CurveSpec c = curve_from_operator(parse_operator("z*D + D^2"));
    const DiscriminantLocus locus = discriminant_locus(c);
    REQUIRE(locus.points.size() == 2);
    for (const auto& p : locus.points) {
        CHECK(std::abs(p.real().to_double()) < 1e-12);
        CHECK(std::abs(std::abs(p.imag().to_double()) - 2.0) < 1e-12);
    }
    CHECK(locus.degenerations.empty());
}

TEST_CASE("discriminant of the order-7 curve: rotation symmetry and sharing") {
    const CurveSpec c = curve_from_operator(parse_operator("z^2*D^2 + D^7"));
    const DiscriminantLocus locus = discriminant_locus(c);
    REQUIRE(!locus.points.empty());
    CHECK(static_cast<int>(locus.points.size()) <= locus.resultant_degree);

    // Independent certificate: at each reported point, F and F_y share a
    // root in y (minimum of |F| over the roots of F_y vanishes).
    const auto f = c.y_coefficients();
    for (const auto& zhat : locus.points) {
        std::vector<Complex> fy_coeffs;
        for (std::size_t j = 1; j < f.size(); ++j) {
            Complex coeff = evaluate(f[j], zhat);
            fy_coeffs.push_back(coeff * BigFloat(static_cast<long>(j), zhat.precision()));
        }
        ComplexPolynomial fy_at(std::move(fy_coeffs));
        double best = 1e300;
        for (const auto& y : find_roots_complex(fy_at)) {
            const double v = abs(c.evaluate(zhat, y)).to_double();
            best = std::min(best, v);
        }
        CHECK(best < 1e-8);
    }

    // The curve is invariant under (z, y) -> (w^{-7} z^... ) only through the
    // quasi-homogeneity z -> u z, y -> v y with u^2 v^2 = v^7 = 1; on the
    // discriminant in z this induces a rotation orbit of order 7.
    const double two_pi = 6.283185307179586;
    for (const auto& p : locus.points) {
        const double r = abs(p).to_double();
        const double arg = std::atan2(p.imag().to_double(), p.real().to_double());
        bool found = false;
        for (const auto& q : locus.points) {
            const double r2 = abs(q).to_double();
            const double arg2 = std::atan2(q.imag().to_double(), q.real().to_double());
            double delta = std::fmod(std::abs(arg2 - (arg + two_pi * 5.0 / 7.0)), two_pi);
            delta = std::min(delta, two_pi - delta);
            if (std::abs(r2 - r) < 1e-9 * (1 + r) && delta < 1e-9) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("T3 curve: leading-coefficient degeneration at z = 0 kept separate") {
    const CurveSpec c = curve_from_operator(parse_operator("z^3*D^3 + z^2*D^4 + z*D^5"));
    const DiscriminantLocus locus = discriminant_locus(c);
    REQUIRE(locus.degenerations.size() == 1);
    CHECK(abs(locus.degenerations[0]).to_double() < 1e-12);
    for (const auto& p : locus.points) {
        // Branch points of the y ~ 1/z branch continuation live off zero
        // here; z = 0 appears only in the degeneration list.
        (void)p;
    }
}

TEST_CASE("branch values: quadratic closed form and expansion dominance") {
    const CurveSpec c = curve_from_operator(parse_operator("z*D + D^2"));
    const BranchTracker tracker(c);
    {
        const BranchValue bv = tracker.at(Complex(3.0, 0.0, 256));
        const double want = (-3.0 + std::sqrt(13.0)) / 2.0;
        CHECK(bv.y.real().to_double() == doctest::Approx(want).epsilon(1e-12));
        CHECK(std::abs(bv.y.imag().to_double()) < 1e-12);
    }
    {
        const Complex z(10000.0, 0.0, 256);
        const BranchValue bv = tracker.at(z);
        CHECK(abs(z * bv.y - Complex(1.0, 0.0, 256)).to_double() <= 1e-3);
    }
    {
        const BranchTracker t2(curve_from_operator(parse_operator("z^2*D^2 + D^7")));
        const Complex z(10000.0, 0.0, 256);
        const BranchValue bv = t2.at(z);
        CHECK(bv.y.real().to_double() == doctest::Approx(1e-4).epsilon(1e-3));
        CHECK(abs(z * bv.y - Complex(1.0, 0.0, 256)).to_double() < 1e-3);
    }
}

TEST_CASE("residual contract across a ring of random targets") {
    const CurveSpec c = curve_from_operator(parse_operator("z^3*D^3 + z^2*D^4 + z*D^5"));
    const BranchTracker tracker(c);
    oracles::Rng rng(404);
    int tested = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const double radius = 5.0 * std::pow(10.0, 2.3 * (trial % 50) / 50.0);
        const double angle = 6.283185307179586 * static_cast<double>(rng.integer(0, 9999)) / 10000.0;
        const Complex z(radius * std::cos(angle), radius * std::sin(angle), 256);
        const BranchValue bv = tracker.at(z);
        const BigFloat budget = pow10(-10, 256) * (BigFloat(1L, 256) + c.magnitude(z, bv.y));
        CHECK(bv.residual <= budget);
        ++tested;
    }
    CHECK(tested == 100);
}

TEST_CASE("path independence: ray versus detour") {
    const CurveSpec c = curve_from_operator(parse_operator("z*D + D^2"));
    const BranchTracker tracker(c);
    // Discriminant sits at +-2i; both paths stay in the right half plane,
    // one simply connected region.
    const Complex target(0.5, 3.0, 256);
    const BranchValue direct = tracker.at(target);
    const BranchValue detour = tracker.at_via(Complex(40.0, 5.0, 256), target);
    CHECK(abs(direct.y - detour.y).to_double() < 1e-8);
}

TEST_CASE("Vieta sanity for the y-roots of F(z, .)") {
    const CurveSpec c = curve_from_operator(parse_operator("z^2*D^2 + D^7"));
    const auto f = c.y_coefficients();
    const Complex z(2.0, 1.0, 320);
    std::vector<Complex> coeffs;
    for (const auto& fj : f) coeffs.push_back(evaluate(fj, z));
    ComplexPolynomial fy(std::move(coeffs));
    const auto roots = find_roots_complex(fy);
    REQUIRE(static_cast<int>(roots.size()) == c.jm);
    Complex sum(320);
    for (const auto& y : roots) sum += y;
    const Complex expect = -(fy.coefficients()[static_cast<std::size_t>(c.jm) - 1] /
                             fy.coefficients()[static_cast<std::size_t>(c.jm)]);
    CHECK(abs(sum - expect).to_double() < 1e-10);
}

TEST_CASE("empirical Cauchy transform approaches the branch value") {
    const auto t = parse_operator("z*D + D^2");
    const CurveSpec c = curve_from_operator(t);
    const BranchTracker tracker(c);
    const Complex z(3.0, 0.0, 256);
    const BigFloat y = tracker.at(z).y.real();
    double prev = 1e300;
    for (long n : {25L, 50L}) {
        const EmpiricalMeasure m = scaled_measure(t, n);
        const double diff = abs(empirical_cauchy(m, z) - Complex(y, BigFloat(0L, 256))).to_double();
        CHECK(diff < prev);
        prev = diff;
    }
    CHECK(prev < 0.01);
}

TEST_CASE("near-discriminant targets are refused") {
    const CurveSpec c = curve_from_operator(parse_operator("z*D + D^2"));
    const BranchTracker tracker(c);
    CHECK_THROWS_AS(tracker.at(Complex(0.0, 2.0 + 1e-8, 256)), NearDiscriminant);
}
