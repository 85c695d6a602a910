#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "eigenroot/eigen.hpp"
#include "eigenroot/parser.hpp"
#include "eigenroot/roots.hpp"
#include "oracles.hpp"

using namespace eigenroot;

namespace {

ExactPolynomial poly(std::vector<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return ExactPolynomial::from_coefficients(std::move(c));
}

bool contains_root(const RootSet& rs, double re, double im, double tol = 1e-10) {
    for (const auto& z : rs.roots)
        if (std::abs(z.real().to_double() - re) < tol && std::abs(z.imag().to_double() - im) < tol)
            return true;
    return false;
}

} // namespace

TEST_CASE("environment precision floor is honoured") {
    // First find_roots call in this process; the env floor must lift the
    // working precision above the auto choice max(256, 4n).
    setenv("EIGENROOT_PRECISION_BITS", "512", 1);
    const RootSet rs = find_roots(poly({1, 0, 1}));
    CHECK(rs.precision_used >= 512);
    setenv("EIGENROOT_PRECISION_BITS", "", 1);
}

TEST_CASE("known root sets") {
    {
        const RootSet rs = find_roots(poly({1, 0, 1}));  // z^2 + 1
        REQUIRE(rs.roots.size() == 2);
        CHECK(contains_root(rs, 0.0, 1.0));
        CHECK(contains_root(rs, 0.0, -1.0));
        CHECK(max_modulus(rs).to_double() == doctest::Approx(1.0).epsilon(1e-10));
    }
    {
        const RootSet rs = find_roots(poly({-1, 0, 0, 1}));  // z^3 - 1
        REQUIRE(rs.roots.size() == 3);
        CHECK(contains_root(rs, 1.0, 0.0));
        CHECK(contains_root(rs, -0.5, std::sqrt(3.0) / 2));
        CHECK(contains_root(rs, -0.5, -std::sqrt(3.0) / 2));
        CHECK(max_modulus(rs).to_double() == doctest::Approx(1.0).epsilon(1e-10));
    }
    {
        // Exact zero roots are stripped ahead of the iteration.
        const RootSet rs = find_roots(ExactPolynomial::monomial(Rational(1), 3));
        REQUIRE(rs.roots.size() == 3);
        CHECK(max_modulus(rs).is_zero());
    }
}

TEST_CASE("max_modulus over hand-built root sets") {
    RootSet rs;
    rs.n = 2;
    rs.roots = {Complex(3.0, 0.0, 128), Complex(0.0, -4.0, 128)};
    rs.r = BigFloat(0L, 128);
    for (const auto& z : rs.roots) rs.r = max(rs.r, abs(z));
    CHECK(max_modulus(rs).to_double() == doctest::Approx(4.0));
}

TEST_CASE("eigenpolynomial of z*D + D^2 at n = 10 has purely imaginary roots") {
    const auto t = parse_operator("z*D + D^2");
    const RootSet rs = find_roots(eigenpolynomial(t, 10).p);
    REQUIRE(rs.roots.size() == 10);
    for (const auto& z : rs.roots) CHECK(std::abs(z.real().to_double()) < 1e-10);
    // Symmetric about the origin.
    for (const auto& z : rs.roots) {
        bool mirrored = false;
        for (const auto& w : rs.roots)
            if (abs(z + w).to_double() < 1e-9) mirrored = true;
        CHECK(mirrored);
    }
}

TEST_CASE("Vieta certificates at working precision") {
    oracles::Rng rng(31337);
    for (int trial = 0; trial < 8; ++trial) {
        ExactPolynomial p = rng.polynomial(14);
        if (p.is_zero() || p.degree() < 2) continue;
        const RootSet rs = find_roots(p);
        const long prec = rs.precision_used;
        Complex sum(prec);
        Complex prod(BigFloat(1L, prec), BigFloat(0L, prec));
        for (const auto& z : rs.roots) {
            sum += z;
            prod *= z;
        }
        const int n = p.degree();
        const Complex target_sum(BigFloat(-Rational(p.coefficient(n - 1) / p.leading()), prec),
                                 BigFloat(0L, prec));
        Rational tp = p.coefficient(0) / p.leading();
        if (n % 2 != 0) tp = -tp;
        const Complex target_prod(BigFloat(tp, prec), BigFloat(0L, prec));
        CHECK(abs(sum - target_sum).to_double() <=
              1e-10 * (1.0 + abs(target_sum).to_double()));
        CHECK(abs(prod - target_prod).to_double() <=
              1e-10 * (1.0 + abs(target_prod).to_double()));
    }
}

TEST_CASE("round trip: from_roots(find_roots(p)) reproduces the coefficients") {
    // Relative error measured against the coefficient-vector norm: the
    // exactly-zero odd coefficients of these polynomials sit next to
    // entries of size ~1e23 and carry no per-entry relative scale.
    const auto t = parse_operator("z*D + D^2");
    for (long n : {12L, 40L}) {
        const ExactPolynomial p = eigenpolynomial(t, n).p;
        const RootSet rs = find_roots(p);
        const auto back = ComplexPolynomial::from_roots(rs.roots, rs.precision_used);
        double norm = 0;
        for (int i = 0; i <= p.degree(); ++i)
            norm = std::max(norm, std::abs(BigFloat(p.coefficient(i), 64).to_double()));
        for (int i = 0; i <= p.degree(); ++i) {
            const double want = BigFloat(p.coefficient(i), 64).to_double();
            const Complex& got = back.coefficients()[static_cast<std::size_t>(i)];
            CHECK(std::abs(got.real().to_double() - want) / norm < 1e-6);
            CHECK(std::abs(got.imag().to_double()) / norm < 1e-6);
        }
    }
}

TEST_CASE("conjugate symmetry for real-coefficient polynomials") {
    oracles::Rng rng(555);
    for (int trial = 0; trial < 6; ++trial) {
        ExactPolynomial p = rng.polynomial(12);
        if (p.is_zero() || p.degree() < 2) continue;
        const RootSet rs = find_roots(p);
        for (const auto& z : rs.roots) {
            bool found = false;
            for (const auto& w : rs.roots)
                if (abs(conj(z) - w).to_double() < 1e-8 * (1.0 + abs(z).to_double()))
                    found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("failure modes") {
    CHECK_THROWS_AS(find_roots(ExactPolynomial::constant(Rational(3))), PreconditionViolation);
    CHECK_THROWS_AS(find_roots(ExactPolynomial::zero()), PreconditionViolation);
    // An unreachable target at a tiny precision ceiling reports NoConvergence.
    RootOptions opts;
    opts.target_digits = 200;
    opts.initial_bits = 256;
    opts.max_bits = 256;
    CHECK_THROWS_AS(find_roots(poly({-3, 1, 4, 1, 1}), opts), NoConvergence);
}

TEST_CASE("determinism: identical runs produce identical roots") {
    const ExactPolynomial p = eigenpolynomial(parse_operator("z*D + D^2"), 15).p;
    const RootSet a = find_roots(p);
    const RootSet b = find_roots(p);
    REQUIRE(a.roots.size() == b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) CHECK(a.roots[i] == b.roots[i]);
}
