// Exact computation of the unique monic eigenpolynomial p_n with
// T(p_n) = lambda_n p_n, by back-substitution in the monomial basis.
//
// T maps z^m to a polynomial of degree <= m, so in the basis (1, z, ..., z^n)
// the operator matrix M is upper triangular with the eigenvalues lambda_m on
// its diagonal, and banded: the z^m coefficient of T(z^{m'}) vanishes unless
// m' - k <= m <= m'. Fixing c_n = 1 and walking m from n-1 down to 0 gives
//   (lambda_m - lambda_n) c_m = - sum_{delta=1..k} M_{m,m+delta} c_{m+delta}.
// A vanishing pivot lambda_m - lambda_n is a spectral collision and is
// reported, never solved around.
#ifndef EIGENROOT_EIGEN_HPP
#define EIGENROOT_EIGEN_HPP

#include <vector>

#include "eigenroot/errors.hpp"
#include "eigenroot/operator.hpp"

namespace eigenroot {

struct EigenPair {
    long n = 0;
    ExactPolynomial p;  // monic, degree n
    Rational lambda;
};

inline EigenPair eigenpolynomial(const DifferentialOperator& t, long n) {
    if (n < 1) throw std::invalid_argument("eigenpolynomial: n must be >= 1");
    const int k = t.order();

    // lambda_m for m = 0..n; lambda_0 = 0 since every term differentiates.
    std::vector<Rational> lambda(static_cast<std::size_t>(n) + 1, Rational(0));
    for (long m = 1; m <= n; ++m) lambda[static_cast<std::size_t>(m)] = eigenvalue(t, m);

    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    c[static_cast<std::size_t>(n)] = 1;

    for (long m = n - 1; m >= 0; --m) {
        Rational rhs(0);
        for (int delta = 1; delta <= k && m + delta <= n; ++delta) {
            const long mp = m + delta;
            // M_{m, m+delta} = sum_j fall(m', j) q_{j, j-delta}
            Rational entry(0);
            for (const auto& [j, q] : t.terms()) {
                if (j < delta) continue;
                const Rational& qc = q.coefficient(j - delta);
                if (qc == 0) continue;
                entry += qc * Rational(falling_factorial(mp, j));
            }
            if (entry == 0) continue;
            rhs += entry * c[static_cast<std::size_t>(mp)];
        }
        const Rational pivot = lambda[static_cast<std::size_t>(m)] - lambda[static_cast<std::size_t>(n)];
        if (pivot == 0) throw SpectralCollision(m, n);
        c[static_cast<std::size_t>(m)] = -rhs / pivot;
    }

    EigenPair out;
    out.n = n;
    out.p = ExactPolynomial::from_coefficients(std::move(c));
    out.lambda = lambda[static_cast<std::size_t>(n)];
    return out;
}

// T(p) - lambda p, exactly. The zero polynomial certifies the pair. Uses the
// generic operator application, an independent route from the banded solve.
inline ExactPolynomial verify_eigen(const DifferentialOperator& t, const EigenPair& pair) {
    return apply(t, pair.p) - pair.lambda * pair.p;
}

} // namespace eigenroot

#endif
