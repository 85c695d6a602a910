// All complex roots of a polynomial by Aberth-Ehrlich simultaneous
// iteration, with adaptive precision and residual/Vieta certificates.
//
// The iteration starts from a single circle of radius 0.7 times the Cauchy
// root bound, with a fixed angular offset to break symmetry, so runs are
// deterministic. A root is frozen once its correction falls below
// 10^-target_digits * (1 + |root|). If the sweep stagnates or a certificate
// fails, the working precision doubles and the iteration restarts from the
// current approximations; past the ceiling the solver reports NoConvergence.
#ifndef EIGENROOT_ROOTS_HPP
#define EIGENROOT_ROOTS_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "eigenroot/config.hpp"
#include "eigenroot/errors.hpp"
#include "eigenroot/polynomial.hpp"

namespace eigenroot {

struct RootOptions {
    int target_digits = 12;
    long initial_bits = 0;  // 0: max(256, 4*degree, env floor)
    long max_bits = 8192;
};

struct RootSet {
    long n = 0;                 // degree, root count with multiplicity
    std::vector<Complex> roots;
    BigFloat residual_bound;    // max_i |p(root_i)|, Horner-magnitude normalised
    long precision_used = 0;
    BigFloat r;                 // max_i |root_i|
};

inline BigFloat max_modulus(const RootSet& rs) { return rs.r; }

namespace detail {

// One Aberth-Ehrlich sweep at fixed precision. Returns true when every root
// became frozen within the iteration budget.
inline bool aberth_sweep(const ComplexPolynomial& p, std::vector<Complex>& z,
                         const BigFloat& eps_corr, int max_iter) {
    const int n = static_cast<int>(z.size());
    const long prec = p.precision();
    std::vector<bool> frozen(static_cast<std::size_t>(n), false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_frozen = true;
        for (int i = 0; i < n; ++i) {
            if (frozen[static_cast<std::size_t>(i)]) continue;
            const auto [value, deriv] = p.evaluate_with_derivative(z[static_cast<std::size_t>(i)]);
            if (value.is_zero()) {
                frozen[static_cast<std::size_t>(i)] = true;
                continue;
            }
            Complex w(prec);
            if (deriv.is_zero()) {
                // Saddle hit: nudge off it instead of dividing.
                const BigFloat step = (BigFloat(1L, prec) + abs(z[static_cast<std::size_t>(i)])) /
                                      BigFloat(1000L, prec);
                w = Complex(step, step / 2);
            } else {
                const Complex newton = value / deriv;
                Complex s(prec);
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    s += 1 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
                }
                const Complex den = Complex(BigFloat(1L, prec), BigFloat(0L, prec)) - newton * s;
                w = den.is_zero() ? newton : newton / den;
            }
            z[static_cast<std::size_t>(i)] -= w;
            if (!z[static_cast<std::size_t>(i)].is_finite())
                throw NoConvergence(prec);
            if (abs(w) <= eps_corr * (BigFloat(1L, prec) + abs(z[static_cast<std::size_t>(i)])))
                frozen[static_cast<std::size_t>(i)] = true;
            else
                all_frozen = false;
        }
        if (all_frozen) return true;
    }
    return false;
}

struct Certificates {
    BigFloat residual_bound;
    bool ok = false;
};

inline Certificates certify(const ComplexPolynomial& p, const std::vector<Complex>& z,
                            int target_digits) {
    const long prec = p.precision();
    const int n = p.degree();
    const Complex& lead = p.coefficients().back();

    Certificates cert;
    cert.residual_bound = BigFloat(0L, prec);
    for (const auto& root : z) {
        // Normalise |p(root)| by sum_k |c_k| |root|^k, the magnitude actually
        // flowing through Horner; the ratio is then the relative backward
        // error, ~ n * 2^-prec once converged.
        const BigFloat r_abs = abs(root);
        BigFloat scale(0L, prec);
        for (std::size_t k = p.coefficients().size(); k-- > 0;)
            scale = scale * r_abs + abs(p.coefficients()[k]);
        const BigFloat res = abs(p.evaluate(root)) / scale;
        cert.residual_bound = max(cert.residual_bound, res);
    }

    const BigFloat tol = pow10(-target_digits + 2, prec);
    // Vieta: sum of roots vs -c_{n-1}/c_n.
    Complex sum(prec);
    BigFloat abs_sum(0L, prec);
    for (const auto& root : z) {
        sum += root;
        abs_sum += abs(root);
    }
    const Complex target_sum = -(p.coefficients()[static_cast<std::size_t>(n) - 1] / lead);
    const bool sum_ok = abs(sum - target_sum) <= tol * (BigFloat(1L, prec) + abs_sum);

    // Vieta: product of roots vs (-1)^n c_0/c_n.
    Complex prod(BigFloat(1L, prec), BigFloat(0L, prec));
    BigFloat prod_scale(1L, prec);
    for (const auto& root : z) {
        prod *= root;
        prod_scale *= max(BigFloat(1L, prec), abs(root));
    }
    Complex target_prod = p.coefficients().front() / lead;
    if (n % 2 != 0) target_prod = -target_prod;
    const bool prod_ok = abs(prod - target_prod) <= tol * prod_scale;

    const bool residual_ok = cert.residual_bound <= pow10(-target_digits, prec);
    cert.ok = sum_ok && prod_ok && residual_ok;
    return cert;
}

inline std::vector<Complex> initial_circle(const ComplexPolynomial& p, long prec) {
    const int n = p.degree();
    const auto& c = p.coefficients();
    const BigFloat lead_abs = abs(c.back());
    // Cauchy bound 1 + max |c_i/c_n|, capped by the Fujiwara bound
    // 2 max_i |c_{n-i}/c_n|^{1/i}. The cap matters for eigenpolynomials,
    // whose coefficients grow super-exponentially: the Cauchy bound alone
    // can overshoot the root disc by dozens of orders of magnitude and the
    // iteration would crawl inward by a factor (1 - 1/n) per step.
    BigFloat cauchy(0L, prec);
    for (int i = 0; i < n; ++i)
        cauchy = max(cauchy, abs(c[static_cast<std::size_t>(i)]) / lead_abs);
    cauchy = BigFloat(1L, prec) + cauchy;
    BigFloat fujiwara(0L, prec);
    for (int i = 1; i <= n; ++i) {
        const BigFloat q = abs(c[static_cast<std::size_t>(n - i)]) / lead_abs;
        if (q.is_zero()) continue;
        BigFloat root_i(prec);
        mpfr_rootn_ui(root_i.raw(), q.raw(), static_cast<unsigned long>(i), MPFR_RNDN);
        fujiwara = max(fujiwara, root_i);
    }
    fujiwara = BigFloat(2L, prec) * fujiwara;
    const BigFloat radius = min(cauchy, fujiwara) * BigFloat(0.7, prec);
    const BigFloat two_pi = BigFloat(2L, prec) * BigFloat::pi(prec);
    const BigFloat offset(0.376, prec);
    std::vector<Complex> z;
    z.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const BigFloat theta = two_pi * BigFloat(static_cast<long>(i), prec) /
                                   BigFloat(static_cast<long>(n), prec) + offset;
        z.push_back(Complex::polar(radius, theta));
    }
    return z;
}

} // namespace detail

// Root finding for exact input. Zero roots are split off exactly first
// (trailing zero coefficients), then Aberth-Ehrlich handles the rest.
inline RootSet find_roots(const ExactPolynomial& p, const RootOptions& opts = {}) {
    if (p.is_zero() || p.degree() < 1)
        throw PreconditionViolation("find_roots: degree must be >= 1");

    const int n = p.degree();
    int zero_count = 0;
    while (p.coefficient(zero_count) == 0) ++zero_count;
    std::vector<Rational> reduced(p.coefficients().begin() + zero_count, p.coefficients().end());
    const ExactPolynomial q = ExactPolynomial::from_coefficients(std::move(reduced));

    long bits = std::max({opts.initial_bits, 256L, 4L * n, env_precision_floor()});
    const int m = q.degree();

    std::vector<Complex> z;
    BigFloat residual_bound;
    long used_bits = bits;
    if (m == 0) {
        residual_bound = BigFloat(0L, bits);
    } else {
        bool done = false;
        for (; bits <= opts.max_bits; bits *= 2) {
            used_bits = bits;
            const auto cp = ComplexPolynomial::from_exact(q, bits);
            if (z.empty()) {
                z = detail::initial_circle(cp, bits);
            } else {
                for (auto& zi : z) {
                    zi.real().set_precision(bits);
                    zi.imag().set_precision(bits);
                }
            }
            const BigFloat eps_corr = pow10(-opts.target_digits, bits);
            const int max_iter = 400 + 8 * m;
            const bool converged = detail::aberth_sweep(cp, z, eps_corr, max_iter);
            if (converged) {
                const auto cert = detail::certify(cp, z, opts.target_digits);
                if (cert.ok) {
                    residual_bound = cert.residual_bound;
                    done = true;
                    break;
                }
            }
        }
        if (!done) throw NoConvergence(opts.max_bits);
    }

    RootSet out;
    out.n = n;
    out.roots = std::move(z);
    for (int i = 0; i < zero_count; ++i) out.roots.emplace_back(used_bits);
    out.residual_bound = residual_bound;
    out.precision_used = used_bits;
    out.r = BigFloat(0L, used_bits);
    for (const auto& root : out.roots) out.r = max(out.r, abs(root));
    return out;
}

// Single fixed-precision pass for polynomials that are only known
// approximately (complex big-float coefficients). No escalation: the input
// itself limits the attainable accuracy. Used for branch-solver sanity
// checks; certificates are the caller's business.
inline std::vector<Complex> find_roots_complex(const ComplexPolynomial& p, int target_digits = 12) {
    if (p.is_zero() || p.degree() < 1)
        throw PreconditionViolation("find_roots_complex: degree must be >= 1");
    const long prec = p.precision();
    auto z = detail::initial_circle(p, prec);
    const BigFloat eps_corr = pow10(-target_digits, prec);
    if (!detail::aberth_sweep(p, z, eps_corr, 400 + 8 * p.degree()))
        throw NoConvergence(prec);
    return z;
}

} // namespace eigenroot

#endif
