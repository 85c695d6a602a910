// Numerical verification of the two max-norm lemmas on synthetic monic
// polynomials with roots confined to a disc of radius A, via sampled maxima
// on the circle |z| = 2A.
//
// Sampled maxima are exact lower bounds on the true maximum. Upper-bound
// checks therefore carry a 5% multiplicative allowance on their right-hand
// side; the lower-bound check needs none (a sampled value above the bound is
// already a certificate). The two-sided constant check applies the allowance
// on both ends and a violation there means the concrete constant choice is
// too tight, which is reported as such, distinct from an inequality failure.
#ifndef EIGENROOT_LEMMAS_HPP
#define EIGENROOT_LEMMAS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eigenroot/config.hpp"
#include "eigenroot/errors.hpp"
#include "eigenroot/parallel.hpp"
#include "eigenroot/polynomial.hpp"

namespace eigenroot {

constexpr double kCircleMaxMargin = 0.05;

enum class SampleKind { uniform, all_equal, boundary, conjugate };

inline const char* to_string(SampleKind k) {
    switch (k) {
        case SampleKind::uniform: return "uniform";
        case SampleKind::all_equal: return "all_equal";
        case SampleKind::boundary: return "boundary";
        case SampleKind::conjugate: return "conjugate";
    }
    return "?";
}

struct DiscSample {
    long n = 0;
    BigFloat A;
    std::vector<Complex> roots;
    std::uint64_t seed = 0;
    SampleKind kind = SampleKind::uniform;
};

// Deterministic sample of n roots inside the closed disc of radius A.
// uniform: i.i.d. area-uniform; all_equal: one repeated interior point;
// boundary: equispaced on |z| = A with a seeded phase; conjugate: uniform
// points symmetrised under conjugation (odd n adds one real root).
inline DiscSample make_disc_sample(long n, const BigFloat& A, std::uint64_t seed,
                                   SampleKind kind = SampleKind::uniform, long prec_bits = 128) {
    if (n < 2) throw PreconditionViolation("make_disc_sample: n must be >= 2");
    DiscSample s;
    s.n = n;
    s.A = A;
    s.A.set_precision(prec_bits);
    s.seed = seed;
    s.kind = kind;
    s.roots.reserve(static_cast<std::size_t>(n));

    std::mt19937_64 gen(seed);
    auto u01 = [&gen] {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;
    };
    const BigFloat two_pi = BigFloat(2L, prec_bits) * BigFloat::pi(prec_bits);

    auto uniform_point = [&] {
        const double radius = std::sqrt(u01());
        const double angle = u01();
        return Complex::polar(s.A * BigFloat(radius, prec_bits),
                              two_pi * BigFloat(angle, prec_bits));
    };

    switch (kind) {
        case SampleKind::uniform:
            for (long i = 0; i < n; ++i) s.roots.push_back(uniform_point());
            break;
        case SampleKind::all_equal: {
            const Complex w = Complex::polar(s.A * BigFloat(0.6, prec_bits),
                                             BigFloat(0.7, prec_bits));
            s.roots.assign(static_cast<std::size_t>(n), w);
            break;
        }
        case SampleKind::boundary: {
            const BigFloat offset = two_pi * BigFloat(u01(), prec_bits);
            for (long i = 0; i < n; ++i) {
                const BigFloat theta = two_pi * BigFloat(static_cast<long>(i), prec_bits) /
                                           BigFloat(n, prec_bits) + offset;
                s.roots.push_back(Complex::polar(s.A, theta));
            }
            break;
        }
        case SampleKind::conjugate: {
            for (long i = 0; i < n / 2; ++i) {
                const Complex w = uniform_point();
                s.roots.push_back(w);
                s.roots.push_back(conj(w));
            }
            if (n % 2 != 0) {
                const double x = 2.0 * u01() - 1.0;
                s.roots.emplace_back(s.A * BigFloat(x, prec_bits), BigFloat(0L, prec_bits));
            }
            break;
        }
    }
    return s;
}

struct LemmaReport {
    std::string lemma;  // "rhs", "logderiv_lower", "ratio_gap", "deriv_of_ratio", "lemma2"
    long n = 0;
    BigFloat A;
    int j = 0;
    BigFloat lhs;
    BigFloat rhs;
    bool holds = false;
    std::string violation;  // "", "inequality" or "constant_too_tight"
    long sample_count = 0;  // circle grid size M
    std::uint64_t seed = 0;
    SampleKind kind = SampleKind::uniform;
};

// Expanded polynomial plus derivative family for one sample, with the ratio
// vectors p^(i)/p cached on the standard circle grid.
class SampleEvaluator {
public:
    // Working precision >= 4n bits (from_roots expansion and Horner both).
    // The default circle is |z| = 2A; a custom radius must clear the disc.
    SampleEvaluator(DiscSample sample, int max_deriv, long M = 0,
                    const BigFloat* custom_radius = nullptr)
        : sample_(std::move(sample)),
          prec_(std::max({kMinPrecisionBits, 4L * sample_.n, env_precision_floor()})),
          M_(M != 0 ? M : std::max(4096L, 64L * sample_.n)) {
        radius_ = custom_radius != nullptr ? *custom_radius
                                           : BigFloat(2L, prec_) * sample_.A;
        radius_.set_precision(prec_);
        if (!(radius_ > sample_.A))
            throw PreconditionViolation("SampleEvaluator: circle radius must exceed A");
        derivs_.reserve(static_cast<std::size_t>(max_deriv) + 1);
        derivs_.push_back(ComplexPolynomial::from_roots(sample_.roots, prec_));
        for (int i = 1; i <= max_deriv; ++i) derivs_.push_back(derivs_.back().derivative());
        two_pi_ = BigFloat(2L, prec_) * BigFloat::pi(prec_);

        grid_.resize(static_cast<std::size_t>(M_));
        for (long m = 0; m < M_; ++m)
            grid_[static_cast<std::size_t>(m)] = ratios(grid_theta(m));
    }

    const DiscSample& sample() const { return sample_; }
    long precision() const { return prec_; }
    long grid_size() const { return M_; }
    const BigFloat& radius() const { return radius_; }

    BigFloat grid_theta(long m) const {
        return two_pi_ * BigFloat(m, prec_) / BigFloat(M_, prec_);
    }

    Complex circle_point(const BigFloat& theta) const { return Complex::polar(radius_, theta); }

    // [i] = p^(i)(z)/p(z) at z = radius e^{i theta}; index 0 is 1.
    std::vector<Complex> ratios(const BigFloat& theta) const {
        const Complex z = circle_point(theta);
        const Complex pz = derivs_[0].evaluate(z);
        std::vector<Complex> out;
        out.reserve(derivs_.size());
        for (const auto& d : derivs_) out.push_back(d.evaluate(z) / pz);
        return out;
    }

    const std::vector<Complex>& grid_ratios(long m) const {
        return grid_[static_cast<std::size_t>(m)];
    }

private:
    DiscSample sample_;
    long prec_;
    long M_;
    BigFloat radius_;
    BigFloat two_pi_;
    std::vector<ComplexPolynomial> derivs_;
    std::vector<std::vector<Complex>> grid_;
};

namespace detail {

// Grid scan plus golden-section refinement around the best eight samples.
// The result is a certified lower bound on the true circle maximum.
// at_grid(m) should read the evaluator's cached ratio vectors; fresh(theta)
// re-evaluates from scratch for the refinement probes.
inline BigFloat circle_max_refined(const SampleEvaluator& ev,
                                   const std::function<BigFloat(long)>& at_grid,
                                   const std::function<BigFloat(const BigFloat&)>& fresh) {
    const long M = ev.grid_size();
    const long prec = ev.precision();
    std::vector<std::pair<double, long>> scored;
    scored.reserve(static_cast<std::size_t>(M));
    BigFloat best(0L, prec);
    for (long m = 0; m < M; ++m) {
        const BigFloat v = at_grid(m);
        if (v > best) best = v;
        scored.emplace_back(-v.to_double(), m);
    }
    const std::size_t starts = std::min<std::size_t>(8, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(starts),
                      scored.end());

    const BigFloat h = BigFloat(2L, prec) * BigFloat::pi(prec) / BigFloat(M, prec);
    const BigFloat inv_phi(0.6180339887498949, prec);
    for (std::size_t s = 0; s < starts; ++s) {
        const BigFloat center = ev.grid_theta(scored[s].second);
        BigFloat lo = center - h;
        BigFloat hi = center + h;
        BigFloat x1 = hi - inv_phi * (hi - lo);
        BigFloat x2 = lo + inv_phi * (hi - lo);
        BigFloat f1 = fresh(x1);
        BigFloat f2 = fresh(x2);
        for (int it = 0; it < 28; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = fresh(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = fresh(x1);
            }
        }
        best = max(best, max(f1, f2));
    }
    return best;
}

inline Complex ratio_power(const std::vector<Complex>& rv, int j) {
    Complex acc = rv[1];
    for (int i = 1; i < j; ++i) acc *= rv[1];
    return acc;
}

} // namespace detail

// max over the circle |z| = radius of |p^(j)(z)/p(z)|, sampled at M points
// and refined. The radius must clear the root disc.
inline BigFloat circle_max(const DiscSample& sample, int j, const BigFloat& radius, long M = 0) {
    SampleEvaluator ev(sample, j, M, &radius);
    return detail::circle_max_refined(
        ev,
        [&](long m) { return abs(ev.grid_ratios(m)[static_cast<std::size_t>(j)]); },
        [&](const BigFloat& theta) { return abs(ev.ratios(theta)[static_cast<std::size_t>(j)]); });
}

inline LemmaReport check_rhs(const SampleEvaluator& ev, int j) {
    if (j < 1) throw PreconditionViolation("check_rhs: j must be >= 1");
    const long prec = ev.precision();
    LemmaReport rep;
    rep.lemma = "rhs";
    rep.n = ev.sample().n;
    rep.A = ev.sample().A;
    rep.j = j;
    rep.seed = ev.sample().seed;
    rep.kind = ev.sample().kind;
    rep.sample_count = ev.grid_size();
    rep.lhs = detail::circle_max_refined(
        ev, [&](long m) { return abs(ev.grid_ratios(m)[static_cast<std::size_t>(j)]); },
        [&](const BigFloat& theta) { return abs(ev.ratios(theta)[static_cast<std::size_t>(j)]); });
    rep.rhs = BigFloat(falling_factorial(ev.sample().n, j), prec) / pow(rep.A, static_cast<long>(j));
    rep.holds = rep.lhs <= rep.rhs * BigFloat(1.0 + kCircleMaxMargin, prec);
    if (!rep.holds) rep.violation = "inequality";
    return rep;
}

inline LemmaReport check_logderiv_lower(const SampleEvaluator& ev) {
    const long prec = ev.precision();
    LemmaReport rep;
    rep.lemma = "logderiv_lower";
    rep.n = ev.sample().n;
    rep.A = ev.sample().A;
    rep.j = 1;
    rep.seed = ev.sample().seed;
    rep.kind = ev.sample().kind;
    rep.sample_count = ev.grid_size();
    rep.lhs = detail::circle_max_refined(
        ev, [&](long m) { return abs(ev.grid_ratios(m)[1]); },
        [&](const BigFloat& theta) { return abs(ev.ratios(theta)[1]); });
    rep.rhs = BigFloat(rep.n, prec) / (BigFloat(3L, prec) * rep.A);
    // Sampled maxima undershoot only, so lhs >= rhs certifies the bound.
    rep.holds = rep.lhs >= rep.rhs;
    if (!rep.holds) rep.violation = "inequality";
    return rep;
}

inline LemmaReport check_ratio_gap(const SampleEvaluator& ev, int j) {
    if (j < 1) throw PreconditionViolation("check_ratio_gap: j must be >= 1");
    const long prec = ev.precision();
    LemmaReport rep;
    rep.lemma = "ratio_gap";
    rep.n = ev.sample().n;
    rep.A = ev.sample().A;
    rep.j = j;
    rep.seed = ev.sample().seed;
    rep.kind = ev.sample().kind;
    rep.sample_count = ev.grid_size();
    auto gap = [j](const std::vector<Complex>& rv) {
        return abs(rv[static_cast<std::size_t>(j)] - detail::ratio_power(rv, j));
    };
    rep.lhs = detail::circle_max_refined(
        ev, [&](long m) { return gap(ev.grid_ratios(m)); },
        [&](const BigFloat& theta) { return gap(ev.ratios(theta)); });
    // C'_j = j(j-1)/2 from the proof recursion C'_{p+1} = p + C'_p, C'_1 = 0.
    const long cj = static_cast<long>(j) * (j - 1) / 2;
    rep.rhs = BigFloat(cj, prec) * pow(BigFloat(rep.n, prec), static_cast<long>(j - 1)) /
              pow(rep.A, static_cast<long>(j));
    rep.holds = rep.lhs <= rep.rhs * BigFloat(1.0 + kCircleMaxMargin, prec);
    if (!rep.holds) rep.violation = "inequality";
    return rep;
}

inline LemmaReport check_derivative_of_ratio(const SampleEvaluator& ev, int j) {
    if (j < 1) throw PreconditionViolation("check_derivative_of_ratio: j must be >= 1");
    const long prec = ev.precision();
    LemmaReport rep;
    rep.lemma = "deriv_of_ratio";
    rep.n = ev.sample().n;
    rep.A = ev.sample().A;
    rep.j = j;
    rep.seed = ev.sample().seed;
    rep.kind = ev.sample().kind;
    rep.sample_count = ev.grid_size();
    // (p^(j)/p)' = p^(j+1)/p - (p^(j)/p)(p'/p)
    auto dr = [j](const std::vector<Complex>& rv) {
        return abs(rv[static_cast<std::size_t>(j) + 1] -
                   rv[static_cast<std::size_t>(j)] * rv[1]);
    };
    rep.lhs = detail::circle_max_refined(
        ev, [&](long m) { return dr(ev.grid_ratios(m)); },
        [&](const BigFloat& theta) { return dr(ev.ratios(theta)); });
    rep.rhs = BigFloat(static_cast<long>(j), prec) *
              pow(BigFloat(rep.n, prec), static_cast<long>(j)) /
              pow(rep.A, static_cast<long>(j) + 1);
    rep.holds = rep.lhs <= rep.rhs * BigFloat(1.0 + kCircleMaxMargin, prec);
    if (!rep.holds) rep.violation = "inequality";
    return rep;
}

// Two-sided sandwich for ||Q(z) p^(j)/p|| on |z| = 2A with A = s n^d.
// The report's lhs is the normalised ratio rho, rhs the concrete constant
//   K_j = 4^(deg Q + 1) (1 + sum |q_i|) max(1, n^j / fall(n, j)),
// and the check is 1/K_j <= rho <= K_j up to the sampling allowance on both
// sides. The fall(n,j)/n^j adjustment loosens the small-n lower end, where
// the sampled family (e.g. repeated roots) attains it with near equality.
inline LemmaReport check_lemma2(const SampleEvaluator& ev, const ExactPolynomial& Q,
                                const Rational& s, const Rational& d, int j) {
    if (j < 1) throw PreconditionViolation("check_lemma2: j must be >= 1");
    if (Q.is_zero()) throw PreconditionViolation("check_lemma2: Q must be nonzero");
    if (!(s > 0 && s < 1)) throw PreconditionViolation("check_lemma2: need 0 < s < 1");
    if (!(d > 0)) throw PreconditionViolation("check_lemma2: need d > 0");
    const long prec = ev.precision();
    if (!(ev.sample().A >= BigFloat(10L, prec)))
        throw PreconditionViolation("check_lemma2: need A = s n^d >= 10");

    LemmaReport rep;
    rep.lemma = "lemma2";
    rep.n = ev.sample().n;
    rep.A = ev.sample().A;
    rep.j = j;
    rep.seed = ev.sample().seed;
    rep.kind = ev.sample().kind;
    rep.sample_count = ev.grid_size();

    auto weighted = [&](const BigFloat& theta) {
        const Complex z = ev.circle_point(theta);
        return abs(evaluate(Q, z)) * abs(ev.ratios(theta)[static_cast<std::size_t>(j)]);
    };
    // Grid pass reuses cached ratios; |Q| is re-evaluated per point (cheap,
    // deg Q is tiny).
    const BigFloat raw = detail::circle_max_refined(
        ev,
        [&](long m) {
            const Complex z = ev.circle_point(ev.grid_theta(m));
            return abs(evaluate(Q, z)) * abs(ev.grid_ratios(m)[static_cast<std::size_t>(j)]);
        },
        weighted);

    const int deg_q = Q.degree();
    const Rational expo = d * Rational(deg_q - j) + j;  // d(deg Q - j) + j
    const BigFloat denom = pow(BigFloat(static_cast<long>(rep.n), prec), BigFloat(expo, prec)) *
                           pow(BigFloat(s, prec), static_cast<long>(deg_q - j));
    rep.lhs = raw / denom;  // rho

    Rational coeff_sum(1);
    for (const auto& c : Q.coefficients()) coeff_sum += abs_rational(c);
    const BigFloat fall_adj =
        max(BigFloat(1L, prec),
            pow(BigFloat(rep.n, prec), static_cast<long>(j)) /
                BigFloat(falling_factorial(rep.n, j), prec));
    rep.rhs = pow(BigFloat(4L, prec), static_cast<long>(deg_q) + 1) * BigFloat(coeff_sum, prec) *
              fall_adj;

    const BigFloat allowance(1.0 + kCircleMaxMargin, prec);
    const bool upper = rep.lhs <= rep.rhs * allowance;
    const bool lower = rep.lhs * allowance >= 1 / rep.rhs;
    rep.holds = upper && lower;
    if (!rep.holds) rep.violation = "constant_too_tight";
    return rep;
}

} // namespace eigenroot

#endif
