// The limiting algebraic curve F(z, y) = 0 satisfied by the Cauchy transform
// of the scaled root measure:
//   F(z,y) = q_{j0,j0} z^{j0} y^{j0} + sum_{j in A} q_{j,deg Q_j} z^{deg Q_j} y^j
//            - q_{j0,j0}.
// This module builds F from an operator, tracks the branch y ~ 1/z from
// infinity by Newton continuation, and computes the discriminant locus from
// the exact resultant Res_y(F, dF/dy).
#ifndef EIGENROOT_CURVE_HPP
#define EIGENROOT_CURVE_HPP

#include <utility>
#include <vector>

#include "eigenroot/errors.hpp"
#include "eigenroot/operator.hpp"
#include "eigenroot/roots.hpp"

namespace eigenroot {

struct CurveTerm {
    int j = 0;        // power of y
    Rational q;       // q_{j, deg Q_j}
    int z_power = 0;  // deg Q_j
};

struct CurveSpec {
    int j0 = 0;
    Rational lead;                // q_{j0,j0}
    std::vector<CurveTerm> terms; // one per j in A, ascending j
    int jm = 0;

    // F as a polynomial in y whose coefficients are exact polynomials in z.
    std::vector<ExactPolynomial> y_coefficients() const {
        std::vector<ExactPolynomial> c(static_cast<std::size_t>(jm) + 1);
        c[static_cast<std::size_t>(j0)] = ExactPolynomial::monomial(lead, j0);
        for (const auto& t : terms)
            c[static_cast<std::size_t>(t.j)] =
                c[static_cast<std::size_t>(t.j)] + ExactPolynomial::monomial(t.q, t.z_power);
        c[0] = c[0] - ExactPolynomial::constant(lead);
        return c;
    }

    Complex evaluate(const Complex& z, const Complex& y) const {
        const long prec = std::min(z.precision(), y.precision());
        Complex acc = Complex(BigFloat(lead, prec), BigFloat(0L, prec)) * pow(z, j0) * pow(y, j0);
        for (const auto& t : terms)
            acc += Complex(BigFloat(t.q, prec), BigFloat(0L, prec)) * pow(z, t.z_power) *
                   pow(y, t.j);
        acc -= Complex(BigFloat(lead, prec), BigFloat(0L, prec));
        return acc;
    }

    Complex evaluate_dy(const Complex& z, const Complex& y) const {
        const long prec = std::min(z.precision(), y.precision());
        Complex acc(prec);
        if (j0 >= 1)
            acc += Complex(BigFloat(lead * j0, prec), BigFloat(0L, prec)) * pow(z, j0) *
                   pow(y, j0 - 1);
        for (const auto& t : terms)
            acc += Complex(BigFloat(t.q * t.j, prec), BigFloat(0L, prec)) * pow(z, t.z_power) *
                   pow(y, t.j - 1);
        return acc;
    }

    // Magnitude flowing through evaluate(); the residual contract normalises
    // against it.
    BigFloat magnitude(const Complex& z, const Complex& y) const {
        const long prec = std::min(z.precision(), y.precision());
        const BigFloat az = abs(z);
        const BigFloat ay = abs(y);
        BigFloat acc = BigFloat(abs_rational(lead), prec) * (1 + pow(az, j0) * pow(ay, j0));
        for (const auto& t : terms)
            acc += BigFloat(abs_rational(t.q), prec) * pow(az, t.z_power) * pow(ay, t.j);
        return acc;
    }
};

inline CurveSpec curve_from_operator(const DifferentialOperator& t) {
    const OperatorClassification cls = classify(t);
    if (cls.kind != OperatorKind::degenerate)
        throw PreconditionViolation("curve_from_operator: operator must be degenerate");
    CurveSpec spec;
    spec.j0 = cls.j0;
    spec.lead = t.coefficient(cls.j0, cls.j0);
    spec.jm = cls.jm;
    for (int j : cls.A) {
        const int dq = t.terms().at(j).degree();
        spec.terms.push_back(CurveTerm{j, t.coefficient(j, dq), dq});
    }
    return spec;
}

struct BranchValue {
    Complex z;
    Complex y;
    BigFloat residual;  // |F(z, y)|
};

namespace detail {

// Fraction-free (Bareiss) determinant over Q[z]. Divisions by the previous
// pivot are exact; a fully zero pivot column makes the determinant zero.
inline ExactPolynomial bareiss_determinant(std::vector<std::vector<ExactPolynomial>> m) {
    const std::size_t s = m.size();
    if (s == 0) return ExactPolynomial::constant(Rational(1));
    int sign = 1;
    ExactPolynomial prev = ExactPolynomial::constant(Rational(1));
    for (std::size_t k = 0; k + 1 < s; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < s && m[pivot][k].is_zero()) ++pivot;
            if (pivot == s) return ExactPolynomial::zero();
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < s; ++i) {
            for (std::size_t j = k + 1; j < s; ++j) {
                ExactPolynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? ExactPolynomial::zero() : num.divide_exact(prev);
            }
            m[i][k] = ExactPolynomial::zero();
        }
        prev = m[k][k];
    }
    ExactPolynomial det = m[s - 1][s - 1];
    return sign < 0 ? -det : det;
}

// Sylvester matrix of two polynomials in y with coefficients in Q[z].
inline std::vector<std::vector<ExactPolynomial>> sylvester(
    const std::vector<ExactPolynomial>& f, const std::vector<ExactPolynomial>& g) {
    const int df = static_cast<int>(f.size()) - 1;
    const int dg = static_cast<int>(g.size()) - 1;
    const int s = df + dg;
    std::vector<std::vector<ExactPolynomial>> m(
        static_cast<std::size_t>(s),
        std::vector<ExactPolynomial>(static_cast<std::size_t>(s)));
    for (int row = 0; row < dg; ++row)
        for (int i = 0; i <= df; ++i)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] =
                f[static_cast<std::size_t>(df - i)];
    for (int row = 0; row < df; ++row)
        for (int i = 0; i <= dg; ++i)
            m[static_cast<std::size_t>(dg + row)][static_cast<std::size_t>(row + i)] =
                g[static_cast<std::size_t>(dg - i)];
    return m;
}

} // namespace detail

// Res_y(F, dF/dy) as an exact polynomial in z.
inline ExactPolynomial discriminant_resultant(const CurveSpec& curve) {
    if (curve.jm < 2)
        throw PreconditionViolation("discriminant_locus: curve must have y-degree >= 2");
    std::vector<ExactPolynomial> f = curve.y_coefficients();
    std::vector<ExactPolynomial> fy(f.size() - 1);
    for (std::size_t j = 1; j < f.size(); ++j)
        fy[j - 1] = Rational(static_cast<long>(j)) * f[j];
    while (fy.size() > 1 && fy.back().is_zero()) fy.pop_back();
    return detail::bareiss_determinant(detail::sylvester(f, fy));
}

struct DiscriminantLocus {
    std::vector<Complex> points;         // roots of Res_y(F, F_y), deduplicated
    std::vector<Complex> degenerations;  // zeros of the leading y-coefficient
    ExactPolynomial resultant;
    int resultant_degree = 0;
};

inline DiscriminantLocus discriminant_locus(const CurveSpec& curve, int target_digits = 14) {
    DiscriminantLocus out;
    out.resultant = discriminant_resultant(curve);
    if (out.resultant.is_zero())
        throw std::logic_error("discriminant_locus: resultant vanishes identically");
    out.resultant_degree = out.resultant.degree();

    auto cluster = [](std::vector<Complex> pts, long prec, int digits) {
        std::vector<Complex> uniq;
        const BigFloat tol = pow10(-digits / 2, prec);
        for (auto& p : pts) {
            bool dup = false;
            for (const auto& u : uniq) {
                if (abs(p - u) <= tol * (BigFloat(1L, prec) + abs(u))) {
                    dup = true;
                    break;
                }
            }
            if (!dup) uniq.push_back(std::move(p));
        }
        return uniq;
    };

    if (out.resultant.degree() >= 1) {
        RootOptions ro;
        ro.target_digits = target_digits;
        RootSet rs = find_roots(out.resultant, ro);
        out.points = cluster(std::move(rs.roots), rs.precision_used, target_digits);
    }

    // Leading-coefficient degenerations are kept apart from the branch
    // points; the locus definition concerns branching only.
    const std::vector<ExactPolynomial> f = curve.y_coefficients();
    const ExactPolynomial& leading = f.back();
    if (!leading.is_zero() && leading.degree() >= 1) {
        RootOptions ro;
        ro.target_digits = target_digits;
        RootSet rs = find_roots(leading, ro);
        out.degenerations = cluster(std::move(rs.roots), rs.precision_used, target_digits);
    }
    return out;
}

// Follows the single-valued branch y ~ 1/z inward from a large circle.
// Immutable once constructed; at() calls are independent.
class BranchTracker {
public:
    explicit BranchTracker(CurveSpec curve, long prec_bits = 256)
        : curve_(std::move(curve)), prec_(std::max(prec_bits, env_precision_floor())) {
        const DiscriminantLocus locus = discriminant_locus(curve_);
        disc_ = locus.points;
        BigFloat far(0L, prec_);
        for (const auto& p : disc_) far = max(far, abs(p));
        for (const auto& p : locus.degenerations) far = max(far, abs(p));
        start_radius_ = BigFloat(10L, prec_) * (BigFloat(1L, prec_) + far);
    }

    const std::vector<Complex>& discriminant_points() const { return disc_; }
    const BigFloat& start_radius() const { return start_radius_; }

    BranchValue at(const Complex& z) const {
        check_clearance(z);
        Complex z0 = start_point(z);
        Complex y = seed_at(z0);
        continue_segment(z0, z, y);
        return finish(z, y);
    }

    // Continuation via an explicit waypoint (start circle -> w -> z); used to
    // cross-check path independence within a simply connected region.
    BranchValue at_via(const Complex& w, const Complex& z) const {
        check_clearance(z);
        Complex z0 = start_point(w);
        Complex y = seed_at(z0);
        continue_segment(z0, w, y);
        continue_segment(w, z, y);
        return finish(z, y);
    }

private:
    void check_clearance(const Complex& z) const {
        const BigFloat tol = pow10(-6, prec_);
        for (const auto& p : disc_)
            if (abs(z - p) <= tol)
                throw NearDiscriminant("branch_at: target within 1e-6 of the discriminant locus");
    }

    Complex start_point(const Complex& z) const {
        const BigFloat az = abs(z);
        if (az.is_zero())
            return Complex(start_radius_, BigFloat(0L, prec_));
        return z * (start_radius_ / az);
    }

    Complex seed_at(const Complex& z0) const {
        Complex y = 1 / z0;
        if (!newton(z0, y))
            throw ContinuationStall("branch_at: seed Newton failed at the start circle");
        return y;
    }

    // Newton in y at fixed z; true on convergence within the basin.
    bool newton(const Complex& z, Complex& y) const {
        const BigFloat tol = pow10(-static_cast<int>(static_cast<double>(prec_) * 0.2), prec_);
        Complex yk = y;
        for (int it = 0; it < 60; ++it) {
            const Complex f = curve_.evaluate(z, yk);
            const Complex df = curve_.evaluate_dy(z, yk);
            if (df.is_zero()) return false;
            const Complex step = f / df;
            yk -= step;
            if (!yk.is_finite()) return false;
            if (abs(step) > BigFloat(1L, prec_) + abs(yk)) return false;  // left the basin
            if (abs(step) <= tol * (BigFloat(1L, prec_) + abs(yk))) {
                y = yk;
                return true;
            }
        }
        return false;
    }

    // March y along the straight segment a -> b, halving the step whenever
    // Newton leaves its basin. Step floor: 2^-20 of the segment.
    void continue_segment(const Complex& a, const Complex& b, Complex& y) const {
        const Complex dir = b - a;
        if (abs(dir).is_zero()) return;
        const double floor_frac = 1.0 / static_cast<double>(1 << 20);
        double t = 0.0;
        double step = 1.0 / 8.0;
        while (t < 1.0) {
            bool advanced = false;
            while (step >= floor_frac) {
                const double target = std::min(1.0, t + step);
                const Complex zt = a + dir * BigFloat(target, prec_);
                Complex trial = y;
                if (newton(zt, trial)) {
                    y = trial;
                    t = target;
                    advanced = true;
                    break;
                }
                step /= 2.0;
            }
            if (!advanced)
                throw ContinuationStall("branch continuation: step underflow before " +
                                        std::string("reaching the target"));
            if (step < 0.125) step *= 2.0;  // cautious re-acceleration
        }
    }

    BranchValue finish(const Complex& z, const Complex& y) const {
        BranchValue out;
        out.z = z;
        out.y = y;
        out.residual = abs(curve_.evaluate(z, y));
        const BigFloat budget =
            pow10(-10, prec_) * (BigFloat(1L, prec_) + curve_.magnitude(z, y));
        if (!(out.residual <= budget))
            throw ContinuationStall("branch_at: residual contract violated at target");
        return out;
    }

    CurveSpec curve_;
    std::vector<Complex> disc_;
    BigFloat start_radius_;
    long prec_;
};

// One-off convenience wrapper; batch callers should keep a BranchTracker.
inline BranchValue branch_at(const CurveSpec& curve, const Complex& z, long prec_bits = 256) {
    return BranchTracker(curve, prec_bits).at(z);
}

} // namespace eigenroot

#endif
