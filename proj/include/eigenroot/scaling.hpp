// n-sweeps of the largest root modulus r_n, scaled empirical root measures,
// their discrete Cauchy transforms, the growth-constant estimate, and the
// residual of the limiting algebraic equation on empirical data.
#ifndef EIGENROOT_SCALING_HPP
#define EIGENROOT_SCALING_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "eigenroot/eigen.hpp"
#include "eigenroot/errors.hpp"
#include "eigenroot/parallel.hpp"
#include "eigenroot/roots.hpp"

namespace eigenroot {

enum class ScanStatus { ok, collision, no_convergence };

struct ScalingRecord {
    long n = 0;
    ScanStatus status = ScanStatus::ok;
    long collided_with = -1;  // m of the spectral collision, if any
    BigFloat r;               // max root modulus, valid when status == ok
    BigFloat ratio;           // r / n^d, valid when status == ok
    long precision_used = 0;
};

struct EmpiricalMeasure {
    long n = 0;
    std::vector<Complex> atoms;  // roots / n^d, each carrying mass 1/n
};

struct ScanOptions {
    int target_digits = 12;
    unsigned threads = 0;  // 0: hardware concurrency
};

// One record per n in [n_from, n_to] stepping by step, ordered by n.
// Spectral collisions and root-finder failures flag the record instead of
// aborting the sweep.
inline std::vector<ScalingRecord> scan(const DifferentialOperator& t, long n_from, long n_to,
                                       long step = 1, const ScanOptions& opts = {}) {
    if (n_from < 1 || n_from > n_to) throw PreconditionViolation("scan: need 1 <= n_from <= n_to");
    if (step < 1) throw PreconditionViolation("scan: step must be >= 1");
    const OperatorClassification cls = classify(t);
    if (cls.kind != OperatorKind::degenerate)
        throw PreconditionViolation("scan: operator must be degenerate exactly-solvable");

    std::vector<long> ns;
    for (long n = n_from; n <= n_to; n += step) ns.push_back(n);
    std::vector<ScalingRecord> records(ns.size());

    parallel_for(ns.size(), [&](std::size_t i) {
        const long n = ns[i];
        ScalingRecord rec;
        rec.n = n;
        try {
            const EigenPair pair = eigenpolynomial(t, n);
            RootOptions ro;
            ro.target_digits = opts.target_digits;
            const RootSet rs = find_roots(pair.p, ro);
            rec.r = rs.r;
            rec.precision_used = rs.precision_used;
            rec.ratio = rs.r / rational_power(n, cls.d, rs.precision_used);
        } catch (const SpectralCollision& sc) {
            rec.status = ScanStatus::collision;
            rec.collided_with = sc.colliding_degree();
        } catch (const NoConvergence&) {
            rec.status = ScanStatus::no_convergence;
        }
        records[i] = std::move(rec);
    }, opts.threads);

    return records;
}

// Roots of p_n scaled by n^d, one atom of mass 1/n each.
inline EmpiricalMeasure scaled_measure(const DifferentialOperator& t, long n,
                                       int target_digits = 12) {
    const OperatorClassification cls = classify(t);
    if (cls.kind != OperatorKind::degenerate)
        throw PreconditionViolation("scaled_measure: operator must be degenerate exactly-solvable");
    const EigenPair pair = eigenpolynomial(t, n);
    RootOptions ro;
    ro.target_digits = target_digits;
    const RootSet rs = find_roots(pair.p, ro);
    const BigFloat scale = rational_power(n, cls.d, rs.precision_used);
    EmpiricalMeasure m;
    m.n = n;
    m.atoms.reserve(rs.roots.size());
    for (const auto& root : rs.roots) m.atoms.push_back(root / scale);
    return m;
}

// (1/n) sum_nu 1/(z - atom_nu). Refuses points closer than
// 10^-9 (1 + |z|) to an atom.
inline Complex empirical_cauchy(const EmpiricalMeasure& m, const Complex& z) {
    if (m.atoms.empty()) throw PreconditionViolation("empirical_cauchy: empty measure");
    const long prec = z.precision();
    const BigFloat cutoff = pow10(-9, prec) * (BigFloat(1L, prec) + abs(z));
    Complex acc(prec);
    for (const auto& atom : m.atoms) {
        const Complex gap = z - atom;
        if (abs(gap) <= cutoff)
            throw PoleProximity("empirical_cauchy: sample point within 1e-9 (1+|z|) of an atom");
        acc += 1 / gap;
    }
    return acc / BigFloat(static_cast<long>(m.atoms.size()), prec);
}

// Residual of the limiting Cauchy-transform equation on the empirical
// measure at each sample point:
//   | q_{j0,j0} z^{j0} C^{j0} + sum_{j in A} q_{j,deg Q_j} z^{deg Q_j} C^j
//     - q_{j0,j0} |
// with C the discrete Cauchy transform of mu_n. Points must stay well
// outside the scaled support; the conservative screen |z| > 1.2 max|atom|
// (a disc containing the inflated convex hull) enforces that.
inline std::vector<BigFloat> conjecture_residual(const DifferentialOperator& t, long n,
                                                 const std::vector<Complex>& points,
                                                 int target_digits = 12) {
    const OperatorClassification cls = classify(t);
    if (cls.kind != OperatorKind::degenerate)
        throw PreconditionViolation("conjecture_residual: operator must be degenerate");
    const EmpiricalMeasure m = scaled_measure(t, n, target_digits);

    BigFloat support(0L, 64);
    for (const auto& atom : m.atoms) support = max(support, abs(atom));

    std::vector<BigFloat> out;
    out.reserve(points.size());
    const Rational lead = t.coefficient(cls.j0, cls.j0);
    for (const auto& z : points) {
        const long prec = z.precision();
        if (!(abs(z) > BigFloat(1.2, prec) * support))
            throw PreconditionViolation(
                "conjecture_residual: sample point inside inflated scaled support");
        const Complex c = empirical_cauchy(m, z);
        Complex acc = Complex(BigFloat(lead, prec), BigFloat(0L, prec)) * pow(z, cls.j0) *
                      pow(c, cls.j0);
        for (int j : cls.A) {
            const int dq = t.terms().at(j).degree();
            const Rational& q_top = t.coefficient(j, dq);
            acc += Complex(BigFloat(q_top, prec), BigFloat(0L, prec)) * pow(z, dq) * pow(c, j);
        }
        acc -= Complex(BigFloat(lead, prec), BigFloat(0L, prec));
        out.push_back(abs(acc));
    }
    return out;
}

struct C0Estimate {
    BigFloat c_hat;
    BigFloat spread;  // (max - min) / median over the window
    std::size_t window = 0;
};

// Median of r_n/n^d over the top half of the n-range (largest n), with the
// normalised spread over the same window. Needs at least three clean records.
inline C0Estimate estimate_c0(const std::vector<ScalingRecord>& records) {
    std::vector<const ScalingRecord*> clean;
    for (const auto& rec : records)
        if (rec.status == ScanStatus::ok) clean.push_back(&rec);
    if (clean.size() < 3)
        throw InsufficientData("estimate_c0: need at least 3 non-collision records");
    std::sort(clean.begin(), clean.end(),
              [](const ScalingRecord* a, const ScalingRecord* b) { return a->n < b->n; });

    const std::size_t window = (clean.size() + 1) / 2;
    std::vector<BigFloat> ratios;
    ratios.reserve(window);
    for (std::size_t i = clean.size() - window; i < clean.size(); ++i)
        ratios.push_back(clean[i]->ratio);
    std::sort(ratios.begin(), ratios.end());

    C0Estimate est;
    est.window = window;
    est.c_hat = (window % 2 == 1)
                    ? ratios[window / 2]
                    : (ratios[window / 2 - 1] + ratios[window / 2]) / 2;
    est.spread = (ratios.back() - ratios.front()) / est.c_hat;
    return est;
}

} // namespace eigenroot

#endif
