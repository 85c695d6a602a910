// Linear differential operators T = sum_j Q_j D^j with polynomial
// coefficients, their classification (j0, growth exponent d, attaining set A,
// jm) and exact eigenvalues.
#ifndef EIGENROOT_OPERATOR_HPP
#define EIGENROOT_OPERATOR_HPP

#include <map>
#include <set>
#include <string>
#include <utility>

#include "eigenroot/errors.hpp"
#include "eigenroot/polynomial.hpp"
#include "eigenroot/rational.hpp"

namespace eigenroot {

// Immutable after construction. Zero coefficient polynomials are dropped, so
// every stored Q_j is nonzero and order() is the largest stored j.
class DifferentialOperator {
public:
    static DifferentialOperator from_terms(std::map<int, ExactPolynomial> terms) {
        DifferentialOperator t;
        for (auto& [j, q] : terms) {
            if (j < 1) throw std::invalid_argument("operator term with derivative order < 1");
            if (!q.is_zero()) t.terms_.emplace(j, std::move(q));
        }
        return t;
    }

    bool empty() const { return terms_.empty(); }

    int order() const {
        if (empty()) throw std::logic_error("order() of empty operator");
        return terms_.rbegin()->first;
    }

    const std::map<int, ExactPolynomial>& terms() const { return terms_; }

    // q_{j,i}: coefficient of z^i in Q_j; zero when j has no term.
    const Rational& coefficient(int j, int i) const {
        static const Rational kZero(0);
        auto it = terms_.find(j);
        return it == terms_.end() ? kZero : it->second.coefficient(i);
    }

    friend bool operator==(const DifferentialOperator& a, const DifferentialOperator& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<int, ExactPolynomial> terms_;
};

enum class OperatorKind { degenerate, non_degenerate, invalid };

struct OperatorClassification {
    OperatorKind kind = OperatorKind::invalid;
    std::string reason;      // set when kind == invalid
    int j0 = 0;              // largest j with deg Q_j = j
    Rational d;              // max over j in [j0+1, k] of (j-j0)/(j-deg Q_j)
    std::set<int> A;         // the j attaining d
    int jm = 0;              // max(A)
};

inline OperatorClassification classify(const DifferentialOperator& t) {
    OperatorClassification out;
    if (t.empty()) {
        out.reason = "operator has no nonzero terms";
        return out;
    }
    int j0 = -1;
    for (const auto& [j, q] : t.terms()) {
        if (q.degree() > j) {
            out.reason = "deg Q_" + std::to_string(j) + " = " + std::to_string(q.degree()) +
                         " exceeds " + std::to_string(j);
            return out;
        }
        if (q.degree() == j) j0 = j;
    }
    if (j0 < 0) {
        out.reason = "no j with deg Q_j = j";
        return out;
    }
    out.j0 = j0;
    const int k = t.order();
    if (j0 == k) {
        out.kind = OperatorKind::non_degenerate;
        return out;
    }
    // Absent or zero Q_j contribute nothing to the maximisation.
    for (const auto& [j, q] : t.terms()) {
        if (j <= j0) continue;
        const Rational ratio(j - j0, j - q.degree());
        if (out.A.empty() || ratio > out.d) {
            out.d = ratio;
            out.A = {j};
        } else if (ratio == out.d) {
            out.A.insert(j);
        }
    }
    out.kind = OperatorKind::degenerate;
    out.jm = *out.A.rbegin();
    return out;
}

// lambda_n = sum_{j} q_{j,j} * n(n-1)...(n-j+1). Only j <= j0 contribute
// (q_{j,j} = 0 above j0); terms with j > n vanish through the falling
// factorial.
inline Rational eigenvalue(const DifferentialOperator& t, long n) {
    if (n < 1) throw std::invalid_argument("eigenvalue: n must be >= 1");
    Rational acc(0);
    for (const auto& [j, q] : t.terms()) {
        const Rational& diag = q.coefficient(j);
        if (diag == 0) continue;
        acc += diag * Rational(falling_factorial(n, j));
    }
    return acc;
}

// Exact application sum_j Q_j p^{(j)}. Degree never increases because
// deg Q_j <= j for valid operators.
inline ExactPolynomial apply(const DifferentialOperator& t, const ExactPolynomial& p) {
    ExactPolynomial acc = ExactPolynomial::zero();
    for (const auto& [j, q] : t.terms()) {
        ExactPolynomial dj = differentiate(p, j);
        if (dj.is_zero()) continue;
        acc = acc + q * dj;
    }
    return acc;
}

inline DifferentialOperator scale(const DifferentialOperator& t, const Rational& c) {
    std::map<int, ExactPolynomial> terms;
    for (const auto& [j, q] : t.terms()) terms.emplace(j, c * q);
    return DifferentialOperator::from_terms(std::move(terms));
}

} // namespace eigenroot

#endif
