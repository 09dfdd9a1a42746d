#pragma once

#include <vector>

#include "chronocalc/matrix.hpp"

namespace chronocalc {

/// Finite model of the time-ordered operator algebra: formal sums of
/// complex-weighted products of time-tagged matrix factors. Factors at
/// distinct times commute by construction (canonical ascending-time
/// storage); factors sharing a time are pre-multiplied into one slot.

struct TimeFactor {
    double time = 0.0;
    ComplexMatrix matrix;
};

struct TimeOrderedTerm {
    Complex coeff = 1.0;
    std::vector<TimeFactor> factors;  // ascending time, one factor per time
};

class TimeOrderedExpr {
public:
    TimeOrderedExpr() = default;
    TimeOrderedExpr(std::size_t dim, double a, double b) : dim_(dim), a_(a), b_(b) {}

    std::size_t dim() const { return dim_; }
    double interval_a() const { return a_; }
    double interval_b() const { return b_; }
    const std::vector<TimeOrderedTerm>& terms() const { return terms_; }

    void add_term(TimeOrderedTerm term);

    TimeOrderedExpr& operator+=(const TimeOrderedExpr& rhs);
    TimeOrderedExpr& operator-=(const TimeOrderedExpr& rhs);
    TimeOrderedExpr& operator*=(Complex s);

    /// Exact structural equality of canonical forms (times compared on
    /// their binary representation).
    friend bool operator==(const TimeOrderedExpr& x, const TimeOrderedExpr& y);

private:
    std::size_t dim_ = 0;
    double a_ = 0.0;
    double b_ = 1.0;
    std::vector<TimeOrderedTerm> terms_;
};

TimeOrderedExpr operator+(TimeOrderedExpr lhs, const TimeOrderedExpr& rhs);
TimeOrderedExpr operator-(TimeOrderedExpr lhs, const TimeOrderedExpr& rhs);

/// The time-ordering morphism at t: a single-factor expression.
/// Throws std::domain_error when t lies outside [a,b].
TimeOrderedExpr lift(double t, const ComplexMatrix& m, double a = 0.0, double b = 1.0);

/// Product: distributes over terms; distinct-time factors commute by
/// canonical sort, equal-time factors multiply in operand order X-then-Y.
TimeOrderedExpr expr_mul(const TimeOrderedExpr& x, const TimeOrderedExpr& y);
TimeOrderedExpr operator*(const TimeOrderedExpr& x, const TimeOrderedExpr& y);

/// Exchange operator E[t,t2]: swaps the two time tags on every factor.
TimeOrderedExpr exchange(const TimeOrderedExpr& x, double t, double t2);

/// Disentanglement: per term, multiply factors in descending time order,
/// scale by the coefficient, and sum. Empty expression -> zero matrix.
ComplexMatrix disentangle(const TimeOrderedExpr& x);

struct ExpansionalResult {
    ComplexMatrix value;
    double quad_error = 0.0;  // node-refinement estimate
};

/// Truncated expansional sum for e^{A+B}:
///   sum_{k<=order} int_{0<s_k<...<s_1<1} e^{(1-s_1)A} B e^{(s_1-s_2)A} B ... e^{s_k A} ds,
/// nested Gauss-Legendre per axis; order-0 term is e^A.
ExpansionalResult expansional_expand(const ComplexMatrix& a, const ComplexMatrix& b, int order,
                                     std::size_t quad_nodes);

}  // namespace chronocalc
