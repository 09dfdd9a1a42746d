#include "chronocalc/ordered.hpp"

#include <algorithm>
#include <cmath>

#include "chronocalc/quadrature.hpp"
#include "chronocalc/semigroup.hpp"

namespace chronocalc {

namespace {

// Canonicalize one term: ascending-time sort (stable, preserving the
// operand order of equal-time factors) then in-order merge of equal times.
void canonicalize_term(TimeOrderedTerm& term) {
    std::stable_sort(term.factors.begin(), term.factors.end(),
                     [](const TimeFactor& x, const TimeFactor& y) { return x.time < y.time; });
    std::vector<TimeFactor> merged;
    for (auto& f : term.factors) {
        if (!merged.empty() && merged.back().time == f.time)
            merged.back().matrix = merged.back().matrix * f.matrix;
        else
            merged.push_back(std::move(f));
    }
    term.factors = std::move(merged);
}

}  // namespace

void TimeOrderedExpr::add_term(TimeOrderedTerm term) {
    for (const auto& f : term.factors)
        if (f.matrix.dim() != dim_)
            throw std::invalid_argument("TimeOrderedExpr: factor dimension mismatch");
    canonicalize_term(term);
    terms_.push_back(std::move(term));
}

TimeOrderedExpr& TimeOrderedExpr::operator+=(const TimeOrderedExpr& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("TimeOrderedExpr: dimension mismatch");
    for (const auto& t : rhs.terms_) terms_.push_back(t);
    return *this;
}

TimeOrderedExpr& TimeOrderedExpr::operator-=(const TimeOrderedExpr& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("TimeOrderedExpr: dimension mismatch");
    for (auto t : rhs.terms_) {
        t.coeff = -t.coeff;
        terms_.push_back(std::move(t));
    }
    return *this;
}

TimeOrderedExpr& TimeOrderedExpr::operator*=(Complex s) {
    for (auto& t : terms_) t.coeff *= s;
    return *this;
}

bool operator==(const TimeOrderedExpr& x, const TimeOrderedExpr& y) {
    if (x.dim_ != y.dim_ || x.terms_.size() != y.terms_.size()) return false;
    for (std::size_t i = 0; i < x.terms_.size(); ++i) {
        const auto& tx = x.terms_[i];
        const auto& ty = y.terms_[i];
        if (tx.coeff != ty.coeff || tx.factors.size() != ty.factors.size()) return false;
        for (std::size_t k = 0; k < tx.factors.size(); ++k) {
            if (tx.factors[k].time != ty.factors[k].time) return false;
            if (tx.factors[k].matrix.entries() != ty.factors[k].matrix.entries()) return false;
        }
    }
    return true;
}

TimeOrderedExpr operator+(TimeOrderedExpr lhs, const TimeOrderedExpr& rhs) { return lhs += rhs; }
TimeOrderedExpr operator-(TimeOrderedExpr lhs, const TimeOrderedExpr& rhs) { return lhs -= rhs; }

TimeOrderedExpr lift(double t, const ComplexMatrix& m, double a, double b) {
    if (!(a <= t && t <= b))
        throw std::domain_error("lift: time tag outside the expression interval");
    TimeOrderedExpr e(m.dim(), a, b);
    TimeOrderedTerm term;
    term.coeff = 1.0;
    term.factors.push_back(TimeFactor{t, m});
    e.add_term(std::move(term));
    return e;
}

TimeOrderedExpr expr_mul(const TimeOrderedExpr& x, const TimeOrderedExpr& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("expr_mul: dimension mismatch");
    TimeOrderedExpr out(x.dim(), std::min(x.interval_a(), y.interval_a()),
                        std::max(x.interval_b(), y.interval_b()));
    for (const auto& tx : x.terms()) {
        for (const auto& ty : y.terms()) {
            TimeOrderedTerm t;
            t.coeff = tx.coeff * ty.coeff;
            t.factors = tx.factors;
            t.factors.insert(t.factors.end(), ty.factors.begin(), ty.factors.end());
            out.add_term(std::move(t));
        }
    }
    return out;
}

TimeOrderedExpr operator*(const TimeOrderedExpr& x, const TimeOrderedExpr& y) {
    return expr_mul(x, y);
}

TimeOrderedExpr exchange(const TimeOrderedExpr& x, double t, double t2) {
    TimeOrderedExpr out(x.dim(), x.interval_a(), x.interval_b());
    for (auto term : x.terms()) {
        for (auto& f : term.factors) {
            if (f.time == t)
                f.time = t2;
            else if (f.time == t2)
                f.time = t;
        }
        out.add_term(std::move(term));
    }
    return out;
}

ComplexMatrix disentangle(const TimeOrderedExpr& x) {
    ComplexMatrix sum(x.dim());
    for (const auto& term : x.terms()) {
        ComplexMatrix prod = ComplexMatrix::identity(x.dim());
        // factors stored ascending; multiply latest-first
        for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it)
            prod = prod * it->matrix;
        sum += term.coeff * prod;
    }
    return sum;
}

namespace {

// k-fold simplex term int_{0<s_k<...<s_1<1} e^{(1-s_1)A} B ... B e^{s_k A} ds,
// nested Gauss-Legendre. left carries e^{(1-s_j)A}...B up to depth j.
ComplexMatrix expansional_term(const ComplexMatrix& a, const ComplexMatrix& b, int k,
                               std::size_t nodes, const ComplexMatrix& left, double upper,
                               int depth) {
    const std::size_t n = a.dim();
    ComplexMatrix acc(n);
    const GaussLegendre rule = gauss_legendre_on(nodes, 0.0, upper);
    for (std::size_t q = 0; q < nodes; ++q) {
        const double s = rule.nodes[q];
        // segment exponential between the previous time and s
        const ComplexMatrix seg = expm(Complex(upper - s) * a);
        ComplexMatrix chain = left * seg * b;
        ComplexMatrix inner;
        if (depth == k)
            inner = chain * expm(Complex(s) * a);
        else
            inner = expansional_term(a, b, k, nodes, chain, s, depth + 1);
        acc += Complex(rule.weights[q]) * inner;
    }
    return acc;
}

}  // namespace

ExpansionalResult expansional_expand(const ComplexMatrix& a, const ComplexMatrix& b, int order,
                                     std::size_t quad_nodes) {
    if (order < 0 || order > 3)
        throw std::domain_error("expansional_expand: order must be in {0,1,2,3}");
    if (quad_nodes < 8) throw std::domain_error("expansional_expand: need quad_nodes >= 8");

    auto eval = [&](std::size_t nodes) {
        ComplexMatrix total = expm(a);
        const ComplexMatrix id = ComplexMatrix::identity(a.dim());
        for (int k = 1; k <= order; ++k) total += expansional_term(a, b, k, nodes, id, 1.0, 1);
        return total;
    };

    ExpansionalResult res;
    res.value = eval(quad_nodes);
    const ComplexMatrix coarse = eval(quad_nodes / 2);
    res.quad_error = operator_norm(res.value - coarse);
    return res;
}

}  // namespace chronocalc
