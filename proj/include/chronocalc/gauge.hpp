#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "chronocalc/family.hpp"
#include "chronocalc/matrix.hpp"

namespace chronocalc {

/// delta: [a,b] -> (0, inf) controlling how fine a tagged partition must
/// be near each tag.
struct Gauge {
    double a = 0.0;
    double b = 1.0;
    std::function<double(double)> delta;
};

inline Gauge constant_gauge(double a, double b, double d) {
    return Gauge{a, b, [d](double) { return d; }};
}

/// a = t_0 <= tau_1 <= t_1 <= ... <= tau_n <= t_n = b.
struct TaggedPartition {
    std::vector<double> endpoints;  // t_0 .. t_n
    std::vector<double> tags;       // tau_1 .. tau_n

    std::size_t intervals() const { return tags.size(); }
    double mesh() const;
};

/// Raised when recursive bisection cannot produce a delta-fine partition
/// within the depth cap; names the unresolved subinterval.
struct CousinFailure : std::runtime_error {
    CousinFailure(double lo_, double hi_, int depth_);
    double lo;
    double hi;
    int depth;
};

/// Constructive Cousin partition: an interval [u,v] is accepted with the
/// midpoint tag tau when (v-u)/2 < delta(tau), else bisected; depth capped.
/// The returned partition is validated delta-fine.
TaggedPartition cousin(const Gauge& g, int max_depth = 40);

/// Exact predicate: t_{i-1}, t_i in (tau_i - delta(tau_i), tau_i + delta(tau_i))
/// for every i (plus partition well-formedness).
bool is_fine(const TaggedPartition& p, const Gauge& g);

/// sum_i Dt_i * F(tau_i), accumulated in ascending index order.
ComplexMatrix riemann_sum(const GeneratorFamily& f, const TaggedPartition& p);

struct GaugeIntegralResult {
    ComplexMatrix value;
    int partitions_used = 0;
    double final_mesh = 0.0;
    double est_error = 0.0;  // operator norm of the last two Riemann sums' difference
};

struct GaugeConvergenceFailure : std::runtime_error {
    GaugeConvergenceFailure(const std::string& what, std::vector<double> history_)
        : std::runtime_error(what), history(std::move(history_)) {}
    std::vector<double> history;  // successive-difference norms
};

/// HK integral of F over [a,b]: gauges halve geometrically from
/// delta_0 = (b-a)/4 until successive Riemann sums differ by < tol in
/// operator norm. Tags landing on declared discontinuities of F are
/// nudged off by 1e-13*(b-a).
GaugeIntegralResult hk_integrate(const GeneratorFamily& f, double a, double b, double tol,
                                 int max_refinements = 24);

/// sum_k Dt_k * ||A(tau_k) x - <A(tau_k) x, x> x||^2 for a unit vector x.
double strong_continuity_defect(const GeneratorFamily& f, const Vector& x,
                                const TaggedPartition& p);

}  // namespace chronocalc
