#include "chronocalc/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace chronocalc {

double TaggedPartition::mesh() const {
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < endpoints.size(); ++i)
        m = std::max(m, endpoints[i + 1] - endpoints[i]);
    return m;
}

CousinFailure::CousinFailure(double lo_, double hi_, int depth_)
    : std::runtime_error("cousin: no delta-fine cover of [" + std::to_string(lo_) + ", " +
                         std::to_string(hi_) + "] within depth " + std::to_string(depth_)),
      lo(lo_), hi(hi_), depth(depth_) {}

namespace {

void cousin_rec(const Gauge& g, double lo, double hi, int depth, int max_depth,
                TaggedPartition& out) {
    const double tau = 0.5 * (lo + hi);
    const double d = g.delta(tau);
    if (!(d > 0.0)) throw std::domain_error("cousin: gauge must be strictly positive");
    // radius test written exactly as is_fine checks it, so construction and
    // validation cannot disagree by an ulp
    if (std::abs(lo - tau) < d && std::abs(hi - tau) < d) {
        out.tags.push_back(tau);
        out.endpoints.push_back(hi);
        return;
    }
    if (depth >= max_depth) throw CousinFailure(lo, hi, depth);
    cousin_rec(g, lo, tau, depth + 1, max_depth, out);
    cousin_rec(g, tau, hi, depth + 1, max_depth, out);
}

}  // namespace

TaggedPartition cousin(const Gauge& g, int max_depth) {
    if (!(g.a < g.b)) throw std::domain_error("cousin: need a < b");
    TaggedPartition p;
    p.endpoints.push_back(g.a);
    cousin_rec(g, g.a, g.b, 0, max_depth, p);
    if (!is_fine(p, g)) throw std::logic_error("cousin: constructed partition failed validation");
    return p;
}

bool is_fine(const TaggedPartition& p, const Gauge& g) {
    const std::size_t n = p.tags.size();
    if (p.endpoints.size() != n + 1 || n == 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = p.endpoints[i];
        const double hi = p.endpoints[i + 1];
        const double tau = p.tags[i];
        if (!(lo <= tau && tau <= hi && lo < hi)) return false;
        const double d = g.delta(tau);
        if (!(std::abs(lo - tau) < d && std::abs(hi - tau) < d)) return false;
    }
    return true;
}

ComplexMatrix riemann_sum(const GeneratorFamily& f, const TaggedPartition& p) {
    ComplexMatrix sum(f.dim);
    for (std::size_t i = 0; i < p.tags.size(); ++i) {
        const double dt = p.endpoints[i + 1] - p.endpoints[i];
        ComplexMatrix a = f.eval(p.tags[i]);
        if (!a.is_finite())
            throw std::domain_error("riemann_sum: family evaluation not finite at tag " +
                                    std::to_string(p.tags[i]));
        sum += Complex(dt) * a;
    }
    return sum;
}

namespace {

// Tags sitting on a declared discontinuity get shifted off it; the shift is
// far below the fineness slack of a midpoint tag and never leaves the
// tag's subinterval (jump-collapsed intervals can be narrower than the
// nominal 1e-13 shift).
void nudge_tags(TaggedPartition& p, const std::vector<double>& discontinuities,
                double a, double b) {
    if (discontinuities.empty()) return;
    const double eps = 1e-13 * (b - a);
    for (std::size_t i = 0; i < p.tags.size(); ++i) {
        const double lo = p.endpoints[i];
        const double hi = p.endpoints[i + 1];
        const double shift = std::min(eps, 0.25 * (hi - lo));
        for (double d : discontinuities) {
            if (std::abs(p.tags[i] - d) < 0.5 * shift)
                p.tags[i] = (d + shift <= hi) ? d + shift : d - shift;
        }
    }
}

}  // namespace

GaugeIntegralResult hk_integrate(const GeneratorFamily& f, double a, double b, double tol,
                                 int max_refinements) {
    if (!(a < b)) throw std::domain_error("hk_integrate: need a < b");
    if (!(tol > 0.0)) throw std::domain_error("hk_integrate: need tol > 0");

    // Declared jumps get a gauge that collapses toward them, so the
    // partition isolates each jump inside an interval of width ~2^-48(b-a)
    // and the straddling error sits at round-off from the first refinement.
    std::vector<double> jumps;
    for (double d : f.discontinuities)
        if (a < d && d < b) jumps.push_back(d);
    const double floor_width = std::ldexp(b - a, -48);
    auto make_gauge = [&](double delta) {
        if (jumps.empty()) return constant_gauge(a, b, delta);
        return Gauge{a, b, [delta, floor_width, jumps](double t) {
                         double dist = std::numeric_limits<double>::infinity();
                         for (double d : jumps) dist = std::min(dist, std::abs(t - d));
                         return std::min(delta, std::max(0.25 * dist, floor_width));
                     }};
    };

    GaugeIntegralResult res;
    std::vector<double> history;
    double delta = 0.25 * (b - a);
    ComplexMatrix prev;
    for (int it = 0; it < max_refinements; ++it, delta *= 0.5) {
        if ((b - a) / delta > 4.0e6)
            throw GaugeConvergenceFailure("hk_integrate: interval budget exhausted before tol",
                                          std::move(history));
        const Gauge g = make_gauge(delta);
        TaggedPartition p = cousin(g, 64);
        nudge_tags(p, f.discontinuities, a, b);
        ComplexMatrix sum = riemann_sum(f, p);
        res.partitions_used = it + 1;
        res.final_mesh = p.mesh();
        if (it > 0) {
            const double diff = operator_norm(sum - prev);
            history.push_back(diff);
            if (diff < tol) {
                res.value = sum;
                res.est_error = diff;
                return res;
            }
        }
        prev = std::move(sum);
    }
    throw GaugeConvergenceFailure("hk_integrate: no convergence to tol within refinement cap",
                                  std::move(history));
}

double strong_continuity_defect(const GeneratorFamily& f, const Vector& x,
                                const TaggedPartition& p) {
    if (std::abs(x.norm() - 1.0) > 1e-8)
        throw std::domain_error("strong_continuity_defect: x must be a unit vector");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.tags.size(); ++i) {
        const double dt = p.endpoints[i + 1] - p.endpoints[i];
        const Vector ax = f.eval(p.tags[i]) * x;
        const Complex c = dot(ax, x);
        Vector r = ax;
        for (std::size_t k = 0; k < r.dim(); ++k) r[k] -= c * x[k];
        const double nr = r.norm();
        sum += dt * nr * nr;
    }
    return sum;
}

}  // namespace chronocalc
