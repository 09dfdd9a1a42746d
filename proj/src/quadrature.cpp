#include "chronocalc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace chronocalc {

namespace {

GaussLegendre build_rule(std::size_t n) {
    GaussLegendre r;
    r.nodes.resize(n);
    r.weights.resize(n);
    // Newton on P_n with Chebyshev-style initial guesses.
    for (std::size_t i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (double(i) + 0.75) / (double(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            if (n == 1) { p1 = x; }
            for (std::size_t k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * double(k) - 1.0) * x * p1 - (double(k) - 1.0) * p0) / double(k);
                p0 = p1;
                p1 = p2;
            }
            // p1 = P_n(x), p0 = P_{n-1}(x)
            pp = double(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[n - 1 - i] = x;  // ascending
        r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

}  // namespace

const GaussLegendre& gauss_legendre(std::size_t n) {
    static std::map<std::size_t, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

GaussLegendre gauss_legendre_on(std::size_t n, double lo, double hi) {
    const GaussLegendre& base = gauss_legendre(n);
    GaussLegendre r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < n; ++i) {
        r.nodes[i] = mid + half * base.nodes[i];
        r.weights[i] = half * base.weights[i];
    }
    return r;
}

}  // namespace chronocalc
