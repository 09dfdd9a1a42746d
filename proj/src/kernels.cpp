#include "chronocalc/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "chronocalc/bessel.hpp"

namespace chronocalc {

Grid1D Grid1D::make(double extent, std::size_t count) {
    if (count < 2) throw std::domain_error("Grid1D: need at least two points");
    Grid1D g;
    g.extent = extent;
    g.spacing = 2.0 * extent / double(count - 1);
    g.points.resize(count);
    for (std::size_t i = 0; i < count; ++i) g.points[i] = -extent + double(i) * g.spacing;
    return g;
}

KernelFunction heat_kernel(double kappa) {
    KernelFunction k;
    k.name = "heat";
    k.singular_set = "t <= s";
    k.branch_rule = "none";
    k.one_sided = true;
    k.eval = [kappa](double x, double t, double y, double s) -> Complex {
        if (!(t > s)) throw std::domain_error("heat_kernel: requires t > s");
        const double dt = t - s;
        const double d = x - y;
        return std::exp(-d * d / (4.0 * kappa * dt)) / std::sqrt(4.0 * M_PI * kappa * dt);
    };
    return k;
}

KernelFunction schrodinger_free_kernel(double m, double hbar) {
    KernelFunction k;
    k.name = "schrodinger_free";
    k.singular_set = "t = s";
    k.branch_rule = "principal square root";
    k.oscillatory = true;
    k.eval = [m, hbar](double x, double t, double y, double s) -> Complex {
        const double dt = t - s;
        if (dt == 0.0) throw std::domain_error("schrodinger_free_kernel: singular at t = s");
        const double d = x - y;
        const Complex pref = std::sqrt(Complex(m) / (Complex(0.0, 2.0 * M_PI * hbar * dt)));
        return pref * std::exp(Complex(0.0, m * d * d / (2.0 * hbar * dt)));
    };
    return k;
}

KernelFunction mehler_kernel(double m, double omega, double hbar) {
    KernelFunction k;
    k.name = "mehler";
    k.singular_set = "caustics t - s = k pi / Omega";
    k.branch_rule = "principal square root";
    k.oscillatory = true;
    k.eval = [m, omega, hbar](double x, double t, double y, double s) -> Complex {
        const double dt = t - s;
        const double sn = std::sin(omega * dt);
        if (std::abs(sn) < 1e-12)
            throw std::domain_error("mehler_kernel: singular at a caustic time");
        const double cs = std::cos(omega * dt);
        const Complex pref =
            std::sqrt(Complex(m * omega) / (Complex(0.0, 2.0 * M_PI * hbar * sn)));
        const double phase = m * omega / (2.0 * hbar * sn) * ((x * x + y * y) * cs - 2.0 * x * y);
        return pref * std::exp(Complex(0.0, phase));
    };
    return k;
}

LightConeRegion classify_interval(double x, double t, double y, double c) {
    const double r = std::abs(x - y);
    const double q = c * c * t * t - r * r;
    if (q == 0.0) return LightConeRegion::LightCone;
    if (q < 0.0) return LightConeRegion::Spacelike;
    return t > 0.0 ? LightConeRegion::TimelikeFuture : LightConeRegion::TimelikePast;
}

KernelFunction sqrt_relativistic_kernel(double mu, double c) {
    KernelFunction k;
    k.name = "sqrt_relativistic";
    k.singular_set = "light cone c^2 t^2 = ||x-y||^2";
    k.branch_rule = "spacelike -> K2; timelike t>0 -> H2^(2); timelike t<0 -> -H2^(1)";
    k.eval = [mu, c](double x, double t, double y, double s) -> Complex {
        if (s != 0.0)
            throw std::domain_error("sqrt_relativistic_kernel: defined against s = 0");
        const double r = std::abs(x - y);
        const double q = c * c * t * t - r * r;
        const Complex scale(c * t * mu * mu / (4.0 * M_PI));
        switch (classify_interval(x, t, y, c)) {
            case LightConeRegion::LightCone:
                throw std::domain_error("sqrt_relativistic_kernel: singular on the light cone");
            case LightConeRegion::Spacelike: {
                const double arg = mu * std::sqrt(-q);
                return scale * Complex(0.0, -2.0) * bessel_k2(arg) / (M_PI * (-q));
            }
            case LightConeRegion::TimelikeFuture: {
                const double arg = mu * std::sqrt(q);
                return scale * hankel_h2_2(arg) / Complex(q);
            }
            case LightConeRegion::TimelikePast: {
                const double arg = mu * std::sqrt(q);
                return scale * (-hankel_h2_1(arg)) / Complex(q);
            }
        }
        throw std::logic_error("sqrt_relativistic_kernel: unreachable");
    };
    return k;
}

const ComplexMatrix& dirac_beta() {
    static const ComplexMatrix beta(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1});
    return beta;
}

KernelFunction with_vector_potential_phase(const KernelFunction& k, double e, double a_pot,
                                           double hbar, double c) {
    KernelFunction out = k;
    out.name = k.name + "+vector_potential_phase";
    auto base = k.eval;
    out.eval = [base, e, a_pot, hbar, c](double x, double t, double y, double s) {
        const double phase = e * (x - y) * a_pot / (2.0 * hbar * c);
        return std::exp(Complex(0.0, phase)) * base(x, t, y, s);
    };
    return out;
}

namespace {

// Smooth edge taper: 1 on |z| <= z0, Gaussian roll-off beyond.
double edge_taper(double z, double z0, double sigma) {
    const double excess = std::abs(z) - z0;
    if (excess <= 0.0) return 1.0;
    return std::exp(-0.5 * excess * excess / (sigma * sigma));
}

double composition_defect(const KernelFunction& k, double t, double tau, double s,
                          const Grid1D& grid, double compare_extent, double taper_start) {
    const double sigma = std::max(0.25 * (grid.extent - taper_start), 1e-9);
    // comparison points: a coarse sample of the window (the z-integration
    // runs over the full grid)
    std::vector<double> xs;
    for (std::size_t i = 0; i < 25; ++i)
        xs.push_back(-compare_extent + 2.0 * compare_extent * double(i) / 24.0);
    double worst = 0.0;
    for (double x : xs) {
        for (double y : xs) {
            Complex acc = 0.0;
            for (std::size_t iz = 0; iz < grid.points.size(); ++iz) {
                const double z = grid.points[iz];
                double w = grid.spacing;
                if (iz == 0 || iz + 1 == grid.points.size()) w *= 0.5;
                if (k.oscillatory) w *= edge_taper(z, taper_start, sigma);
                acc += w * k.eval(x, t, z, tau) * k.eval(z, tau, y, s);
            }
            worst = std::max(worst, std::abs(acc - k.eval(x, t, y, s)));
        }
    }
    return worst;
}

}  // namespace

CompositionReport compose(const KernelFunction& k, double t, double tau, double s,
                          const Grid1D& grid, double compare_extent) {
    if (k.one_sided && !(s < tau && tau < t))
        throw std::domain_error("compose: need s < tau < t for a one-sided kernel");
    CompositionReport rep;
    const double z0 = 0.6 * grid.extent;
    rep.max_defect = composition_defect(k, t, tau, s, grid, compare_extent, z0);
    if (k.oscillatory) {
        const double wide = composition_defect(k, t, tau, s, grid, compare_extent,
                                               0.75 * grid.extent);
        rep.window_bias = std::abs(rep.max_defect - wide);
    }
    return rep;
}

namespace {

// In-place iterative radix-2 DFT with the e^{-2 pi i jq/M} convention.
void fft_pow2(std::vector<Complex>& a) {
    const std::size_t m = a.size();
    for (std::size_t i = 1, j = 0; i < m; ++i) {
        std::size_t bit = m >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= m; len <<= 1) {
        const double ang = -2.0 * M_PI / double(len);
        const Complex wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < m; i += len) {
            Complex w(1.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

}  // namespace

SymbolKernelResult symbol_to_kernel(const std::function<Complex(double, double)>& symbol,
                                    double t, double hbar, const Grid1D& grid, bool damp_eta) {
    const std::size_t n = grid.points.size();
    if ((n & (n - 1)) != 0)
        throw std::invalid_argument("symbol_to_kernel: grid count must be a power of two");
    const double h = grid.spacing;
    // eta-grid dual to the pair-difference grid: 2n nodes, period 2nh in
    // x - y, so no pair of grid points aliases
    const std::size_t m = 2 * n;
    const double deta = M_PI / (double(n) * h);
    std::vector<double> etas(m);
    for (std::size_t q = 0; q < m; ++q) etas[q] = (double(q) - double(n)) * deta;

    // optional smooth edge taper for symbols without eta-decay
    // (Fresnel-type); flat on the bulk so decaying symbols are untouched
    const double eta_flat = 0.6 * double(n) * deta;
    const double eta_sigma = 0.15 * double(n) * deta;
    auto taper = [&](double eta) {
        if (!damp_eta) return 1.0;
        const double excess = std::abs(eta) - eta_flat;
        return excess <= 0.0 ? 1.0 : std::exp(-0.5 * excess * excess / (eta_sigma * eta_sigma));
    };

    SymbolKernelResult res;
    res.samples.assign(n * n, Complex(0.0));
    double tail = 0.0;
    const double x0 = grid.points.front();
    std::vector<Complex> v(m);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = grid.points[i];
        for (std::size_t q = 0; q < m; ++q) {
            const Complex w = std::exp(Complex(0.0, -t / hbar) * symbol(x, etas[q]));
            if (std::abs(etas[q]) >= eta_flat) tail = std::max(tail, std::abs(w));
            v[q] = w * taper(etas[q]) * std::exp(Complex(0.0, (x - x0) * etas[q]));
        }
        fft_pow2(v);
        for (std::size_t j = 0; j < n; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            res.samples[i * n + j] = v[j] * (sign * deta / (2.0 * M_PI));
        }
    }
    res.tail_estimate = tail;
    return res;
}

SymbolClassReport symbol_class_check(const std::function<Complex(double, double)>& symbol,
                                     double order, double bound_constant, double x_extent,
                                     double eta_extent, std::size_t samples) {
    SymbolClassReport rep;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = -x_extent + 2.0 * x_extent * double(i) / double(samples - 1);
        for (std::size_t q = 0; q < samples; ++q) {
            const double eta = -eta_extent + 2.0 * eta_extent * double(q) / double(samples - 1);
            const double bound = bound_constant * std::pow(1.0 + std::abs(eta), order);
            rep.worst_ratio = std::max(rep.worst_ratio, std::abs(symbol(x, eta)) / bound);
        }
    }
    rep.holds = rep.worst_ratio <= 1.0;
    return rep;
}

std::vector<Complex> apply_kernel(const KernelFunction& k, double t, double s, const Grid1D& grid,
                                  const std::vector<Complex>& phi) {
    const std::size_t n = grid.points.size();
    if (phi.size() != n) throw std::invalid_argument("apply_kernel: data size mismatch");
    std::vector<Complex> out(n, Complex(0.0));
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double w = grid.spacing;
            if (j == 0 || j + 1 == n) w *= 0.5;
            acc += w * k.eval(grid.points[i], t, grid.points[j], s) * phi[j];
        }
        out[i] = acc;
    }
    return out;
}

}  // namespace chronocalc
