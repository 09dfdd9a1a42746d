#include "chronocalc/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "chronocalc/quadrature.hpp"
#include "chronocalc/random.hpp"
#include "chronocalc/semigroup.hpp"

namespace chronocalc {

ComplexMatrix q_integral(const GeneratorFamily& f, double t, double tol) {
    if (!(f.a <= t && t <= f.b)) throw std::domain_error("q_integral: t outside family interval");
    return hk_integrate(f, f.a, t, tol).value;
}

ComplexMatrix propagate(const GeneratorFamily& f, double t, std::size_t n) {
    if (n == 0) throw std::domain_error("propagate: need n >= 1");
    const double dt = (t - f.a) / double(n);
    ComplexMatrix u = ComplexMatrix::identity(f.dim);
    for (std::size_t j = 1; j <= n; ++j) {
        const double tau = f.a + (double(j) - 0.5) * dt;
        u = expm(Complex(dt) * f.eval(tau)) * u;
    }
    return u;
}

ComplexMatrix propagate_richardson(const GeneratorFamily& f, double t, std::size_t n) {
    return 2.0 * propagate(f, t, 2 * n) - propagate(f, t, n);
}

double commutativity_defect(const GeneratorFamily& f, std::size_t samples) {
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double s = f.a + (f.b - f.a) * (double(i) + 0.5) / double(samples);
        const ComplexMatrix as = f.eval(s);
        for (std::size_t j = i + 1; j < samples; ++j) {
            const double sp = f.a + (f.b - f.a) * (double(j) + 0.5) / double(samples);
            const ComplexMatrix asp = f.eval(sp);
            worst = std::max(worst, operator_norm(as * asp - asp * as));
        }
    }
    return worst;
}

ComplexMatrix Propagator::at(double t) const {
    switch (method) {
        case PropagatorMethod::ProductIntegral:
            return propagate(family, t, resolution);
        case PropagatorMethod::ExpmOfQ: {
            if (commutativity_defect(family) > 1e-12)
                throw std::domain_error(
                    "Propagator: expm_of_Q requires a commuting family "
                    "(sampled commutator exceeds 1e-12)");
            return expm(q_integral(family, t, 1e-10));
        }
        case PropagatorMethod::Dyson: {
            const DysonResult d = dyson_expand(family, t, 2, 1.0, 16);
            return d.partial_sum + d.remainder;
        }
    }
    throw std::logic_error("Propagator: unknown method");
}

double ode_defect(const GeneratorFamily& f, double t, std::size_t n) {
    const double h = (f.b - f.a) / 4096.0;
    if (!(f.a < t - h && t + h < f.b))
        throw std::domain_error("ode_defect: t must be interior to the family interval");
    const ComplexMatrix up = propagate(f, t + h, n);
    const ComplexMatrix um = propagate(f, t - h, n);
    const ComplexMatrix u = propagate(f, t, n);
    const ComplexMatrix lhs = Complex(1.0 / (2.0 * h)) * (up - um);
    return operator_norm(lhs - f.eval(t) * u);
}

namespace {

ComplexMatrix dyson_term_rec(const GeneratorFamily& f, double lower, double upper, int k,
                             int depth, std::size_t nodes) {
    const GaussLegendre rule = gauss_legendre_on(nodes, lower, upper);
    ComplexMatrix acc(f.dim);
    for (std::size_t q = 0; q < nodes; ++q) {
        const double s = rule.nodes[q];
        ComplexMatrix val = f.eval(s);
        if (depth < k) val = val * dyson_term_rec(f, lower, s, k, depth + 1, nodes);
        acc += Complex(rule.weights[q]) * val;
    }
    return acc;
}

}  // namespace

ComplexMatrix dyson_term(const GeneratorFamily& f, double t, int k, std::size_t quad_nodes) {
    if (k < 1 || k > 4) throw std::domain_error("dyson_term: k must be in 1..4");
    if (std::pow(double(quad_nodes), k) > 2.0e7)
        throw std::range_error("dyson_term: nodes^k exceeds the cost budget");
    return dyson_term_rec(f, f.a, t, k, 1, quad_nodes);
}

namespace {

// Cumulative product-integral propagators of the xi-scaled family on a fine
// uniform grid, with fractional-slice evaluation at arbitrary times.
class CumulativePropagator {
public:
    CumulativePropagator(const GeneratorFamily& f, double t, Complex scale, std::size_t slices)
        : f_(f), a_(f.a), dt_((t - f.a) / double(slices)), scale_(scale) {
        const std::size_t d = f.dim;
        fwd_.reserve(slices + 1);
        inv_.reserve(slices + 1);
        fwd_.push_back(ComplexMatrix::identity(d));
        inv_.push_back(ComplexMatrix::identity(d));
        for (std::size_t k = 0; k < slices; ++k) {
            const double mid = a_ + (double(k) + 0.5) * dt_;
            const ComplexMatrix g = expm(scale_ * Complex(dt_) * f_.eval(mid));
            const ComplexMatrix ginv = expm(-scale_ * Complex(dt_) * f_.eval(mid));
            fwd_.push_back(g * fwd_.back());
            inv_.push_back(inv_.back() * ginv);
        }
    }

    // U(s, a)
    ComplexMatrix forward(double s) const {
        const auto [k, rem] = split(s);
        if (rem == 0.0) return fwd_[k];
        const double mid = a_ + double(k) * dt_ + 0.5 * rem;
        return expm(scale_ * Complex(rem) * f_.eval(mid)) * fwd_[k];
    }

    // U(s, a)^{-1}
    ComplexMatrix backward(double s) const {
        const auto [k, rem] = split(s);
        if (rem == 0.0) return inv_[k];
        const double mid = a_ + double(k) * dt_ + 0.5 * rem;
        return inv_[k] * expm(-scale_ * Complex(rem) * f_.eval(mid));
    }

private:
    std::pair<std::size_t, double> split(double s) const {
        double pos = (s - a_) / dt_;
        auto k = std::size_t(std::max(0.0, std::floor(pos)));
        if (k >= fwd_.size() - 1) k = fwd_.size() - 2;
        double rem = s - (a_ + double(k) * dt_);
        if (rem < 1e-14 * dt_) rem = 0.0;
        return {k, rem};
    }

    const GeneratorFamily& f_;
    double a_;
    double dt_;
    Complex scale_;
    std::vector<ComplexMatrix> fwd_;
    std::vector<ComplexMatrix> inv_;
};

// int_{a<s_{n+1}<...<s_1<t} B(s_1) ... B(s_{n+1}) ds with memoized
// B(s) = U^xi(s,a)^{-1} A(s) U^xi(s,a).
class SimplexChain {
public:
    SimplexChain(const GeneratorFamily& f, const CumulativePropagator& cum, Complex coupling)
        : f_(f), cum_(cum), coupling_(coupling) {}

    ComplexMatrix integrate(double lower, double upper, int depth_left, std::size_t nodes) {
        const GaussLegendre rule = gauss_legendre_on(nodes, lower, upper);
        ComplexMatrix acc(f_.dim);
        for (std::size_t q = 0; q < nodes; ++q) {
            const double s = rule.nodes[q];
            ComplexMatrix val = conjugated(s);
            if (depth_left > 1) val = val * integrate(lower, s, depth_left - 1, nodes);
            acc += Complex(rule.weights[q]) * val;
        }
        return acc;
    }

private:
    const ComplexMatrix& conjugated(double s) {
        auto it = cache_.find(s);
        if (it == cache_.end()) {
            ComplexMatrix b = cum_.backward(s) * (coupling_ * f_.eval(s)) * cum_.forward(s);
            it = cache_.emplace(s, std::move(b)).first;
        }
        return it->second;
    }

    const GeneratorFamily& f_;
    const CumulativePropagator& cum_;
    Complex coupling_;
    std::map<double, ComplexMatrix> cache_;
};

ComplexMatrix dyson_remainder(const GeneratorFamily& f, double t, int n, double w,
                              std::size_t nodes, std::size_t prop_resolution) {
    const GaussLegendre xi_rule = gauss_legendre_on(nodes, 0.0, w);
    ComplexMatrix acc(f.dim);
    for (std::size_t q = 0; q < nodes; ++q) {
        const double xi = xi_rule.nodes[q];
        CumulativePropagator cum(f, t, Complex(xi), prop_resolution);
        SimplexChain chain(f, cum, Complex(1.0));
        const ComplexMatrix simplex = chain.integrate(f.a, t, n + 1, nodes);
        const double poly = std::pow(w - xi, n);
        acc += Complex(xi_rule.weights[q] * poly) * (cum.forward(t) * simplex);
    }
    return double(n + 1) * acc;
}

}  // namespace

DysonResult dyson_expand(const GeneratorFamily& f, double t, int n, double w,
                         std::size_t quad_nodes, std::size_t prop_resolution) {
    if (n < 0 || n > 3) throw std::domain_error("dyson_expand: order must be in 0..3");
    if (std::pow(double(quad_nodes), n + 2) > 2.0e7)
        throw std::range_error("dyson_expand: nodes^(n+2) exceeds the cost budget");

    DysonResult res;
    res.order = n;
    res.w = w;
    res.partial_sum = ComplexMatrix::identity(f.dim);
    for (int k = 1; k <= n; ++k)
        res.partial_sum += Complex(std::pow(w, k)) * dyson_term(f, t, k, quad_nodes);
    res.remainder = dyson_remainder(f, t, n, w, quad_nodes, prop_resolution);

    // Error estimate: node refinement for the quadratures, slice refinement
    // for the propagator consistency; both with a safety factor.
    const std::size_t coarse_nodes = std::max<std::size_t>(6, quad_nodes / 2);
    const ComplexMatrix rem_coarse =
        dyson_remainder(f, t, n, w, coarse_nodes, prop_resolution / 2);
    const GeneratorFamily fw = scaled_family(f, Complex(w));
    const ComplexMatrix u_fine = propagate(fw, t, prop_resolution);
    const ComplexMatrix u_coarse = propagate(fw, t, prop_resolution / 2);
    res.quad_error =
        2.0 * operator_norm(res.remainder - rem_coarse) + 2.0 * operator_norm(u_fine - u_coarse);
    return res;
}

ComplexMatrix trotter(const ComplexMatrix& a, const ComplexMatrix& b, double t, std::size_t n) {
    if (n == 0) throw std::domain_error("trotter: need n >= 1");
    const Complex step(t / double(n));
    const ComplexMatrix factor = expm(step * a) * expm(step * b);
    if ((n & (n - 1)) == 0) {
        ComplexMatrix r = factor;
        for (std::size_t m = n; m > 1; m >>= 1) r = r * r;
        return r;
    }
    ComplexMatrix r = ComplexMatrix::identity(a.dim());
    for (std::size_t j = 0; j < n; ++j) r = r * factor;
    return r;
}

ComplexMatrix generalized_trotter_kato(const GeneratorFamily& fa, const GeneratorFamily& fb,
                                       double t, std::size_t n, bool exact_schedule) {
    if (n == 0) throw std::domain_error("generalized_trotter_kato: need n >= 1");
    if (fa.dim != fb.dim)
        throw std::invalid_argument("generalized_trotter_kato: dimension mismatch");
    const double tp =
        exact_schedule ? t : t * (1.0 - 1e-10 * std::exp(-double(n + 1) * double(n + 1)));
    const Complex step(t / double(n));
    ComplexMatrix u = ComplexMatrix::identity(fa.dim);
    for (std::size_t j = 1; j <= n; ++j) {
        const ComplexMatrix ea = expm(step * fa.eval(double(j) * t / double(n)));
        const ComplexMatrix eb = expm(step * fb.eval(double(j) * tp / double(n)));
        u = (ea * eb) * u;
    }
    return u;
}

InteractionPicture interaction_rep(const GeneratorFamily& h0, const GeneratorFamily& h1,
                                   double t, std::size_t n, double hbar) {
    if (n == 0) throw std::domain_error("interaction_rep: need n >= 1");
    if (h0.dim != h1.dim) throw std::invalid_argument("interaction_rep: dimension mismatch");
    for (double s : {h0.a, 0.5 * (h0.a + t), t})
        if (!is_hermitian(h0.eval(s), 1e-10) || !is_hermitian(h1.eval(s), 1e-10))
            throw std::domain_error(
                "interaction_rep: (i/hbar)H must be skew-Hermitian, i.e. H Hermitian");

    const Complex gen(0.0, -1.0 / hbar);  // -i/hbar
    const GeneratorFamily g0 = scaled_family(h0, gen);
    const double a = h0.a;
    const double dt = (t - a) / double(n);

    auto u0_to = [g0, a, dt](double s) {
        // product integral of g0 from a to s on the shared slice grid
        ComplexMatrix u = ComplexMatrix::identity(g0.dim);
        double lo = a;
        while (lo + dt <= s + 1e-15 * dt) {
            u = expm(Complex(dt) * g0.eval(lo + 0.5 * dt)) * u;
            lo += dt;
        }
        if (s - lo > 1e-14 * dt) u = expm(Complex(s - lo) * g0.eval(0.5 * (lo + s))) * u;
        return u;
    };

    InteractionPicture pic;
    pic.a_interaction = [u0_to, h1](double s) {
        const ComplexMatrix u0 = u0_to(s);
        return u0.adjoint() * h1.eval(s) * u0;  // U0(a,s) H1(s) U0(s,a), U0 unitary
    };

    GeneratorFamily h0c = h0, h1c = h1;
    pic.evolve = [h0c, h1c, t, n, hbar, a, dt, gen](const Vector& phi) {
        // i hbar Psi' = A_I Psi via the same product-integral scheme;
        // U0 accumulated incrementally along the slice midpoints.
        const GeneratorFamily g0i = scaled_family(h0c, gen);
        Vector psi = phi;
        ComplexMatrix u0 = ComplexMatrix::identity(h0c.dim);  // U0(t_j, a)
        for (std::size_t j = 1; j <= n; ++j) {
            const double mid = a + (double(j) - 0.5) * dt;
            const ComplexMatrix u0_mid =
                expm(Complex(0.5 * dt) * g0i.eval(a + (double(j) - 0.75) * dt)) * u0;
            const ComplexMatrix a_i = u0_mid.adjoint() * h1c.eval(mid) * u0_mid;
            psi = expm(gen * Complex(dt) * a_i) * psi;
            u0 = expm(Complex(dt) * g0i.eval(mid)) * u0;
        }
        return psi;
    };
    return pic;
}

Vector semilinear_mild(const GeneratorFamily& f,
                       const std::function<Vector(double, const Vector&)>& rhs, const Vector& u_a,
                       double t, std::size_t n, int max_picard, double tol) {
    if (n < 16) throw std::domain_error("semilinear_mild: need n >= 16");
    const double a = f.a;
    const double dt = (t - a) / double(n);

    // slice propagators at midpoints; cumulative U(t_i, a)
    std::vector<ComplexMatrix> slice(n + 1, ComplexMatrix::identity(f.dim));
    std::vector<ComplexMatrix> ucum(n + 1, ComplexMatrix::identity(f.dim));
    for (std::size_t j = 1; j <= n; ++j) {
        slice[j] = expm(Complex(dt) * f.eval(a + (double(j) - 0.5) * dt));
        ucum[j] = slice[j] * ucum[j - 1];
    }

    std::vector<Vector> u(n + 1);
    for (std::size_t i = 0; i <= n; ++i) u[i] = ucum[i] * u_a;

    std::vector<double> residuals;
    for (int it = 0; it < max_picard; ++it) {
        std::vector<Vector> fval(n + 1);
        for (std::size_t i = 0; i <= n; ++i) fval[i] = rhs(a + double(i) * dt, u[i]);

        std::vector<Vector> next(n + 1);
        next[0] = u_a;
        Vector running(f.dim);  // R_i; trapezoid interior weights via recurrence
        double resid = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            Vector seed = (i == 1) ? Complex(0.5) * fval[0] : running + fval[i - 1];
            running = slice[i] * seed;
            next[i] = ucum[i] * u_a + Complex(dt) * (running + Complex(0.5) * fval[i]);
            resid = std::max(resid, (next[i] - u[i]).norm());
        }
        u = std::move(next);
        residuals.push_back(resid);
        if (resid < tol) return u[n];
    }
    throw PicardFailure("semilinear_mild: Picard iteration did not contract to tol",
                        std::move(residuals));
}

RelativeBoundReport relative_bound_check(const ComplexMatrix& q0, const ComplexMatrix& q1,
                                         double alpha, double beta, std::size_t samples,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RelativeBoundReport rep;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        const Vector x = random_unit_vector(q0.dim(), rng);
        const double margin = alpha * (q0 * x).norm() + beta * x.norm() - (q1 * x).norm();
        rep.worst_margin = std::min(rep.worst_margin, margin);
    }
    rep.holds = rep.worst_margin >= 0.0;
    return rep;
}

}  // namespace chronocalc
