#include "chronocalc/pathsum.hpp"

#include <algorithm>
#include <cmath>

#include "chronocalc/evolution.hpp"
#include "chronocalc/gauge.hpp"
#include "chronocalc/random.hpp"
#include "chronocalc/semigroup.hpp"

namespace chronocalc {

MeasurementSchedule MeasurementSchedule::uniform(double t, std::size_t n) {
    MeasurementSchedule s;
    s.horizon = t;
    s.taus.resize(n);
    for (std::size_t j = 1; j <= n; ++j) s.taus[j - 1] = double(j) * t / double(n);
    return s;
}

std::vector<double> MeasurementSchedule::boundaries() const {
    const std::size_t n = taus.size();
    std::vector<double> b(n + 1);
    b[0] = 0.0;
    for (std::size_t j = 1; j < n; ++j) b[j] = 0.5 * (taus[j - 1] + taus[j]);
    b[n] = horizon;
    return b;
}

void MeasurementSchedule::validate() const {
    if (taus.empty()) throw std::domain_error("MeasurementSchedule: empty schedule");
    if (!(horizon > 0.0)) throw std::domain_error("MeasurementSchedule: horizon must be positive");
    if (!std::is_sorted(taus.begin(), taus.end()))
        throw std::domain_error("MeasurementSchedule: taus must increase");
    const auto b = boundaries();
    for (std::size_t j = 0; j < taus.size(); ++j)
        if (!(b[j] <= taus[j] && taus[j] <= b[j + 1]))
            throw std::domain_error("MeasurementSchedule: boundaries do not interleave taus");
}

ComplexMatrix u_schedule(const GeneratorFamily& f, const MeasurementSchedule& sched, double tol) {
    sched.validate();
    const auto b = sched.boundaries();
    ComplexMatrix u = ComplexMatrix::identity(f.dim);
    for (std::size_t j = 0; j < sched.taus.size(); ++j) {
        const ComplexMatrix m = hk_integrate(f, b[j], b[j + 1], tol).value;
        u = expm(m) * u;  // descending j leftmost
    }
    return u;
}

ComplexMatrix u_n(const GeneratorFamily& f, double t, std::size_t n, double tol) {
    if (n == 0) return ComplexMatrix::identity(f.dim);
    return u_schedule(f, MeasurementSchedule::uniform(t, n), tol);
}

namespace {

std::vector<double> poisson_weights(double lambda_t, std::size_t count) {
    std::vector<double> w(count);
    if (lambda_t < 700.0) {
        // upward recurrence from w_0 = e^{-lambda t}
        w[0] = std::exp(-lambda_t);
        for (std::size_t k = 1; k < count; ++k) w[k] = w[k - 1] * lambda_t / double(k);
    } else {
        // w_0 underflows; evaluate each weight in log space instead
        const double log_lt = std::log(lambda_t);
        for (std::size_t k = 0; k < count; ++k)
            w[k] = std::exp(double(k) * log_lt - lambda_t - std::lgamma(double(k) + 1.0));
    }
    return w;
}

}  // namespace

PathSumResult experimental_evolution(const GeneratorFamily& f, double t, double lambda,
                                     double tol, std::size_t term_budget, bool renormalize) {
    return experimental_evolution_sweep(f, t, {lambda}, tol, term_budget, renormalize).front();
}

std::vector<PathSumResult> experimental_evolution_sweep(const GeneratorFamily& f, double t,
                                                        const std::vector<double>& lambdas,
                                                        double tol, std::size_t term_budget,
                                                        bool renormalize) {
    std::size_t max_terms = 0;
    for (double lambda : lambdas) {
        if (!(lambda > 0.0))
            throw std::domain_error("experimental_evolution: lambda must be positive");
        const std::size_t terms = std::size_t(std::floor(lambda * t)) + 1;
        if (terms > term_budget)
            throw std::range_error("experimental_evolution: lambda*t exceeds the term budget");
        max_terms = std::max(max_terms, terms);
    }

    // U_n cache shared across the ladder; U_0 = I (blank film).
    std::vector<ComplexMatrix> un(max_terms);
    un[0] = ComplexMatrix::identity(f.dim);
    for (std::size_t n = 1; n < max_terms; ++n) un[n] = u_n(f, t, n, tol);

    std::vector<PathSumResult> out;
    out.reserve(lambdas.size());
    for (double lambda : lambdas) {
        PathSumResult r;
        r.lambda = lambda;
        r.terms_used = std::size_t(std::floor(lambda * t)) + 1;
        const auto w = poisson_weights(lambda * t, r.terms_used);
        ComplexMatrix acc(f.dim);
        double mass = 0.0;
        for (std::size_t n = 0; n < r.terms_used; ++n) {
            acc += Complex(w[n]) * un[n];
            mass += w[n];
        }
        if (renormalize) acc *= Complex(1.0 / mass);
        r.value = std::move(acc);
        r.poisson_deficit = 1.0 - mass;
        out.push_back(std::move(r));
    }
    return out;
}

ComplexMatrix expected_evolution_mc(const GeneratorFamily& f, double t, std::size_t n,
                                    std::size_t samples, std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    ComplexMatrix acc(f.dim);
    for (std::size_t s = 0; s < samples; ++s) {
        MeasurementSchedule sched;
        sched.horizon = t;
        sched.taus.resize(n);
        for (auto& tau : sched.taus) tau = 0.5 * (uniform_pm1(rng) + 1.0) * t;
        std::sort(sched.taus.begin(), sched.taus.end());
        acc += u_schedule(f, sched, tol);
    }
    return Complex(1.0 / double(samples)) * acc;
}

ComplexMatrix feynman_kac(const GeneratorFamily& f0, const GeneratorFamily& v, double t,
                          const Regularizer& reg, std::size_t n, Complex coupling) {
    if (f0.dim != v.dim) throw std::invalid_argument("feynman_kac: dimension mismatch");
    GeneratorFamily combined = f0;
    if (f0.continuity != v.continuity) combined.continuity = ContinuityClass::Piecewise;
    combined.discontinuities.insert(combined.discontinuities.end(), v.discontinuities.begin(),
                                    v.discontinuities.end());
    auto f0e = f0.eval;
    auto ve = v.eval;
    combined.eval = [f0e, ve, reg, coupling](double s) {
        ComplexMatrix vreg = reg.kind == RegularizerKind::Yosida
                                 ? yosida(ve(s), reg.parameter)
                                 : sqrt_cutoff(ve(s), reg.parameter);
        return f0e(s) + coupling * vreg;
    };
    return propagate(combined, t, n);
}

}  // namespace chronocalc
