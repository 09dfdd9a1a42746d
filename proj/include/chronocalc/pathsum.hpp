#pragma once

#include <cstdint>
#include <vector>

#include "chronocalc/family.hpp"
#include "chronocalc/matrix.hpp"

namespace chronocalc {

/// Measurement times 0 < tau_1 < ... < tau_n <= t with interval boundaries
/// t_0 = 0, t_j = (tau_j + tau_{j+1})/2, t_n = t.
struct MeasurementSchedule {
    std::vector<double> taus;
    double horizon = 0.0;  // t

    static MeasurementSchedule uniform(double t, std::size_t n);
    std::vector<double> boundaries() const;
    void validate() const;  // throws std::domain_error on interleaving violations
};

/// M_j = HK-integral of A over [t_{j-1}, t_j], concentrated at tag tau_j;
/// returns the disentangled product prod_{j=n..1} expm(M_j).
ComplexMatrix u_schedule(const GeneratorFamily& f, const MeasurementSchedule& sched, double tol);

/// u_schedule with the equally spaced schedule tau_j = j t / n.
ComplexMatrix u_n(const GeneratorFamily& f, double t, std::size_t n, double tol = 1e-10);

struct PathSumResult {
    ComplexMatrix value;
    double lambda = 0.0;
    std::size_t terms_used = 0;      // floor(lambda t) + 1
    double poisson_deficit = 0.0;    // P(N > floor(lambda t))
};

/// Poisson-weighted experimental evolution operator
///   U_lambda[t,0] = sum_{n=0}^{floor(lambda t)} (lambda t)^n/n! e^{-lambda t} U_n[t,0],
/// n = 0 contributing the blank-film identity. Weights by stable upward
/// recurrence; the truncation deficit is reported, not renormalized
/// (renormalize=true divides by the retained weight mass).
PathSumResult experimental_evolution(const GeneratorFamily& f, double t, double lambda,
                                     double tol = 1e-10, std::size_t term_budget = 2000,
                                     bool renormalize = false);

/// Lambda ladder sharing the U_n cache across all lambdas. The truncation
/// at floor(lambda t) retains only ~half of the Poisson mass for large
/// lambda t, so convergence studies against the propagator should pass
/// renormalize=true (plain values keep the verbatim truncated sum).
std::vector<PathSumResult> experimental_evolution_sweep(const GeneratorFamily& f, double t,
                                                        const std::vector<double>& lambdas,
                                                        double tol = 1e-10,
                                                        std::size_t term_budget = 2000,
                                                        bool renormalize = false);

/// Monte-Carlo estimate of the expected evolution over uniform order
/// statistics (qualitative comparison only).
ComplexMatrix expected_evolution_mc(const GeneratorFamily& f, double t, std::size_t n,
                                    std::size_t samples, std::uint64_t seed, double tol = 1e-8);

enum class RegularizerKind { Yosida, SqrtCutoff };

struct Regularizer {
    RegularizerKind kind = RegularizerKind::SqrtCutoff;
    double parameter = 1e-6;  // lambda for Yosida, rho for the sqrt cutoff

    static Regularizer yosida(double lambda) { return {RegularizerKind::Yosida, lambda}; }
    static Regularizer sqrt_cutoff(double rho) { return {RegularizerKind::SqrtCutoff, rho}; }
};

/// Regularized-potential propagator: builds V_reg(s) from V per the
/// regularizer and returns propagate of s -> F0(s) + coupling * V_reg(s)
/// at resolution n. coupling carries e.g. the -i/hbar of a quantum
/// problem so the cutoff itself acts on the Hermitian potential.
ComplexMatrix feynman_kac(const GeneratorFamily& f0, const GeneratorFamily& v, double t,
                          const Regularizer& reg, std::size_t n, Complex coupling = 1.0);

}  // namespace chronocalc
