#pragma once

#include <functional>

#include "chronocalc/family.hpp"
#include "chronocalc/gauge.hpp"
#include "chronocalc/matrix.hpp"

namespace chronocalc {

/// Q[t,a] = (HK) int_a^t A(s) ds, delegated to the gauge integrator.
ComplexMatrix q_integral(const GeneratorFamily& f, double t, double tol);

/// Time-ordered product integral over n midpoint slices: latest factor
/// leftmost. Exact for constant families.
ComplexMatrix propagate(const GeneratorFamily& f, double t, std::size_t n);

/// 2*U_{2n} - U_n; halves the leading product-integral error constant.
ComplexMatrix propagate_richardson(const GeneratorFamily& f, double t, std::size_t n);

/// max over sampled pairs of ||[A(s), A(s')]||.
double commutativity_defect(const GeneratorFamily& f, std::size_t samples = 8);

enum class PropagatorMethod { ProductIntegral, ExpmOfQ, Dyson };

/// Propagator descriptor. ExpmOfQ refuses families whose sampled
/// commutators exceed 1e-12: exp{Q[t,a]} does not solve the time-ordered
/// initial-value problem unless the family commutes with itself.
struct Propagator {
    GeneratorFamily family;
    PropagatorMethod method = PropagatorMethod::ProductIntegral;
    std::size_t resolution = 256;

    ComplexMatrix at(double t) const;
};

/// || (U[t+h,a] - U[t-h,a])/(2h) - A(t) U[t,a] || at h = (b-a)/2^12.
double ode_defect(const GeneratorFamily& f, double t, std::size_t n);

/// Simplex integral int_{a<s_k<...<s_1<t} A(s_1)...A(s_k) ds
/// (descending times left to right), nested Gauss-Legendre.
ComplexMatrix dyson_term(const GeneratorFamily& f, double t, int k, std::size_t quad_nodes);

struct DysonResult {
    ComplexMatrix partial_sum;
    ComplexMatrix remainder;
    int order = 0;
    double w = 1.0;
    double quad_error = 0.0;  // estimate covering quadrature + slice discretization
};

/// Order-n expansion of U^w with exact integral remainder:
///   partial = I + sum_{k=1..n} w^k * dyson_term(k)
///   remainder = (n+1) int_0^w (w-xi)^n dxi *
///       int_simplex U^xi(t,s_1) A(s_1) U^xi(s_1,s_2) ... A(s_{n+1}) U^xi(s_{n+1},a) ds,
/// with U^xi the product-integral propagator of the xi-scaled family.
/// partial + remainder reproduces U^w to the reported estimate.
DysonResult dyson_expand(const GeneratorFamily& f, double t, int n, double w,
                         std::size_t quad_nodes, std::size_t prop_resolution = 8192);

/// (e^{tA/n} e^{tB/n})^n, repeated squaring when n is a power of two.
ComplexMatrix trotter(const ComplexMatrix& a, const ComplexMatrix& b, double t, std::size_t n);

/// prod_{j=n..1} e^{(t/n)A(jt/n)} e^{(t/n)B(j t'_n/n)} with the perturbed
/// schedule t'_n = t(1 - 1e-10 exp(-(n+1)^2)); exact_schedule uses t'_n = t.
ComplexMatrix generalized_trotter_kato(const GeneratorFamily& fa, const GeneratorFamily& fb,
                                       double t, std::size_t n, bool exact_schedule = false);

/// Interaction picture for Hermitian Hamiltonian families H0, H1:
/// U0 = product integral of (-i/hbar) H0, A_I(s) = U0(a,s) H1(s) U0(s,a),
/// evolve solves i hbar Psi' = A_I Psi by the same product-integral scheme.
struct InteractionPicture {
    std::function<ComplexMatrix(double)> a_interaction;
    std::function<Vector(const Vector&)> evolve;  // Phi -> Psi(t)
};
InteractionPicture interaction_rep(const GeneratorFamily& h0, const GeneratorFamily& h1,
                                   double t, std::size_t n, double hbar);

struct PicardFailure : std::runtime_error {
    PicardFailure(const std::string& what, std::vector<double> residuals_)
        : std::runtime_error(what), residuals(std::move(residuals_)) {}
    std::vector<double> residuals;
};

/// Mild solution u(t) = U(t,a)u_a + int_a^t U(t,s) f(s,u(s)) ds by Picard
/// iteration with trapezoid quadrature over the n-slice step grid.
Vector semilinear_mild(const GeneratorFamily& f,
                       const std::function<Vector(double, const Vector&)>& rhs, const Vector& u_a,
                       double t, std::size_t n, int max_picard, double tol);

struct RelativeBoundReport {
    bool holds = false;
    double worst_margin = 0.0;  // min over samples of alpha||Q0 x||+beta||x||-||Q1 x||
};

/// Sampled finite-dimensional check of ||Q1 x|| <= alpha ||Q0 x|| + beta ||x||.
RelativeBoundReport relative_bound_check(const ComplexMatrix& q0, const ComplexMatrix& q1,
                                         double alpha, double beta, std::size_t samples = 64,
                                         std::uint64_t seed = 7);

}  // namespace chronocalc
