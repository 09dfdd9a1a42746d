#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chronocalc/matrix.hpp"

namespace chronocalc {

/// Uniform 1D grid on [-extent, extent].
struct Grid1D {
    std::vector<double> points;
    double spacing = 0.0;
    double extent = 0.0;

    static Grid1D make(double extent, std::size_t count);
};

/// Closed-form propagator kernel K(x,t; y,s) with metadata.
struct KernelFunction {
    std::string name;
    std::function<Complex(double x, double t, double y, double s)> eval;
    std::string singular_set;
    std::string branch_rule;
    bool one_sided = false;   // requires t > s
    bool oscillatory = false; // composition applies a damping window
};

/// (4 pi kappa (t-s))^{-1/2} exp(-(x-y)^2 / (4 kappa (t-s))), t > s.
KernelFunction heat_kernel(double kappa);

/// (m/(2 pi i hbar t))^{1/2} exp(i m (x-y)^2 / (2 hbar t)), principal branch.
KernelFunction schrodinger_free_kernel(double m, double hbar);

/// Harmonic oscillator propagator; singular at the caustics t = k pi / Omega.
KernelFunction mehler_kernel(double m, double omega, double hbar);

/// Scalar part of the relativistic square-root kernel (beta-matrix factor
/// kept as metadata): branches keyed on c^2 t^2 - ||x-y||^2 and sign(t):
/// spacelike -> K2, timelike future -> H2^(2), timelike past -> -H2^(1),
/// all scaled by c t mu^2 / (4 pi). Light-cone points are singular.
KernelFunction sqrt_relativistic_kernel(double mu, double c);

/// Which branch the square-root kernel takes at (x,t,y).
enum class LightConeRegion { Spacelike, TimelikeFuture, TimelikePast, LightCone };
LightConeRegion classify_interval(double x, double t, double y, double c);

/// 4x4 Dirac beta matrix (metadata for the square-root kernel).
const ComplexMatrix& dirac_beta();

/// Multiplicative vector-potential phase exp{i e (x-y) A / (2 hbar c)}.
KernelFunction with_vector_potential_phase(const KernelFunction& k, double e, double a_pot,
                                           double hbar, double c);

struct CompositionReport {
    double max_defect = 0.0;   // max |int K(x,t;z,tau)K(z,tau;y,s)dz - K(x,t;y,s)|
    double window_bias = 0.0;  // window-widening estimate (oscillatory kernels)
};

/// Chapman-Kolmogorov defect over a centered comparison window
/// [-compare_extent, compare_extent]; the z-integration runs over the full
/// grid with trapezoid weights. Oscillatory kernels get a smooth edge
/// taper whose bias is estimated by widening the taper.
CompositionReport compose(const KernelFunction& k, double t, double tau, double s,
                          const Grid1D& grid, double compare_extent);

/// Kernel samples K(x_i, t; y_j, 0) from a symbol a(x, eta):
/// (2 pi)^{-1} sum_eta w e^{i (x_i - y_j) eta} e^{-(i/hbar) t a(x_i, eta)}
/// over the eta-grid dual to the pair-difference grid (2n nodes for n
/// points, so no pair aliases). Grid count must be a power of two.
/// tail_estimate reports the raw weight magnitude beyond 0.6 eta_max --
/// the accuracy warning for symbols without eta-decay; such symbols
/// should be run with damp_eta=true (smooth edge taper on the tail).
struct SymbolKernelResult {
    std::vector<Complex> samples;  // count x count, row-major
    double tail_estimate = 0.0;
};
SymbolKernelResult symbol_to_kernel(const std::function<Complex(double, double)>& symbol,
                                    double t, double hbar, const Grid1D& grid,
                                    bool damp_eta = false);

/// Sampled symbol-class gate: |a(x,eta)| <= bound_constant (1+|eta|)^order
/// on a sample grid (order-zero derivatives only; a sanity gate, not a proof).
struct SymbolClassReport {
    bool holds = false;
    double worst_ratio = 0.0;
};
SymbolClassReport symbol_class_check(const std::function<Complex(double, double)>& symbol,
                                     double order, double bound_constant, double x_extent,
                                     double eta_extent, std::size_t samples = 33);

/// Trapezoid propagation of grid data through a kernel: (K phi)(x_i).
std::vector<Complex> apply_kernel(const KernelFunction& k, double t, double s, const Grid1D& grid,
                                  const std::vector<Complex>& phi);

}  // namespace chronocalc
