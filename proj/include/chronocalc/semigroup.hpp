#pragma once

#include "chronocalc/matrix.hpp"

namespace chronocalc {

/// Matrix exponential, scaling-and-squaring with [13/13] Pade.
/// Relative accuracy ~1e-13 in operator norm for moderate norms.
/// Throws std::range_error when the scaling budget is exhausted.
ComplexMatrix expm(const ComplexMatrix& a);

/// (lambda*I - A)^{-1}. Propagates SingularMatrixError from the solve.
ComplexMatrix resolvent(double lambda, const ComplexMatrix& a);

/// Yosida approximator A_lambda = lambda * A * R(lambda, A).
ComplexMatrix yosida(const ComplexMatrix& a, double lambda);

struct DissipativityReport {
    bool dissipative = false;
    double margin = 0.0;  // max eigenvalue of the Hermitian part (A + A*)/2
};

/// Re<Ax, x> <= 0 for all x, decided through the Hermitian-part spectrum.
DissipativityReport is_dissipative(const ComplexMatrix& a, double tol = 0.0);

/// V_rho = V (I + rho V^2)^{-1/2} for Hermitian V, via eigendecomposition;
/// eigenvalues map v -> v / sqrt(1 + rho v^2). rho = 0 returns V.
/// Throws std::domain_error for non-Hermitian input.
ComplexMatrix sqrt_cutoff(const ComplexMatrix& v, double rho);

}  // namespace chronocalc
