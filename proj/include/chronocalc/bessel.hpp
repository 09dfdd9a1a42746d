#pragma once

#include <complex>

namespace chronocalc {

/// Real-argument Bessel family backing the relativistic kernel.
/// J/Y: power series below |z| = 12, Hankel asymptotics above; validated
/// on (0, 1e4). K: series / cosh-integral / asymptotic branches; validated
/// on (0, 700). Order 2 by upward recurrence from orders 0 and 1.
/// Out-of-range arguments raise std::range_error.

double bessel_j0(double z);
double bessel_j1(double z);
double bessel_y0(double z);
double bessel_y1(double z);
double bessel_j2(double z);
double bessel_y2(double z);

double bessel_k0(double z);
double bessel_k1(double z);
double bessel_k2(double z);

/// H2^(1) = J2 + iY2, H2^(2) = J2 - iY2.
std::complex<double> hankel_h2_1(double z);
std::complex<double> hankel_h2_2(double z);

}  // namespace chronocalc
