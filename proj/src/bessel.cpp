#include "chronocalc/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace chronocalc {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;
constexpr double kJYSwitch = 12.0;

void check_range(double z, double hi, const char* fn) {
    if (!(z > 0.0 && z < hi)) throw std::range_error(std::string(fn) + ": argument out of the validated range");
}

// --- power series -------------------------------------------------------

double j0_series(double z) {
    const double q = 0.25 * z * z;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (double(k) * double(k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double j1_series(double z) {
    const double q = 0.25 * z * z;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (double(k) * double(k + 1));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return 0.5 * z * sum;
}

double j2_series(double z) {
    const double q = 0.25 * z * z;
    double term = q / 2.0;  // k=0: (z/2)^2 / (0! 2!)
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (double(k) * double(k + 2));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double y0_series(double z) {
    const double q = 0.25 * z * z;
    double term = 1.0, hk = 0.0, sum = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (double(k) * double(k));
        hk += 1.0 / double(k);
        sum += -term * hk;  // (-1)^{k+1} H_k q^k / (k!)^2
        if (std::abs(term) < 1e-18) break;
    }
    return (2.0 / M_PI) * ((std::log(0.5 * z) + kEulerGamma) * j0_series(z) + sum);
}

double y1_series(double z) {
    const double q = 0.25 * z * z;
    double term = 0.5 * z;  // k=0: (z/2) / (0! 1!)
    double hk = 0.0, hk1 = 1.0;
    double sum = term * (hk + hk1);
    for (int k = 1; k < 200; ++k) {
        term *= -q / (double(k) * double(k + 1));
        hk += 1.0 / double(k);
        hk1 += 1.0 / double(k + 1);
        sum += term * (hk + hk1);
        if (std::abs(term) < 1e-18) break;
    }
    return (2.0 / M_PI) * (std::log(0.5 * z) + kEulerGamma) * j1_series(z) - 2.0 / (M_PI * z) -
           sum / M_PI;
}

double i0_series(double z) {
    const double q = 0.25 * z * z;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 400; ++k) {
        term *= q / (double(k) * double(k));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

double i1_series(double z) {
    const double q = 0.25 * z * z;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 400; ++k) {
        term *= q / (double(k) * double(k + 1));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return 0.5 * z * sum;
}

double k0_series(double z) {
    const double q = 0.25 * z * z;
    double term = 1.0, hk = 0.0, sum = 0.0;
    for (int k = 1; k < 400; ++k) {
        term *= q / (double(k) * double(k));
        hk += 1.0 / double(k);
        sum += term * hk;
        if (term < 1e-18) break;
    }
    return -(std::log(0.5 * z) + kEulerGamma) * i0_series(z) + sum;
}

double k1_series(double z) {
    const double q = 0.25 * z * z;
    double term = 0.5 * z;
    double hk = 0.0, hk1 = 1.0;
    double sum = term * (hk + hk1);
    for (int k = 1; k < 400; ++k) {
        term *= q / (double(k) * double(k + 1));
        hk += 1.0 / double(k);
        hk1 += 1.0 / double(k + 1);
        sum += term * (hk + hk1);
        if (term < 1e-18) break;
    }
    return (std::log(0.5 * z) + kEulerGamma) * i1_series(z) + 1.0 / z - 0.5 * sum;
}

// --- large-argument asymptotics ------------------------------------------

// Hankel P/Q expansions; chi = z - (nu/2 + 1/4) pi.
void hankel_pq(double nu, double z, double& p, double& q) {
    const double mu = 4.0 * nu * nu;
    p = 1.0;
    q = 0.0;
    double t = 1.0;
    double prev = std::abs(t);
    for (int k = 1; k < 60; ++k) {
        const double odd = double(2 * k - 1);
        t *= (mu - odd * odd) / (double(k) * 8.0 * z);
        if (std::abs(t) > prev) break;  // divergent tail reached
        prev = std::abs(t);
        const int phase = k % 4;
        if (phase == 1) q += t;
        else if (phase == 2) p -= t;
        else if (phase == 3) q -= t;
        else p += t;
        if (std::abs(t) < 1e-18) break;
    }
}

double jy_asymptotic(double nu, double z, bool want_y) {
    double p, q;
    hankel_pq(nu, z, p, q);
    const double chi = z - (0.5 * nu + 0.25) * M_PI;
    const double amp = std::sqrt(2.0 / (M_PI * z));
    return want_y ? amp * (p * std::sin(chi) + q * std::cos(chi))
                  : amp * (p * std::cos(chi) - q * std::sin(chi));
}

double k_asymptotic(double nu, double z) {
    const double mu = 4.0 * nu * nu;
    double t = 1.0, sum = 1.0;
    double prev = std::abs(t);
    for (int k = 1; k < 60; ++k) {
        const double odd = double(2 * k - 1);
        t *= (mu - odd * odd) / (double(k) * 8.0 * z);
        if (std::abs(t) > prev) break;
        prev = std::abs(t);
        sum += t;
        if (std::abs(t) < 1e-18) break;
    }
    return std::sqrt(M_PI / (2.0 * z)) * std::exp(-z) * sum;
}

// Middle-zone K via the cosh integral with the decaying factor pulled out:
// K_nu(z) = e^{-z} int_0^inf e^{-z(cosh u - 1)} cosh(nu u) du. The integrand
// is even at 0 and analytic, so the trapezoid rule converges geometrically.
double k_integral(double nu, double z) {
    const double h = 0.0625;
    const double upper = std::acosh(1.0 + 760.0 / z);
    double sum = 0.5;  // u = 0 contributes e^0 * cosh(0) = 1, half weight
    for (double u = h; u <= upper; u += h)
        sum += std::exp(-z * (std::cosh(u) - 1.0)) * std::cosh(nu * u);
    return h * sum * std::exp(-z);
}

}  // namespace

double bessel_j0(double z) {
    check_range(z, 1e4, "bessel_j0");
    return z < kJYSwitch ? j0_series(z) : jy_asymptotic(0.0, z, false);
}

double bessel_j1(double z) {
    check_range(z, 1e4, "bessel_j1");
    return z < kJYSwitch ? j1_series(z) : jy_asymptotic(1.0, z, false);
}

double bessel_y0(double z) {
    check_range(z, 1e4, "bessel_y0");
    return z < kJYSwitch ? y0_series(z) : jy_asymptotic(0.0, z, true);
}

double bessel_y1(double z) {
    check_range(z, 1e4, "bessel_y1");
    return z < kJYSwitch ? y1_series(z) : jy_asymptotic(1.0, z, true);
}

double bessel_j2(double z) {
    check_range(z, 1e4, "bessel_j2");
    if (z < 0.5) return j2_series(z);  // recurrence would cancel at small z
    return (2.0 / z) * bessel_j1(z) - bessel_j0(z);
}

double bessel_y2(double z) {
    check_range(z, 1e4, "bessel_y2");
    return (2.0 / z) * bessel_y1(z) - bessel_y0(z);
}

double bessel_k0(double z) {
    check_range(z, 700.0, "bessel_k0");
    if (z <= 2.0) return k0_series(z);
    if (z < 20.0) return k_integral(0.0, z);
    return k_asymptotic(0.0, z);
}

double bessel_k1(double z) {
    check_range(z, 700.0, "bessel_k1");
    if (z <= 2.0) return k1_series(z);
    if (z < 20.0) return k_integral(1.0, z);
    return k_asymptotic(1.0, z);
}

double bessel_k2(double z) {
    check_range(z, 700.0, "bessel_k2");
    return bessel_k0(z) + (2.0 / z) * bessel_k1(z);
}

std::complex<double> hankel_h2_1(double z) {
    return {bessel_j2(z), bessel_y2(z)};
}

std::complex<double> hankel_h2_2(double z) {
    return {bessel_j2(z), -bessel_y2(z)};
}

}  // namespace chronocalc
