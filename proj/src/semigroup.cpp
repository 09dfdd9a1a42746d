#include "chronocalc/semigroup.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace chronocalc {

namespace {

// Pade order thresholds from Higham, "The scaling and squaring method
// for the matrix exponential revisited" (2005).
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

ComplexMatrix pade_eval(const ComplexMatrix& a, const double* b, int m) {
    const std::size_t n = a.dim();
    const ComplexMatrix a2 = a * a;
    ComplexMatrix u(n), v(n);
    if (m == 13) {
        const ComplexMatrix a4 = a2 * a2;
        const ComplexMatrix a6 = a4 * a2;
        ComplexMatrix w1 = b[13] * a6 + b[11] * a4 + b[9] * a2;
        ComplexMatrix w2 = b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ComplexMatrix::identity(n);
        u = a * (a6 * w1 + w2);
        ComplexMatrix z1 = b[12] * a6 + b[10] * a4 + b[8] * a2;
        v = a6 * z1 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ComplexMatrix::identity(n);
        return solve(v - u, v + u);
    }
    // m in {3,5,7,9}: U = A * sum b_{2k+1} A^{2k}, V = sum b_{2k} A^{2k}
    ComplexMatrix pow = ComplexMatrix::identity(n);
    ComplexMatrix usum(n), vsum(n);
    for (int k = 0; 2 * k <= m; ++k) {
        vsum += b[2 * k] * pow;
        if (2 * k + 1 <= m) usum += b[2 * k + 1] * pow;
        if (2 * k + 2 <= m) pow = pow * a2;
    }
    u = a * usum;
    return solve(vsum - u, vsum + u);
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& a) {
    if (!a.is_finite()) throw std::domain_error("expm: non-finite input");
    static constexpr std::array<double, 4> b3{120, 60, 12, 1};
    static constexpr std::array<double, 6> b5{30240, 15120, 3360, 420, 30, 1};
    static constexpr std::array<double, 8> b7{17297280, 8648640, 1995840, 277200,
                                              25200, 1512, 56, 1};
    static constexpr std::array<double, 10> b9{17643225600, 8821612800, 2075673600,
                                               302702400, 30270240, 2162160, 110880,
                                               3960, 90, 1};
    static constexpr std::array<double, 14> b13{
        64764752532480000, 32382376266240000, 7771770303897600, 1187353796428800,
        129060195264000,   10559470521600,    670442572800,     33522128640,
        1323241920,        40840800,          960960,           16380, 182, 1};

    const double nrm = one_norm(a);
    if (nrm <= kTheta3) return pade_eval(a, b3.data(), 3);
    if (nrm <= kTheta5) return pade_eval(a, b5.data(), 5);
    if (nrm <= kTheta7) return pade_eval(a, b7.data(), 7);
    if (nrm <= kTheta9) return pade_eval(a, b9.data(), 9);

    int s = 0;
    if (nrm > kTheta13) s = int(std::ceil(std::log2(nrm / kTheta13)));
    if (s > 60) throw std::range_error("expm: norm exceeds scaling budget");
    ComplexMatrix scaled = std::ldexp(1.0, -s) * a;
    ComplexMatrix r = pade_eval(scaled, b13.data(), 13);
    for (int i = 0; i < s; ++i) r = r * r;
    return r;
}

ComplexMatrix resolvent(double lambda, const ComplexMatrix& a) {
    const ComplexMatrix lhs = Complex(lambda) * ComplexMatrix::identity(a.dim()) - a;
    return solve(lhs, ComplexMatrix::identity(a.dim()));
}

ComplexMatrix yosida(const ComplexMatrix& a, double lambda) {
    return Complex(lambda) * (a * resolvent(lambda, a));
}

DissipativityReport is_dissipative(const ComplexMatrix& a, double tol) {
    ComplexMatrix h = 0.5 * (a + a.adjoint());
    const auto eig = hermitian_eigen(h);
    DissipativityReport rep;
    rep.margin = eig.values.empty() ? 0.0 : eig.values.back();
    rep.dissipative = rep.margin <= tol;
    return rep;
}

ComplexMatrix sqrt_cutoff(const ComplexMatrix& v, double rho) {
    if (!is_hermitian(v)) throw std::domain_error("sqrt_cutoff: input is not Hermitian");
    if (rho < 0.0) throw std::domain_error("sqrt_cutoff: rho must be nonnegative");
    if (rho == 0.0) return v;
    const auto eig = hermitian_eigen(v);
    const std::size_t n = v.dim();
    ComplexMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = eig.values[i];
        d(i, i) = x / std::sqrt(1.0 + rho * x * x);
    }
    return eig.vectors * d * eig.vectors.adjoint();
}

}  // namespace chronocalc
