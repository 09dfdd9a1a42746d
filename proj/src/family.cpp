#include "chronocalc/family.hpp"

#include <algorithm>
#include <cmath>

#include "chronocalc/random.hpp"
#include "chronocalc/semigroup.hpp"

namespace chronocalc {

GeneratorFamily constant_family(const ComplexMatrix& m, double a, double b) {
    GeneratorFamily f;
    f.a = a;
    f.b = b;
    f.dim = m.dim();
    f.continuity = ContinuityClass::Constant;
    f.eval = [m](double) { return m; };
    return f;
}

GeneratorFamily scaled_family(const GeneratorFamily& f, Complex s) {
    GeneratorFamily g = f;
    auto base = f.eval;
    g.eval = [base, s](double t) { return s * base(t); };
    return g;
}

GeneratorFamily sum_family(const GeneratorFamily& f, const GeneratorFamily& g) {
    if (f.dim != g.dim) throw std::invalid_argument("sum_family: dimension mismatch");
    GeneratorFamily h = f;
    if (f.continuity != g.continuity) h.continuity = ContinuityClass::Piecewise;
    h.discontinuities.insert(h.discontinuities.end(), g.discontinuities.begin(),
                             g.discontinuities.end());
    std::sort(h.discontinuities.begin(), h.discontinuities.end());
    auto fe = f.eval, ge = g.eval;
    h.eval = [fe, ge](double t) { return fe(t) + ge(t); };
    return h;
}

GeneratorFamily step_family(const std::vector<double>& breaks,
                            const std::vector<ComplexMatrix>& pieces) {
    if (breaks.size() != pieces.size() + 1 || pieces.empty())
        throw std::invalid_argument("step_family: need pieces.size()+1 breakpoints");
    GeneratorFamily f;
    f.a = breaks.front();
    f.b = breaks.back();
    f.dim = pieces.front().dim();
    f.continuity = ContinuityClass::Piecewise;
    f.discontinuities.assign(breaks.begin() + 1, breaks.end() - 1);
    f.eval = [breaks, pieces](double t) {
        auto it = std::upper_bound(breaks.begin() + 1, breaks.end() - 1, t);
        return pieces[std::size_t(it - breaks.begin()) - 1];
    };
    return f;
}

GeneratorFamily tabulated_family(const std::vector<double>& times,
                                 const std::vector<ComplexMatrix>& samples) {
    if (times.size() != samples.size() || times.size() < 2)
        throw std::invalid_argument("tabulated_family: need >= 2 samples");
    GeneratorFamily f;
    f.a = times.front();
    f.b = times.back();
    f.dim = samples.front().dim();
    f.continuity = ContinuityClass::Tabulated;
    f.eval = [times, samples](double t) {
        auto it = std::upper_bound(times.begin(), times.end(), t);
        std::size_t k = std::min(std::size_t(std::max<std::ptrdiff_t>(it - times.begin() - 1, 0)),
                                 times.size() - 2);
        const double w = (t - times[k]) / (times[k + 1] - times[k]);
        return (1.0 - w) * samples[k] + Complex(w) * samples[k + 1];
    };
    return f;
}

namespace {

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m(2, {0.0, 1.0, 1.0, 0.0});
    return m;
}
const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m(2, {1.0, 0.0, 0.0, -1.0});
    return m;
}

}  // namespace

GeneratorFamily named_family(const std::string& name, const std::vector<double>& params,
                             double a, double b) {
    GeneratorFamily f;
    f.a = a;
    f.b = b;
    if (name == "constant_diag") {
        std::vector<Complex> d(params.begin(), params.end());
        return constant_family(ComplexMatrix::diagonal(d), a, b);
    }
    if (name == "diag_linear") {
        // params: [d, c0_1..c0_d, c1_1..c1_d]; entries c0_k + c1_k * t
        const auto d = std::size_t(params.at(0));
        if (params.size() != 1 + 2 * d)
            throw std::invalid_argument("diag_linear: expected 1+2*dim parameters");
        std::vector<double> c0(params.begin() + 1, params.begin() + 1 + d);
        std::vector<double> c1(params.begin() + 1 + d, params.end());
        f.dim = d;
        f.continuity = ContinuityClass::Smooth;
        f.eval = [d, c0, c1](double t) {
            ComplexMatrix m(d);
            for (std::size_t i = 0; i < d; ++i) m(i, i) = c0[i] + c1[i] * t;
            return m;
        };
        return f;
    }
    if (name == "pauli_rotation") {
        // -i*(sigma_z + alpha*sin(omega t)*sigma_x); skew-Hermitian for real t
        const double alpha = params.at(0);
        const double omega = params.at(1);
        f.dim = 2;
        f.continuity = ContinuityClass::Smooth;
        f.eval = [alpha, omega](double t) {
            return Complex(0.0, -1.0) * (pauli_z() + Complex(alpha * std::sin(omega * t)) * pauli_x());
        };
        return f;
    }
    if (name == "random_dissipative") {
        const auto d = std::size_t(params.at(0));
        std::mt19937_64 rng(std::uint64_t(params.at(1)));
        return constant_family(random_dissipative(d, rng), a, b);
    }
    if (name == "random_smooth") {
        // A0 + strength*sin(pi*(t-a)/(b-a))*A1, both dissipative, seeded
        const auto d = std::size_t(params.at(0));
        std::mt19937_64 rng(std::uint64_t(params.at(1)));
        const double strength = params.size() > 2 ? params.at(2) : 0.5;
        const ComplexMatrix a0 = random_dissipative(d, rng);
        const ComplexMatrix a1 = random_dissipative(d, rng);
        f.dim = d;
        f.continuity = ContinuityClass::Smooth;
        const double ia = a, ib = b;
        f.eval = [a0, a1, strength, ia, ib](double t) {
            return a0 + Complex(strength * std::sin(M_PI * (t - ia) / (ib - ia))) * a1;
        };
        return f;
    }
    throw std::invalid_argument("named_family: unknown family '" + name + "'");
}

ComplexMatrix random_dissipative(std::size_t dim, std::mt19937_64& rng, double margin) {
    ComplexMatrix m = random_matrix(dim, rng);
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    const auto eig = hermitian_eigen(h);
    const double shift = eig.values.back() + margin;
    return m - Complex(shift) * ComplexMatrix::identity(dim);
}

}  // namespace chronocalc
