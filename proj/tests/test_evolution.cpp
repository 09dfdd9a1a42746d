#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chronocalc/evolution.hpp"
#include "chronocalc/random.hpp"
#include "chronocalc/report.hpp"
#include "chronocalc/semigroup.hpp"
#include "test_util.hpp"

using namespace chronocalc;
using test_util::diff_norm;

namespace {

const ComplexMatrix& sigma_x() {
    static const ComplexMatrix m(2, {0, 1, 1, 0});
    return m;
}
const ComplexMatrix& sigma_z() {
    static const ComplexMatrix m(2, {1, 0, 0, -1});
    return m;
}

}  // namespace

TEST_CASE("q_integral of a constant family") {
    std::mt19937_64 rng(1);
    const ComplexMatrix a = random_matrix(3, rng);
    const GeneratorFamily f = constant_family(a, 0.0, 2.0);
    CHECK(diff_norm(q_integral(f, 1.5, 1e-10), Complex(1.5) * a) <= 1e-9);
}

TEST_CASE("q_integral interval additivity") {
    const GeneratorFamily f = named_family("random_smooth", {2, 5, 0.5}, 0.0, 1.0);
    const double tol = 1e-8;
    GeneratorFamily tail = f;
    tail.a = 0.4;
    const ComplexMatrix q_total = q_integral(f, 1.0, tol);
    const ComplexMatrix q_head = q_integral(f, 0.4, tol);
    const ComplexMatrix q_tail = hk_integrate(f, 0.4, 1.0, tol).value;
    CHECK(diff_norm(q_head + q_tail, q_total) <= 2.0 * tol);
}

TEST_CASE("q_integral of a linear diagonal family: closed form") {
    const GeneratorFamily f = named_family("diag_linear", {2, -1, 0, -1, -2}, 0.0, 1.0);
    // entries: -1 - t and -2t; antiderivatives at t=1: -3/2 and -1
    const ComplexMatrix q = q_integral(f, 1.0, 1e-11);
    CHECK(std::abs(q(0, 0) - Complex(-1.5)) <= 1e-10);
    CHECK(std::abs(q(1, 1) - Complex(-1.0)) <= 1e-10);
}

TEST_CASE("propagate is exact for constant families") {
    std::mt19937_64 rng(2);
    const ComplexMatrix a = random_dissipative(3, rng);
    const GeneratorFamily f = constant_family(a, 0.0, 1.0);
    for (std::size_t n : {1, 7, 64})
        CHECK(diff_norm(propagate(f, 1.0, n), expm(a)) <= 1e-13);
}

TEST_CASE("propagate matches expm(Q) for a commuting diagonal family") {
    const GeneratorFamily f = named_family("diag_linear", {2, -0.3, 0.1, -0.7, 0.4}, 0.0, 1.0);
    const ComplexMatrix viaQ = expm(q_integral(f, 1.0, 1e-12));
    CHECK(diff_norm(propagate(f, 1.0, 256), viaQ) <= 1e-10);
}

TEST_CASE("on-grid evolution law") {
    const GeneratorFamily f = named_family("random_smooth", {3, 12, 0.5}, 0.0, 1.0);
    const std::size_t n = 64;
    // s = 0.5 lies on the 64-slice grid; tail family starts at s
    GeneratorFamily tail = f;
    tail.a = 0.5;
    const ComplexMatrix u_whole = propagate(f, 1.0, n);
    const ComplexMatrix u_head = propagate(f, 0.5, n / 2);
    const ComplexMatrix u_tail = propagate(tail, 1.0, n / 2);
    CHECK(diff_norm(u_tail * u_head, u_whole) <= 1e-13);
}

TEST_CASE("propagate converges at order 2; Richardson halves the constant") {
    const GeneratorFamily f = named_family("random_smooth", {3, 21, 0.8}, 0.0, 1.0);
    const ComplexMatrix ref =
        Complex(4.0 / 3.0) * propagate(f, 1.0, 16384) - Complex(1.0 / 3.0) * propagate(f, 1.0, 8192);
    std::vector<double> ns, errs, rerrs;
    for (std::size_t n : {8, 16, 32, 64, 128}) {
        ns.push_back(double(n));
        errs.push_back(diff_norm(propagate(f, 1.0, n), ref));
        rerrs.push_back(diff_norm(propagate_richardson(f, 1.0, n), ref));
    }
    CHECK(std::abs(loglog_slope(ns, errs) + 2.0) <= 0.3);
    CHECK(std::abs(loglog_slope(ns, rerrs) + 2.0) <= 0.3);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        CHECK(rerrs[i] <= 0.75 * errs[i]);  // halved constant, same order
    }
}

TEST_CASE("Propagator descriptor guards expm_of_Q behind commutativity") {
    const GeneratorFamily commuting = named_family("diag_linear", {2, -1, 0.2, -2, 0.1}, 0.0, 1.0);
    Propagator ok{commuting, PropagatorMethod::ExpmOfQ, 128};
    CHECK(diff_norm(ok.at(1.0), expm(q_integral(commuting, 1.0, 1e-12))) <= 1e-9);

    const GeneratorFamily wild = named_family("random_smooth", {2, 31, 0.9}, 0.0, 1.0);
    Propagator bad{wild, PropagatorMethod::ExpmOfQ, 128};
    CHECK_THROWS_AS(bad.at(1.0), std::domain_error);
    Propagator viaProduct{wild, PropagatorMethod::ProductIntegral, 256};
    CHECK(viaProduct.at(1.0).is_finite());
}

TEST_CASE("Propagator dyson method reproduces the product integral") {
    const GeneratorFamily f = named_family("random_smooth", {2, 33, 0.5}, 0.0, 1.0);
    Propagator viaDyson{f, PropagatorMethod::Dyson, 0};
    CHECK(diff_norm(viaDyson.at(1.0), propagate_richardson(f, 1.0, 4096)) <= 1e-7);
}

TEST_CASE("ode defect: constant generator") {
    std::mt19937_64 rng(3);
    ComplexMatrix a = random_dissipative(3, rng);
    a *= Complex(1.5 / operator_norm(a));
    const GeneratorFamily f = constant_family(a, 0.0, 1.0);
    CHECK(ode_defect(f, 0.5, 64) <= 1e-6);
}

TEST_CASE("ode defect: smooth family at n = 1024") {
    const GeneratorFamily f = named_family("random_smooth", {3, 41, 0.5}, 0.0, 1.0);
    CHECK(ode_defect(f, 0.5, 1024) <= 1e-4);
}

TEST_CASE("ode defect shrinks ~4x when the difference step halves") {
    // slope-2 fit of the centered difference against a near-exact propagator
    const GeneratorFamily f = named_family("random_smooth", {2, 43, 0.5}, 0.0, 1.0);
    const std::size_t n = 4096;
    std::vector<double> hs, defects;
    for (double h : {1.0 / 256.0, 1.0 / 512.0, 1.0 / 1024.0}) {
        const ComplexMatrix up = propagate(f, 0.5 + h, n);
        const ComplexMatrix um = propagate(f, 0.5 - h, n);
        const ComplexMatrix u = propagate(f, 0.5, n);
        defects.push_back(
            operator_norm(Complex(1.0 / (2.0 * h)) * (up - um) - f.eval(0.5) * u));
        hs.push_back(h);
    }
    CHECK(std::abs(loglog_slope(hs, defects) - 2.0) <= 0.35);
}

TEST_CASE("dyson_term trivia") {
    const GeneratorFamily f = named_family("random_smooth", {2, 51, 0.5}, 0.0, 1.0);
    CHECK(diff_norm(dyson_term(f, 1.0, 1, 24), q_integral(f, 1.0, 1e-10)) <= 1e-8);

    std::mt19937_64 rng(4);
    const ComplexMatrix a = random_matrix(2, rng);
    const GeneratorFamily fc = constant_family(a, 0.0, 1.0);
    for (int k : {1, 2, 3}) {
        double fact = 1.0;
        ComplexMatrix pw = ComplexMatrix::identity(2);
        for (int j = 1; j <= k; ++j) {
            fact *= j;
            pw = pw * a;
        }
        CHECK(diff_norm(dyson_term(fc, 1.0, k, 20), Complex(1.0 / fact) * pw) <= 1e-12);
    }
}

TEST_CASE("dyson_term k=2 on a commuting diagonal family: scalar oracle") {
    const GeneratorFamily f = named_family("diag_linear", {2, -0.5, 0.3, -1.0, -0.2}, 0.0, 1.0);
    // scalar double integral: int_0^1 a(s1) int_0^{s1} a(s2) ds2 ds1 = Q^2/2 per entry
    const ComplexMatrix q = q_integral(f, 1.0, 1e-12);
    const ComplexMatrix expected = Complex(0.5) * (q * q);
    CHECK(diff_norm(dyson_term(f, 1.0, 2, 24), expected) <= 1e-10);
}

TEST_CASE("dyson_term cost guard") {
    const GeneratorFamily f = named_family("diag_linear", {1, -1, 0}, 0.0, 1.0);
    CHECK_THROWS_AS(dyson_term(f, 1.0, 4, 128), std::range_error);
}

TEST_CASE("dyson_expand n=0 is Duhamel-exact against propagate") {
    const GeneratorFamily f = named_family("random_smooth", {3, 61, 0.6}, 0.0, 1.0);
    const double w = 1.0;
    const DysonResult d = dyson_expand(f, 1.0, 0, w, 16);
    const ComplexMatrix ref = propagate_richardson(scaled_family(f, Complex(w)), 1.0, 8192);
    CHECK(diff_norm(d.partial_sum + d.remainder, ref) <= 1e-8);
}

TEST_CASE("dyson_expand constant-family closed form at n=2, w=1") {
    std::mt19937_64 rng(6);
    const ComplexMatrix a = random_dissipative(3, rng);
    const GeneratorFamily f = constant_family(a, 0.0, 1.0);
    const DysonResult d = dyson_expand(f, 1.0, 2, 1.0, 16);
    const ComplexMatrix q = a;  // (t-a) = 1
    const ComplexMatrix partial_expected =
        ComplexMatrix::identity(3) + q + Complex(0.5) * (q * q);
    CHECK(diff_norm(d.partial_sum, partial_expected) <= 1e-11);
    CHECK(diff_norm(d.remainder, expm(q) - partial_expected) <= 1e-9);
}

TEST_CASE("dyson remainder identity holds for w < 1") {
    const GeneratorFamily f = named_family("random_smooth", {2, 63, 0.7}, 0.0, 1.0);
    const DysonResult d = dyson_expand(f, 1.0, 1, 0.5, 16);
    const ComplexMatrix ref = propagate_richardson(scaled_family(f, Complex(0.5)), 1.0, 8192);
    const double defect = diff_norm(d.partial_sum + d.remainder, ref);
    CHECK(defect <= 1e-8);
    CHECK(defect <= d.quad_error);
}

TEST_CASE("poincare difference quotient approaches Q^{n+1}/(n+1)!") {
    std::mt19937_64 rng(7);
    const ComplexMatrix q = random_dissipative(4, rng);
    const Vector x = random_unit_vector(4, rng);
    const double w = 1e-3;
    for (int n : {0, 1, 2}) {
        Vector acc = expm(Complex(w) * q) * x;
        Vector term = x;
        double fact = 1.0;
        for (int k = 0; k <= n; ++k) {
            if (k > 0) {
                term = q * term;
                fact *= k;
            }
            acc -= Complex(std::pow(w, k) / fact) * term;
        }
        Vector limit = x;
        double lf = 1.0;
        for (int k = 1; k <= n + 1; ++k) {
            limit = q * limit;
            lf *= k;
        }
        limit *= Complex(1.0 / lf);
        const Vector quotient = Complex(std::pow(w, -(n + 1))) * acc;
        CHECK((quotient - limit).norm() / limit.norm() <= 0.01);
    }
}

TEST_CASE("trotter: commuting pair is exact at any n") {
    const ComplexMatrix a = ComplexMatrix::diagonal({Complex(-1), Complex(0, 1)});
    const ComplexMatrix b = ComplexMatrix::diagonal({Complex(0.5), Complex(-0.25)});
    for (std::size_t n : {1, 3, 16})
        CHECK(diff_norm(trotter(a, b, 1.0, n), expm(a + b)) <= 1e-12);
}

TEST_CASE("trotter slope -1 on the nilpotent pair") {
    const ComplexMatrix a(2, {0, 1, 0, 0});
    const ComplexMatrix b(2, {0, 0, 1, 0});
    const ComplexMatrix target = expm(a + b);
    std::vector<double> ns, errs;
    for (std::size_t n = 2; n <= 1024; n *= 2) {
        ns.push_back(double(n));
        errs.push_back(diff_norm(trotter(a, b, 1.0, n), target));
    }
    CHECK(std::abs(loglog_slope(ns, errs) + 1.0) <= 0.1);
}

TEST_CASE("trotter squaring path agrees with the sequential product") {
    std::mt19937_64 rng(18);
    const ComplexMatrix a = random_dissipative(3, rng);
    const ComplexMatrix b = random_dissipative(3, rng);
    const ComplexMatrix factor = expm(Complex(1.0 / 8.0) * a) * expm(Complex(1.0 / 8.0) * b);
    ComplexMatrix seq = ComplexMatrix::identity(3);
    for (int j = 0; j < 8; ++j) seq = seq * factor;
    CHECK(diff_norm(trotter(a, b, 1.0, 8), seq) <= 1e-14);
}

TEST_CASE("trotter contraction for dissipative pairs") {
    std::mt19937_64 rng(8);
    const ComplexMatrix a = random_dissipative(3, rng);
    const ComplexMatrix b = random_dissipative(3, rng);
    for (std::size_t n : {1, 2, 5, 32, 1000})
        CHECK(operator_norm(trotter(a, b, 1.0, n)) <= 1.0 + 1e-10);
}

TEST_CASE("generalized Trotter-Kato equals Trotter for constant families") {
    std::mt19937_64 rng(9);
    const ComplexMatrix a = random_dissipative(3, rng);
    const ComplexMatrix b = random_dissipative(3, rng);
    for (std::size_t n : {3, 64})
        CHECK(diff_norm(generalized_trotter_kato(constant_family(a), constant_family(b), 1.0, n),
                        trotter(a, b, 1.0, n)) <= 1e-9);
}

TEST_CASE("generalized Trotter-Kato: commuting diagonal families") {
    // the right-endpoint schedule carries an O(drift/n) error, so the
    // 1e-6 agreement at n=512 holds for gently drifting families
    const GeneratorFamily fa = named_family("diag_linear", {2, -0.4, -0.2, 5e-4, -2e-4}, 0.0, 1.0);
    const GeneratorFamily fb = named_family("diag_linear", {2, -0.1, -0.6, -4e-4, 3e-4}, 0.0, 1.0);
    const ComplexMatrix qa = q_integral(fa, 1.0, 1e-12);
    const ComplexMatrix qb = q_integral(fb, 1.0, 1e-12);
    CHECK(diff_norm(generalized_trotter_kato(fa, fb, 1.0, 512), expm(qa + qb)) <= 1e-6);
}

TEST_CASE("generalized Trotter-Kato converges at order 1; both schedules agree") {
    const GeneratorFamily fa = named_family("random_smooth", {3, 71, 0.5}, 0.0, 1.0);
    const GeneratorFamily fb = named_family("random_smooth", {3, 72, 0.5}, 0.0, 1.0);
    const ComplexMatrix ref = propagate_richardson(sum_family(fa, fb), 1.0, 8192);
    std::vector<double> ns, errs;
    double schedule_gap = 0.0;
    for (std::size_t n = 4; n <= 512; n *= 2) {
        const ComplexMatrix perturbed = generalized_trotter_kato(fa, fb, 1.0, n, false);
        const ComplexMatrix plain = generalized_trotter_kato(fa, fb, 1.0, n, true);
        schedule_gap = std::max(schedule_gap, diff_norm(perturbed, plain));
        ns.push_back(double(n));
        errs.push_back(diff_norm(perturbed, ref));
    }
    CHECK(std::abs(loglog_slope(ns, errs) + 1.0) <= 0.15);
    CHECK(schedule_gap <= 1e-8);  // the 1e-10 time shift is numerically immaterial
}

TEST_CASE("interaction picture: zero perturbation is inert") {
    const GeneratorFamily h0 = constant_family(sigma_z(), 0.0, 1.0);
    const GeneratorFamily h1 = constant_family(ComplexMatrix(2), 0.0, 1.0);
    const auto pic = interaction_rep(h0, h1, 1.0, 64, 1.0);
    CHECK(frobenius_norm(pic.a_interaction(0.5)) <= 1e-14);
    Vector phi(std::vector<Complex>{Complex(0.6), Complex(0.8)});
    CHECK((pic.evolve(phi) - phi).norm() <= 1e-12);
}

TEST_CASE("interaction picture collapses for commuting Hamiltonians") {
    const GeneratorFamily h0 = constant_family(sigma_z(), 0.0, 1.0);
    const GeneratorFamily h1 = constant_family(Complex(0.4) * sigma_z(), 0.0, 1.0);
    const auto pic = interaction_rep(h0, h1, 1.0, 64, 1.0);
    CHECK(diff_norm(pic.a_interaction(0.7), Complex(0.4) * sigma_z()) <= 1e-12);
}

TEST_CASE("interaction picture matches the direct propagator (Pauli pair)") {
    const double hbar = 1.0, t = 1.0;
    const GeneratorFamily h0 = constant_family(sigma_z(), 0.0, t);
    const GeneratorFamily h1 = constant_family(Complex(0.35) * sigma_x(), 0.0, t);
    const std::size_t n = 2048;
    const auto pic = interaction_rep(h0, h1, t, n, hbar);
    Vector phi(std::vector<Complex>{Complex(1.0), Complex(0.0)});
    const Vector psi = pic.evolve(phi);

    const Complex gen(0.0, -1.0 / hbar);
    const GeneratorFamily full = constant_family(gen * (sigma_z() + Complex(0.35) * sigma_x()), 0.0, t);
    const GeneratorFamily free = constant_family(gen * sigma_z(), 0.0, t);
    const ComplexMatrix u_full = propagate(full, t, n);
    const ComplexMatrix u0 = propagate(free, t, n);
    const Vector expected = u0.adjoint() * (u_full * phi);  // U0(a,t) U(t,a) phi
    CHECK((psi - expected).norm() <= 1e-6);
}

TEST_CASE("interaction picture rejects non-Hermitian Hamiltonians") {
    const ComplexMatrix skew = Complex(0, 1) * sigma_z();  // i sigma_z is skew-Hermitian
    CHECK_THROWS_AS(interaction_rep(constant_family(skew), constant_family(sigma_x()), 1.0, 16, 1.0),
                    std::domain_error);
}

TEST_CASE("semilinear_mild with f = 0 reduces to the propagator") {
    std::mt19937_64 rng(10);
    const ComplexMatrix a = random_dissipative(3, rng);
    const GeneratorFamily f = constant_family(a, 0.0, 1.0);
    const Vector u0 = random_unit_vector(3, rng);
    auto zero = [](double, const Vector& u) { return Vector(u.dim()); };
    const Vector got = semilinear_mild(f, zero, u0, 1.0, 64, 10, 1e-12);
    CHECK((got - propagate(f, 1.0, 64) * u0).norm() <= 1e-12);
}

TEST_CASE("semilinear_mild with constant forcing: variation of constants") {
    const ComplexMatrix a = ComplexMatrix::diagonal({Complex(-0.5), Complex(-1.5)});
    const GeneratorFamily f = constant_family(a, 0.0, 1.0);
    const Vector g(std::vector<Complex>{Complex(0.3), Complex(-0.2)});
    auto rhs = [g](double, const Vector&) { return g; };
    const Vector u0(std::vector<Complex>{Complex(1.0), Complex(0.5)});
    const Vector got = semilinear_mild(f, rhs, u0, 1.0, 2048, 50, 1e-12);
    // u(t) = e^{tA}u0 + A^{-1}(e^{tA} - I)g
    const ComplexMatrix et = expm(a);
    const Vector expected =
        et * u0 + inverse(a) * ((et - ComplexMatrix::identity(2)) * g);
    CHECK((got - expected).norm() <= 1e-8);
}

TEST_CASE("semilinear_mild logistic forcing matches an RK oracle") {
    const double growth = -0.4, rate = 0.8, t = 1.0;
    const GeneratorFamily f = constant_family(ComplexMatrix(1, {Complex(growth)}), 0.0, t);
    auto rhs = [rate](double, const Vector& u) {
        Vector out(1);
        out[0] = rate * u[0] * (1.0 - u[0]);
        return out;
    };
    const Vector u0(std::vector<Complex>{Complex(0.3)});
    const Vector got = semilinear_mild(f, rhs, u0, t, 4096, 200, 1e-11);

    Complex u = u0[0];
    const int steps = 100000;
    const double dt = t / steps;
    auto ode = [&](Complex x) { return growth * x + rate * x * (1.0 - x); };
    for (int i = 0; i < steps; ++i) {
        const Complex k1 = ode(u), k2 = ode(u + 0.5 * dt * k1), k3 = ode(u + 0.5 * dt * k2),
                      k4 = ode(u + dt * k3);
        u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    CHECK(std::abs(got[0] - u) <= 1e-6);
}

TEST_CASE("semilinear_mild surfaces Picard non-contraction") {
    const GeneratorFamily f = constant_family(ComplexMatrix(1, {Complex(2.0)}), 0.0, 1.0);
    auto rhs = [](double, const Vector& u) {
        Vector out(1);
        out[0] = 40.0 * u[0] * u[0];  // violently non-contractive
        return out;
    };
    const Vector u0(std::vector<Complex>{Complex(1.0)});
    try {
        semilinear_mild(f, rhs, u0, 1.0, 64, 8, 1e-12);
        FAIL("expected PicardFailure");
    } catch (const PicardFailure& e) {
        CHECK(e.residuals.size() == 8);
    }
}

TEST_CASE("relative bound validator") {
    const ComplexMatrix q0 = ComplexMatrix::diagonal({Complex(-2), Complex(-4)});
    const ComplexMatrix q1 = ComplexMatrix::diagonal({Complex(-1), Complex(-2)});
    CHECK(relative_bound_check(q0, q1, 0.5, 1e-12).holds);
    CHECK_FALSE(relative_bound_check(q0, q1, 0.1, 0.0).holds);
}

TEST_CASE("commutativity defect flags noncommuting families") {
    const GeneratorFamily good = named_family("diag_linear", {2, -1, 0.4, -2, 0.2}, 0.0, 1.0);
    CHECK(commutativity_defect(good) <= 1e-12);
    const GeneratorFamily bad = named_family("pauli_rotation", {0.5, 3.0}, 0.0, 1.0);
    CHECK(commutativity_defect(bad) > 1e-3);
}
