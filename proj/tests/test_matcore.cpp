#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chronocalc/json_io.hpp"
#include "chronocalc/random.hpp"
#include "chronocalc/report.hpp"
#include "chronocalc/semigroup.hpp"
#include "test_util.hpp"

using namespace chronocalc;
using test_util::diff_norm;

TEST_CASE("expm on the zero matrix is the identity") {
    const ComplexMatrix z(2);
    CHECK(diff_norm(expm(z), ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("expm of a nilpotent matrix terminates the series") {
    const ComplexMatrix n(2, {0, 1, 0, 0});
    const ComplexMatrix expected(2, {1, 1, 0, 1});
    CHECK(diff_norm(expm(n), expected) <= 1e-15);
}

TEST_CASE("expm matches the Taylor oracle on a seeded 4x4") {
    std::mt19937_64 rng(42);
    const ComplexMatrix a = random_matrix(4, rng);
    const ComplexMatrix viaTaylor = test_util::taylor_expm(a);
    CHECK(diff_norm(expm(a), viaTaylor) <= 1e-12 * operator_norm(viaTaylor));
}

TEST_CASE("expm inverse and semigroup laws") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 4; ++rep) {
        ComplexMatrix a = random_matrix(3, rng);
        a *= Complex(4.0 / operator_norm(a));
        CHECK(diff_norm(expm(a) * expm(-a), ComplexMatrix::identity(3)) <= 1e-10);
        const double s = 0.3 + 0.4 * rep, t = 1.7 - 0.3 * rep;
        CHECK(diff_norm(expm(Complex(s + t) * a), expm(Complex(s) * a) * expm(Complex(t) * a)) <=
              1e-10);
    }
    // norm 10: semigroup amplification stays benign on the dissipative side
    ComplexMatrix d = random_dissipative(3, rng);
    d *= Complex(10.0 / operator_norm(d));
    CHECK(diff_norm(expm(d) * expm(-d), ComplexMatrix::identity(3)) <= 1e-10);
    CHECK(diff_norm(expm(Complex(4.0) * d), expm(Complex(2.0) * d) * expm(Complex(2.0) * d)) <=
          1e-10);
}

TEST_CASE("expm range error beyond the scaling budget") {
    const ComplexMatrix big = Complex(1e20) * ComplexMatrix::identity(2);
    CHECK_THROWS_AS(expm(big), std::range_error);
}

TEST_CASE("dissipative generators give contraction semigroups") {
    std::mt19937_64 rng(8);
    const ComplexMatrix a = random_dissipative(4, rng);
    REQUIRE(is_dissipative(a).dissipative);
    for (double t : {0.1, 1.0, 5.0, 10.0})
        CHECK(operator_norm(expm(Complex(t) * a)) <= 1.0 + 1e-10);
}

TEST_CASE("resolvent basics") {
    CHECK(diff_norm(resolvent(1.0, ComplexMatrix(2)), ComplexMatrix::identity(2)) <= 1e-15);
    const ComplexMatrix d = ComplexMatrix::diagonal({Complex(-1), Complex(-2)});
    const ComplexMatrix r = resolvent(1.0, d);
    CHECK(std::abs(r(0, 0) - Complex(0.5)) <= 1e-15);
    CHECK(std::abs(r(1, 1) - Complex(1.0 / 3.0)) <= 1e-15);
}

TEST_CASE("resolvent of a dissipative matrix is bounded by 1/lambda") {
    std::mt19937_64 rng(21);
    const ComplexMatrix a = random_dissipative(4, rng);
    const double lambda = 2.0;
    const ComplexMatrix r = resolvent(lambda, a);
    CHECK(operator_norm(r) <= 1.0 / lambda + 1e-12);
    const ComplexMatrix lhs = Complex(lambda) * ComplexMatrix::identity(4) - a;
    CHECK(diff_norm(r * lhs, ComplexMatrix::identity(4)) <= 1e-12);
}

TEST_CASE("resolvent identity") {
    std::mt19937_64 rng(22);
    const ComplexMatrix a = random_matrix(4, rng);
    const double lam = 9.0, mu = 5.5;
    const ComplexMatrix rl = resolvent(lam, a);
    const ComplexMatrix rm = resolvent(mu, a);
    CHECK(diff_norm(rl - rm, Complex(mu - lam) * (rl * rm)) <= 1e-10);
}

TEST_CASE("resolvent singularity carries a condition estimate") {
    const ComplexMatrix d = ComplexMatrix::diagonal({Complex(2), Complex(-1)});
    try {
        resolvent(2.0, d);
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.condition_estimate > 1e14);
    }
}

TEST_CASE("yosida scalar value") {
    const ComplexMatrix a = ComplexMatrix::diagonal({Complex(-1)});
    const ComplexMatrix al = yosida(a, 3.0);
    CHECK(std::abs(al(0, 0) - Complex(-0.75)) <= 1e-15);
}

TEST_CASE("yosida commutes with its matrix") {
    std::mt19937_64 rng(30);
    const ComplexMatrix a = random_matrix(4, rng);
    const ComplexMatrix al = yosida(a, 10.0);
    CHECK(operator_norm(a * al - al * a) <= 1e-12);
}

TEST_CASE("yosida strong convergence has slope -1 in lambda") {
    std::mt19937_64 rng(33);
    const ComplexMatrix a = random_dissipative(4, rng);
    const Vector x = random_unit_vector(4, rng);
    std::vector<double> lambdas{10, 100, 1000, 10000}, errs;
    for (double lam : lambdas) errs.push_back((yosida(a, lam) * x - a * x).norm());
    const double slope = loglog_slope(lambdas, errs);
    CHECK(std::abs(slope + 1.0) <= 0.05);
}

TEST_CASE("lambda R(lambda, A) x converges to x") {
    std::mt19937_64 rng(34);
    const ComplexMatrix a = random_dissipative(3, rng);
    const Vector x = random_unit_vector(3, rng);
    double prev = 1e300;
    for (double lam : {10.0, 100.0, 1000.0}) {
        const double err = (Complex(lam) * (resolvent(lam, a) * x) - x).norm();
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev <= 1e-2);
}

TEST_CASE("is_dissipative trivia") {
    CHECK(is_dissipative(-ComplexMatrix::identity(3)).dissipative);
    CHECK(is_dissipative(-ComplexMatrix::identity(3)).margin == doctest::Approx(-1.0));

    std::mt19937_64 rng(40);
    const ComplexMatrix h = random_hermitian(3, rng);
    const auto skew = is_dissipative(Complex(0, 1) * h, 1e-12);
    CHECK(skew.dissipative);
    CHECK(std::abs(skew.margin) <= 1e-12);

    const ComplexMatrix ind = ComplexMatrix::diagonal({Complex(1), Complex(-2)});
    const auto rep = is_dissipative(ind);
    CHECK_FALSE(rep.dissipative);
    CHECK(rep.margin == doctest::Approx(1.0));
}

TEST_CASE("sqrt_cutoff scalar cases") {
    const ComplexMatrix v2 = ComplexMatrix::diagonal({Complex(2)});
    CHECK(diff_norm(sqrt_cutoff(v2, 0.0), v2) == 0.0);
    const ComplexMatrix v3 = ComplexMatrix::diagonal({Complex(3)});
    CHECK(std::abs(sqrt_cutoff(v3, 1.0)(0, 0) - Complex(3.0 / std::sqrt(10.0))) <= 1e-15);
}

TEST_CASE("sqrt_cutoff agrees with the Denman-Beavers route") {
    std::mt19937_64 rng(44);
    const ComplexMatrix v = random_hermitian(8, rng);
    const double rho = 1e-4;
    const ComplexMatrix vr = sqrt_cutoff(v, rho);
    // V_rho * (I + rho V^2)^{1/2} must reproduce V
    const ComplexMatrix s =
        test_util::denman_beavers_sqrt(ComplexMatrix::identity(8) + Complex(rho) * (v * v));
    CHECK(diff_norm(vr * s, v) <= 1e-12 * std::max(1.0, operator_norm(v)));
    CHECK(is_hermitian(vr, 1e-12));
    CHECK(operator_norm(vr) <= 1.0 / std::sqrt(rho) + 1e-9);
}

TEST_CASE("sqrt_cutoff rejects non-Hermitian input") {
    const ComplexMatrix bad(2, {0, 1, 0, 0});
    CHECK_THROWS_AS(sqrt_cutoff(bad, 0.5), std::domain_error);
}

TEST_CASE("hermitian_eigen reconstructs the matrix") {
    std::mt19937_64 rng(50);
    const ComplexMatrix h = random_hermitian(6, rng);
    const auto eig = hermitian_eigen(h);
    ComplexMatrix d(6);
    for (std::size_t i = 0; i < 6; ++i) d(i, i) = eig.values[i];
    CHECK(diff_norm(eig.vectors * d * eig.vectors.adjoint(), h) <= 1e-12);
    CHECK(diff_norm(eig.vectors * eig.vectors.adjoint(), ComplexMatrix::identity(6)) <= 1e-12);
    CHECK(std::is_sorted(eig.values.begin(), eig.values.end()));
}

TEST_CASE("operator norm sanity") {
    const ComplexMatrix d = ComplexMatrix::diagonal({Complex(0.5), Complex(-3), Complex(1)});
    CHECK(operator_norm(d) == doctest::Approx(3.0).epsilon(1e-10));
    std::mt19937_64 rng(60);
    const ComplexMatrix m = random_matrix(5, rng);
    const double op = operator_norm(m);
    CHECK(op <= frobenius_norm(m) + 1e-12);
    CHECK(op >= frobenius_norm(m) / std::sqrt(5.0) - 1e-12);
}

TEST_CASE("matrix json round trip") {
    std::mt19937_64 rng(61);
    const ComplexMatrix m = random_matrix(3, rng);
    const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
    CHECK(back.entries() == m.entries());
}
