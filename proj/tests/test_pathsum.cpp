#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chronocalc/evolution.hpp"
#include "chronocalc/pathsum.hpp"
#include "chronocalc/random.hpp"
#include "chronocalc/report.hpp"
#include "chronocalc/semigroup.hpp"
#include "test_util.hpp"

using namespace chronocalc;
using test_util::diff_norm;

TEST_CASE("measurement schedule boundaries interleave") {
    const MeasurementSchedule s = MeasurementSchedule::uniform(1.0, 4);
    s.validate();
    const auto b = s.boundaries();
    REQUIRE(b.size() == 5);
    CHECK(b.front() == 0.0);
    CHECK(b.back() == 1.0);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(b[j] <= s.taus[j]);
        CHECK(s.taus[j] <= b[j + 1]);
    }
    MeasurementSchedule bad;
    bad.horizon = 1.0;
    bad.taus = {0.7, 0.2};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("u_schedule of a constant family telescopes to expm(tA)") {
    std::mt19937_64 rng(1);
    const ComplexMatrix a = random_dissipative(2, rng);
    const GeneratorFamily f = constant_family(a, 0.0, 1.0);
    const ComplexMatrix expected = expm(a);

    MeasurementSchedule single;
    single.horizon = 1.0;
    single.taus = {1.0};
    CHECK(diff_norm(u_schedule(f, single, 1e-11), expected) <= 1e-12);

    MeasurementSchedule uneven;
    uneven.horizon = 1.0;
    uneven.taus = {0.15, 0.4, 0.45, 0.99};
    CHECK(diff_norm(u_schedule(f, uneven, 1e-11), expected) <= 1e-12);
}

TEST_CASE("u_n on a commuting diagonal family approaches expm(Q)") {
    const GeneratorFamily f = named_family("diag_linear", {2, -0.2, -0.4, -0.9, 0.5}, 0.0, 1.0);
    const ComplexMatrix ref = expm(q_integral(f, 1.0, 1e-12));
    CHECK(diff_norm(u_n(f, 1.0, 64), ref) <= 1e-10);
}

TEST_CASE("u_n with two slots reproduces the hand-computed product") {
    std::mt19937_64 rng(2);
    const ComplexMatrix a = random_matrix(2, rng);
    const ComplexMatrix b = random_matrix(2, rng);
    const GeneratorFamily f = step_family({0.0, 0.5, 1.0}, {a, b});
    // n=2: boundaries {0, 0.75, 1}: M1 = 0.5A + 0.25B, M2 = 0.25B
    const ComplexMatrix expected =
        expm(Complex(0.25) * b) * expm(Complex(0.5) * a + Complex(0.25) * b);
    CHECK(diff_norm(u_n(f, 1.0, 2, 1e-12), expected) <= 1e-11);
}

TEST_CASE("u_n converges to the product integral with slope about -1") {
    const GeneratorFamily f = named_family("random_smooth", {2, 81, 0.8}, 0.0, 1.0);
    const ComplexMatrix ref = propagate_richardson(f, 1.0, 8192);
    std::vector<double> ns, errs;
    for (std::size_t n : {4, 8, 16, 32, 64, 128}) {
        ns.push_back(double(n));
        errs.push_back(diff_norm(u_n(f, 1.0, n, 1e-11), ref));
    }
    const double slope = loglog_slope(ns, errs);
    CHECK(slope < -0.8);
    CHECK(slope > -2.4);
}

TEST_CASE("poisson weights plus deficit account for all mass") {
    const GeneratorFamily f = constant_family(-ComplexMatrix::identity(2), 0.0, 1.0);
    const PathSumResult r = experimental_evolution(f, 1.0, 12.5);
    CHECK(r.terms_used == 13);
    CHECK(r.poisson_deficit > 0.0);
    CHECK(r.poisson_deficit < 1.0);
    // sum of weights recovered from the identity case
    const PathSumResult tiny = experimental_evolution(f, 1.0, 0.5);
    CHECK(tiny.terms_used == 1);  // lambda t < 1 keeps only the blank film
    CHECK(diff_norm(tiny.value, Complex(std::exp(-0.5)) * ComplexMatrix::identity(2)) <= 1e-14);
}

TEST_CASE("constant generator: error equals norm times deficit") {
    // lambda large enough that the blank-film weight e^{-lambda t} sits
    // below the identity's 1e-12 gate
    std::mt19937_64 rng(3);
    const ComplexMatrix a = random_dissipative(2, rng);
    const GeneratorFamily f = constant_family(a, 0.0, 1.0);
    const PathSumResult r = experimental_evolution(f, 1.0, 40.0);
    const ComplexMatrix et = expm(a);
    const double err = operator_norm(r.value - et);
    CHECK(std::abs(err - operator_norm(et) * r.poisson_deficit) <= 1e-12);
}

TEST_CASE("lambda ladder error decreases on a commuting family") {
    // the floor(lambda t) truncation keeps ~half the Poisson mass, so the
    // ladder is judged on the renormalized sum; round-off-level values are
    // treated as converged
    const GeneratorFamily f = named_family("diag_linear", {2, -0.2, -0.5, -0.8, 0.3}, 0.0, 1.0);
    const ComplexMatrix ref = expm(q_integral(f, 1.0, 1e-12));
    const auto sweep =
        experimental_evolution_sweep(f, 1.0, {10.0, 100.0, 1000.0}, 1e-10, 2000, true);
    std::vector<double> errs;
    for (const auto& s : sweep) errs.push_back(diff_norm(s.value, ref));
    for (std::size_t i = 1; i < errs.size(); ++i)
        CHECK((errs[i] < errs[i - 1] || errs[i] <= 1e-12));
    CHECK(errs.back() <= 1e-3);
}

TEST_CASE("unitarity of the normalized path sum for skew families") {
    const GeneratorFamily f = named_family("pauli_rotation", {0.4, 2.0}, 0.0, 1.0);
    const auto sweep = experimental_evolution_sweep(f, 1.0, {60.0});
    const PathSumResult& r = sweep.front();
    const double mass = 1.0 - r.poisson_deficit;
    CHECK(std::abs(operator_norm(Complex(1.0 / mass) * r.value) - 1.0) <= 1e-9);
}

TEST_CASE("renormalization divides by the retained mass") {
    const GeneratorFamily f = constant_family(-ComplexMatrix::identity(2), 0.0, 1.0);
    const PathSumResult plain = experimental_evolution(f, 1.0, 6.0);
    const PathSumResult renorm = experimental_evolution(f, 1.0, 6.0, 1e-10, 2000, true);
    const double mass = 1.0 - plain.poisson_deficit;
    CHECK(diff_norm(renorm.value, Complex(1.0 / mass) * plain.value) <= 1e-14);
}

TEST_CASE("large-lambda path sum is consistent with the product integral") {
    // at lambda t ~ 1500 the Poisson mass concentrates at n ~ lambda t, so
    // the renormalized sum should sit within twice the discretization error
    // of its own building block at the matching resolution
    const GeneratorFamily f = named_family("random_smooth", {2, 91, 0.5}, 0.0, 1.0);
    const ComplexMatrix ref = propagate_richardson(f, 1.0, 8192);
    const double lambda = 1500.0;
    const auto sweep = experimental_evolution_sweep(f, 1.0, {lambda}, 1e-9, 2000, true);
    const double err_sum = diff_norm(sweep.front().value, ref);
    const double err_un = diff_norm(u_n(f, 1.0, std::size_t(lambda), 1e-9), ref);
    CHECK(err_sum <= 2.0 * err_un);
}

TEST_CASE("term budget guard") {
    const GeneratorFamily f = constant_family(-ComplexMatrix::identity(2), 0.0, 1.0);
    CHECK_THROWS_AS(experimental_evolution(f, 1.0, 5000.0), std::range_error);
}

TEST_CASE("monte-carlo schedule estimator is sane at small n") {
    const GeneratorFamily f = constant_family(-ComplexMatrix::identity(2), 0.0, 1.0);
    const ComplexMatrix mc = expected_evolution_mc(f, 1.0, 3, 40, 123);
    CHECK(diff_norm(mc, expm(-ComplexMatrix::identity(2))) <= 1e-10);  // constant: schedule-free
}

TEST_CASE("feynman_kac with V = 0 is the bare propagator") {
    std::mt19937_64 rng(4);
    const ComplexMatrix a = random_dissipative(3, rng);
    const GeneratorFamily f0 = constant_family(a, 0.0, 1.0);
    const GeneratorFamily v = constant_family(ComplexMatrix(3), 0.0, 1.0);
    const ComplexMatrix got = feynman_kac(f0, v, 1.0, Regularizer::sqrt_cutoff(1e-4), 64);
    CHECK(diff_norm(got, propagate(f0, 1.0, 64)) <= 1e-12);
}

TEST_CASE("feynman_kac converges as the cutoff relaxes") {
    // small discrete heat generator plus a bounded diagonal potential
    const std::size_t n = 16;
    const double h = 2.0 / double(n - 1);
    ComplexMatrix lap(n);
    for (std::size_t i = 0; i < n; ++i) {
        lap(i, i) = -2.0 / (h * h);
        if (i > 0) lap(i, i - 1) = 1.0 / (h * h);
        if (i + 1 < n) lap(i, i + 1) = 1.0 / (h * h);
    }
    ComplexMatrix v(n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 0.4 * std::sin(2.0 * double(i) * h);
    const ComplexMatrix f0m = Complex(0.05) * lap;
    const ComplexMatrix ref = expm(f0m + v);
    double prev = 1e300;
    for (double rho : {1e-2, 1e-4, 1e-6}) {
        const ComplexMatrix got = feynman_kac(constant_family(f0m), constant_family(v), 1.0,
                                              Regularizer::sqrt_cutoff(rho), 32);
        const double err = diff_norm(got, ref) / operator_norm(ref);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev <= 1e-6);
}

TEST_CASE("feynman_kac with the yosida regularizer on a dissipative potential") {
    const ComplexMatrix v = ComplexMatrix::diagonal({Complex(-0.5), Complex(-1.2)});
    const ComplexMatrix f0m = ComplexMatrix::diagonal({Complex(-1.0), Complex(-0.3)});
    const ComplexMatrix ref = expm(f0m + v);
    double prev = 1e300;
    for (double lam : {10.0, 100.0, 1000.0}) {
        const ComplexMatrix got = feynman_kac(constant_family(f0m), constant_family(v), 1.0,
                                              Regularizer::yosida(lam), 16);
        const double err = diff_norm(got, ref);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev <= 1e-2);
}

TEST_CASE("feynman_kac propagates regularizer resolvent failures") {
    const ComplexMatrix v = ComplexMatrix::diagonal({Complex(10.0)});
    const ComplexMatrix f0m = ComplexMatrix::diagonal({Complex(-1.0)});
    CHECK_THROWS_AS(feynman_kac(constant_family(f0m), constant_family(v), 1.0,
                                Regularizer::yosida(10.0), 16),
                    SingularMatrixError);
}
