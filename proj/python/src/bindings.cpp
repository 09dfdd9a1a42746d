#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chronocalc/bessel.hpp"
#include "chronocalc/evolution.hpp"
#include "chronocalc/kernels.hpp"
#include "chronocalc/ordered.hpp"
#include "chronocalc/pathsum.hpp"
#include "chronocalc/semigroup.hpp"

namespace py = pybind11;
namespace cc = chronocalc;

namespace {

using NpMatrix = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

cc::ComplexMatrix to_matrix(const NpMatrix& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
        throw std::invalid_argument("expected a square 2-D complex array");
    const auto n = std::size_t(arr.shape(0));
    cc::ComplexMatrix m(n);
    auto r = arr.unchecked<2>();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = r(i, j);
    return m;
}

py::array_t<std::complex<double>> from_matrix(const cc::ComplexMatrix& m) {
    const auto n = py::ssize_t(m.dim());
    py::array_t<std::complex<double>> out({n, n});
    auto w = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < n; ++i)
        for (py::ssize_t j = 0; j < n; ++j) w(i, j) = m(std::size_t(i), std::size_t(j));
    return out;
}

cc::GeneratorFamily family_from_callable(const py::function& fn, double a, double b,
                                         std::size_t dim) {
    cc::GeneratorFamily f;
    f.a = a;
    f.b = b;
    f.dim = dim;
    f.eval = [fn](double t) { return to_matrix(fn(t).cast<NpMatrix>()); };
    return f;
}

}  // namespace

PYBIND11_MODULE(_chronocalc, m) {
    m.doc() = "time-ordered evolution operators, gauge integrals, and propagator kernels";

    m.def("expm", [](const NpMatrix& a) { return from_matrix(cc::expm(to_matrix(a))); },
          py::arg("a"), "matrix exponential (scaling and squaring)");
    m.def("resolvent",
          [](double lam, const NpMatrix& a) {
              return from_matrix(cc::resolvent(lam, to_matrix(a)));
          },
          py::arg("lam"), py::arg("a"));
    m.def("yosida",
          [](const NpMatrix& a, double lam) { return from_matrix(cc::yosida(to_matrix(a), lam)); },
          py::arg("a"), py::arg("lam"));
    m.def("is_dissipative",
          [](const NpMatrix& a, double tol) {
              const auto rep = cc::is_dissipative(to_matrix(a), tol);
              return py::make_tuple(rep.dissipative, rep.margin);
          },
          py::arg("a"), py::arg("tol") = 0.0, "returns (flag, hermitian-part margin)");
    m.def("sqrt_cutoff",
          [](const NpMatrix& v, double rho) {
              return from_matrix(cc::sqrt_cutoff(to_matrix(v), rho));
          },
          py::arg("v"), py::arg("rho"));

    m.def("hk_integrate",
          [](const py::function& fn, double a, double b, double tol, std::size_t dim) {
              const auto res = cc::hk_integrate(family_from_callable(fn, a, b, dim), a, b, tol);
              return py::make_tuple(from_matrix(res.value), res.est_error);
          },
          py::arg("family"), py::arg("a"), py::arg("b"), py::arg("tol"), py::arg("dim"),
          "gauge integral of a matrix family; returns (value, est_error)");

    m.def("propagate",
          [](const py::function& fn, double a, double b, double t, std::size_t n,
             std::size_t dim) {
              return from_matrix(cc::propagate(family_from_callable(fn, a, b, dim), t, n));
          },
          py::arg("family"), py::arg("a"), py::arg("b"), py::arg("t"), py::arg("n"),
          py::arg("dim"), "time-ordered product integral, latest factor leftmost");

    m.def("trotter",
          [](const NpMatrix& a, const NpMatrix& b, double t, std::size_t n) {
              return from_matrix(cc::trotter(to_matrix(a), to_matrix(b), t, n));
          },
          py::arg("a"), py::arg("b"), py::arg("t"), py::arg("n"));

    m.def("expansional_expand",
          [](const NpMatrix& a, const NpMatrix& b, int order, std::size_t nodes) {
              const auto res = cc::expansional_expand(to_matrix(a), to_matrix(b), order, nodes);
              return py::make_tuple(from_matrix(res.value), res.quad_error);
          },
          py::arg("a"), py::arg("b"), py::arg("order"), py::arg("quad_nodes") = 24);

    m.def("dyson_expand",
          [](const py::function& fn, double a, double b, double t, int n, double w,
             std::size_t nodes, std::size_t dim) {
              const auto d =
                  cc::dyson_expand(family_from_callable(fn, a, b, dim), t, n, w, nodes);
              return py::make_tuple(from_matrix(d.partial_sum), from_matrix(d.remainder),
                                    d.quad_error);
          },
          py::arg("family"), py::arg("a"), py::arg("b"), py::arg("t"), py::arg("n"),
          py::arg("w"), py::arg("quad_nodes"), py::arg("dim"),
          "returns (partial_sum, remainder, quad_error)");

    m.def("experimental_evolution",
          [](const py::function& fn, double a, double b, double t, double lam, std::size_t dim) {
              const auto r =
                  cc::experimental_evolution(family_from_callable(fn, a, b, dim), t, lam);
              return py::make_tuple(from_matrix(r.value), r.terms_used, r.poisson_deficit);
          },
          py::arg("family"), py::arg("a"), py::arg("b"), py::arg("t"), py::arg("lam"),
          py::arg("dim"), "Poisson-weighted path sum; returns (value, terms, deficit)");

    m.def("heat_kernel",
          [](double kappa, double x, double t, double y, double s) {
              return cc::heat_kernel(kappa).eval(x, t, y, s);
          },
          py::arg("kappa"), py::arg("x"), py::arg("t"), py::arg("y"), py::arg("s") = 0.0);
    m.def("mehler_kernel",
          [](double mass, double omega, double hbar, double x, double t, double y) {
              return cc::mehler_kernel(mass, omega, hbar).eval(x, t, y, 0.0);
          },
          py::arg("m"), py::arg("omega"), py::arg("hbar"), py::arg("x"), py::arg("t"),
          py::arg("y"));

    m.def("bessel_k2", &cc::bessel_k2, py::arg("z"));
    m.def("bessel_j2", &cc::bessel_j2, py::arg("z"));
    m.def("bessel_y2", &cc::bessel_y2, py::arg("z"));
}
