#pragma once

#include <cstdint>
#include <random>

#include "chronocalc/matrix.hpp"

namespace chronocalc {

/// Seeded deterministic sources for test fixtures and experiments.
/// Entries are uniform on [-1,1] (+ i[-1,1]) unless stated.

inline double uniform_pm1(std::mt19937_64& rng) {
    return 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0;
}

inline ComplexMatrix random_matrix(std::size_t dim, std::mt19937_64& rng) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const double re = uniform_pm1(rng);
            const double im = uniform_pm1(rng);
            m(i, j) = Complex(re, im);
        }
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
    ComplexMatrix m = random_matrix(dim, rng);
    return 0.5 * (m + m.adjoint());
}

/// Random matrix with Hermitian part <= -margin (strictly dissipative).
ComplexMatrix random_dissipative(std::size_t dim, std::mt19937_64& rng, double margin = 0.05);

inline Vector random_unit_vector(std::size_t dim, std::mt19937_64& rng) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Complex(uniform_pm1(rng), uniform_pm1(rng));
    const double n = v.norm();
    for (std::size_t i = 0; i < dim; ++i) v[i] /= n;
    return v;
}

}  // namespace chronocalc
