#pragma once

#include <cstddef>
#include <vector>

namespace chronocalc {

/// Gauss-Legendre rule on [-1,1]; nodes ascending. Cached per n.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(std::size_t n);

/// Nodes/weights mapped to [lo, hi].
GaussLegendre gauss_legendre_on(std::size_t n, double lo, double hi);

}  // namespace chronocalc
