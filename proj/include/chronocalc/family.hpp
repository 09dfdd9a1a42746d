#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chronocalc/matrix.hpp"

namespace chronocalc {

enum class ContinuityClass { Constant, Smooth, Piecewise, Tabulated };

/// A map t -> A(t) on [a,b] with a declared continuity class. The stand-in
/// for the family generating the evolution.
struct GeneratorFamily {
    double a = 0.0;
    double b = 1.0;
    std::size_t dim = 0;
    ContinuityClass continuity = ContinuityClass::Smooth;
    std::vector<double> discontinuities;
    std::function<ComplexMatrix(double)> eval;

    ComplexMatrix operator()(double t) const { return eval(t); }
};

GeneratorFamily constant_family(const ComplexMatrix& m, double a = 0.0, double b = 1.0);

/// Entrywise-scaled family t -> s * A(t).
GeneratorFamily scaled_family(const GeneratorFamily& f, Complex s);

/// Pointwise sum; domains and dims must agree.
GeneratorFamily sum_family(const GeneratorFamily& f, const GeneratorFamily& g);

/// Piecewise-constant family: value pieces[k] on [breaks[k], breaks[k+1]).
/// breaks has pieces.size()+1 entries, breaks.front()=a, breaks.back()=b.
GeneratorFamily step_family(const std::vector<double>& breaks,
                            const std::vector<ComplexMatrix>& pieces);

/// Piecewise-linear interpolation through (times[k], samples[k]).
GeneratorFamily tabulated_family(const std::vector<double>& times,
                                 const std::vector<ComplexMatrix>& samples);

/// Named-family registry used by the JSON config surface.
/// Known keys: "constant", "diag_linear", "two_slot", "pauli_rotation",
/// "smooth_mix". Throws std::invalid_argument for unknown names.
GeneratorFamily named_family(const std::string& name,
                             const std::vector<double>& params,
                             double a, double b);

}  // namespace chronocalc
