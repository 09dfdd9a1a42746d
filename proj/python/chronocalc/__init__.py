"""Time-ordered evolution operators, gauge integrals, and propagator kernels."""

from ._chronocalc import (
    bessel_j2,
    bessel_k2,
    bessel_y2,
    dyson_expand,
    expansional_expand,
    experimental_evolution,
    expm,
    heat_kernel,
    hk_integrate,
    is_dissipative,
    mehler_kernel,
    propagate,
    resolvent,
    sqrt_cutoff,
    trotter,
    yosida,
)

__all__ = [
    "bessel_j2",
    "bessel_k2",
    "bessel_y2",
    "dyson_expand",
    "expansional_expand",
    "experimental_evolution",
    "expm",
    "heat_kernel",
    "hk_integrate",
    "is_dissipative",
    "mehler_kernel",
    "propagate",
    "resolvent",
    "sqrt_cutoff",
    "trotter",
    "yosida",
]

__version__ = "0.1.0"
