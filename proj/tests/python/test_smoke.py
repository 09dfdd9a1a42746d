"""Python binding smoke tests against scipy/numpy references."""

import numpy as np
import pytest

chronocalc = pytest.importorskip("chronocalc")


def random_matrix(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def test_expm_matches_scipy():
    scipy_linalg = pytest.importorskip("scipy.linalg")
    rng = np.random.default_rng(42)
    a = random_matrix(rng, 4)
    got = chronocalc.expm(a)
    ref = scipy_linalg.expm(a)
    assert np.linalg.norm(got - ref) <= 1e-11 * np.linalg.norm(ref)


def test_resolvent_and_yosida():
    a = np.diag([-1.0 + 0j, -2.0])
    r = chronocalc.resolvent(1.0, a)
    assert np.allclose(np.diag(r), [0.5, 1.0 / 3.0])
    al = chronocalc.yosida(np.diag([-1.0 + 0j]), 3.0)
    assert abs(al[0, 0] + 0.75) < 1e-14


def test_dissipativity_flag():
    flag, margin = chronocalc.is_dissipative(-np.eye(3, dtype=complex))
    assert flag and abs(margin + 1.0) < 1e-12
    flag, margin = chronocalc.is_dissipative(np.diag([1.0 + 0j, -2.0]))
    assert not flag and abs(margin - 1.0) < 1e-12


def test_propagate_constant_family_is_expm():
    a = np.array([[0, 1], [-1, 0]], dtype=complex) * 0.7
    u = chronocalc.propagate(lambda t: a, 0.0, 1.0, 1.0, 32, 2)
    assert np.linalg.norm(u - chronocalc.expm(a)) <= 1e-12


def test_trotter_commuting_pair():
    a = np.diag([-1.0 + 0j, 1j])
    b = np.diag([0.5 + 0j, -0.25])
    got = chronocalc.trotter(a, b, 1.0, 8)
    assert np.linalg.norm(got - chronocalc.expm(a + b)) <= 1e-12


def test_dyson_identity():
    a = np.array([[-0.5, 0.2], [0.1, -0.8]], dtype=complex)
    partial, remainder, est = chronocalc.dyson_expand(lambda t: a, 0.0, 1.0, 1.0, 1, 1.0, 12, 2)
    ref = chronocalc.expm(a)
    assert np.linalg.norm(partial + remainder - ref) <= max(est, 1e-8)


def test_experimental_evolution_constant():
    a = -0.5 * np.eye(2, dtype=complex)
    value, terms, deficit = chronocalc.experimental_evolution(lambda t: a, 0.0, 1.0, 1.0, 30.0, 2)
    ref = chronocalc.expm(a)
    assert terms == 31
    assert np.linalg.norm(value - ref, 2) <= np.linalg.norm(ref, 2) * deficit + 1e-12


def test_heat_kernel_value():
    v = chronocalc.heat_kernel(1.0, 0.0, 1.0, 0.0)
    assert abs(v - 1.0 / np.sqrt(4.0 * np.pi)) < 1e-14


def test_bessel_k2():
    assert abs(chronocalc.bessel_k2(1.0) - 1.6248388986351774828) < 1e-10
