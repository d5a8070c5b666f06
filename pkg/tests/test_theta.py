import cmath
import math
import random

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import PINNED, mp_theta1
from gosperq import _pykernels
from gosperq._backend import BACKEND
from gosperq.errors import DomainError, NonConvergenceError, RangeError
from gosperq.qseries import TruncationPolicy
from gosperq.theta import (
    ModularPoint,
    dual_prime_residual,
    jacobi_transform_residual,
    nome_power,
    oddness_residual,
    quasi_period_residuals,
    theta1_half_period,
    theta1_prime0,
    theta1_prime0_series,
    theta1_product,
    theta1_series,
    transform_k_residual,
)

PI = math.pi


def test_modular_point():
    M = ModularPoint(1j)
    assert M.q == pytest.approx(math.exp(-PI))
    assert M.tau_dual == pytest.approx(1j)
    assert M.dual().tau == pytest.approx(1j)
    assert ModularPoint.from_nome(0.3).q == pytest.approx(0.3)
    with pytest.raises(DomainError):
        ModularPoint(-1j)
    with pytest.raises(DomainError):
        ModularPoint(1.5 + 1j)


def test_pinned_values():
    assert abs(theta1_series(PI / 2, 1j) - float(PINNED["theta1_half_i"])) < 1e-15
    assert abs(theta1_half_period(1j) - float(PINNED["theta1_half_i"])) < 1e-15
    assert abs(theta1_prime0(1j) - float(PINNED["theta1_prime_i"])) < 1e-15
    assert abs(theta1_prime0_series(1j) - float(PINNED["theta1_prime_i"])) < 1e-15
    assert mpmath.almosteq(mp_theta1(mpmath.pi / 2, 1j).real, mpmath.mpf(PINNED["theta1_half_i"]), 1e-35)


@pytest.mark.parametrize(
    "z,tau",
    [(0.3 + 0.2j, 1j), (1.1 - 0.4j, 0.2 + 0.8j), (2.5, 0.5j), (0.7 + 0.9j, -0.3 + 1.5j)],
)
def test_series_against_oracle(z, tau):
    ref = complex(mp_theta1(z, tau))
    assert abs(theta1_series(z, tau) - ref) < 1e-13 * max(1, abs(ref))


def test_zero_and_oddness():
    assert theta1_series(0, 1j) == 0
    assert abs(oddness_residual(0.4 + 0.3j, 0.7j)) < 1e-15


@pytest.mark.parametrize("form", ["sine", "exponential"])
def test_product_forms_match_series(form):
    rng = random.Random(7)
    for _ in range(40):
        z = complex(rng.uniform(-3, 3), rng.uniform(-1, 1))
        q = rng.uniform(0.05, 0.8) * cmath.exp(1j * rng.uniform(-1, 1))
        M = ModularPoint.from_nome(q)
        s = theta1_series(z, M)
        p = theta1_product(z, M, form=form)
        assert abs(s - p) <= 1e-12 * max(1.0, abs(s))


def test_product_form_name_checked():
    with pytest.raises(DomainError):
        theta1_product(0.1, 1j, form="bogus")


def test_prime_cross_check():
    M = ModularPoint.from_nome(0.6)
    assert theta1_prime0(M, cross_check=True) == pytest.approx(theta1_prime0_series(M), rel=1e-13)


def test_residuals_small():
    M = ModularPoint(0.1 + 0.9j)
    z = 0.37 + 0.11j
    r_pi, r_pitau = quasi_period_residuals(z, M)
    assert abs(r_pi) < 1e-13 and abs(r_pitau) < 1e-12
    for k in (1, 2, 3, 4, 9):
        assert abs(transform_k_residual(z, M, k)) < 1e-12
    assert abs(jacobi_transform_residual(z, M)) < 1e-12
    assert abs(dual_prime_residual(M)) < 1e-12


def test_transform_needs_positive_k():
    with pytest.raises(DomainError):
        transform_k_residual(0.1, 1j, 0)


def test_jacobi_transform_overflow_is_reported():
    with pytest.raises(RangeError):
        jacobi_transform_residual(50j, 1j)


def test_non_convergence():
    with pytest.raises(NonConvergenceError):
        theta1_series(0.3, 0.001j, TruncationPolicy(max_terms=3))


def test_nome_power():
    assert nome_power(1j, 2) == pytest.approx(math.exp(-2 * PI))


@settings(max_examples=50, deadline=None)
@given(
    x=st.floats(-3, 3), y=st.floats(-1, 1),
    t_re=st.floats(-0.9, 0.9), t_im=st.floats(0.3, 3),
)
def test_oddness_property(x, y, t_re, t_im):
    z, tau = complex(x, y), complex(t_re, t_im)
    assert abs(theta1_series(-z, tau) + theta1_series(z, tau)) <= 1e-13 * max(1, abs(theta1_series(z, tau)))


@settings(max_examples=50, deadline=None)
@given(x=st.floats(-3, 3), y=st.floats(-1, 1), t_im=st.floats(0.3, 3))
def test_pi_antiperiodic_property(x, y, t_im):
    z, tau = complex(x, y), complex(0, t_im)
    r_pi, _ = quasi_period_residuals(z, tau)
    assert abs(r_pi) < 1e-13


@pytest.mark.skipif(BACKEND != "cython", reason="compiled kernels not built")
def test_backend_parity():
    from gosperq import _ckernels

    rng = random.Random(3)
    for _ in range(50):
        a = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
        q = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.5, 0.5))
        z = complex(rng.uniform(-3, 3), rng.uniform(-1, 1))
        tau = complex(rng.uniform(-1, 1), rng.uniform(0.2, 2))
        c, p = _ckernels.qpoch_inf(a, q, 1e-15, 10**6), _pykernels.qpoch_inf(a, q, 1e-15, 10**6)
        assert c[1:] == p[1:] and abs(c[0] - p[0]) < 1e-14
        c, p = _ckernels.theta1_sum(z, tau, 1e-15, 10**6), _pykernels.theta1_sum(z, tau, 1e-15, 10**6)
        assert c[1:] == p[1:] and abs(c[0] - p[0]) < 1e-13 * max(1, abs(p[0]))
        c, p = _ckernels.theta1_prime_sum(tau, 1e-15, 10**6), _pykernels.theta1_prime_sum(tau, 1e-15, 10**6)
        assert c[1:] == p[1:] and abs(c[0] - p[0]) < 1e-13 * max(1, abs(p[0]))
