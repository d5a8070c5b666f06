import cmath
import math
import random

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import PINNED, mp_piq, mp_sinq
from gosperq.errors import DomainError
from gosperq.qtrig import (
    QParameter,
    cos_q,
    cos_q_product,
    cos_q_via_theta,
    pi_q,
    pi_ratio,
    sin_q,
    sin_q_product,
    sin_q_via_theta,
)
from gosperq.theta import theta1_prime0_series, theta1_series

PI = math.pi


def test_qparameter():
    Q = QParameter(0.3)
    assert Q.log == pytest.approx(math.log(0.3))
    assert Q.power(3).q == pytest.approx(0.027)
    assert Q.pow(0.5) == pytest.approx(math.sqrt(0.3))
    assert Q.modular_point.q == pytest.approx(0.3)
    assert abs(Q.p) < abs(Q.q)
    for bad in (0, 1, 1.2, -1):
        with pytest.raises(DomainError):
            QParameter(bad)
    with pytest.raises(DomainError):
        QParameter(0.5, log=complex(math.log(0.5), 4.0))


def test_power_leaves_principal_window():
    Q = QParameter(0.5 * cmath.exp(2.0j))
    with pytest.raises(DomainError):
        Q.power(2)


def test_normalizations():
    for q in (0.1, 0.5, 0.9):
        assert abs(sin_q(PI / 2, q) - 1) < 1e-12
        assert abs(cos_q(0, q) - 1) < 1e-12
        assert sin_q(0, q) == 0


def test_pinned_sin():
    v = sin_q(PI / 4, 0.5)
    assert abs(v - float(PINNED["sinq_0.5_pi4"])) < 1e-13
    assert mpmath.almosteq(mp_sinq(mpmath.pi / 4, "0.5"), mpmath.mpf(PINNED["sinq_0.5_pi4"]), 1e-35)


@pytest.mark.parametrize("z", [0.3 + 0.2j, 1.2 - 0.4j, 2.0 + 0.1j, 0.05])
@pytest.mark.parametrize("q", [0.2, 0.6, 0.85])
def test_product_against_oracle(z, q):
    ref = complex(mp_sinq(mpmath.mpc(z), q))
    assert abs(sin_q_product(z, q) - ref) < 1e-12 * max(1, abs(ref))


def test_pinned_pi():
    assert abs(pi_q(0.1) - float(PINNED["piq_0.1"])) < 1e-14
    assert mpmath.almosteq(mp_piq("0.1"), mpmath.mpf(PINNED["piq_0.1"]), 1e-35)
    assert abs(pi_ratio(0.3, 4) - float(PINNED["pi_ratio_0.3_4"])) < 1e-13 * 4.3
    assert abs(pi_ratio(0.2, 9) - float(PINNED["pi_ratio_0.2_9"])) < 1e-13 * 36.5
    assert abs(pi_ratio(0.3, 9) - float(PINNED["pi_ratio_0.3_9"])) < 1e-13 * 19.6
    assert mpmath.almosteq(mp_piq("0.3") / mp_piq(mpmath.mpf("0.3") ** 4), mpmath.mpf(PINNED["pi_ratio_0.3_4"]), 1e-35)


@pytest.mark.parametrize("k", [2, 3, 4, 8, 9])
@pytest.mark.parametrize("q", [0.1, 0.3, 0.5])
def test_pi_ratio_dual_form(k, q):
    # Pi_q / Pi_{q^k} = k T'(1) S(k) / (S(1) T'(k)) at the dual nome
    Q = QParameter(q)
    td = Q.tau_dual
    rhs = k * theta1_prime0_series(td) * theta1_series(PI / 2, td / k) / (
        theta1_series(PI / 2, td) * theta1_prime0_series(td / k))
    assert abs(pi_ratio(Q, k) - rhs) < 1e-12 * abs(rhs)


def test_bridge_including_high_nome():
    rng = random.Random(11)
    zs = [complex(rng.uniform(0.1, 1.4), rng.uniform(-0.5, 0.5)) for _ in range(25)]
    for q in (0.1, 0.3, 0.5, 0.7, 0.9):
        for z in zs:
            a, b = sin_q_product(z, q), sin_q_via_theta(z, q)
            assert abs(a - b) <= 1e-9 * max(1, abs(a))
            a, b = cos_q_product(z, q), cos_q_via_theta(z, q)
            assert abs(a - b) <= 1e-9 * max(1, abs(a))


def test_envelope_and_routing():
    with pytest.raises(DomainError):
        sin_q_product(0.5, 0.97)
    with pytest.raises(DomainError):
        sin_q_product(0.5 + 10j, 0.5)
    with pytest.raises(DomainError):
        cos_q_product(-2.0, 0.5)  # |q**(1+2w)| > 1
    # outside the envelope the dual-nome form is used
    assert sin_q(0.5, 0.97) == pytest.approx(sin_q_via_theta(0.5, 0.97), rel=1e-15)
    assert cos_q(-2.0, 0.5) == pytest.approx(cos_q_via_theta(-2.0, 0.5), rel=1e-12)


def test_classical_limit():
    # at q -> 1 the dual nome underflows and sin_q, cos_q reduce to sin, cos
    for z in (0.3, 0.7 + 0.2j, 2.0 - 0.5j):
        assert abs(sin_q(z, 0.999) - cmath.sin(z)) < 1e-13
        assert abs(cos_q(z, 0.999) - cmath.cos(z)) < 1e-13


def test_routing_refuses_when_dual_nome_is_not_smaller():
    with pytest.raises(DomainError):
        sin_q(0.5 + 10j, 0.01)


@settings(max_examples=50, deadline=None)
@given(x=st.floats(0.05, 3.0), y=st.floats(-0.8, 0.8), q=st.floats(0.05, 0.9))
def test_parity_and_reflection(x, y, q):
    z = complex(x, y)
    s = sin_q_via_theta(z, q)
    assert abs(sin_q_via_theta(-z, q) + s) < 1e-13 * max(1, abs(s))
    c = cos_q(z, q)
    assert abs(cos_q_via_theta(-z, q) - c) < 1e-12 * max(1, abs(c))
    assert abs(sin_q(PI / 2 - z, q) - c) < 1e-12 * max(1, abs(c))


@settings(max_examples=30, deadline=None)
@given(q=st.floats(0.05, 0.95), a=st.floats(0.01, 1.5), b=st.floats(0.01, 1.5))
def test_monotone_on_quarter_period(q, a, b):
    lo, hi = sorted((a, b))
    if hi - lo < 1e-6:
        return
    assert sin_q(lo, q).real < sin_q(hi, q).real
    assert cos_q(lo, q).real > cos_q(hi, q).real
