import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import PINNED, mp_qpoch
from gosperq.errors import DomainError, NonConvergenceError
from gosperq.qseries import (
    DEFAULT_POLICY,
    TruncationPolicy,
    as_complex,
    qpoch_finite,
    qpoch_infinite,
    qpoch_infinite_terms,
    qpoch_multi,
    qpower,
)


def test_policy_defaults_and_validation():
    assert DEFAULT_POLICY.tol == 1e-15
    assert DEFAULT_POLICY.max_terms == 1_000_000
    assert TruncationPolicy().tighter(10).tol == pytest.approx(1e-16)
    for bad in (0.0, -1e-3, math.inf, math.nan):
        with pytest.raises(DomainError):
            TruncationPolicy(tol=bad)
    with pytest.raises(DomainError):
        TruncationPolicy(max_terms=0)


def test_as_complex_rejects_non_finite():
    assert as_complex(2) == 2 + 0j
    with pytest.raises(DomainError):
        as_complex(complex(math.nan, 0))
    with pytest.raises(DomainError):
        as_complex("x")


def test_finite_pochhammer():
    assert qpoch_finite(0.5, 0.3, 0) == 1
    expected = (1 - 0.5) * (1 - 0.5 * 0.3) * (1 - 0.5 * 0.09)
    assert qpoch_finite(0.5, 0.3, 3) == pytest.approx(expected, rel=1e-15)
    with pytest.raises(DomainError):
        qpoch_finite(0.5, 0.3, -1)


def test_pinned_qpoch_oracle():
    v = qpoch_infinite(0.1, 0.1)
    assert v.imag == 0
    assert abs(v.real - float(PINNED["qpoch_0.1"])) < 1e-15
    assert abs(v.real**2 - float(PINNED["qpoch_0.1_sq"])) < 1e-15
    # the frozen digits still agree with a live oracle
    assert mpmath.almosteq(mp_qpoch("0.1", "0.1"), mpmath.mpf(PINNED["qpoch_0.1"]), 1e-35)


@pytest.mark.parametrize("a,q", [(0.5, 0.3), (0.2 + 0.3j, 0.6), (-0.7, 0.8), (0.9j, 0.5 - 0.4j)])
def test_qpoch_against_oracle(a, q):
    ref = complex(mp_qpoch(mpmath.mpc(a), mpmath.mpc(q)))
    assert abs(qpoch_infinite(a, q) - ref) < 1e-13 * max(1, abs(ref))


def test_qpoch_domain_and_cap():
    with pytest.raises(DomainError):
        qpoch_infinite(0.5, 1.0)
    with pytest.raises(DomainError):
        qpoch_infinite(0.5, -1.2)
    with pytest.raises(NonConvergenceError):
        qpoch_infinite(0.5, 0.99, TruncationPolicy(max_terms=5))


def test_terms_grow_with_tighter_tolerance():
    _, loose = qpoch_infinite_terms(0.5, 0.7, TruncationPolicy(tol=1e-6))
    _, tight = qpoch_infinite_terms(0.5, 0.7, TruncationPolicy(tol=1e-15))
    assert tight > loose


def test_multi_and_qpower():
    a = qpoch_multi([0.2, 0.3], 0.4)
    assert a == pytest.approx(qpoch_infinite(0.2, 0.4) * qpoch_infinite(0.3, 0.4), rel=1e-15)
    log_q = cmath.log(0.3)
    assert qpower(log_q, 2.5) == pytest.approx(0.3**2.5, rel=1e-14)


nomes = st.complex_numbers(max_magnitude=0.8, allow_nan=False, allow_infinity=False).filter(lambda q: abs(q) > 1e-3)
args = st.complex_numbers(max_magnitude=0.95, allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(a=args, q=nomes)
def test_shift_relation(a, q):
    # (a; q)_inf = (1 - a) (aq; q)_inf
    lhs = qpoch_infinite(a, q)
    rhs = (1 - a) * qpoch_infinite(a * q, q)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


@settings(max_examples=40, deadline=None)
@given(a=args, q=nomes)
def test_infinite_is_limit_of_finite(a, q):
    assert abs(qpoch_infinite(a, q) - qpoch_finite(a, q, 400)) < 1e-12
