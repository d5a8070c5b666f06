"""Numeric evaluation of catalogued identities over sample grids."""
from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass, field, replace
from typing import Optional

from . import registry as _catalog
from .errors import DomainError, GosperQError, IdentityEvaluationError, NumericInstabilityError
from .qseries import DEFAULT_POLICY, TruncationPolicy
from .qtrig import QParameter
from .registry import EvalContext, IdentityDescriptor

PI = math.pi
TRIG_ZEROS = (0.0, PI / 2, PI)
EXCLUSION_RADIUS = 1e-6


@dataclass(frozen=True)
class ResidualRecord:
    id: str
    z: Optional[complex]
    q: complex
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    index: int = 0


@dataclass(frozen=True)
class GridSpec:
    """Pseudo-random ``z`` samples crossed with a list of real or complex nomes."""

    n: int = 40
    seed: int = 20240601
    re_range: tuple = (0.1, 1.4)
    im_range: tuple = (-0.5, 0.5)
    q_values: tuple = (0.1, 0.2, 0.3, 0.5, 0.7)
    tol: float = 1e-9

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("grid needs at least one z sample")
        if not self.q_values:
            raise DomainError("grid needs at least one nome")

    def z_points(self) -> list[complex]:
        rng = random.Random(self.seed)
        return [complex(rng.uniform(*self.re_range), rng.uniform(*self.im_range)) for _ in range(self.n)]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["re_range"] = list(self.re_range)
        d["im_range"] = list(self.im_range)
        d["q_values"] = [_jsonable(q) for q in self.q_values]
        return d


@dataclass
class SweepReport:
    id: str
    grid: GridSpec
    records: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    skipped: int = 0

    @property
    def worst(self) -> Optional[ResidualRecord]:
        if not self.records:
            return None
        return max(self.records, key=lambda r: (r.rel_err if not math.isnan(r.rel_err) else math.inf))

    @property
    def max_rel_err(self) -> float:
        w = self.worst
        return math.nan if w is None else w.rel_err

    @property
    def passed(self) -> bool:
        return bool(self.records) and not self.errors and self.max_rel_err <= self.grid.tol

    def to_dict(self) -> dict:
        w = self.worst
        return {
            "id": self.id,
            "grid": self.grid.to_dict(),
            "max_rel_err": _jsonable(self.max_rel_err),
            "worst": None if w is None else {
                "z": _jsonable(w.z), "q": _jsonable(w.q), "lhs": _jsonable(w.lhs), "rhs": _jsonable(w.rhs),
            },
            "pass": self.passed,
            "points": len(self.records),
            "skipped": self.skipped,
            "errors": list(self.errors),
        }


def _jsonable(v):
    if v is None:
        return None
    if isinstance(v, complex):
        return [_jsonable(v.real), _jsonable(v.imag)]
    v = float(v)
    if math.isnan(v) or math.isinf(v):
        return str(v)
    return v


def _as_q(q) -> QParameter:
    return q if isinstance(q, QParameter) else QParameter(q)


def _residual(d: IdentityDescriptor, z, Q: QParameter, lhs: complex, rhs: complex) -> ResidualRecord:
    diff = abs(lhs - rhs)
    return ResidualRecord(d.id, z, Q.q, lhs, rhs, diff, diff / max(1.0, abs(lhs), abs(rhs)))


def evaluate(
    identity_id: str,
    z=None,
    q=0.3,
    policy: TruncationPolicy = DEFAULT_POLICY,
    constants: Optional[dict] = None,
    *,
    squared: Optional[bool] = None,
) -> ResidualRecord:
    """Evaluate both sides of one identity at ``(z, q)``.

    ``constants`` overrides the descriptor's constants (used to plant
    mutations). ``squared=False`` compares a squared-form identity against
    its principal square root directly. The recorded ``lhs``/``rhs`` are
    the compared quantities, after squaring and reference scaling.
    """
    d = _catalog.get(identity_id)
    try:
        Q = _as_q(q)
        if d.has_z:
            if z is None:
                raise DomainError(f"{d.id} needs a z value")
            z = complex(z)
        else:
            z = None
        consts = dict(d.constants)
        if constants:
            unknown = set(constants) - set(consts)
            if unknown:
                raise DomainError(f"{d.id} has no constants {sorted(unknown)}")
            consts.update(constants)
        ctx = EvalContext(z, Q, policy, consts)
        lhs = complex(d.lhs(ctx))
        rhs = complex(d.rhs(ctx))
        if d.squared_form and squared is not False:
            lhs, rhs = lhs * lhs, rhs * rhs
        if d.scale is not None:
            s = abs(d.scale(ctx))
            if d.squared_form and squared is not False:
                s = s * s
            if s > 0 and math.isfinite(s):
                lhs, rhs = lhs / s, rhs / s
    except IdentityEvaluationError:
        raise
    except (GosperQError, ZeroDivisionError, OverflowError, ValueError) as exc:
        raise IdentityEvaluationError(d.id, exc) from exc
    return _residual(d, z, Q, lhs, rhs)


def _near_trig_zero(z: complex) -> bool:
    return any(abs(z - c) < EXCLUSION_RADIUS for c in TRIG_ZEROS)


def sweep(
    identity_id: str,
    grid: Optional[GridSpec] = None,
    policy: TruncationPolicy = DEFAULT_POLICY,
    constants: Optional[dict] = None,
) -> SweepReport:
    """Evaluate an identity over every grid point.

    Nome-only identities are evaluated once per nome. Point failures are
    collected in ``errors`` and make the report fail.
    """
    d = _catalog.get(identity_id)
    grid = grid or GridSpec()
    report = SweepReport(d.id, grid)
    zs = grid.z_points() if d.has_z else [None]
    points = [(q, z) for q in grid.q_values for z in zs]
    for index, (q, z) in enumerate(points):
        if z is not None and d.divides_trig and _near_trig_zero(z):
            report.skipped += 1
            continue
        try:
            report.records.append(replace(evaluate(d.id, z, q, policy, constants), index=index))
        except IdentityEvaluationError as exc:
            report.errors.append({
                "index": index,
                "z": _jsonable(z),
                "q": _jsonable(complex(q)),
                "kind": type(exc.cause).__name__,
                "error": str(exc),
            })
    return report


def sign_check(
    identity_id: str,
    n: int = 20,
    q_values=(0.1, 0.3),
    z_range=(0.05, 0.7),
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> list[ResidualRecord]:
    """Unsquared comparison of a squared-form identity on real ``z``.

    On ``0 < z < pi/2`` both sides are positive, so the principal root
    must match the left side without squaring.
    """
    d = _catalog.get(identity_id)
    if not d.squared_form:
        raise DomainError(f"{identity_id} is not a squared-form identity")
    lo, hi = z_range
    zs = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    return [evaluate(identity_id, z, q, policy, squared=False) for q in q_values for z in zs]


# -- constant relations from the general derivative identity ------------------

def _rel_k2l2(x: EvalContext):
    return 2, 2, (lambda z: x.T(z, 2) ** 4), (lambda z: x.T(z, 4) ** 2), 4 * (x.Tp(4) / x.Tp(2)) ** 2


def _rel_k3l1a(x: EvalContext):
    return 3, 1, (lambda z: x.T(z, 3) ** 3), (lambda z: x.T(3 * z, 1)), 12 * x.Tp(1) / x.Tp(3)


def _rel_k3l1b(x: EvalContext):
    return 3, 1, (lambda z: x.T(z, 3) ** 3), (lambda z: x.T(z, 9)), 4 * x.Tp(9) / x.Tp(3)


CONSTANT_RELATIONS = {"k2l2": _rel_k2l2, "k3l1a": _rel_k3l1a, "k3l1b": _rel_k3l1b}
FD_STEP_RANGE = (1e-6, 1e-2)


def _fd(h, l: int, step: float) -> complex:
    if l == 1:
        return (h(step) - h(-step)) / (2 * step)
    return (h(step) - 2 * h(0.0) + h(-step)) / (step * step)


def _unstable(a: complex, b: complex, factor: float = 10.0) -> bool:
    """True when two estimates of one derivative are not the same number.

    Flags a size ratio above ``factor``, or a difference larger than the
    smaller estimate (which catches sign flips of equal size).
    """
    ma, mb = abs(a), abs(b)
    if ma == 0.0 and mb == 0.0:
        return False
    if ma == 0.0 or mb == 0.0:
        return True
    return max(ma, mb) / min(ma, mb) > factor or abs(a - b) > min(ma, mb)


def verify_constant_relation(
    instance: str,
    x,
    q=0.3,
    fd_step: float = 1e-3,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> ResidualRecord:
    """Check a closed-form constant of the derivative identity at ``x``.

    The relation is

        h2^(l)(0) (h1(x) + (-1)^l h1(-x)) - h1^(l)(0) (h2(x) + (-1)^l h2(-x))
            = C (l!/2) theta1'(0|tau'/k)^l theta1(x|tau'/k)^(2+l)

    with the derivatives at 0 taken by central differences of step
    ``fd_step``. The residual is truncation dominated, of order
    ``fd_step**2``. Raises :class:`NumericInstabilityError` if the
    difference quotients of ``h2`` at ``fd_step`` and ``fd_step/2`` are not
    the same number (see :func:`_unstable`).
    """
    if instance not in CONSTANT_RELATIONS:
        raise DomainError(f"unknown constant relation {instance!r}; choose from {sorted(CONSTANT_RELATIONS)}")
    lo, hi = FD_STEP_RANGE
    if not lo <= fd_step <= hi:
        raise DomainError(f"fd_step must lie in [{lo:g}, {hi:g}], got {fd_step!r}")
    Q = _as_q(q)
    x = complex(x)
    ctx = EvalContext(x, Q, policy, {})
    k, l, h1, h2, C = CONSTANT_RELATIONS[instance](ctx)
    d1, d2 = _fd(h1, l, fd_step), _fd(h2, l, fd_step)
    # h1 vanishes to order > l at 0 in every instance, so only h2's
    # derivative is a meaningful stability probe.
    if _unstable(d2, _fd(h2, l, fd_step / 2)):
        raise NumericInstabilityError(
            f"{instance}: finite differences unstable at step {fd_step:g} (cancellation dominated)"
        )
    sgn = (-1) ** l
    lhs = d2 * (h1(x) + sgn * h1(-x)) - d1 * (h2(x) + sgn * h2(-x))
    rhs = C * (math.factorial(l) / 2) * ctx.Tp(k) ** l * ctx.T(x, k) ** (2 + l)
    diff = abs(lhs - rhs)
    return ResidualRecord(instance, x, Q.q, lhs, rhs, diff, diff / max(1.0, abs(lhs), abs(rhs)))


def eta_quotient_check(which: str, q=0.3, policy: TruncationPolicy = DEFAULT_POLICY) -> ResidualRecord:
    """Nome-only lemma residual: theta values against the ``Pi_q`` ratio."""
    try:
        identity_id = _catalog.ETA_QUOTIENTS[which]
    except KeyError:
        raise DomainError(f"unknown eta quotient {which!r}; choose from {sorted(_catalog.ETA_QUOTIENTS)}") from None
    return evaluate(identity_id, None, q, policy)
