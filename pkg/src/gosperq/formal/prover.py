"""Coefficient-by-coefficient verification of the theta identities.

A proof report certifies equality of finitely many coefficients: the
statement is always "verified through t^N", never more.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from math import lcm
from typing import Optional

from ..errors import ContractError
from .identities import FORMAL_IDENTITIES, DualContext, FormalIdentity, FormalPart, NomeContext

_MAX_REBUILDS = 6


@dataclass
class PartReport:
    variable: str
    root_m: int
    order: int
    verified: bool
    inconclusive: bool
    compared_terms: int
    first_mismatch: Optional[dict] = None


@dataclass
class ProofReport:
    id: str
    verified: bool
    inconclusive: bool
    order: int
    root_m: int
    elapsed: float
    first_mismatch: Optional[dict] = None
    parts: list[PartReport] = field(default_factory=list)

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("elapsed")
        return d


def formal_ids() -> list[str]:
    return list(FORMAL_IDENTITIES)


def _prove_part(part: FormalPart, order: int, constants: dict) -> PartReport:
    if part.variable == "dual":
        root = lcm(part.root, *(4 * k for k in part.nomes(constants)))
    else:
        root = part.root
    ratio = root // part.root
    target = order * ratio
    work = target
    for _ in range(_MAX_REBUILDS):
        ctx = DualContext(root, work) if part.variable == "dual" else NomeContext(root, work)
        lhs, rhs = part.build(ctx, constants)
        reached = min(lhs.prec, rhs.prec)
        if reached >= target:
            break
        work += target - reached
    else:  # pragma: no cover - precision loss is bounded by construction
        raise ContractError(f"could not reach t^{target} after {_MAX_REBUILDS} rebuilds")

    leading = min(lhs.valuation(), rhs.valuation())
    compared = len({e for e, _ in lhs.items() if e <= target} | {e for e, _ in rhs.items() if e <= target})
    if leading > target:
        return PartReport(part.variable, root, order, False, True, 0)
    diff = lhs.first_difference(rhs, target)
    mismatch = None
    if diff is not None:
        t_exp, u_exp, a, b = diff
        mismatch = {"t_exp": t_exp, "u_exp": u_exp, "lhs": str(a), "rhs": str(b), "root_m": root}
    return PartReport(part.variable, root, order, diff is None, False, compared, mismatch)


def prove(identity_id: str, order: Optional[int] = None, constants: Optional[dict] = None) -> ProofReport:
    """Expand both sides of ``identity_id`` and compare every coefficient through ``t**order``.

    ``order`` is counted in the identity's base root. ``constants`` overrides
    named constants (used for mutation tests); unknown names are rejected.
    """
    try:
        fi: FormalIdentity = FORMAL_IDENTITIES[identity_id]
    except KeyError:
        raise ContractError(f"{identity_id!r} has no formal mode") from None
    c = dict(fi.constants)
    for name, value in (constants or {}).items():
        if name not in c:
            raise ContractError(f"{identity_id} has no constant {name!r}; known: {sorted(c)}")
        c[name] = value
    N = fi.default_order if order is None else order
    if N < 0:
        raise ContractError(f"order must be nonnegative, got {N}")

    start = time.perf_counter()
    parts = [_prove_part(p, N, c) for p in fi.parts]
    elapsed = time.perf_counter() - start
    inconclusive = any(p.inconclusive for p in parts)
    verified = not inconclusive and all(p.verified for p in parts)
    mismatch = next((p.first_mismatch for p in parts if p.first_mismatch), None)
    return ProofReport(identity_id, verified, inconclusive, N, fi.root, elapsed, mismatch, parts)
