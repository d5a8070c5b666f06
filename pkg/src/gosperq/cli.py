"""Command-line front end: ``gosperq {list,eval,check,prove}``.

Exit codes: 0 pass, 1 verification failure, 2 usage or domain error,
3 numeric non-convergence, 4 inconclusive formal order.
"""
from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import registry as _catalog
from ._backend import BACKEND
from .errors import DomainError, GosperQError, NonConvergenceError
from .formal import formal_ids, prove
from .qseries import DEFAULT_POLICY, TruncationPolicy
from .qtrig import QParameter, cos_q, pi_q, sin_q
from .verify import GridSpec, _jsonable, sweep
from .theta import theta1_series

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3
EXIT_INCONCLUSIVE = 4

FUNCTIONS = ("sinq", "cosq", "piq", "theta1")
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse ``"a+bi"``, ``"bi"``, ``"i"`` or a plain real number."""
    s = text.strip().replace(" ", "").lower()
    if not s or "n" in s:  # rejects nan/inf spellings
        raise UsageError(f"not a finite complex number: {text!r}")
    try:
        return complex(s.replace("i", "j"))
    except ValueError:
        raise UsageError(f"not a complex number of the form a+bi: {text!r}") from None


def format_complex(v: complex) -> str:
    sign = "-" if v.imag < 0 or (v.imag == 0 and math.copysign(1.0, v.imag) < 0) else "+"
    return f"{v.real!r}{sign}{abs(v.imag)!r}i"


@dataclass
class RunConfig:
    command: str
    ids: list = field(default_factory=list)
    function: Optional[str] = None
    z: Optional[complex] = None
    q: list = field(default_factory=list)
    tau: Optional[complex] = None
    grid: GridSpec = field(default_factory=GridSpec)
    policy: TruncationPolicy = DEFAULT_POLICY
    order: Optional[int] = None
    format: str = "text"
    out: Optional[str] = None
    timing: bool = True


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one diagnostic line, usage exit code
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = _Parser(prog="gosperq", description="q-trigonometric and theta identity verification")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("list", parents=[common], help="list catalogued identities")

    e = sub.add_parser("eval", parents=[common], help="evaluate sinq, cosq, piq or theta1")
    e.add_argument("function", choices=FUNCTIONS)
    e.add_argument("--z", type=str)
    e.add_argument("--q", type=str)
    e.add_argument("--tau", type=str)
    e.add_argument("--tol", type=float, default=DEFAULT_POLICY.tol, help="series truncation tolerance")
    e.add_argument("--max-terms", type=int, default=DEFAULT_POLICY.max_terms)

    c = sub.add_parser("check", parents=[common], help="numeric residual sweep")
    c.add_argument("ids", nargs="+", help='identity ids or "all"')
    c.add_argument("--q", type=str, action="append", help="nome (repeatable, comma lists allowed)")
    c.add_argument("--grid-n", type=int, default=GridSpec.n)
    c.add_argument("--seed", type=int, default=GridSpec.seed)
    c.add_argument("--tol", type=float, default=GridSpec.tol, help="pass tolerance on the relative residual")
    c.add_argument("--max-terms", type=int, default=DEFAULT_POLICY.max_terms)

    f = sub.add_parser("prove", parents=[common], help="exact truncated-series proof")
    f.add_argument("ids", nargs="+", help='formal-capable ids or "all"')
    f.add_argument("--order", type=int, help="truncation order N in the identity's root")
    f.add_argument("--no-timing", action="store_true", help="omit elapsed seconds for byte-stable output")
    return p


def _expand_ids(ids: list, allowed: list, what: str) -> list:
    if ids == ["all"]:
        return sorted(allowed)
    known = set(_catalog.ids())
    for i in ids:
        if i not in known:
            raise UsageError(f"unknown identity id {i!r}")
        if i not in allowed:
            raise UsageError(f"identity {i!r} has no {what} mode")
    return sorted(set(ids))


def config_from_args(argv=None) -> RunConfig:
    a = build_parser().parse_args(argv)
    cfg = RunConfig(command=a.command, format=a.format, out=a.out)
    if a.command == "eval":
        cfg.function = a.function
        cfg.z = parse_complex(a.z) if a.z is not None else None
        if a.q is not None and a.tau is not None:
            raise UsageError("give either --q or --tau, not both")
        cfg.q = [parse_complex(a.q)] if a.q is not None else []
        cfg.tau = parse_complex(a.tau) if a.tau is not None else None
        cfg.policy = TruncationPolicy(a.tol, a.max_terms)
    elif a.command == "check":
        cfg.ids = _expand_ids(a.ids, _catalog.ids(), "numeric")
        qs = [parse_complex(t) for group in (a.q or []) for t in group.split(",") if t.strip()]
        grid = GridSpec(n=a.grid_n, seed=a.seed, tol=a.tol)
        if qs:
            grid = GridSpec(n=a.grid_n, seed=a.seed, tol=a.tol, q_values=tuple(
                q.real if q.imag == 0 else q for q in qs))
        cfg.q = qs
        cfg.grid = grid
        cfg.policy = TruncationPolicy(DEFAULT_POLICY.tol, a.max_terms)
    elif a.command == "prove":
        cfg.ids = _expand_ids(a.ids, formal_ids(), "formal")
        cfg.order = a.order
        cfg.timing = not a.no_timing
    return cfg


# -- commands -----------------------------------------------------------------

def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _dump_csv(header: list, rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_list(cfg: RunConfig) -> tuple[int, str]:
    rows = [{
        "id": d.id,
        "statement_ref": d.statement_ref,
        "variables": d.variables,
        "modes": sorted(d.modes),
        "squared_form": d.squared_form,
        "root_m": d.formal_root,
        "default_order": d.formal_order,
    } for d in _catalog.catalog()]
    if cfg.format == "json":
        return EXIT_PASS, _dump_json(rows)
    if cfg.format == "csv":
        keys = list(rows[0])
        return EXIT_PASS, _dump_csv(keys, [
            ["+".join(r[k]) if k == "modes" else ("" if r[k] is None else r[k]) for k in keys] for r in rows])
    lines = []
    for r in rows:
        formal = f"  m={r['root_m']} N={r['default_order']}" if r["root_m"] else ""
        lines.append(f"{r['id']:<14} {'+'.join(r['modes']):<15} {r['variables']:<9} {r['statement_ref']}{formal}")
    return EXIT_PASS, "\n".join(lines) + "\n"


def _nome(cfg: RunConfig) -> QParameter:
    if cfg.tau is not None:
        tau = cfg.tau
        if tau.imag <= 0:
            raise DomainError(f"tau must lie in the upper half-plane, got {tau!r}")
        log = 1j * math.pi * tau
        return QParameter(cmath.exp(log), log)
    if cfg.q:
        return QParameter(cfg.q[0])
    raise UsageError("--q or --tau is required")


def cmd_eval(cfg: RunConfig) -> tuple[int, str]:
    Q = _nome(cfg)
    fn = cfg.function
    if fn != "piq" and cfg.z is None:
        raise UsageError(f"eval {fn} needs --z")
    if fn == "sinq":
        value = sin_q(cfg.z, Q, cfg.policy)
    elif fn == "cosq":
        value = cos_q(cfg.z, Q, cfg.policy)
    elif fn == "piq":
        value = pi_q(Q, cfg.policy)
    else:
        value = theta1_series(cfg.z, Q.tau, cfg.policy)
    record = {
        "function": fn,
        "z": _jsonable(cfg.z),
        "q": _jsonable(Q.q),
        "tau": _jsonable(Q.tau),
        "value": _jsonable(value),
        "policy": {"tol": cfg.policy.tol, "max_terms": cfg.policy.max_terms},
        "backend": BACKEND,
    }
    if cfg.format == "json":
        return EXIT_PASS, _dump_json(record)
    if cfg.format == "csv":
        return EXIT_PASS, _dump_csv(
            ["function", "value_re", "value_im", "tol", "max_terms", "backend"],
            [[fn, repr(value.real), repr(value.imag), cfg.policy.tol, cfg.policy.max_terms, BACKEND]])
    return EXIT_PASS, (
        f"{format_complex(value)}\n"
        f"# tol={cfg.policy.tol!r} max_terms={cfg.policy.max_terms} backend={BACKEND}\n")


def _check_exit(reports) -> int:
    if all(r.passed for r in reports):
        return EXIT_PASS
    residual_fail = any(r.records and r.max_rel_err > r.grid.tol or not r.records and not r.errors for r in reports)
    only_nonconv = all(e["kind"] == NonConvergenceError.__name__ for r in reports for e in r.errors)
    if not residual_fail and only_nonconv:
        return EXIT_NONCONVERGENCE
    return EXIT_FAIL


def cmd_check(cfg: RunConfig) -> tuple[int, str]:
    reports = [sweep(i, cfg.grid, cfg.policy) for i in cfg.ids]
    code = _check_exit(reports)
    if cfg.format == "json":
        return code, _dump_json([r.to_dict() for r in reports])
    if cfg.format == "csv":
        header = ["id", "index", "z_re", "z_im", "q_re", "q_im", "lhs_re", "lhs_im",
                  "rhs_re", "rhs_im", "abs_err", "rel_err", "pass"]
        rows = []
        for r in reports:
            for rec in r.records:
                z = rec.z if rec.z is not None else complex(math.nan, math.nan)
                rows.append([r.id, rec.index, repr(z.real), repr(z.imag), repr(rec.q.real), repr(rec.q.imag),
                             repr(rec.lhs.real), repr(rec.lhs.imag), repr(rec.rhs.real), repr(rec.rhs.imag),
                             repr(rec.abs_err), repr(rec.rel_err), rec.rel_err <= r.grid.tol])
        return code, _dump_csv(header, rows)
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        extra = f" errors={len(r.errors)}" if r.errors else ""
        lines.append(f"{status} {r.id:<14} max_rel_err={r.max_rel_err:.3e} points={len(r.records)}"
                     f" skipped={r.skipped}{extra}")
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} passed at tol={cfg.grid.tol:g}")
    return code, "\n".join(lines) + "\n"


def cmd_prove(cfg: RunConfig) -> tuple[int, str]:
    reports = [prove(i, cfg.order) for i in cfg.ids]
    if any(not r.verified and not r.inconclusive for r in reports):
        code = EXIT_FAIL
    elif any(r.inconclusive for r in reports):
        code = EXIT_INCONCLUSIVE
    else:
        code = EXIT_PASS
    if cfg.format == "json":
        return code, _dump_json([r.to_dict(timing=cfg.timing) for r in reports])
    if cfg.format == "csv":
        header = ["id", "verified", "inconclusive", "order", "root_m"] + (["elapsed"] if cfg.timing else [])
        rows = [[r.id, r.verified, r.inconclusive, r.order, r.root_m] + ([f"{r.elapsed:.6f}"] if cfg.timing else [])
                for r in reports]
        return code, _dump_csv(header, rows)
    lines = []
    for r in reports:
        if r.verified:
            status = f"verified through t^{r.order} (m={r.root_m})"
        elif r.inconclusive:
            status = f"inconclusive: order {r.order} is below the leading term"
        else:
            mm = r.first_mismatch or {}
            status = f"MISMATCH at t^{mm.get('t_exp')} u^{mm.get('u_exp')} (m={mm.get('root_m')})"
        timing = f" [{r.elapsed:.2f}s]" if cfg.timing else ""
        lines.append(f"{r.id:<10} {status}{timing}")
    return code, "\n".join(lines) + "\n"


COMMANDS = {"list": cmd_list, "eval": cmd_eval, "check": cmd_check, "prove": cmd_prove}


def run(argv=None) -> tuple[int, str]:
    """Parse and execute; returns ``(exit_code, output_text)``."""
    cfg = config_from_args(argv)
    return COMMANDS[cfg.command](cfg)


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
        code, text = COMMANDS[cfg.command](cfg)
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return code
    except UsageError as exc:
        print(f"gosperq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergenceError as exc:
        print(f"gosperq: non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except (DomainError, GosperQError) as exc:
        print(f"gosperq: domain error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"gosperq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
