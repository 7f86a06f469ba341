"""Command-line front end: identity verification runs, object expansion,
operator application, JSON reporting.

Exit codes: 0 all identities pass; 1 at least one identity fails; 2 usage
or expression-parse error; 3 internal error (a builder raised).

Reports written with --json are byte-identical across runs with the same
configuration; volatile timing is printed on the console only and the JSON
summary carries wall_ms: null.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .expr import ExprSyntaxError, parse_expr
from .polyring import QidError, MultiPoly, SYMBOL_BY_NAME, render, symbol
from .qkernel import (
    cauchy_poly, gaussian_binomial, generalized_cauchy_poly, hahn_poly,
    q_pochhammer,
)
from .qoperators import (
    apply_E_frak, apply_E_tilde, apply_L_tilde, apply_R, d_q, theta_single,
    theta_xy,
)
from .tseries import SeriesContext
from .verifier import (
    DEFAULT_ORDER, DEFAULT_Q_VALUES, DEFAULT_SAMPLES, DEFAULT_SEED,
    IdentitySpec, VerificationReport, lookup, registry, run_specs,
)


@dataclass
class RunConfig:
    identity_ids: list[str] | None = None      # None = all
    order: int = DEFAULT_ORDER
    q_values: tuple[Fraction, ...] = DEFAULT_Q_VALUES
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    json_path: str | None = None
    fail_fast: bool = False
    threads: int = 1

    def validate(self) -> None:
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        for q in self.q_values:
            SeriesContext(SYMBOL_BY_NAME["t"], self.order, q)  # raises if invalid


def _threads_from_env() -> int:
    raw = os.environ.get("QID_THREADS")
    if raw is None:
        return 1
    n = int(raw)
    return (os.cpu_count() or 1) if n == 0 else max(1, n)


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational {text!r}") from exc


def report_document(config: RunConfig, reports: list[VerificationReport]) -> dict:
    passed = sum(1 for r in reports if r.status == "pass")
    failed = sum(1 for r in reports if r.status == "fail")
    errored = sum(1 for r in reports if r.status == "error")
    return {
        "version": __version__,
        "seed": config.seed,
        "order": config.order,
        "q_values": [str(q) for q in config.q_values],
        "identities": [r.to_json_dict() for r in reports],
        "summary": {"passed": passed, "failed": failed, "errored": errored,
                    "wall_ms": None},
    }


def run(config: RunConfig) -> int:
    """Execute the verification run described by config; returns exit code."""
    config.validate()
    if config.identity_ids is None:
        specs = registry()
    else:
        specs = [lookup(i) for i in config.identity_ids]
    t0 = time.perf_counter()
    reports = run_specs(specs, config.order, config.q_values, config.samples,
                        config.seed, threads=config.threads,
                        fail_fast=config.fail_fast)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    for rep in reports:
        ok = sum(1 for s in rep.samples if s.status == "pass")
        print(f"{rep.status.upper():5s} {rep.identity_id:28s} [{rep.kind}] "
              f"{ok}/{len(rep.samples)} samples")
        for s in rep.samples:
            if s.status == "fail":
                print(f"      q={s.q} assignment={s.assignment}")
                print(f"      first mismatch at order {s.first_mismatch_order}"
                      + (f" in {s.detail}" if s.detail else ""))
                print(f"      lhs: {s.lhs_coeff}")
                print(f"      rhs: {s.rhs_coeff}")
            elif s.status == "error":
                print(f"      q={s.q} error: {s.detail}")
    doc = report_document(config, reports)
    summary = doc["summary"]
    print(f"summary: {summary['passed']} passed, {summary['failed']} failed, "
          f"{summary['errored']} errored in {wall_ms:.0f} ms")
    if config.json_path:
        with open(config.json_path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    if summary["errored"]:
        return 3
    if summary["failed"]:
        return 1
    return 0


# -- expand / apply subcommands ----------------------------------------------

def _cmd_list(_args) -> int:
    for spec in registry():
        aliases = ", ".join(spec.aliases)
        print(f"{spec.id:28s} [{spec.kind}] ({aliases})")
        print(f"    {spec.reference}")
    return 0


def _cmd_verify(args) -> int:
    ids = None if args.all else list(args.id or [])
    if not args.all and not ids:
        print("verify: pass --all or at least one --id", file=sys.stderr)
        return 2
    q_values = tuple(_parse_rational(q) for q in args.q) if args.q else DEFAULT_Q_VALUES
    config = RunConfig(identity_ids=ids, order=args.order, q_values=q_values,
                       samples=args.samples, seed=args.seed,
                       json_path=args.json, fail_fast=args.fail_fast,
                       threads=_threads_from_env())
    return run(config)


def _cmd_expand(args) -> int:
    n = args.n
    if n < 0:
        raise ValueError("n must be >= 0")
    if args.family == "pochhammer":
        result = q_pochhammer(parse_expr(args.base), n)
    elif args.family == "qbinom":
        result = gaussian_binomial(n, args.k)
    elif args.family == "cauchy":
        result = cauchy_poly(n)
    elif args.family == "gencauchy":
        result = generalized_cauchy_poly(n)
    else:
        result = hahn_poly(n, parse_expr(args.param))
    print(render(result))
    return 0


def _cmd_apply(args) -> int:
    poly = parse_expr(args.poly)
    var = symbol(args.var)
    if args.op == "dq":
        result = d_q(poly, var)
    elif args.op == "theta":
        result = theta_single(poly, var)
    elif args.op == "thetaxy":
        result = theta_xy(poly, symbol(args.xvar), symbol(args.yvar))
    elif args.op == "R":
        result = apply_R(parse_expr(args.b), poly, var)
    elif args.op == "Efrak":
        result = apply_E_frak(parse_expr(args.b), poly, var)
    elif args.op == "Etilde":
        result = apply_E_tilde(parse_expr(args.a), parse_expr(args.b), poly, var)
    else:
        result = apply_L_tilde(parse_expr(args.a), parse_expr(args.b), poly,
                               symbol(args.xvar), symbol(args.yvar))
    print(render(result))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qid", description="exact q-series identity verification")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list the identity catalog")

    p_verify = sub.add_parser("verify", help="verify identities")
    p_verify.add_argument("--id", action="append",
                          help="identity id or alias (repeatable)")
    p_verify.add_argument("--all", action="store_true", help="verify everything")
    p_verify.add_argument("--order", type=int, default=DEFAULT_ORDER,
                          help="series truncation order N (default 8)")
    p_verify.add_argument("--q", action="append",
                          help="rational q value, repeatable (default 1/2, 2/3, -1/3)")
    p_verify.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                          help="parameter assignments per q (default 3)")
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--json", help="write the JSON report here")
    p_verify.add_argument("--fail-fast", action="store_true")

    p_expand = sub.add_parser("expand", help="print a family member")
    p_expand.add_argument("family", choices=["pochhammer", "qbinom", "cauchy",
                                             "gencauchy", "hahn"])
    p_expand.add_argument("--n", type=int, required=True)
    p_expand.add_argument("--k", type=int, default=0, help="qbinom lower index")
    p_expand.add_argument("--base", default="a", help="pochhammer base expression")
    p_expand.add_argument("--param", default="alpha", help="hahn parameter")

    p_apply = sub.add_parser("apply", help="apply an operator to a polynomial")
    p_apply.add_argument("op", choices=["dq", "theta", "thetaxy", "R", "Efrak",
                                        "Etilde", "Ltilde"])
    p_apply.add_argument("--poly", required=True, help="operand expression")
    p_apply.add_argument("--var", default="x", help="acted-on variable")
    p_apply.add_argument("--xvar", default="x")
    p_apply.add_argument("--yvar", default="y")
    p_apply.add_argument("--a", default="a", help="pochhammer parameter expression")
    p_apply.add_argument("--b", default="y", help="operator multiplier expression")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"list": _cmd_list, "verify": _cmd_verify,
                "expand": _cmd_expand, "apply": _cmd_apply}
    try:
        return handlers[args.command](args)
    except ExprSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QidError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
