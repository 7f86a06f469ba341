"""Verification engine: deterministic sampling of identity instances, exact
construction of both sides, and structured pass/fail reporting.

Identities come in four kinds:

    symbolic-poly       exact MultiPoly equalities with symbolic q
    series              TruncatedSeries equalities at each configured q
    generate-and-check  seed a polynomial f0, build f by an operator series,
                        check the associated q-difference equation exactly
    transform           finite coefficient sequences pushed through the
                        generating-function transform

A verification never approximates: a sample passes iff every compared
coefficient is identical as an exact rational/polynomial.  Failures carry
the first mismatching order and both offending coefficients, so a wrong
identity yields a minimal counterexample instead of a crash.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .polyring import QidError, MultiPoly, Symbol, render
from .tseries import SeriesContext, TruncatedSeries

DEFAULT_SEED = 20240601
DEFAULT_ORDER = 8
DEFAULT_SAMPLES = 3
DEFAULT_Q_VALUES: tuple[Fraction, ...] = (
    Fraction(1, 2), Fraction(2, 3), Fraction(-1, 3))


class SampleExhaustion(QidError):
    """Could not draw an assignment satisfying the identity's constraints."""


@dataclass(frozen=True)
class KnobSpec:
    """An integer parameter of an identity (sampled uniformly in [lo, hi])."""
    name: str
    lo: int
    hi: int


@dataclass(frozen=True)
class CoeffSequence:
    """Finite-support coefficient sequence k -> B(k) for the transform."""
    support: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_dict(cls, d: Mapping[int, Fraction | int]) -> "CoeffSequence":
        items = tuple(sorted((int(k), Fraction(v)) for k, v in d.items()))
        return cls(items)

    def items(self):
        return self.support


@dataclass
class BuildInput:
    """Everything an identity builder sees for one sample."""
    ctx: SeriesContext | None
    params: dict[Symbol, Fraction]
    knobs: dict[str, int]
    rng: random.Random

    def __getitem__(self, sym: Symbol) -> Fraction:
        return self.params[sym]


@dataclass
class Comparison:
    """One exact equality to check; sides are MultiPoly or TruncatedSeries."""
    label: str
    lhs: Union[MultiPoly, TruncatedSeries]
    rhs: Union[MultiPoly, TruncatedSeries]
    order: int | None = None   # reported order on mismatch (else list index)


Builder = Callable[[BuildInput], Sequence[Comparison]]


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    kind: str                     # symbolic-poly | series | generate-and-check | transform
    reference: str                # the identity, written out
    build: Builder
    params: tuple[Symbol, ...] = ()
    knobs: tuple[KnobSpec, ...] = ()
    constraint: Callable[[dict], bool] | None = None
    aliases: tuple[str, ...] = ()
    uses_rng: bool = False        # builder draws randomness beyond params/knobs

    @property
    def is_series_kind(self) -> bool:
        return self.kind in ("series", "transform")

    @property
    def is_sampled(self) -> bool:
        return bool(self.params or self.knobs or self.uses_rng)


@dataclass
class SampleResult:
    assignment: dict[str, str | int]
    q: str
    status: str                   # pass | fail | error
    first_mismatch_order: int | None = None
    lhs_coeff: str | None = None
    rhs_coeff: str | None = None
    detail: str | None = None     # console diagnostics; not serialized

    def to_json_dict(self) -> dict:
        out: dict = {"assignment": self.assignment, "q": self.q,
                     "status": self.status}
        if self.status == "fail":
            out["first_mismatch_order"] = self.first_mismatch_order
            out["lhs_coeff"] = self.lhs_coeff
            out["rhs_coeff"] = self.rhs_coeff
        return out


@dataclass
class VerificationReport:
    identity_id: str
    kind: str
    reference: str
    samples: list[SampleResult] = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def status(self) -> str:
        if any(s.status == "error" for s in self.samples):
            return "error"
        if any(s.status == "fail" for s in self.samples):
            return "fail"
        return "pass"

    def to_json_dict(self) -> dict:
        return {"id": self.identity_id,
                "paper_ref": self.reference,
                "kind": self.kind,
                "samples": [s.to_json_dict() for s in self.samples],
                "status": self.status}


# -- sampling -----------------------------------------------------------------

def _small_rational(rng: random.Random) -> Fraction:
    """Nonzero rational with numerator and denominator at most 7."""
    num = rng.randint(1, 7) * rng.choice((-1, 1))
    return Fraction(num, rng.randint(1, 7))


def _draw_assignment(spec: IdentitySpec, rng: random.Random,
                     max_retries: int = 20) -> tuple[dict[Symbol, Fraction], dict[str, int]]:
    for _ in range(max_retries + 1):
        params = {sym: _small_rational(rng) for sym in spec.params}
        knobs = {k.name: rng.randint(k.lo, k.hi) for k in spec.knobs}
        if spec.constraint is None or spec.constraint({**params, **knobs}):
            return params, knobs
    raise SampleExhaustion(f"{spec.id}: constraints unsatisfied after {max_retries} retries")


def _assignment_json(params: Mapping[Symbol, Fraction],
                     knobs: Mapping[str, int]) -> dict[str, str | int]:
    out: dict[str, str | int] = {sym.name: str(v) for sym, v in params.items()}
    out.update(knobs)
    return out


# -- comparison ---------------------------------------------------------------

def _compare(comparisons: Sequence[Comparison]) -> tuple[int, str, str, str] | None:
    """First mismatch as (order, label, lhs, rhs), or None if all equal."""
    for idx, comp in enumerate(comparisons):
        if isinstance(comp.lhs, TruncatedSeries):
            if comp.lhs.context != comp.rhs.context:
                raise QidError(f"{comp.label}: sides built in different contexts")
            for k, (lc, rc) in enumerate(zip(comp.lhs.coeffs, comp.rhs.coeffs)):
                if lc != rc:
                    return k, comp.label, render(lc), render(rc)
        else:
            if comp.lhs != comp.rhs:
                order = comp.order if comp.order is not None else idx
                return order, comp.label, render(comp.lhs), render(comp.rhs)
    return None


def run_sample(spec: IdentitySpec, order: int, q_value: Fraction | None,
               sample_index: int, seed: int) -> SampleResult:
    """Build and check one sample; deterministic in all arguments."""
    q_label = "symbolic" if q_value is None else str(q_value)
    rng = random.Random(f"{seed}|{spec.id}|{q_label}|{sample_index}")
    try:
        params, knobs = _draw_assignment(spec, rng)
        ctx = None
        if q_value is not None:
            var = _series_var_for(spec)
            ctx = SeriesContext(var, order, q_value)
        comparisons = spec.build(BuildInput(ctx, params, knobs, rng))
        mismatch = _compare(comparisons)
    except QidError as exc:
        return SampleResult({}, q_label, "error", detail=f"{type(exc).__name__}: {exc}")
    assignment = _assignment_json(params, knobs)
    if mismatch is None:
        return SampleResult(assignment, q_label, "pass")
    k, label, lhs, rhs = mismatch
    return SampleResult(assignment, q_label, "fail", first_mismatch_order=k,
                        lhs_coeff=lhs, rhs_coeff=rhs, detail=label)


def _series_var_for(spec: IdentitySpec) -> Symbol:
    from .polyring import T, Z
    return Z if spec.id in ("cauchy-identity", "euler-identity", "euler-inverse") else T


# -- report assembly ----------------------------------------------------------

def _sample_plan(spec: IdentitySpec, q_values: Sequence[Fraction],
                 samples: int) -> list[tuple[Fraction | None, int]]:
    if spec.is_series_kind:
        return [(q, i) for q in q_values for i in range(samples)]
    count = samples if spec.is_sampled else 1
    return [(None, i) for i in range(count)]


def verify(spec: IdentitySpec, ctx: SeriesContext | None = None,
           samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> VerificationReport:
    """Verify one identity at a single context (or symbolically)."""
    order = ctx.order if ctx else DEFAULT_ORDER
    q_values = (ctx.q_value,) if ctx else DEFAULT_Q_VALUES
    return verify_identity(spec, order, q_values, samples, seed)


def verify_identity(spec: IdentitySpec, order: int,
                    q_values: Sequence[Fraction], samples: int,
                    seed: int) -> VerificationReport:
    report = VerificationReport(spec.id, spec.kind, spec.reference)
    t0 = time.perf_counter()
    for q, i in _sample_plan(spec, q_values, samples):
        report.samples.append(run_sample(spec, order, q, i, seed))
    report.wall_ms = (time.perf_counter() - t0) * 1000.0
    return report


def run_specs(specs: Sequence[IdentitySpec], order: int = DEFAULT_ORDER,
              q_values: Sequence[Fraction] = DEFAULT_Q_VALUES,
              samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED,
              threads: int = 1, fail_fast: bool = False) -> list[VerificationReport]:
    """Verify many identities; results are merged deterministically."""
    reports = []
    if threads > 1 and not fail_fast:
        tasks = [(si, spec, q, i)
                 for si, spec in enumerate(specs)
                 for q, i in _sample_plan(spec, q_values, samples)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(
                lambda t: run_sample(t[1], order, t[2], t[3], seed), tasks))
        by_spec: dict[int, list[SampleResult]] = {}
        for (si, _, _, _), res in zip(tasks, results):
            by_spec.setdefault(si, []).append(res)
        for si, spec in enumerate(specs):
            reports.append(VerificationReport(spec.id, spec.kind, spec.reference,
                                              by_spec.get(si, [])))
        return reports
    for spec in specs:
        report = verify_identity(spec, order, q_values, samples, seed)
        reports.append(report)
        if fail_fast and report.status != "pass":
            break
    return reports


def generate_and_check(spec: IdentitySpec, f0_degree: int = 4,
                       samples: int = 5, seed: int = DEFAULT_SEED) -> VerificationReport:
    """Run a generate-and-check identity with an explicit seed-poly degree."""
    if spec.kind != "generate-and-check":
        raise ValueError(f"{spec.id} is not a generate-and-check identity")
    forced = IdentitySpec(spec.id, spec.kind, spec.reference, spec.build,
                          spec.params,
                          (KnobSpec("f0_degree", f0_degree, f0_degree),),
                          spec.constraint, spec.aliases, spec.uses_rng)
    return verify_identity(forced, DEFAULT_ORDER, (), samples, seed)


def transform_check(B: CoeffSequence, ctx: SeriesContext,
                    assignment: Mapping[Symbol, Fraction]) -> VerificationReport:
    """Check the generating-function transform for one explicit B sequence."""
    from .registry import transform_comparisons
    from .polyring import A, X, Y
    x = Fraction(assignment[X])
    if x == 0:
        raise ValueError("x must be nonzero")
    y = Fraction(assignment.get(Y, 0))
    a = Fraction(assignment.get(A, 0))
    report = VerificationReport("transform-pair", "transform", "explicit B sequence")
    t0 = time.perf_counter()
    try:
        mismatch = _compare(transform_comparisons(B, ctx, x, y, a))
    except QidError as exc:
        report.samples.append(SampleResult({}, str(ctx.q_value), "error",
                                           detail=f"{type(exc).__name__}: {exc}"))
        return report
    asg = {sym.name: str(v) for sym, v in assignment.items()}
    asg["B"] = "{" + ", ".join(f"{k}: {v}" for k, v in B.items()) + "}"
    if mismatch is None:
        report.samples.append(SampleResult(asg, str(ctx.q_value), "pass"))
    else:
        k, label, lhs, rhs = mismatch
        report.samples.append(SampleResult(asg, str(ctx.q_value), "fail",
                                           first_mismatch_order=k,
                                           lhs_coeff=lhs, rhs_coeff=rhs,
                                           detail=label))
    report.wall_ms = (time.perf_counter() - t0) * 1000.0
    return report


def registry() -> list[IdentitySpec]:
    """All identities known to the verifier, in catalog order."""
    from .registry import all_specs
    return all_specs()


def lookup(identity_id: str) -> IdentitySpec:
    """Find an identity by id or alias."""
    for spec in registry():
        if identity_id == spec.id or identity_id in spec.aliases:
            return spec
    raise KeyError(f"unknown identity {identity_id!r}")
