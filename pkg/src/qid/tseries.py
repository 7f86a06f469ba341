"""Truncated formal power series in one series variable with exact
polynomial coefficients and a fixed rational q.

A series lives in a SeriesContext (series variable, truncation order N,
numeric q with |q| not in {0, 1}, which guarantees (q;q)_n != 0).  The
coefficients are MultiPoly values that contain neither the series variable
nor the symbol q.  Everything is exact: two series are equal iff every
retained coefficient is identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .polyring import Q, QidError, MultiPoly, Symbol, render
from .qkernel import PolyLike, as_poly, binom2, q_pochhammer_value


class ContextMismatch(QidError):
    """Operands come from different series contexts."""


class NonUnitConstantTerm(QidError):
    """Series inversion needs a nonzero rational constant term."""


class NonInvertibleDenParam(QidError):
    """A denominator parameter of phi_rs has a non-invertible (d;q)_n."""

    def __init__(self, index: int, n: int, detail: str):
        super().__init__(f"denominator parameter #{index} at n={n}: {detail}")
        self.index = index
        self.n = n


@dataclass(frozen=True)
class SeriesContext:
    series_var: Symbol
    order: int
    q_value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q_value", Fraction(self.q_value))
        if self.order < 1:
            raise ValueError("order must be >= 1")
        q = self.q_value
        if q == 0 or abs(q.numerator) == q.denominator:
            raise ValueError(f"q = {q} must satisfy q != 0 and |q| != 1")

    def qq(self, n: int) -> Fraction:
        """(q;q)_n, nonzero by the context invariant."""
        return q_pochhammer_value(self.q_value, self.q_value, n)


class TruncatedSeries:
    """Degree-capped power series; coeffs[k] is the coefficient of var^k."""

    __slots__ = ("context", "coeffs")

    def __init__(self, context: SeriesContext, coeffs: Sequence[MultiPoly]):
        if len(coeffs) != context.order + 1:
            raise ValueError("need exactly order+1 coefficients")
        for c in coeffs:
            if c.has_symbol(context.series_var) or c.has_symbol(Q):
                raise ValueError(
                    f"coefficient {render(c)} contains q or the series variable")
        self.context = context
        self.coeffs = list(coeffs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, value: PolyLike, ctx: SeriesContext) -> "TruncatedSeries":
        coeffs = [MultiPoly.zero()] * (ctx.order + 1)
        coeffs[0] = as_poly(value)
        return cls(ctx, coeffs)

    @classmethod
    def monomial(cls, value: PolyLike, k: int, ctx: SeriesContext) -> "TruncatedSeries":
        """value * var^k (zero series if k exceeds the order)."""
        coeffs = [MultiPoly.zero()] * (ctx.order + 1)
        if 0 <= k <= ctx.order:
            coeffs[k] = as_poly(value)
        return cls(ctx, coeffs)

    @classmethod
    def from_poly(cls, p: MultiPoly, ctx: SeriesContext) -> "TruncatedSeries":
        """Split a polynomial by powers of the series variable."""
        if p.has_symbol(Q):
            raise ValueError("series coefficients cannot contain the symbol q")
        if p.min_degree_in(ctx.series_var) < 0:
            raise ValueError("negative powers of the series variable")
        coeffs = [p.coeff_of(ctx.series_var, k) for k in range(ctx.order + 1)]
        return cls(ctx, coeffs)

    # -- basic operations ----------------------------------------------------

    def _require_same(self, other: "TruncatedSeries") -> None:
        if self.context != other.context:
            raise ContextMismatch(f"{self.context} vs {other.context}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same(other)
        return TruncatedSeries(self.context,
                               [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same(other)
        return TruncatedSeries(self.context,
                               [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.context, [-c for c in self.coeffs])

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._require_same(other)
        n = self.context.order
        out = [MultiPoly.zero() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.context, out)

    def __rmul__(self, other) -> "TruncatedSeries":
        return self.scale(other)

    def scale(self, value: PolyLike) -> "TruncatedSeries":
        v = as_poly(value)
        return TruncatedSeries(self.context, [c * v for c in self.coeffs])

    def shift(self, m: int) -> "TruncatedSeries":
        """Multiply by var^m (m >= 0), dropping overflow past the order."""
        if m < 0:
            raise ValueError("shift must be >= 0")
        n = self.context.order
        out = [MultiPoly.zero() for _ in range(n + 1)]
        for k in range(n + 1 - m):
            out[k + m] = self.coeffs[k]
        return TruncatedSeries(self.context, out)

    def truncate(self, order: int) -> "TruncatedSeries":
        """The same series in a lower-order context."""
        if order > self.context.order:
            raise ValueError("cannot extend a truncated series")
        ctx = SeriesContext(self.context.series_var, order, self.context.q_value)
        return TruncatedSeries(ctx, self.coeffs[:order + 1])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.context == other.context and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.render()})"

    def render(self) -> str:
        name = self.context.series_var.name
        return "\n".join(f"{name}^{k}: {render(c)}"
                         for k, c in enumerate(self.coeffs))

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a nonzero rational."""
        c0 = self.coeffs[0]
        if not c0.is_const() or c0.is_zero():
            raise NonUnitConstantTerm(f"constant term {render(c0)}")
        u = Fraction(1) / c0.const_value()
        n = self.context.order
        out = [MultiPoly.zero() for _ in range(n + 1)]
        out[0] = MultiPoly.const(u)
        for k in range(1, n + 1):
            acc = MultiPoly.zero()
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + self.coeffs[j] * out[k - j]
            out[k] = -u * acc
        return TruncatedSeries(self.context, out)


def map_coefficients(series: TruncatedSeries,
                     op: Callable[[MultiPoly], MultiPoly]) -> TruncatedSeries:
    """Apply op to each coefficient (e.g. a D_q acting inside the coefficients)."""
    return TruncatedSeries(series.context, [op(c) for c in series.coeffs])


def scale_series_var(series: TruncatedSeries, j: int) -> TruncatedSeries:
    """Substitute var -> q^j var: coefficient k picks up q^(jk)."""
    q = series.context.q_value
    return TruncatedSeries(series.context,
                           [c * q ** (j * k) for k, c in enumerate(series.coeffs)])


# -- pochhammer-type builders --------------------------------------------------

def euler_inv_pochhammer(u: PolyLike, ctx: SeriesContext) -> TruncatedSeries:
    """1/(u t; q)_infinity = sum_k u^k t^k / (q;q)_k."""
    u = _t_free(as_poly(u), ctx)
    return TruncatedSeries(
        ctx, [u ** k / ctx.qq(k) for k in range(ctx.order + 1)])


def euler_pochhammer(u: PolyLike, ctx: SeriesContext) -> TruncatedSeries:
    """(u t; q)_infinity = sum_k (-1)^k q^(k 2) u^k t^k / (q;q)_k."""
    u = _t_free(as_poly(u), ctx)
    q = ctx.q_value
    coeffs = []
    for k in range(ctx.order + 1):
        c = u ** k * (q ** binom2(k) / ctx.qq(k))
        coeffs.append(c if k % 2 == 0 else -c)
    return TruncatedSeries(ctx, coeffs)


def finite_pochhammer_series(u: PolyLike, n: int, ctx: SeriesContext) -> TruncatedSeries:
    """(u t; q)_n = prod_{j<n} (1 - u q^j t), exact polynomial in t."""
    u = _t_free(as_poly(u), ctx)
    q = ctx.q_value
    out = TruncatedSeries.constant(1, ctx)
    for j in range(n):
        factor = (TruncatedSeries.constant(1, ctx)
                  - TruncatedSeries.monomial(u * q ** j, 1, ctx))
        out = out * factor
    return out


def _t_free(p: MultiPoly, ctx: SeriesContext) -> MultiPoly:
    if p.has_symbol(ctx.series_var) or p.has_symbol(Q):
        raise ValueError(f"{render(p)} must be free of q and the series variable")
    return p


def _param_pochhammer(param: TruncatedSeries, n: int) -> TruncatedSeries:
    """(param; q)_n where param is itself a series (may involve t)."""
    ctx = param.context
    q = ctx.q_value
    out = TruncatedSeries.constant(1, ctx)
    for j in range(n):
        out = out * (TruncatedSeries.constant(1, ctx) - param * (q ** j))
    return out


def phi_rs(num: Sequence[Union[PolyLike, TruncatedSeries]],
           den: Sequence[Union[PolyLike, TruncatedSeries]],
           arg_coeff: PolyLike, arg_tpower: int,
           ctx: SeriesContext) -> TruncatedSeries:
    """Basic hypergeometric series rPhis with argument arg_coeff * t^arg_tpower.

    Term n carries [(-1)^n q^(n 2)]^(1+s-r) prod(a_i;q)_n / prod(b_j;q)_n
    * arg^n / (q;q)_n and enters at t-order >= n*arg_tpower.  Parameters may
    be rationals, t-free polynomials, or polynomials/series in t (used for
    denominator parameters like lam*t).  Each (b_j;q)_n must have a nonzero
    rational t^0 coefficient, else NonInvertibleDenParam.
    """
    if arg_tpower < 1:
        raise ValueError("arg_tpower must be >= 1")
    arg_coeff = _t_free(as_poly(arg_coeff), ctx)
    num_s = [_as_series(v, ctx) for v in num]
    den_s = [_as_series(v, ctx) for v in den]
    exponent = 1 + len(den) - len(num)
    q = ctx.q_value
    total = TruncatedSeries.constant(0, ctx)
    for n in range(ctx.order // arg_tpower + 1):
        term = TruncatedSeries.constant(1, ctx)
        for p in num_s:
            term = term * _param_pochhammer(p, n)
        for idx, p in enumerate(den_s):
            dpoch = _param_pochhammer(p, n)
            c0 = dpoch.coeffs[0]
            if not c0.is_const() or c0.is_zero():
                raise NonInvertibleDenParam(idx, n, f"(d;q)_n starts with {render(c0)}")
            term = term * dpoch.invert()
        sign_base = q ** binom2(n) * (-1 if n % 2 else 1)
        scalar = Fraction(sign_base) ** exponent / ctx.qq(n)
        term = term.scale(arg_coeff ** n * scalar)
        total = total + term.shift(n * arg_tpower)
    return total


def _as_series(v, ctx: SeriesContext) -> TruncatedSeries:
    if isinstance(v, TruncatedSeries):
        if v.context != ctx:
            raise ContextMismatch("parameter series from another context")
        return v
    p = as_poly(v)
    if p.has_symbol(ctx.series_var):
        return TruncatedSeries.from_poly(p, ctx)
    return TruncatedSeries.constant(p, ctx)
