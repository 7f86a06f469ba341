"""Constructors for the polynomial families of the q-calculus kernel:
q-shifted factorials, Gaussian binomials, Cauchy polynomials p_n(x,y),
their a-deformation p_n(x,y,a), and Hahn polynomials phi_n^(a)(x|q).

All constructors accept either the default global symbols or explicit
arguments (symbols, polynomials, or rationals), and work with a symbolic q
as well as a fixed rational q.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .polyring import (
    A, ALPHA, Q, QidError, MultiPoly, Symbol, X, Y, render,
)

PolyLike = Union[MultiPoly, Symbol, Fraction, int]
QLike = Union[Symbol, Fraction, int]


class NotInSpan(QidError):
    """Polynomial is not a scalar combination of the requested basis."""


def as_poly(v: PolyLike) -> MultiPoly:
    if isinstance(v, MultiPoly):
        return v
    if isinstance(v, Symbol):
        return MultiPoly.var(v)
    return MultiPoly.const(v)


def _q_power(q: QLike, k: int) -> MultiPoly:
    if isinstance(q, Symbol):
        return MultiPoly.var(q, k)
    return MultiPoly.const(Fraction(q) ** k)


def binom2(k: int) -> int:
    """k choose 2."""
    return k * (k - 1) // 2


def q_pochhammer(base: PolyLike, n: int, q: QLike = Q) -> MultiPoly:
    """(base; q)_n = prod_{k<n} (1 - base*q^k); empty product for n = 0."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    base = as_poly(base)
    out = MultiPoly.const(1)
    for k in range(n):
        out = out * (MultiPoly.const(1) - base * _q_power(q, k))
    return out


@lru_cache(maxsize=None)
def q_pochhammer_value(base: Fraction, q: Fraction, n: int) -> Fraction:
    """(base; q)_n for rational base and q."""
    out = Fraction(1)
    for k in range(n):
        out *= 1 - base * q ** k
    return out


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> MultiPoly:
    """q-binomial [n; k]_q as a polynomial in q (0 outside 0 <= k <= n).

    Computed by the q-Pascal recurrence [n;k] = [n-1;k-1] + q^k*[n-1;k],
    which never divides and so stays valid for symbolic q.
    """
    if k < 0 or k > n:
        return MultiPoly.zero()
    if k == 0 or k == n:
        return MultiPoly.const(1)
    return gaussian_binomial(n - 1, k - 1) + MultiPoly.var(Q, k) * gaussian_binomial(n - 1, k)


def gaussian_binomial_value(n: int, k: int, q: Fraction) -> Fraction:
    """[n; k]_q at a rational q with (q;q)_m != 0."""
    if k < 0 or k > n:
        return Fraction(0)
    return q_pochhammer_value(q, q, n) / (
        q_pochhammer_value(q, q, k) * q_pochhammer_value(q, q, n - k))


def _qbin(n: int, k: int, q: QLike) -> MultiPoly:
    if isinstance(q, Symbol):
        if q != Q:
            raise ValueError("symbolic q-binomials are built in the symbol q")
        return gaussian_binomial(n, k)
    return MultiPoly.const(gaussian_binomial_value(n, k, Fraction(q)))


def cauchy_poly(n: int, x: PolyLike = X, y: PolyLike = Y, q: QLike = Q) -> MultiPoly:
    """p_n(x,y) = (x-y)(x-qy)...(x-q^(n-1)y)."""
    x, y = as_poly(x), as_poly(y)
    out = MultiPoly.const(1)
    for j in range(n):
        out = out * (x - y * _q_power(q, j))
    return out


def generalized_cauchy_poly(n: int, x: PolyLike = X, y: PolyLike = Y,
                            a: PolyLike = A, q: QLike = Q) -> MultiPoly:
    """p_n(x,y,a) = sum_k [n;k]_q (-1)^k q^(k choose 2) (a;q)_k x^(n-k) y^k.

    Setting a = 0 recovers cauchy_poly(n).
    """
    x, y, a = as_poly(x), as_poly(y), as_poly(a)
    out = MultiPoly.zero()
    for k in range(n + 1):
        term = (_qbin(n, k, q) * q_pochhammer(a, k, q)
                * _q_power(q, binom2(k)) * x ** (n - k) * y ** k)
        out = out + (term if k % 2 == 0 else -term)
    return out


def hahn_poly(n: int, param: PolyLike = ALPHA, x: PolyLike = X,
              q: QLike = Q) -> MultiPoly:
    """phi_n^(param)(x|q) = sum_k [n;k]_q (param;q)_k x^k."""
    param, x = as_poly(param), as_poly(x)
    out = MultiPoly.zero()
    for k in range(n + 1):
        out = out + _qbin(n, k, q) * q_pochhammer(param, k, q) * x ** k
    return out


class CauchyExpansion:
    """Finite expansion sum_n coeffs[n] * p_n(vars[0], vars[1], param_a).

    Coefficients are free of both expansion variables; param_a None means the
    plain (a = 0) Cauchy basis.
    """

    def __init__(self, coeffs: Sequence[MultiPoly], vars: tuple[Symbol, Symbol],
                 param_a: Symbol | None):
        self.coeffs = list(coeffs)
        self.vars = vars
        self.param_a = param_a

    def basis_element(self, n: int) -> MultiPoly:
        xv, yv = self.vars
        if self.param_a is None:
            return cauchy_poly(n, xv, yv)
        return generalized_cauchy_poly(n, xv, yv, self.param_a)

    def reconstruct(self) -> MultiPoly:
        out = MultiPoly.zero()
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                out = out + c * self.basis_element(n)
        return out

    def __repr__(self) -> str:
        parts = ", ".join(f"{n}: {render(c)}" for n, c in enumerate(self.coeffs))
        return f"CauchyExpansion({parts})"


def expand_in_cauchy_basis(p: MultiPoly, vars: tuple[Symbol, Symbol] = (X, Y),
                           param_a: Symbol | None = A) -> CauchyExpansion:
    """Expand p as sum_n c_n * p_n(vars, param_a) with c_n free of both vars.

    Triangular elimination on the leading variable: p_n has leading term
    vars[0]^n with unit coefficient, so no division is ever needed.  Raises
    NotInSpan when some extracted coefficient still involves the expansion
    variables (the span is genuinely thin: e.g. plain x^2 is not in it).
    """
    xv, yv = vars
    degree = p.degree_in(xv)
    if p.min_degree_in(xv) < 0 or p.min_degree_in(yv) < 0:
        raise NotInSpan("Laurent powers of the expansion variables")
    expansion = CauchyExpansion([MultiPoly.zero()] * (degree + 1), vars, param_a)
    residual = p
    for n in range(degree, -1, -1):
        c = residual.coeff_of(xv, n)
        if c.is_zero():
            continue
        if c.has_symbol(xv) or c.has_symbol(yv):
            raise NotInSpan(
                f"coefficient of {xv.name}^{n} involves the expansion "
                f"variables: {render(c)}")
        expansion.coeffs[n] = c
        residual = residual - c * expansion.basis_element(n)
    if not residual.is_zero():
        raise NotInSpan(f"nonzero residual {render(residual)}")
    if expansion.reconstruct() != p:
        raise AssertionError("reconstruction check failed")  # pragma: no cover
    return expansion
