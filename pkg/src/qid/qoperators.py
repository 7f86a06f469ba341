"""q-difference operators and the four exponential operator series built
from them.

Basic operators (all lower polynomial degree by one):

    D_q{f}(x)      = (f(x) - f(qx)) / x
    theta{f}(x)    = (f(q^-1 x) - f(x)) / (q^-1 x)
    theta_xy{f}    = (f(q^-1 x, y) - f(x, qy)) / (q^-1 x - y)

Operator series (finite on polynomials):

    R(b D_q)        = sum_k (-1)^k q^(k 2) (b D_q)^k / (q;q)_k
    Efrak(b theta)  = sum_k        q^(k 2) (b theta)^k / (q;q)_k
    Etilde(a,b;D_q) = sum_k (-1)^k q^(k 2) (a;q)_k (b D_q)^k / (q;q)_k
    Ltilde(a,b;th)  = sum_k        q^(k 2) (a;q)_k (b theta_xy)^k / (q;q)_k

Each series has two evaluation paths.  With symbolic q the operator powers
are applied monomial-wise through closed forms, so every 1/(q;q)_k merges
into a Gaussian binomial and nothing is ever divided.  With a rational q the
operators are iterated directly and the (q;q)_k are exact nonzero rationals.
Both paths agree after substituting q; that agreement is part of the test
suite rather than an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import (
    Q, QidError, MultiPoly, NonZeroRemainder, Symbol, X, Y,
    divide_exact_linear, render,
)
from .qkernel import (
    PolyLike, QLike, as_poly, binom2, cauchy_poly, expand_in_cauchy_basis,
    gaussian_binomial, gaussian_binomial_value, generalized_cauchy_poly,
    q_pochhammer, NotInSpan,
)


class OutsideDomain(QidError):
    """The operator was applied outside its polynomial-closed domain."""


@dataclass(frozen=True)
class OperatorKind:
    tag: str                      # "Dq" | "ThetaSingle" | "ThetaXY"
    acting_vars: tuple[Symbol, ...]

    def __post_init__(self):
        want = 2 if self.tag == "ThetaXY" else 1
        if len(self.acting_vars) != want or len(set(self.acting_vars)) != want:
            raise ValueError(f"{self.tag} needs {want} distinct symbol(s)")


def _is_symbolic(q: QLike) -> bool:
    return isinstance(q, Symbol)


def _q_pow(q: QLike, k: int) -> MultiPoly:
    if _is_symbolic(q):
        return MultiPoly.var(q, k)
    return MultiPoly.const(Fraction(q) ** k)


def _monomials_in(p: MultiPoly, var: Symbol):
    """Split p into (coefficient, degree)-pairs along var; degrees >= 0."""
    if p.min_degree_in(var) < 0:
        raise OutsideDomain(f"negative powers of {var.name} in {render(p)}")
    for m in range(p.degree_in(var) + 1):
        c = p.coeff_of(var, m)
        if not c.is_zero():
            yield c, m


def d_q(p: MultiPoly, var: Symbol, q: QLike = Q) -> MultiPoly:
    """D_q{p} in var; monomial-wise x^m -> (1 - q^m) x^(m-1), constants -> 0."""
    out = MultiPoly.zero()
    for c, m in _monomials_in(p, var):
        if m >= 1:
            out = out + c * (MultiPoly.const(1) - _q_pow(q, m)) * MultiPoly.var(var, m - 1)
    return out


def theta_single(p: MultiPoly, var: Symbol, q: QLike = Q) -> MultiPoly:
    """theta{p} in var; monomial-wise x^m -> q^(1-m) (1 - q^m) x^(m-1)."""
    out = MultiPoly.zero()
    for c, m in _monomials_in(p, var):
        if m >= 1:
            factor = _q_pow(q, 1 - m) - _q_pow(q, 1)
            out = out + c * factor * MultiPoly.var(var, m - 1)
    return out


def theta_xy(p: MultiPoly, xvar: Symbol = X, yvar: Symbol = Y,
             q: QLike = Q) -> MultiPoly:
    """(p(q^-1 x, y) - p(x, qy)) / (q^-1 x - y); exact or OutsideDomain.

    Partial on polynomials: the span of p_n(y, x) maps into itself, but for
    instance theta_xy{x} has a nonzero remainder.
    """
    qinv = _q_pow(q, -1)
    numerator = (p.substitute(xvar, qinv * MultiPoly.var(xvar))
                 - p.substitute(yvar, _q_pow(q, 1) * MultiPoly.var(yvar)))
    divisor = qinv * MultiPoly.var(xvar) - MultiPoly.var(yvar)
    try:
        return divide_exact_linear(numerator, xvar, divisor)
    except NonZeroRemainder as exc:
        raise OutsideDomain(str(exc)) from exc


def _iterated_series(p: MultiPoly, b: MultiPoly, q_val: Fraction, step,
                     signed: bool, a_factor=None) -> MultiPoly:
    """Numeric-q path shared by all four operator series."""
    from .qkernel import q_pochhammer_value
    out = MultiPoly.zero()
    power = p
    k = 0
    while not power.is_zero():
        coeff = q_val ** binom2(k) / q_pochhammer_value(q_val, q_val, k)
        if signed and k % 2 == 1:
            coeff = -coeff
        term = power * coeff * b ** k
        if a_factor is not None:
            term = term * q_pochhammer(a_factor, k, q_val)
        out = out + term
        power = step(power)
        k += 1
    return out


def _require_numeric_inputs(*polys: MultiPoly) -> None:
    for p in polys:
        if p.has_symbol(Q):
            raise ValueError("numeric-q path needs operands free of the symbol q")


def apply_R(b: PolyLike, p: MultiPoly, var: Symbol, q: QLike = Q) -> MultiPoly:
    """R(b D_q){p}: with symbolic q via x^n -> p_n(x, b), else by iteration."""
    b = as_poly(b)
    if _is_symbolic(q):
        out = MultiPoly.zero()
        for c, m in _monomials_in(p, var):
            out = out + c * cauchy_poly(m, MultiPoly.var(var), b, q)
        return out
    q_val = Fraction(q)
    _require_numeric_inputs(p, b)
    return _iterated_series(p, b, q_val, lambda f: d_q(f, var, q_val), signed=True)


def apply_E_frak(b: PolyLike, p: MultiPoly, var: Symbol, q: QLike = Q) -> MultiPoly:
    """Efrak(b theta){p}; theta^k{x^m} = q^(k(1-m)+(k 2)) [(q;q)_m/(q;q)_(m-k)] x^(m-k)."""
    b = as_poly(b)
    if _is_symbolic(q):
        out = MultiPoly.zero()
        for c, m in _monomials_in(p, var):
            for k in range(m + 1):
                coeff = (_q_pow(q, 2 * binom2(k) + k * (1 - m))
                         * gaussian_binomial(m, k))
                out = out + c * coeff * b ** k * MultiPoly.var(var, m - k)
        return out
    q_val = Fraction(q)
    _require_numeric_inputs(p, b)
    return _iterated_series(p, b, q_val, lambda f: theta_single(f, var, q_val),
                            signed=False)


def apply_E_tilde(a: PolyLike, b: PolyLike, p: MultiPoly, var: Symbol,
                  q: QLike = Q) -> MultiPoly:
    """Etilde(a, b; D_q){p}: with symbolic q via x^n -> p_n(x, b, a)."""
    a, b = as_poly(a), as_poly(b)
    if _is_symbolic(q):
        out = MultiPoly.zero()
        for c, m in _monomials_in(p, var):
            out = out + c * generalized_cauchy_poly(m, MultiPoly.var(var), b, a, q)
        return out
    q_val = Fraction(q)
    _require_numeric_inputs(p, b, a)
    return _iterated_series(p, b, q_val, lambda f: d_q(f, var, q_val),
                            signed=True, a_factor=a)


def apply_L_tilde(a: PolyLike, b: PolyLike, p: MultiPoly, xvar: Symbol = X,
                  yvar: Symbol = Y, q: QLike = Q) -> MultiPoly:
    """Ltilde(a, b; theta_xy){p}.

    Symbolic q: p is expanded in the swapped Cauchy basis p_n(yvar, xvar)
    (the theta_xy-closed span, where theta_xy{p_n} = -(1-q^n) p_(n-1)), and
    the series collapses to Gaussian-binomial closed form.  Rational q:
    theta_xy is iterated directly.  Raises OutsideDomain off the span.
    """
    a, b = as_poly(a), as_poly(b)
    if _is_symbolic(q):
        try:
            expansion = expand_in_cauchy_basis(p, vars=(yvar, xvar), param_a=None)
        except NotInSpan as exc:
            raise OutsideDomain(
                f"not in the span of p_n({yvar.name},{xvar.name}): {exc}") from exc
        out = MultiPoly.zero()
        for n, cn in enumerate(expansion.coeffs):
            if cn.is_zero():
                continue
            for k in range(n + 1):
                coeff = (gaussian_binomial(n, k) * _q_pow(q, binom2(k))
                         * q_pochhammer(a, k, q) * b ** k)
                term = cn * coeff * cauchy_poly(n - k, yvar, xvar, q)
                out = out + (term if k % 2 == 0 else -term)
        return out
    q_val = Fraction(q)
    _require_numeric_inputs(p, b, a)
    return _iterated_series(p, b, q_val,
                            lambda f: theta_xy(f, xvar, yvar, q_val),
                            signed=False, a_factor=a)
