"""Exact ground ring: arbitrary-precision rationals and sparse multivariate
polynomials with Laurent exponents on designated symbols.

Coefficients are `fractions.Fraction` (exposed as `ExactRational`).  A
polynomial is a map from monomials to nonzero coefficients; monomials are
sorted tuples of (symbol id, exponent) with no zero exponents, so equal
polynomials always have identical term maps.  Negative exponents are allowed
only on symbols created with `laurent_allowed` (by default `q` and `x`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

ExactRational = Fraction

Scalar = Union[Fraction, int]


class QidError(Exception):
    """Base class for all errors raised by this package."""


class NegativeExponentSubstitution(QidError):
    """A Laurent power of a symbol cannot be evaluated at the given value."""


class MissingAssignment(QidError):
    """eval() was called without a value for some symbol."""


class ZeroToNegativePower(QidError):
    """eval() hit 0 raised to a negative exponent."""


class NonZeroRemainder(QidError):
    """Exact linear division left a nonzero remainder."""


class InvalidDivisor(QidError):
    """Divisor violates the preconditions of divide_exact_linear."""


@dataclass(frozen=True)
class Symbol:
    id: int
    name: str
    laurent_allowed: bool = False

    def __repr__(self) -> str:
        return f"Symbol({self.name})"


def _make_table() -> tuple[Symbol, ...]:
    names = ["q", "x", "y", "a", "b", "z", "t", "s", "r",
             "lam", "mu", "alpha", "rho", "sigma"]
    laurent = {"q", "x"}
    return tuple(Symbol(i, n, n in laurent) for i, n in enumerate(names))


SYMBOLS: tuple[Symbol, ...] = _make_table()
SYMBOL_BY_NAME: dict[str, Symbol] = {s.name: s for s in SYMBOLS}

Q, X, Y, A, B, Z, T, S, R, LAM, MU, ALPHA, RHO, SIGMA = SYMBOLS


def symbol(name: str) -> Symbol:
    try:
        return SYMBOL_BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown symbol {name!r}") from None


# A monomial is a tuple of (symbol id, exponent) pairs, sorted by id,
# exponents nonzero.  The empty tuple is the constant monomial.
Monomial = tuple


def _mono(pairs: Iterable[tuple[int, int]]) -> Monomial:
    return tuple(sorted((sid, e) for sid, e in pairs if e != 0))


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for sid, e in m2:
        ne = exps.get(sid, 0) + e
        if ne == 0:
            exps.pop(sid, None)
        else:
            exps[sid] = ne
    return tuple(sorted(exps.items()))


def _check_laurent(mono: Monomial) -> None:
    for sid, e in mono:
        if e < 0 and not SYMBOLS[sid].laurent_allowed:
            raise NegativeExponentSubstitution(
                f"negative exponent on non-Laurent symbol {SYMBOLS[sid].name}")


class MultiPoly:
    """Sparse multivariate Laurent polynomial over ExactRational."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        # terms must already be canonical (no zero coefficients/exponents);
        # use the classmethods or ring operations to build values.
        self.terms: dict[Monomial, Fraction] = dict(terms) if terms else {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        return cls({(): c} if c else None)

    @classmethod
    def var(cls, sym: Symbol, power: int = 1) -> "MultiPoly":
        if power == 0:
            return cls.const(1)
        if power < 0 and not sym.laurent_allowed:
            raise NegativeExponentSubstitution(
                f"negative exponent on non-Laurent symbol {sym.name}")
        return cls({((sym.id, power),): Fraction(1)})

    @classmethod
    def from_terms(cls, raw: Mapping[tuple, Scalar]) -> "MultiPoly":
        """Build from {((name, exp), ...): coeff}; used mainly by tests."""
        terms: dict[Monomial, Fraction] = {}
        for key, c in raw.items():
            c = Fraction(c)
            if not c:
                continue
            mono = _mono((SYMBOL_BY_NAME[n].id, e) for n, e in key)
            _check_laurent(mono)
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return cls({m: c for m, c in terms.items() if c})

    # -- predicates and accessors ------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def const_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {()}:
            return self.terms[()]
        raise ValueError(f"not a constant: {render(self)}")

    def has_symbol(self, sym: Symbol) -> bool:
        return any(sid == sym.id for mono in self.terms for sid, _ in mono)

    def symbols(self) -> set[Symbol]:
        return {SYMBOLS[sid] for mono in self.terms for sid, _ in mono}

    def degree_in(self, sym: Symbol) -> int:
        """Largest exponent of sym (0 if absent)."""
        degs = [dict(mono).get(sym.id, 0) for mono in self.terms]
        return max(degs, default=0)

    def min_degree_in(self, sym: Symbol) -> int:
        degs = [dict(mono).get(sym.id, 0) for mono in self.terms]
        return min(degs, default=0)

    def coeff_of(self, sym: Symbol, k: int) -> "MultiPoly":
        """Coefficient of sym^k, as a polynomial in the remaining symbols."""
        out: dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            exps = dict(mono)
            if exps.pop(sym.id, 0) == k:
                out[tuple(sorted(exps.items()))] = c
        return MultiPoly(out)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(v) -> "MultiPoly":
        if isinstance(v, MultiPoly):
            return v
        if isinstance(v, (int, Fraction)):
            return MultiPoly.const(v)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            nc = out.get(mono, Fraction(0)) + c
            if nc:
                out[mono] = nc
            else:
                out.pop(mono, None)
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                nc = out.get(m, Fraction(0)) + c1 * c2
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return MultiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of polynomial by zero")
            return MultiPoly({m: c / Fraction(other) for m, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            return _unit_inverse(self) ** (-n)
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"MultiPoly({render(self)})"

    # -- substitution and evaluation -----------------------------------------

    def substitute_many(self, mapping: Mapping[Symbol, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Simultaneous substitution of symbols by polynomials or scalars."""
        by_id = {sym.id: self._coerce(v) for sym, v in mapping.items()}
        out = MultiPoly.zero()
        for mono, c in self.terms.items():
            factor = MultiPoly.const(c)
            rest: list[tuple[int, int]] = []
            for sid, e in mono:
                v = by_id.get(sid)
                if v is None:
                    rest.append((sid, e))
                elif e >= 0:
                    factor = factor * v ** e
                else:
                    factor = factor * _unit_inverse(v) ** (-e)
            out = out + factor * MultiPoly({_mono(rest): Fraction(1)})
        return out

    def substitute(self, sym: Symbol, value: "MultiPoly | Scalar") -> "MultiPoly":
        return self.substitute_many({sym: value})

    def eval_at(self, assignment: Mapping[Symbol, Scalar]) -> Fraction:
        """Exact rational value of the polynomial at a full assignment."""
        by_id = {sym.id: Fraction(v) for sym, v in assignment.items()}
        total = Fraction(0)
        for mono, c in self.terms.items():
            val = c
            for sid, e in mono:
                if sid not in by_id:
                    raise MissingAssignment(f"no value for {SYMBOLS[sid].name}")
                v = by_id[sid]
                if v == 0 and e < 0:
                    raise ZeroToNegativePower(
                        f"{SYMBOLS[sid].name} = 0 with exponent {e}")
                val *= v ** e
            total += val
        return total


def _unit_inverse(p: MultiPoly) -> MultiPoly:
    """Inverse of a single-term polynomial over Laurent-invertible symbols."""
    if len(p.terms) != 1:
        raise NegativeExponentSubstitution(
            f"cannot invert non-monomial {render(p)}")
    (mono, c), = p.terms.items()
    inv = _mono(((sid, -e) for sid, e in mono))
    _check_laurent(inv)
    return MultiPoly({inv: Fraction(1) / c})


def divide_exact_linear(p: MultiPoly, mainvar: Symbol, divisor: MultiPoly) -> MultiPoly:
    """Exact quotient of p by a divisor of degree 1 in mainvar.

    The leading coefficient of the divisor must be a single invertible
    monomial free of mainvar (all uses here divide by x or by q^-1*x - y).
    Raises NonZeroRemainder if the division is not exact.
    """
    if divisor.degree_in(mainvar) != 1 or divisor.min_degree_in(mainvar) < 0:
        raise InvalidDivisor(f"divisor not linear in {mainvar.name}: {render(divisor)}")
    lead = divisor.coeff_of(mainvar, 1)
    if lead.is_zero() or lead.has_symbol(mainvar):
        raise InvalidDivisor("leading coefficient must be nonzero and free of mainvar")
    lead_inv = _unit_inverse(lead)
    quotient = MultiPoly.zero()
    rem = p
    while not rem.is_zero():
        d = rem.degree_in(mainvar)
        if d < 1:
            break
        c = rem.coeff_of(mainvar, d) * lead_inv
        qterm = c * MultiPoly.var(mainvar, d - 1)
        quotient = quotient + qterm
        rem = rem - qterm * divisor
    if not rem.is_zero():
        raise NonZeroRemainder(
            f"remainder {render(rem)} dividing by {render(divisor)}")
    return quotient


# -- deterministic rendering --------------------------------------------------

def _render_key(mono: Monomial):
    # Sort for display: q acts as a coefficient, so order by the non-q part
    # (total degree, then lexicographic by symbol id, descending), with the
    # q exponent ascending as the final tiebreaker.
    exps = dict(mono)
    qe = exps.pop(Q.id, 0)
    nonq = tuple(-exps.get(s.id, 0) for s in SYMBOLS if s.id != Q.id)
    return (-sum(exps.values()), nonq, qe)


def _render_mono(mono: Monomial) -> str:
    parts = []
    for sid, e in sorted(mono, key=lambda p: (p[0] != Q.id, p[0])):
        # q is printed first within a term: q*x^2 rather than x^2*q
        name = SYMBOLS[sid].name
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def render(p: MultiPoly) -> str:
    """Canonical text form; round-trips through the expression parser."""
    if not p.terms:
        return "0"
    chunks: list[str] = []
    for mono in sorted(p.terms, key=_render_key):
        c = p.terms[mono]
        mono_s = _render_mono(mono)
        mag = abs(c)
        if not mono_s:
            body = str(mag)
        elif mag == 1:
            body = mono_s
        else:
            body = f"{mag}*{mono_s}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)
