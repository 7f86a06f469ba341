"""Truncated series tests: contexts, arithmetic, inversion, the pochhammer
builders, the general basic hypergeometric builder, and coefficient maps."""

import random
from fractions import Fraction as F

import pytest

from qid.polyring import Q, T, X, Y, Z, MultiPoly
from qid.qkernel import q_pochhammer_value
from qid.qoperators import d_q
from qid.tseries import (
    ContextMismatch, NonInvertibleDenParam, NonUnitConstantTerm,
    SeriesContext, TruncatedSeries, euler_inv_pochhammer, euler_pochhammer,
    finite_pochhammer_series, map_coefficients, phi_rs, scale_series_var,
)

QV = F(1, 2)


def ctx_at(order=8, q=QV, var=T):
    return SeriesContext(var, order, q)


def v(sym, k=1):
    return MultiPoly.var(sym, k)


def consts(series):
    return [c.const_value() for c in series.coeffs]


def test_context_validation():
    for bad in (F(0), F(1), F(-1), F(2, 2)):
        with pytest.raises(ValueError):
            SeriesContext(T, 8, bad)
    with pytest.raises(ValueError):
        SeriesContext(T, 0, QV)
    assert SeriesContext(T, 8, F(-5, 3)).qq(2) != 0


def test_coefficients_must_avoid_q_and_series_var():
    ctx = ctx_at(order=2)
    with pytest.raises(ValueError):
        TruncatedSeries(ctx, [v(Q), MultiPoly.zero(), MultiPoly.zero()])
    with pytest.raises(ValueError):
        TruncatedSeries(ctx, [v(T), MultiPoly.zero(), MultiPoly.zero()])


def test_mul_truncates():
    ctx = ctx_at(order=2)
    one_plus = TruncatedSeries.from_poly(MultiPoly.const(1) + v(T), ctx)
    one_minus = TruncatedSeries.from_poly(MultiPoly.const(1) - v(T), ctx)
    assert consts(one_plus * one_minus) == [1, 0, -1]


def test_mul_commutes_random():
    rng = random.Random(53)
    ctx = ctx_at(order=6)
    for _ in range(20):
        a = TruncatedSeries(ctx, [MultiPoly.const(F(rng.randint(-5, 5), rng.randint(1, 5)))
                                  for _ in range(7)])
        b = TruncatedSeries(ctx, [MultiPoly.const(F(rng.randint(-5, 5), rng.randint(1, 5)))
                                  for _ in range(7)])
        assert a * b == b * a
        assert a + b == b + a


def test_context_mismatch():
    a = TruncatedSeries.constant(1, ctx_at(order=3))
    b = TruncatedSeries.constant(1, ctx_at(order=4))
    with pytest.raises(ContextMismatch):
        _ = a + b


def test_invert_geometric():
    ctx = ctx_at(order=6)
    geo = TruncatedSeries.from_poly(MultiPoly.const(1) - v(T), ctx).invert()
    assert consts(geo) == [1] * 7
    assert TruncatedSeries.constant(1, ctx).invert() == TruncatedSeries.constant(1, ctx)


def test_invert_round_trip_random():
    rng = random.Random(59)
    ctx = ctx_at(order=6)
    one = TruncatedSeries.constant(1, ctx)
    for _ in range(20):
        coeffs = [MultiPoly.const(F(rng.randint(-4, 4), rng.randint(1, 4)))
                  for _ in range(7)]
        coeffs[0] = MultiPoly.const(F(rng.choice([1, 2, 3, -1, -2]), rng.randint(1, 3)))
        a = TruncatedSeries(ctx, coeffs)
        assert a * a.invert() == one


def test_invert_with_polynomial_tail():
    # unit rational constant term, polynomial higher coefficients
    ctx = ctx_at(order=5)
    a = TruncatedSeries.constant(1, ctx) + TruncatedSeries.monomial(v(X), 1, ctx)
    assert a * a.invert() == TruncatedSeries.constant(1, ctx)


def test_invert_needs_unit():
    ctx = ctx_at(order=4)
    with pytest.raises(NonUnitConstantTerm):
        TruncatedSeries.monomial(1, 1, ctx).invert()
    with pytest.raises(NonUnitConstantTerm):
        (TruncatedSeries.constant(v(X), ctx)).invert()


def test_euler_inv_coefficients():
    ctx = ctx_at()
    series = euler_inv_pochhammer(v(X), ctx)
    assert series.coeffs[3] == v(X, 3) / ctx.qq(3)
    assert euler_inv_pochhammer(0, ctx) == TruncatedSeries.constant(1, ctx)


def test_euler_coefficients():
    # coefficient k is (-1)^k q^C(k,2) u^k/(q;q)_k; at k=1 that is -u/(1-q)
    # (the whole product contributes, not just the first factor)
    ctx = ctx_at()
    series = euler_pochhammer(v(Y), ctx)
    assert series.coeffs[1] == -v(Y) / (1 - QV)
    assert series.coeffs[2] == QV * v(Y, 2) / ctx.qq(2)
    assert euler_pochhammer(0, ctx) == TruncatedSeries.constant(1, ctx)


def test_euler_pair_is_mutually_inverse():
    ctx = ctx_at()
    one = TruncatedSeries.constant(1, ctx)
    for u in (v(X), v(X) + v(Y), MultiPoly.const(F(3, 7)), v(X) * v(Y, 2)):
        assert euler_pochhammer(u, ctx) * euler_inv_pochhammer(u, ctx) == one


def test_euler_product_splitting_oracle():
    # (u t;q)_oo = (u t;q)_m * (u q^m t;q)_oo, exactly, for any m
    ctx = ctx_at()
    u = v(X)
    for m in range(4):
        split = (finite_pochhammer_series(u, m, ctx)
                 * euler_pochhammer(u * QV ** m, ctx))
        assert split == euler_pochhammer(u, ctx), m


def test_finite_pochhammer_frozen():
    ctx = ctx_at()
    series = finite_pochhammer_series(v(X), 2, ctx)
    assert series.coeffs[0] == MultiPoly.const(1)
    assert series.coeffs[1] == -(1 + QV) * v(X)
    assert series.coeffs[2] == QV * v(X, 2)
    assert all(c.is_zero() for c in series.coeffs[3:])
    assert finite_pochhammer_series(v(X), 0, ctx) == TruncatedSeries.constant(1, ctx)


def test_phi_1_0_coefficients():
    # 1phi0[a; -; q, z]: coefficient k is (a;q)_k/(q;q)_k
    ctx = ctx_at(var=Z)
    a = F(2, 3)
    series = phi_rs([a], [], 1, 1, ctx)
    expect = [q_pochhammer_value(a, QV, k) / ctx.qq(k) for k in range(9)]
    assert consts(series) == expect


def test_phi_0_0_matches_euler_pochhammer():
    ctx = ctx_at()
    for u in (F(1), F(-2, 5)):
        assert phi_rs([], [], u, 1, ctx) == euler_pochhammer(u, ctx)


def test_phi_zero_denominator_parameter_is_one():
    # (0;q)_n = 1: padding with zero parameters only changes the sign factor
    ctx = ctx_at()
    lhs = phi_rs([F(2, 3)], [F(0)], F(1, 3), 1, ctx)
    coeff2 = lhs.coeffs[2].const_value()
    expected = (QV * q_pochhammer_value(F(2, 3), QV, 2) * F(1, 3) ** 2
                / ctx.qq(2))
    assert coeff2 == expected  # [(-1)^2 q^1]^1 * (a;q)_2 z^2/(q;q)_2


def test_phi_rejects_pole_parameter():
    # d = q^-1 makes (d;q)_2 = 0
    ctx = ctx_at()
    with pytest.raises(NonInvertibleDenParam) as info:
        phi_rs([], [F(1) / QV], F(1), 1, ctx)
    assert info.value.n == 2
    assert info.value.index == 0


def test_phi_denominator_with_series_variable():
    # a parameter like lam*t is fine: (lam t;q)_n has constant term 1
    ctx = ctx_at()
    lam = F(3, 4)
    lamt = TruncatedSeries.monomial(lam, 1, ctx)
    series = phi_rs([F(1, 5)], [lamt], F(1, 2), 1, ctx)
    assert series.coeffs[0] == MultiPoly.const(1)


def test_phi_arg_tpower_spacing():
    ctx = ctx_at()
    series = phi_rs([F(1, 3)], [], F(1), 2, ctx)
    assert all(series.coeffs[k].is_zero() for k in (1, 3, 5, 7))


def test_map_coefficients_dq():
    # coefficient k of 1/(x t;q)_oo maps to (1-q^k) x^(k-1)/(q;q)_k
    ctx = ctx_at()
    mapped = map_coefficients(euler_inv_pochhammer(v(X), ctx),
                              lambda c: d_q(c, X, QV))
    for k in range(1, 9):
        assert mapped.coeffs[k] == (1 - QV ** k) * v(X, k - 1) / ctx.qq(k)
    assert mapped.coeffs[0].is_zero()
    assert map_coefficients(mapped, lambda c: c) == mapped


def test_scale_series_var():
    ctx = ctx_at(order=5)
    ones = TruncatedSeries(ctx, [MultiPoly.const(1)] * 6)
    assert scale_series_var(ones, 0) == ones
    assert consts(scale_series_var(ones, 1)) == [QV ** k for k in range(6)]
    assert scale_series_var(scale_series_var(ones, 1), 1) == scale_series_var(ones, 2)


def test_truncation_coherence():
    big = ctx_at(order=8)
    small = ctx_at(order=5)
    u = v(X)
    assert euler_pochhammer(u, big).truncate(5) == euler_pochhammer(u, small)
    assert euler_inv_pochhammer(u, big).truncate(5) == euler_inv_pochhammer(u, small)
    assert (finite_pochhammer_series(u, 3, big).truncate(5)
            == finite_pochhammer_series(u, 3, small))
    assert (phi_rs([F(1, 3)], [F(0)], F(2), 1, big).truncate(5)
            == phi_rs([F(1, 3)], [F(0)], F(2), 1, small))
    product = euler_pochhammer(u, big) * euler_inv_pochhammer(2 * u, big)
    small_product = euler_pochhammer(u, small) * euler_inv_pochhammer(2 * u, small)
    assert product.truncate(5) == small_product
