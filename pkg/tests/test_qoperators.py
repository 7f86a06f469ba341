"""Operator tests: the three q-difference operators, the four operator
series, closure properties, and agreement of the symbolic and numeric paths."""

import random
from fractions import Fraction as F

import pytest

from qid.polyring import A, B, Q, X, Y, Z, MultiPoly
from qid.qkernel import cauchy_poly, generalized_cauchy_poly, q_pochhammer
from qid.qoperators import (
    OperatorKind, OutsideDomain, apply_E_frak, apply_E_tilde, apply_L_tilde,
    apply_R, d_q, theta_single, theta_xy,
)

ONE = MultiPoly.const(1)
QV = F(1, 2)


def v(sym, k=1):
    return MultiPoly.var(sym, k)


def rand_poly(rng, var, degree=4):
    p = MultiPoly.zero()
    for m in range(degree + 1):
        p = p + MultiPoly.const(F(rng.randint(-7, 7), rng.randint(1, 7))) * v(var, m)
    return p


def test_dq_frozen():
    assert d_q(v(X, 3), X) == (ONE - v(Q, 3)) * v(X, 2)
    assert d_q(v(A) + ONE, X) == MultiPoly.zero()
    assert d_q(v(X, 2) + v(X), X) == (ONE - v(Q, 2)) * v(X) + (ONE - v(Q))


def test_theta_single_frozen():
    assert theta_single(v(A), A) == ONE - v(Q)
    assert theta_single(ONE, A) == MultiPoly.zero()
    # theta{a^2} = q^-1(1 - q^2) a = (q^-1 - q) a
    assert theta_single(v(A, 2), A) == (v(Q, -1) - v(Q)) * v(A)


def test_theta_xy_frozen():
    assert theta_xy(v(X) - v(Y)) == ONE - v(Q)
    swapped = cauchy_poly(2, v(Y), v(X))
    assert theta_xy(swapped) == (ONE - v(Q, 2)) * (v(X) - v(Y))
    # p_2(x,y) maps outside the span: quotient is (1-q^2)(q^-1 x - q y)
    assert theta_xy(cauchy_poly(2)) == \
        (ONE - v(Q, 2)) * (v(Q, -1) * v(X) - v(Q) * v(Y))


def test_theta_xy_outside_domain():
    with pytest.raises(OutsideDomain):
        theta_xy(v(X))


def test_theta_closure_on_swapped_span():
    # theta_xy{p_n(y,x)} = -(1 - q^n) p_(n-1)(y,x); gives Ltilde termination
    for n in range(1, 6):
        lhs = theta_xy(cauchy_poly(n, v(Y), v(X)))
        rhs = -(ONE - v(Q, n)) * cauchy_poly(n - 1, v(Y), v(X))
        assert lhs == rhs, n


def test_operator_linearity():
    rng = random.Random(31)
    for op in (lambda p: d_q(p, X), lambda p: theta_single(p, X),
               lambda p: apply_R(B, p, X), lambda p: apply_E_frak(B, p, X),
               lambda p: apply_E_tilde(A, Y, p, X)):
        for _ in range(10):
            f = rand_poly(rng, X)
            g = rand_poly(rng, X)
            c = F(rng.randint(-5, 5), rng.randint(1, 5))
            assert op(c * f + g) == c * op(f) + op(g)


def test_apply_r_frozen():
    assert apply_R(B, v(A), A) == v(A) - v(B)
    assert apply_R(B, ONE, A) == ONE
    # R(y D_q){x^2} = p_2(x, y)
    assert apply_R(Y, v(X, 2), X) == cauchy_poly(2)


def test_apply_e_frak_frozen():
    assert apply_E_frak(B, v(A), A) == v(A) + v(B)
    assert apply_E_frak(B, ONE, A) == ONE
    # closed form for a^2, checked against iterated theta by hand
    expected = v(A, 2) + (v(Q, -1) + ONE) * v(A) * v(B) + v(B, 2)
    assert apply_E_frak(B, v(A, 2), A) == expected


def test_apply_e_frak_matches_iterated_theta():
    # oracle: sum_k q^C(k,2)/(q;q)_k (b theta)^k iterated directly at numeric q
    rng = random.Random(37)
    from qid.qkernel import binom2, q_pochhammer_value
    for _ in range(10):
        p = rand_poly(rng, A)
        acc = MultiPoly.zero()
        power = p
        k = 0
        while not power.is_zero():
            coeff = QV ** binom2(k) / q_pochhammer_value(QV, QV, k)
            acc = acc + coeff * v(B, k) * power
            power = theta_single(power, A, QV)
            k += 1
        closed = apply_E_frak(B, p, A).substitute(Q, QV)
        assert closed == acc


def test_apply_e_tilde_is_generalized_cauchy():
    for n in range(7):
        assert apply_E_tilde(A, Y, v(X, n), X) == generalized_cauchy_poly(n)
    assert apply_E_tilde(A, Y, ONE, X) == ONE


def test_apply_e_tilde_at_a_zero_is_r():
    rng = random.Random(41)
    for _ in range(10):
        p = rand_poly(rng, X)
        assert apply_E_tilde(A, Y, p, X).substitute(A, 0) == apply_R(Y, p, X)


def test_apply_l_tilde_frozen():
    f0 = v(Y) - v(X)
    expected = (v(Y) - v(X)) - (ONE - v(A)) * v(Z)
    assert apply_L_tilde(A, Z, f0, X, Y) == expected
    assert apply_L_tilde(A, Z, ONE, X, Y) == ONE


def test_apply_l_tilde_outside_domain():
    with pytest.raises(OutsideDomain):
        apply_L_tilde(A, Z, v(X), X, Y)
    with pytest.raises(OutsideDomain):
        apply_L_tilde(A, Z, v(X), X, Y, q=QV)


def test_symbolic_and_numeric_paths_agree():
    rng = random.Random(43)
    subs = {Q: QV, A: F(2, 3)}
    for _ in range(10):
        p = rand_poly(rng, X)
        b = F(rng.randint(1, 5), rng.randint(1, 5))
        sym = apply_R(b, p, X).substitute(Q, QV)
        assert sym == apply_R(b, p, X, q=QV)
        sym = apply_E_frak(b, p, X).substitute(Q, QV)
        assert sym == apply_E_frak(b, p, X, q=QV)
        sym = apply_E_tilde(A, b, p, X).substitute_many(subs)
        num = apply_E_tilde(F(2, 3), b, p, X, q=QV)
        assert sym == num


def test_l_tilde_paths_agree_on_swapped_span():
    rng = random.Random(47)
    for _ in range(8):
        f0 = MultiPoly.zero()
        for n in range(4):
            c = F(rng.randint(-5, 5), rng.randint(1, 5))
            f0 = f0 + c * cauchy_poly(n, v(Y), v(X))
        if f0.is_zero():
            continue
        sym = apply_L_tilde(A, Z, f0, X, Y).substitute_many({Q: QV, A: F(1, 4)})
        num = apply_L_tilde(F(1, 4), v(Z), f0.substitute(Q, QV), X, Y, q=QV)
        assert sym == num


def test_numeric_path_rejects_symbolic_q_operand():
    with pytest.raises(ValueError):
        apply_R(B, v(Q) * v(X), X, q=QV)


def test_operator_kind_validation():
    OperatorKind("Dq", (X,))
    OperatorKind("ThetaXY", (X, Y))
    with pytest.raises(ValueError):
        OperatorKind("ThetaXY", (X,))
    with pytest.raises(ValueError):
        OperatorKind("Dq", (X, Y))
