"""Polynomial family tests: pochhammers, Gaussian binomials, the Cauchy
families, Hahn polynomials, and basis expansion."""

import random
from fractions import Fraction as F

import pytest

from qid.polyring import A, ALPHA, Q, X, Y, MultiPoly, render
from qid.qkernel import (
    CauchyExpansion, NotInSpan, cauchy_poly, expand_in_cauchy_basis,
    gaussian_binomial, gaussian_binomial_value, generalized_cauchy_poly,
    hahn_poly, q_pochhammer, q_pochhammer_value,
)

ONE = MultiPoly.const(1)


def v(sym, k=1):
    return MultiPoly.var(sym, k)


def test_pochhammer_frozen():
    # (a;q)_2 = (1-a)(1-aq) = 1 - a - a q + a^2 q
    expected = ONE - v(A) - v(A) * v(Q) + v(A, 2) * v(Q)
    assert q_pochhammer(A, 2) == expected
    assert q_pochhammer(A, 0) == ONE
    assert q_pochhammer(1, 3) == MultiPoly.zero()


def test_pochhammer_splitting():
    # (a;q)_(n+k) = (a;q)_n (a q^n;q)_k
    for n in range(7):
        for k in range(7):
            lhs = q_pochhammer(A, n + k)
            rhs = q_pochhammer(A, n) * q_pochhammer(v(A) * v(Q, n), k)
            assert lhs == rhs, (n, k)


def test_pochhammer_value_matches_symbolic():
    for n in range(6):
        sym = q_pochhammer(A, n).eval_at({A: F(3, 5), Q: F(1, 2)})
        assert sym == q_pochhammer_value(F(3, 5), F(1, 2), n)


def test_gaussian_binomial_frozen():
    assert gaussian_binomial(2, 1) == ONE + v(Q)
    expected = ONE + v(Q) + 2 * v(Q, 2) + v(Q, 3) + v(Q, 4)
    assert gaussian_binomial(4, 2) == expected
    assert gaussian_binomial(3, 5) == MultiPoly.zero()
    assert gaussian_binomial(3, -1) == MultiPoly.zero()


def test_gaussian_binomial_factorial_ratio_oracle():
    # independent oracle: (q;q)_n / ((q;q)_k (q;q)_(n-k)) at rational q
    for q in (F(1, 2), F(2, 3), F(-1, 3)):
        for n in range(9):
            for k in range(n + 1):
                ratio = q_pochhammer_value(q, q, n) / (
                    q_pochhammer_value(q, q, k) * q_pochhammer_value(q, q, n - k))
                assert gaussian_binomial(n, k).eval_at({Q: q}) == ratio
                assert gaussian_binomial_value(n, k, q) == ratio


def test_gaussian_binomial_symmetry():
    for n in range(9):
        for k in range(n + 1):
            assert gaussian_binomial(n, k) == gaussian_binomial(n, n - k)


def test_cauchy_frozen():
    assert cauchy_poly(0) == ONE
    assert cauchy_poly(1) == v(X) - v(Y)
    expected = (v(X, 2) - v(X) * v(Y) - v(Q) * v(X) * v(Y) + v(Q) * v(Y, 2))
    assert cauchy_poly(2) == expected


def test_cauchy_homogeneous():
    for n in range(6):
        p = cauchy_poly(n)
        for mono in p.terms:
            deg = sum(e for sid, e in mono if sid in (X.id, Y.id))
            assert deg == n


def test_generalized_cauchy_frozen():
    assert generalized_cauchy_poly(1) == v(X) - (ONE - v(A)) * v(Y)
    expected = (v(X, 2)
                - (ONE + v(Q)) * (ONE - v(A)) * v(X) * v(Y)
                + v(Q) * (ONE - v(A)) * (ONE - v(A) * v(Q)) * v(Y, 2))
    assert generalized_cauchy_poly(2) == expected


def test_generalized_cauchy_reduces_to_cauchy():
    for n in range(9):
        assert generalized_cauchy_poly(n).substitute(A, 0) == cauchy_poly(n)


def test_cauchy_two_forms():
    # (y/x;q)_n x^n equals the product form, as a Laurent computation
    for n in range(9):
        laurent = q_pochhammer(v(Y) * v(X, -1), n) * v(X, n)
        assert laurent == cauchy_poly(n)


def test_hahn_frozen():
    assert hahn_poly(0) == ONE
    assert hahn_poly(1) == ONE + (ONE - v(ALPHA)) * v(X)
    expected = (ONE + (ONE + v(Q)) * (ONE - v(ALPHA)) * v(X)
                + (ONE - v(ALPHA)) * (ONE - v(ALPHA) * v(Q)) * v(X, 2))
    assert hahn_poly(2) == expected


def test_hahn_at_one_equals_pochhammer():
    # p_n(1, lam, 0) = (lam;q)_n, the renaming used by the S4 reductions
    from qid.polyring import LAM
    for n in range(7):
        assert generalized_cauchy_poly(n, 1, LAM, 0) == q_pochhammer(LAM, n)


def test_numeric_arguments_give_constants():
    q = F(1, 2)
    val = cauchy_poly(3, F(2), F(3), q)
    assert val.is_const()
    assert val.const_value() == (2 - 3) * (2 - q * 3) * (2 - q * q * 3)


def test_expand_basis_element():
    exp = expand_in_cauchy_basis(generalized_cauchy_poly(2))
    assert exp.coeffs == [MultiPoly.zero(), MultiPoly.zero(), ONE]


def test_expand_round_trip_random():
    rng = random.Random(23)
    for _ in range(20):
        coeffs = [MultiPoly.const(F(rng.randint(-7, 7), rng.randint(1, 7)))
                  for _ in range(rng.randint(1, 6))]
        f = MultiPoly.zero()
        for n, c in enumerate(coeffs):
            f = f + c * generalized_cauchy_poly(n)
        exp = expand_in_cauchy_basis(f)
        padded = exp.coeffs + [MultiPoly.zero()] * (len(coeffs) - len(exp.coeffs))
        assert padded == coeffs
        assert exp.reconstruct() == f


def test_expand_round_trip_with_qa_coefficients():
    # coefficients may involve q and a, just not the expansion variables
    coeffs = [v(Q) - v(A), ONE + v(Q, -1), v(A, 2)]
    f = MultiPoly.zero()
    for n, c in enumerate(coeffs):
        f = f + c * generalized_cauchy_poly(n)
    assert expand_in_cauchy_basis(f).coeffs == coeffs


def test_expand_rejects_off_span():
    with pytest.raises(NotInSpan):
        expand_in_cauchy_basis(v(Y))
    # x^2 alone is not expandable either: cancelling the cross term of
    # p_2(x,y,a) would need x- or y-dependent coefficients
    with pytest.raises(NotInSpan):
        expand_in_cauchy_basis(v(X, 2))


def test_expand_swapped_basis():
    f = (3 * cauchy_poly(2, v(Y), v(X))
         - F(1, 2) * cauchy_poly(1, v(Y), v(X)) + ONE)
    exp = expand_in_cauchy_basis(f, vars=(Y, X), param_a=None)
    assert exp.coeffs == [ONE, MultiPoly.const(F(-1, 2)), MultiPoly.const(3)]
    assert exp.reconstruct() == f


def test_expansion_repr_mentions_coefficients():
    exp = CauchyExpansion([ONE], (X, Y), A)
    assert "1" in repr(exp)
