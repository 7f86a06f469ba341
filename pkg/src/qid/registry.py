"""The identity catalog: every checked identity, its displayed statement,
its sampled parameters, and the builder that constructs both sides.

Builder conventions:
  * series identities fix q to the context's rational value and sample the
    remaining parameters as nonzero small rationals (except L2, which keeps
    x symbolic in the coefficients);
  * symbolic-poly and generate-and-check identities keep q (and usually a)
    as symbols and compare MultiPoly values exactly;
  * the theorem with parameters s, r and no series variable is graded by
    s -> sigma*t, r -> rho*t, turning (s/r;q)_n r^n into p_n(rho, sigma) t^n
    so both sides become honest t-series.
"""

from __future__ import annotations

from fractions import Fraction

from .polyring import (
    A, ALPHA, B, LAM, MU, Q, RHO, SIGMA, X, Y, Z, MultiPoly, Symbol,
)
from .qkernel import (
    as_poly, binom2, cauchy_poly, expand_in_cauchy_basis, gaussian_binomial,
    gaussian_binomial_value, generalized_cauchy_poly, hahn_poly, q_pochhammer,
    q_pochhammer_value,
)
from .qoperators import apply_E_frak, apply_E_tilde, apply_L_tilde, apply_R, d_q
from .tseries import (
    SeriesContext, TruncatedSeries, euler_inv_pochhammer, euler_pochhammer,
    finite_pochhammer_series, map_coefficients, phi_rs,
)
from .verifier import (
    BuildInput, CoeffSequence, Comparison, IdentitySpec, KnobSpec,
)


def _sum_series(ctx: SeriesContext, coeff) -> TruncatedSeries:
    """Series whose k-th coefficient is coeff(k) (Fraction or MultiPoly)."""
    return TruncatedSeries(ctx, [as_poly(coeff(n)) for n in range(ctx.order + 1)])


def _pn(n: int, x, y, q) -> Fraction:
    return cauchy_poly(n, x, y, q).const_value()


def _pna(n: int, x, y, a, q) -> Fraction:
    return generalized_cauchy_poly(n, x, y, a, q).const_value()


def _hahn(n: int, param, x, q) -> Fraction:
    return hahn_poly(n, param, x, q).const_value()


def _random_poly(rng, var: Symbol, degree: int) -> MultiPoly:
    coeffs = [Fraction(rng.randint(-7, 7), rng.randint(1, 7))
              for _ in range(degree + 1)]
    if all(c == 0 for c in coeffs):
        coeffs[0] = Fraction(1)
    out = MultiPoly.zero()
    for m, c in enumerate(coeffs):
        if c:
            out = out + MultiPoly.const(c) * MultiPoly.var(var, m)
    return out


def _qvar(power: int = 1) -> MultiPoly:
    return MultiPoly.var(Q, power)


# -- q-exponential identities ---------------------------------------------------

def _b_cauchy_identity(b: BuildInput):
    ctx, q, av = b.ctx, b.ctx.q_value, b[A]
    lhs = _sum_series(ctx, lambda k: q_pochhammer_value(av, q, k) / ctx.qq(k))
    rhs = euler_pochhammer(av, ctx) * euler_inv_pochhammer(1, ctx)
    return [Comparison("binomial theorem", lhs, rhs)]


def _b_euler_identity(b: BuildInput):
    ctx = b.ctx
    lhs = _sum_series(ctx, lambda k: Fraction(1) / ctx.qq(k))
    rhs = euler_pochhammer(1, ctx).invert()
    return [Comparison("euler", lhs, rhs)]


def _b_euler_inverse(b: BuildInput):
    ctx, uv = b.ctx, b[X]
    product = euler_pochhammer(uv, ctx) * euler_inv_pochhammer(uv, ctx)
    return [Comparison("mutual inverse", product, TruncatedSeries.constant(1, ctx))]


# -- Cauchy polynomial identities ------------------------------------------------

def _b_cauchy_genfun(b: BuildInput):
    ctx, q, xv, yv = b.ctx, b.ctx.q_value, b[X], b[Y]
    lhs = _sum_series(ctx, lambda n: _pn(n, xv, yv, q) / ctx.qq(n))
    rhs = euler_pochhammer(yv, ctx) * euler_inv_pochhammer(xv, ctx)
    return [Comparison("generating function", lhs, rhs)]


def _b_cauchy_symmetry(b: BuildInput):
    comps = []
    for n in range(7):
        rhs = (_qvar(binom2(n))
               * cauchy_poly(n, MultiPoly.var(Y), _qvar(1 - n) * MultiPoly.var(X)))
        if n % 2:
            rhs = -rhs
        comps.append(Comparison(f"n={n}", cauchy_poly(n), rhs, order=n))
    return comps


def _b_cauchy_shift_symmetry(b: BuildInput):
    comps = []
    for n in range(7):
        for k in range(n + 1):
            lhs = cauchy_poly(n - k, MultiPoly.var(X), _qvar(1 - n) * MultiPoly.var(Y))
            rhs = (_qvar(binom2(k) - binom2(n))
                   * cauchy_poly(n - k, MultiPoly.var(Y), _qvar(k) * MultiPoly.var(X)))
            if (n - k) % 2:
                rhs = -rhs
            comps.append(Comparison(f"n={n},k={k}", lhs, rhs))
    return comps


def _b_cauchy_two_forms(b: BuildInput):
    comps = []
    for n in range(9):
        laurent = (q_pochhammer(MultiPoly.var(Y) * MultiPoly.var(X, -1), n)
                   * MultiPoly.var(X, n))
        comps.append(Comparison(f"(y/x;q)_n x^n, n={n}", laurent,
                                cauchy_poly(n), order=n))
    for n in range(9):
        comps.append(Comparison(f"a->0, n={n}",
                                generalized_cauchy_poly(n).substitute(A, 0),
                                cauchy_poly(n), order=n))
    return comps


# -- Leibniz rules ---------------------------------------------------------------

def _dqn(p: MultiPoly, n: int) -> MultiPoly:
    for _ in range(n):
        p = d_q(p, X)
    return p


def _b_leibniz_dq(b: BuildInput):
    f = _random_poly(b.rng, X, 4)
    g = _random_poly(b.rng, X, 4)
    comps = []
    for n in range(5):
        lhs = _dqn(f * g, n)
        rhs = MultiPoly.zero()
        for k in range(n + 1):
            # D_q^(n-k){g(q^k x)}: shift the argument first, then apply D_q
            g_shifted = g.substitute(X, _qvar(k) * MultiPoly.var(X))
            rhs = rhs + (gaussian_binomial(n, k) * _qvar(k * (k - n))
                         * _dqn(f, k) * _dqn(g_shifted, n - k))
        comps.append(Comparison(f"n={n}", lhs, rhs, order=n))
    return comps


def _b_leibniz_xk_euler(b: BuildInput):
    ctx, q = b.ctx, b.ctx.q_value
    n, k = b.knobs["n"], b.knobs["k"]
    x = MultiPoly.var(X)
    base = euler_inv_pochhammer(x, ctx).scale(MultiPoly.var(X, k))
    lhs = base
    for _ in range(n):
        lhs = map_coefficients(lhs, lambda c: d_q(c, X, q))
    acc = TruncatedSeries.constant(0, ctx)
    for j in range(min(n, k) + 1):
        scalar = gaussian_binomial_value(n, j, q) / ctx.qq(k - j)
        term = finite_pochhammer_series(x, j, ctx)
        term = term.scale(MultiPoly.var(X, k - j) * scalar).shift(n - j)
        acc = acc + term
    rhs = (euler_inv_pochhammer(x, ctx) * acc).scale(ctx.qq(k))
    return [Comparison(f"n={n},k={k}", lhs, rhs)]


# -- operator representation -----------------------------------------------------

def _b_gencauchy_operator_form(b: BuildInput):
    comps = []
    for n in range(7):
        comps.append(Comparison(
            f"n={n}",
            apply_E_tilde(A, Y, MultiPoly.var(X, n), X),
            generalized_cauchy_poly(n), order=n))
    return comps


def _b_hahn_definition(b: BuildInput):
    comps = []
    for n in range(7):
        rhs = MultiPoly.zero()
        for k in range(n + 1):
            rhs = rhs + (gaussian_binomial(n, n - k) * q_pochhammer(ALPHA, k)
                         * MultiPoly.var(X, k))
        comps.append(Comparison(f"n={n}", hahn_poly(n), rhs, order=n))
    return comps


# -- generate-and-check q-difference equations ------------------------------------

def _b_qde_efrak(b: BuildInput):
    f0 = _random_poly(b.rng, A, b.knobs.get("f0_degree", 4))
    f = apply_E_frak(B, f0, A)
    qa, qb = _qvar() * MultiPoly.var(A), _qvar() * MultiPoly.var(B)
    lhs = (MultiPoly.var(A) * f.substitute(A, qa)
           - MultiPoly.var(B) * f.substitute(B, qb))
    rhs = (MultiPoly.var(A) - MultiPoly.var(B)) * f.substitute_many({A: qa, B: qb})
    return [Comparison("a f(qa,b) - b f(a,qb) = (a-b) f(qa,qb)", lhs, rhs)]


def _aeza_comparison(f: MultiPoly) -> Comparison:
    """x[f - f(y->qy)] = y[f(qx,qy) - f(x,qy)] - a y[f(qx,q2y) - f(x,q2y)]."""
    qx, qy, qqy = _qvar() * MultiPoly.var(X), _qvar() * MultiPoly.var(Y), _qvar(2) * MultiPoly.var(Y)
    f_qy = f.substitute(Y, qy)
    f_qqy = f.substitute(Y, qqy)
    lhs = MultiPoly.var(X) * (f - f_qy)
    rhs = (MultiPoly.var(Y) * (f.substitute_many({X: qx, Y: qy}) - f_qy)
           - MultiPoly.var(A) * MultiPoly.var(Y)
           * (f.substitute_many({X: qx, Y: qqy}) - f_qqy))
    return Comparison("q-difference equation", lhs, rhs)


def _b_qde_cauchy_expansion(b: BuildInput):
    d = b.knobs.get("f0_degree", 4)
    cs = [Fraction(b.rng.randint(-7, 7), b.rng.randint(1, 7)) for _ in range(d + 1)]
    if all(c == 0 for c in cs):
        cs[d] = Fraction(1)
    f = MultiPoly.zero()
    for n, c in enumerate(cs):
        if c:
            f = f + MultiPoly.const(c) * generalized_cauchy_poly(n)
    comps = [_aeza_comparison(f)]
    expansion = expand_in_cauchy_basis(f)
    coeffs = expansion.coeffs + [MultiPoly.zero()] * (d + 1 - len(expansion.coeffs))
    for n, c in enumerate(cs):
        comps.append(Comparison(f"round-trip c_{n}", coeffs[n],
                                MultiPoly.const(c), order=n))
    return comps


def _b_qde_etilde(b: BuildInput):
    f0 = _random_poly(b.rng, X, b.knobs.get("f0_degree", 4))
    f = apply_E_tilde(A, Y, f0, X)
    return [_aeza_comparison(f)]


def _b_qde_ltilde(b: BuildInput):
    d = b.knobs.get("f0_degree", 4)
    f0 = MultiPoly.zero()
    for n in range(d + 1):
        c = Fraction(b.rng.randint(-7, 7), b.rng.randint(1, 7))
        if c:
            f0 = f0 + MultiPoly.const(c) * cauchy_poly(n, MultiPoly.var(Y), MultiPoly.var(X))
    if f0.is_zero():
        f0 = cauchy_poly(d, MultiPoly.var(Y), MultiPoly.var(X))
    f = apply_L_tilde(A, Z, f0, X, Y)
    qinv_x = _qvar(-1) * MultiPoly.var(X)
    qy = _qvar() * MultiPoly.var(Y)
    qz, qqz = _qvar() * MultiPoly.var(Z), _qvar(2) * MultiPoly.var(Z)
    lhs = (qinv_x - MultiPoly.var(Y)) * (f - f.substitute(Z, qz))
    rhs = (MultiPoly.var(Z)
           * (f.substitute_many({X: qinv_x, Z: qz}) - f.substitute_many({Y: qy, Z: qz}))
           + MultiPoly.var(A) * MultiPoly.var(Z)
           * (f.substitute_many({Y: qy, Z: qqz}) - f.substitute_many({X: qinv_x, Z: qqz})))
    return [Comparison("homogeneous q-difference equation", lhs, rhs)]


def _b_qde_r(b: BuildInput):
    f0 = _random_poly(b.rng, A, b.knobs.get("f0_degree", 4))
    f = apply_R(B, f0, A)
    qa, qb = _qvar() * MultiPoly.var(A), _qvar() * MultiPoly.var(B)
    lhs = (MultiPoly.var(A) * f
           - MultiPoly.var(B) * f.substitute_many({A: qa, B: qb}))
    rhs = (MultiPoly.var(A) - MultiPoly.var(B)) * f.substitute(B, qb)
    return [Comparison("a f(a,b) - b f(qa,qb) = (a-b) f(a,qb)", lhs, rhs)]


# -- generating functions for the three-parameter family ---------------------------

def _g1_sides(ctx: SeriesContext, x, y, a):
    q = ctx.q_value
    lhs = _sum_series(ctx, lambda n: _pna(n, x, y, a, q) / ctx.qq(n))
    rhs = euler_inv_pochhammer(x, ctx) * phi_rs([a], [Fraction(0)], y, 1, ctx)
    return lhs, rhs


def _g2_sides(ctx: SeriesContext, x, y):
    q = ctx.q_value
    lhs = _sum_series(ctx, lambda n: _pna(n, x, y, Fraction(0), q) / ctx.qq(n))
    rhs = euler_pochhammer(y, ctx) * euler_inv_pochhammer(x, ctx)
    return lhs, rhs


def _g3_sides(ctx: SeriesContext, x, y, a, rho, sigma):
    q = ctx.q_value
    lhs = _sum_series(
        ctx, lambda n: _pna(n, x, y, a, q) * _pn(n, rho, sigma, q) / ctx.qq(n))
    sxt = TruncatedSeries.monomial(sigma * x, 1, ctx)
    rhs = (euler_pochhammer(sigma * x, ctx) * euler_inv_pochhammer(rho * x, ctx)
           * phi_rs([a, sigma / rho], [sxt, Fraction(0)], rho * y, 1, ctx))
    return lhs, rhs


def _b_gencauchy_genfun(b: BuildInput):
    lhs, rhs = _g1_sides(b.ctx, b[X], b[Y], b[A])
    return [Comparison("generating function", lhs, rhs)]


def _b_cauchy_genfun_lemma(b: BuildInput):
    lhs, rhs = _g2_sides(b.ctx, b[X], b[Y])
    return [Comparison("a = 0 generating function", lhs, rhs)]


def _b_thm_ta(b: BuildInput):
    lhs, rhs = _g3_sides(b.ctx, b[X], b[Y], b[A], b[RHO], b[SIGMA])
    return [Comparison("graded s,r generating function", lhs, rhs)]


def _b_ta_corollary(b: BuildInput):
    ctx, q = b.ctx, b.ctx.q_value
    x, y, a, sigma = b[X], b[Y], b[A], b[SIGMA]
    sign = lambda n: Fraction(-1) ** n
    lhs = _sum_series(
        ctx, lambda n: _pna(n, x, y, a, q) * sign(n) * q ** binom2(n)
        * sigma ** n / ctx.qq(n))
    sxt = TruncatedSeries.monomial(sigma * x, 1, ctx)
    rhs = (euler_pochhammer(sigma * x, ctx)
           * phi_rs([a], [sxt, Fraction(0)], sigma * y, 1, ctx))
    return [Comparison("r = 0 corollary", lhs, rhs)]


def _g5_sides(ctx: SeriesContext, x, y, a, shift_k: int):
    q = ctx.q_value
    lhs = _sum_series(ctx, lambda n: _pna(n + shift_k, x, y, a, q) / ctx.qq(n))
    acc = TruncatedSeries.constant(0, ctx)
    for n in range(shift_k + 1):
        c = (q_pochhammer_value(q ** -shift_k, q, n) * q_pochhammer_value(a, q, n)
             * (y / x * q ** shift_k) ** n / ctx.qq(n))
        term = (finite_pochhammer_series(x, n, ctx)
                * phi_rs([a * q ** n], [Fraction(0)], y * q ** n, 1, ctx))
        acc = acc + term.scale(c)
    rhs = (euler_inv_pochhammer(x, ctx) * acc).scale(x ** shift_k)
    return lhs, rhs


def _b_gencauchy_shifted_genfun(b: BuildInput):
    lhs, rhs = _g5_sides(b.ctx, b[X], b[Y], b[A], b.knobs["k"])
    return [Comparison(f"k={b.knobs['k']}", lhs, rhs)]


def _b_ta_specialization(b: BuildInput):
    x, y, a = b[X], b[Y], b[A]
    g3_l, g3_r = _g3_sides(b.ctx, x, y, a, Fraction(1), Fraction(0))
    g1_l, g1_r = _g1_sides(b.ctx, x, y, a)
    return [Comparison("lhs at sigma=0, rho=1", g3_l, g1_l),
            Comparison("rhs at sigma=0, rho=1", g3_r, g1_r)]


def _b_ta_specialization_cauchy(b: BuildInput):
    x, y = b[X], b[Y]
    g3_l, g3_r = _g3_sides(b.ctx, x, y, Fraction(0), Fraction(1), Fraction(0))
    g2_l, g2_r = _g2_sides(b.ctx, x, y)
    return [Comparison("lhs at sigma=0, rho=1, a=0", g3_l, g2_l),
            Comparison("rhs at sigma=0, rho=1, a=0", g3_r, g2_r)]


# -- Hahn polynomial generating functions -------------------------------------------

def _s2_sides(ctx: SeriesContext, x, lam, alpha):
    q = ctx.q_value
    lhs = _sum_series(
        ctx, lambda n: _hahn(n, alpha, x, q) * q_pochhammer_value(lam, q, n) / ctx.qq(n))
    lamt = TruncatedSeries.monomial(lam, 1, ctx)
    rhs = (euler_pochhammer(lam, ctx) * euler_inv_pochhammer(1, ctx)
           * phi_rs([lam, alpha], [lamt], x, 1, ctx))
    return lhs, rhs


def _s3_sides(ctx: SeriesContext, x, alpha):
    q = ctx.q_value
    lhs = _sum_series(ctx, lambda n: _hahn(n, alpha, x, q) / ctx.qq(n))
    rhs = (euler_pochhammer(alpha * x, ctx) * euler_inv_pochhammer(x, ctx)
           * euler_inv_pochhammer(1, ctx))
    return lhs, rhs


def _s4_sides(ctx: SeriesContext, x, lam, mu, a, M: int):
    q = ctx.q_value
    alpha = q ** -M
    lhs = _sum_series(
        ctx, lambda n: _hahn(n, alpha, x, q) * _pna(n, lam, mu, a, q) / ctx.qq(n))
    pre = (euler_pochhammer(alpha * lam * x, ctx)
           * euler_inv_pochhammer(lam * x, ctx) * euler_inv_pochhammer(lam, ctx))
    acc = TruncatedSeries.constant(0, ctx)
    for k in range(min(M, ctx.order) + 1):
        scalar = (Fraction(-1) ** k * q ** binom2(k) * q_pochhammer_value(a, q, k)
                  * q_pochhammer_value(alpha, q, k) * (mu * x) ** k / ctx.qq(k))
        term = (finite_pochhammer_series(lam, k, ctx)
                * finite_pochhammer_series(alpha * lam * x, k, ctx).invert()
                * phi_rs([a * q ** k], [Fraction(0)], mu * q ** k, 1, ctx))
        acc = acc + term.scale(scalar).shift(k)
    return lhs, pre * acc


def _b_srivastava_agarwal_genfun(b: BuildInput):
    lhs, rhs = _s2_sides(b.ctx, b[X], b[LAM], b[ALPHA])
    return [Comparison("weighted generating function", lhs, rhs)]


def _b_hahn_genfun(b: BuildInput):
    lhs, rhs = _s3_sides(b.ctx, b[X], b[ALPHA])
    return [Comparison("generating function", lhs, rhs)]


def _b_hahn_gencauchy_genfun(b: BuildInput):
    ctx = b.ctx
    x, lam, mu, a, M = b[X], b[LAM], b[MU], b[A], b.knobs["M"]
    alpha = ctx.q_value ** -M
    comps = [Comparison(f"M={M}", *_s4_sides(ctx, x, lam, mu, a, M))]
    # Remark reductions: (a, lam', mu') = (0, 1, lam) gives the weighted
    # generating function; (0, 1, 0) gives the plain one.
    red_l, red_r = _s4_sides(ctx, x, Fraction(1), lam, Fraction(0), M)
    s2_l, s2_r = _s2_sides(ctx, x, lam, alpha)
    comps.append(Comparison("reduction lhs (1, lam)", red_l, s2_l))
    comps.append(Comparison("reduction rhs (1, lam)", red_r, s2_r))
    red0_l, red0_r = _s4_sides(ctx, x, Fraction(1), Fraction(0), Fraction(0), M)
    s3_l, s3_r = _s3_sides(ctx, x, alpha)
    comps.append(Comparison("reduction lhs (1, 0)", red0_l, s3_l))
    comps.append(Comparison("reduction rhs (1, 0)", red0_r, s3_r))
    return comps


# -- the transform ------------------------------------------------------------------

def transform_comparisons(bseq: CoeffSequence, ctx: SeriesContext,
                          x: Fraction, y: Fraction, a: Fraction):
    """Derive A(k) from the premise expansion, then compare both statements."""
    q = ctx.q_value
    a_coeff = [sum((bk * q ** (k * m) for k, bk in bseq.items()), Fraction(0))
               / ctx.qq(m) for m in range(ctx.order + 1)]
    premise_l = _sum_series(ctx, lambda m: a_coeff[m] * x ** m)
    premise_r = TruncatedSeries.constant(0, ctx)
    transformed_l = _sum_series(ctx, lambda m: a_coeff[m] * _pna(m, x, y, a, q))
    transformed_r = TruncatedSeries.constant(0, ctx)
    for k, bk in bseq.items():
        inv = euler_inv_pochhammer(x * q ** k, ctx)
        premise_r = premise_r + inv.scale(bk)
        transformed_r = transformed_r + (
            inv * phi_rs([a], [Fraction(0)], y * q ** k, 1, ctx)).scale(bk)
    return [Comparison("premise", premise_l, premise_r),
            Comparison("transformed", transformed_l, transformed_r)]


def _b_transform_pair(b: BuildInput):
    from .verifier import _small_rational
    ks = b.rng.sample(range(4), b.rng.randint(1, 3))
    bseq = CoeffSequence.from_dict({k: _small_rational(b.rng) for k in sorted(ks)})
    return transform_comparisons(bseq, b.ctx, b[X], b[Y], b[A])


# -- catalog -------------------------------------------------------------------------

def all_specs() -> list[IdentitySpec]:
    f0_knob = (KnobSpec("f0_degree", 4, 4),)
    return [
        IdentitySpec(
            "cauchy-identity", "series",
            "sum_k (a;q)_k z^k/(q;q)_k = (a z;q)_oo / (z;q)_oo",
            _b_cauchy_identity, params=(A,), aliases=("E1",)),
        IdentitySpec(
            "euler-identity", "series",
            "sum_k z^k/(q;q)_k = 1/(z;q)_oo",
            _b_euler_identity, aliases=("E2",)),
        IdentitySpec(
            "euler-inverse", "series",
            "(z;q)_oo = sum_k (-1)^k q^C(k,2) z^k/(q;q)_k, with "
            "(u z;q)_oo * 1/(u z;q)_oo = 1",
            _b_euler_inverse, params=(X,), aliases=("E3",)),
        IdentitySpec(
            "cauchy-genfun", "series",
            "sum_n p_n(x,y) t^n/(q;q)_n = (y t;q)_oo / (x t;q)_oo",
            _b_cauchy_genfun, params=(X, Y), aliases=("C1",)),
        IdentitySpec(
            "cauchy-symmetry", "symbolic-poly",
            "p_n(x,y) = (-1)^n q^C(n,2) p_n(y, q^(1-n) x)",
            _b_cauchy_symmetry, aliases=("C2",)),
        IdentitySpec(
            "cauchy-shift-symmetry", "symbolic-poly",
            "p_(n-k)(x, q^(1-n) y) = (-1)^(n-k) q^(C(k,2)-C(n,2)) p_(n-k)(y, q^k x)",
            _b_cauchy_shift_symmetry, aliases=("C3",)),
        IdentitySpec(
            "cauchy-two-forms", "symbolic-poly",
            "(y/x;q)_n x^n = (x-y)(x-qy)...(x-q^(n-1)y) = p_n(x,y,0)",
            _b_cauchy_two_forms, aliases=("C4",)),
        IdentitySpec(
            "leibniz-dq", "symbolic-poly",
            "D_q^n{f g}(x) = sum_k [n;k]_q q^(k(k-n)) D_q^k{f}(x) D_q^(n-k){g}(q^k x)",
            _b_leibniz_dq, aliases=("L1",), uses_rng=True),
        IdentitySpec(
            "leibniz-xk-euler", "series",
            "D_q^n{x^k/(x t;q)_oo} = (q;q)_k/(x t;q)_oo "
            "sum_j [n;j]_q (x t;q)_j t^(n-j) x^(k-j)/(q;q)_(k-j)",
            _b_leibniz_xk_euler,
            knobs=(KnobSpec("n", 0, 4), KnobSpec("k", 0, 4)), aliases=("L2",)),
        IdentitySpec(
            "gencauchy-operator-form", "symbolic-poly",
            "Etilde(a,y;D_q){x^n} = p_n(x,y,a)",
            _b_gencauchy_operator_form, aliases=("D1",)),
        IdentitySpec(
            "qde-efrak", "generate-and-check",
            "a f(qa,b) - b f(a,qb) = (a-b) f(qa,qb) for f = Efrak(b theta_a){f0(a)}",
            _b_qde_efrak, knobs=f0_knob, aliases=("T1",), uses_rng=True),
        IdentitySpec(
            "qde-cauchy-expansion", "generate-and-check",
            "x[f - f(y->qy)] = y[f(qx,qy) - f(x,qy)] - a y[f(qx,q^2 y) - f(x,q^2 y)] "
            "for f = sum_n c_n p_n(x,y,a), plus expansion round-trip",
            _b_qde_cauchy_expansion, knobs=f0_knob, aliases=("T2",), uses_rng=True),
        IdentitySpec(
            "qde-etilde", "generate-and-check",
            "the same q-difference equation for f = Etilde(a,y;D_q){f0(x)}",
            _b_qde_etilde, knobs=f0_knob, aliases=("T3",), uses_rng=True),
        IdentitySpec(
            "qde-ltilde", "generate-and-check",
            "(q^-1 x - y)[f - f(z->qz)] = z[f(q^-1 x,.,qz) - f(.,qy,qz)] "
            "+ a z[f(.,qy,q^2 z) - f(q^-1 x,.,q^2 z)] for f = Ltilde(a,z;theta_xy){f0}",
            _b_qde_ltilde, knobs=f0_knob, aliases=("T4",), uses_rng=True),
        IdentitySpec(
            "qde-r", "generate-and-check",
            "a f(a,b) - b f(qa,qb) = (a-b) f(a,qb) for f = R(b D_q){f0(a)}",
            _b_qde_r, knobs=f0_knob, aliases=("T5",), uses_rng=True),
        IdentitySpec(
            "gencauchy-genfun", "series",
            "sum_n p_n(x,y,a) t^n/(q;q)_n = 1/(x t;q)_oo * 1phi1[a; 0; q, y t]",
            _b_gencauchy_genfun, params=(X, Y, A), aliases=("G1",)),
        IdentitySpec(
            "cauchy-genfun-lemma", "series",
            "sum_n p_n(x,y,0) t^n/(q;q)_n = (y t;q)_oo / (x t;q)_oo",
            _b_cauchy_genfun_lemma, params=(X, Y), aliases=("G2",)),
        IdentitySpec(
            "thm-TA", "series",
            "sum_n p_n(x,y,a) (s/r;q)_n r^n/(q;q)_n = (s x;q)_oo/(r x;q)_oo "
            "* 2phi2[a, s/r; s x, 0; q, r y], graded by s = sigma t, r = rho t",
            _b_thm_ta, params=(X, Y, A, RHO, SIGMA), aliases=("G3",)),
        IdentitySpec(
            "ta-corollary", "series",
            "sum_n p_n(x,y,a) (-1)^n q^C(n,2) s^n/(q;q)_n = (s x;q)_oo "
            "* 1phi2[a; s x, 0; q, s y], graded by s = sigma t",
            _b_ta_corollary, params=(X, Y, A, SIGMA), aliases=("G4",)),
        IdentitySpec(
            "gencauchy-shifted-genfun", "series",
            "sum_n p_(n+k)(x,y,a) t^n/(q;q)_n = x^k/(x t;q)_oo * "
            "sum_(n<=k) (q^-k, x t, a;q)_n (y q^k/x)^n/(q;q)_n "
            "* 1phi1[a q^n; 0; q, y t q^n]",
            _b_gencauchy_shifted_genfun, params=(X, Y, A),
            knobs=(KnobSpec("k", 0, 4),), aliases=("G5",)),
        IdentitySpec(
            "ta-specialization", "series",
            "the graded s,r generating function at sigma=0, rho=1 rebuilds "
            "both sides of the three-parameter generating function",
            _b_ta_specialization, params=(X, Y, A), aliases=("G6",)),
        IdentitySpec(
            "ta-specialization-cauchy", "series",
            "the graded s,r generating function at sigma=0, rho=1, a=0 rebuilds "
            "both sides of the two-parameter generating function",
            _b_ta_specialization_cauchy, params=(X, Y), aliases=("G7",)),
        IdentitySpec(
            "hahn-definition", "symbolic-poly",
            "phi_n^(alpha)(x|q) = sum_k [n;k]_q (alpha;q)_k x^k",
            _b_hahn_definition, aliases=("S1",)),
        IdentitySpec(
            "srivastava-agarwal-genfun", "series",
            "sum_n phi_n^(alpha)(x|q) (lam;q)_n t^n/(q;q)_n = "
            "(lam t;q)_oo/(t;q)_oo * 2phi1[lam, alpha; lam t; q, x t]",
            _b_srivastava_agarwal_genfun, params=(X, LAM, ALPHA), aliases=("S2",)),
        IdentitySpec(
            "hahn-genfun", "series",
            "sum_n phi_n^(alpha)(x|q) t^n/(q;q)_n = "
            "(alpha x t;q)_oo / ((x t;q)_oo (t;q)_oo)",
            _b_hahn_genfun, params=(X, ALPHA), aliases=("S3",)),
        IdentitySpec(
            "hahn-gencauchy-genfun", "series",
            "sum_n phi_n^(alpha)(x|q) p_n(lam,mu,a) t^n/(q;q)_n = "
            "(alpha lam x t;q)_oo/((lam x t;q)_oo (lam t;q)_oo) * sum_k (-1)^k "
            "q^C(k,2) (a, alpha, lam t;q)_k (mu x t)^k/((alpha lam x t;q)_k (q;q)_k) "
            "* 1phi1[a q^k; 0; q, mu t q^k], with alpha = q^-M",
            _b_hahn_gencauchy_genfun, params=(X, LAM, MU, A),
            knobs=(KnobSpec("M", 1, 4),), aliases=("S4",)),
        IdentitySpec(
            "transform-pair", "transform",
            "sum_k A(k) x^k = sum_k B(k)/(x t q^k;q)_oo implies "
            "sum_k A(k) p_k(x,y,a) = sum_k B(k)/(x t q^k;q)_oo "
            "* 1phi1[a; 0; q, y t q^k]",
            _b_transform_pair, params=(X, Y, A), aliases=("X1",), uses_rng=True),
    ]
