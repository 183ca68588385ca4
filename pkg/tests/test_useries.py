import random

import pytest

from carlitz_vmf.errors import (MixedGradeError, NotTauImageError,
                                PrecisionError)
from carlitz_vmf.forms import gen_E, gen_g, gen_h
from carlitz_vmf.polys import Poly, RatFunc
from carlitz_vmf.scalars import GradedScalar
from carlitz_vmf.useries import (USeries, dz, scale_arg, series_arith,
                                 trace_div, u_scale)
from conftest import shared_context


def test_basic_arithmetic(ctx):
    u = USeries.u(ctx)
    assert (u * u).c == {2: ctx.gs_one()}
    f = series_arith(u, u, "mul")
    assert f.c == {2: ctx.gs_one()}
    two = ctx.gs_int(2)
    expected = {} if two.is_zero() else {1: two}
    assert series_arith(u, u, "add").c == expected


def test_laurent_inverse_of_minus_u():
    ctx = shared_context(3)
    f = USeries(ctx, {1: ctx.gs_int(-1), 2: ctx.gs_one()}, 5)
    inv = f.inverse()
    # 1/(-u(1 - u)) = -u^{-1} (1 + u + u^2 + ...)
    expect = USeries(ctx, {n: ctx.gs_int(-1) for n in range(-1, 3)}, 3)
    assert inv.eq_to_prec(expect)
    assert inv.prec == 3


def test_division_by_mixed_grade_leading_coefficient_fails(ctx3):
    ctx = ctx3
    mixed = ctx.gs_one() + GradedScalar.from_poly(ctx.ring.one, om=1)
    f = USeries(ctx, {0: mixed, 1: ctx.gs_one()}, 6)
    with pytest.raises(MixedGradeError):
        f.inverse()


def test_precision_tracking(ctx3):
    ctx = ctx3
    f = USeries(ctx, {1: ctx.gs_one()}, 5)       # u + O(u^5)
    g = USeries(ctx, {2: ctx.gs_one()}, 7)       # u^2 + O(u^7)
    prod = f * g
    assert prod.prec == min(5 + 2, 7 + 1)
    with pytest.raises(PrecisionError):
        prod.coeff(prod.prec)
    assert (f + g).prec == 5


def test_truncation_and_coeff_guard(ctx3):
    f = USeries(ctx3, {0: ctx3.gs_one()}, 4)
    assert f.truncate(2).prec == 2
    with pytest.raises(PrecisionError):
        f.coeff(4)
    exact = USeries.one(ctx3)
    assert exact.coeff(10).is_zero()


def test_twist_and_untwist(ctx):
    q = ctx.q
    u = USeries.u(ctx, prec=6)
    tu = u.tau()
    assert tu.c == {q: ctx.gs_one()}
    assert tu.prec == 6 * q
    assert tu.untau().eq_to_prec(u)
    if q == 2:
        with pytest.raises(NotTauImageError):
            USeries(shared_context(2), {3: ctx.gs_one()}, 8).untau()


def test_twist_multiplicative_randomized(ctx):
    rng = random.Random(12)
    N = 32
    for _ in range(50):
        f = _rand_series(ctx, rng, N)
        g = _rand_series(ctx, rng, N)
        assert (f * g).tau().eq_to_prec(f.tau() * g.tau())


def _rand_series(ctx, rng, N):
    c = {}
    for _ in range(4):
        num = Poly(ctx.ring, {(rng.randrange(2), rng.randrange(2)):
                              ctx.ring.field.from_int(1 + rng.randrange(ctx.p - 1))})
        c[rng.randrange(0, N)] = GradedScalar.from_rat(
            RatFunc(num, ctx.ring.theta + ctx.ring.one))
    return USeries(ctx, c, N)


def test_dz_basics(ctx):
    u = USeries.u(ctx)
    assert dz(u, 0).eq_to_prec(u)
    d1 = dz(u, 1)
    minus_pi = GradedScalar(ctx.ring, {(1, 0): RatFunc(-ctx.ring.one, None)})
    assert d1.c == {2: minus_pi}


def test_dz_leibniz_randomized(ctx):
    rng = random.Random(23)
    N = 32
    for _ in range(50):
        f = _rand_series(ctx, rng, N)
        g = _rand_series(ctx, rng, N)
        lhs = dz(f * g, 1)
        rhs = dz(f, 1) * g + f * dz(g, 1)
        assert lhs.eq_to_prec(rhs)


def test_dz_second_order_leibniz(ctx3):
    rng = random.Random(4)
    N = 16
    f = _rand_series(ctx3, rng, N)
    g = _rand_series(ctx3, rng, N)
    lhs = dz(f * g, 2)
    rhs = dz(f, 2) * g + dz(f, 1) * dz(g, 1) + f * dz(g, 2)
    assert lhs.eq_to_prec(rhs)


def test_dt_series(ctx):
    t = ctx.ring.t
    f = USeries(ctx, {2: GradedScalar.from_poly(t)}, 8)
    d = f.dt(1)
    assert d.c == {2: ctx.gs_one()}
    bad = USeries(ctx, {0: GradedScalar.from_poly(ctx.ring.one, om=-1)}, 4)
    with pytest.raises(MixedGradeError):
        bad.dt(1)
    # Leibniz
    rng = random.Random(31)
    for _ in range(20):
        f = _rand_series(ctx, rng, 16)
        g = _rand_series(ctx, rng, 16)
        lhs = (f * g).dt(1)
        rhs = f.dt(1) * g + f * g.dt(1)
        assert lhs.eq_to_prec(rhs)


def test_u_scale(ctx):
    q = ctx.q
    one = (ctx.base_field.one,)
    assert u_scale(ctx, one, 9).eq_to_prec(USeries.u(ctx).truncate(9))
    theta = (ctx.base_field.zero, ctx.base_field.one)
    S = u_scale(ctx, theta, 3 * q + 2)
    # u(theta z) = u^q (1 - theta u^(q-1) + theta^2 u^(2(q-1)) - ...)
    th = ctx.ring.theta
    expect = {q: ctx.gs_one(),
              q + (q - 1): ctx.gs(-th),
              q + 2 * (q - 1): ctx.gs(th * th)}
    for n, c in expect.items():
        if n < S.prec:
            assert S.coeff(n) == c
    assert S.val() == q
    assert S.coeff(q).is_one()


def test_u_scale_multiplicativity(ctx):
    rng = random.Random(8)
    N = 3 * ctx.q ** 2
    monics = ctx.monics(1)
    for _ in range(4):
        a = monics[rng.randrange(len(monics))]
        b = monics[rng.randrange(len(monics))]
        ab = _poly_mul(ctx, a, b)
        lhs = u_scale(ctx, ab, N)
        rhs = u_scale(ctx, a, N).substitute(u_scale(ctx, b, N))
        assert lhs.eq_to_prec(rhs, at_least=ctx.q ** 2)


def _poly_mul(ctx, a, b):
    base = ctx.base_field
    out = [base.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = base.add(out[i + j], base.mul(x, y))
    return tuple(out)


def test_scale_arg(ctx):
    N = 4 * ctx.q
    theta = (ctx.base_field.zero, ctx.base_field.one)
    one_const = USeries.one(ctx, N)
    assert scale_arg(one_const, theta).eq_to_prec(USeries.one(ctx, N * ctx.q))
    h = gen_h(ctx, N)
    hp = scale_arg(h.series, theta, N * ctx.q)
    assert hp.val() == ctx.q
    assert hp.coeff(ctx.q) == ctx.gs_int(-1)
    with pytest.raises(PrecisionError):
        scale_arg(USeries.u(ctx), theta)  # exact input needs a target


def test_trace_div(ctx):
    q = ctx.q
    theta = (ctx.base_field.zero, ctx.base_field.one)
    # f = u: G_(p,1)(p u) = p u
    got = trace_div(USeries.u(ctx).truncate(10), theta)
    assert got.coeff(1) == ctx.gs(ctx.ring.theta)
    # constants die
    assert trace_div(USeries.one(ctx, 8), theta).is_zero()
    # coprime scaling: sum_b u(a(z+b)/p) = p u(az)
    N = 2 * q * q
    a = (ctx.base_field.one, ctx.base_field.one)  # theta + 1
    Sa = u_scale(ctx, a, N)
    got = trace_div(Sa, theta)
    expect = Sa.scale(ctx.gs(ctx.ring.theta)).truncate(int(got._p()))
    assert got.eq_to_prec(expect)
    # p | a: the trace vanishes
    pa = (ctx.base_field.zero, ctx.base_field.zero, ctx.base_field.one)
    Spa = u_scale(ctx, pa, N)
    assert trace_div(Spa, theta).is_zero()
    # negative valuation refused
    with pytest.raises(ValueError):
        trace_div(USeries.monomial(ctx, -1, prec=5), theta)


def test_eval_series_on_plain_coefficients(ctx):
    from carlitz_vmf.specialize import RootContext

    theta = (ctx.base_field.zero, ctx.base_field.one)
    rctx = RootContext(ctx, theta)
    f = gen_g(ctx, 8).series
    ev = f.eval_root(rctx)
    # coefficients of g are theta-polynomials: the evaluation embeds them
    # into the residue field without touching exponents
    from carlitz_vmf.polys import Poly
    for n, c in f.c.items():
        num = c.rational_part().num
        expect = Poly(rctx.spec_ring,
                      {k: rctx.embed(v) for k, v in num.c.items()})
        assert ev.c[n].rational_part().num == expect


def test_precision_soundness_pipeline(ctx):
    N = 12
    E_N = gen_E(ctx, N).series
    E_2N = gen_E(ctx, 2 * N).series
    assert E_2N.truncate(N).eq_to_prec(E_N)
    g_N = gen_g(ctx, N).series
    g_2N = gen_g(ctx, 2 * N).series
    assert g_2N.truncate(N).eq_to_prec(g_N)
