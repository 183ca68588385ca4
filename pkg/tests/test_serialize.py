import json
import random

import pytest

from carlitz_vmf import serialize as ser
from carlitz_vmf.polys import Poly, RatFunc
from carlitz_vmf.scalars import GradedScalar
from carlitz_vmf.useries import USeries
from carlitz_vmf.vmf import eis1, legendre_fstar
from carlitz_vmf.forms import gen_g, gen_Delta
from conftest import shared_context


def _rand_scalar(ctx, rng):
    terms = {}
    for _ in range(rng.randrange(1, 3)):
        num = Poly(ctx.ring, {(rng.randrange(3), rng.randrange(2)):
                              ctx.ring.field.from_int(1 + rng.randrange(ctx.p - 1))})
        den = ctx.ring.t + ctx.ring.theta if rng.randrange(2) else ctx.ring.one
        terms[(rng.randrange(-2, 3), rng.randrange(-1, 2))] = RatFunc(num, den)
    return GradedScalar(ctx.ring, terms)


def test_scalar_round_trip(ctx):
    rng = random.Random(2)
    for _ in range(20):
        x = _rand_scalar(ctx, rng)
        back = ser.scalar_from_json(ctx.ring, ser.scalar_to_json(x))
        assert back == x


def test_series_round_trip(ctx):
    rng = random.Random(3)
    for _ in range(10):
        c = {rng.randrange(-3, 12): _rand_scalar(ctx, rng) for _ in range(4)}
        f = USeries(ctx, c, 12)
        back = ser.series_from_json(ctx, ser.series_to_json(f))
        assert back.eq_to_prec(f) and back.prec == f.prec
    exact = USeries.one(ctx)
    back = ser.series_from_json(ctx, ser.series_to_json(exact))
    assert back.prec is None and back.eq_to_prec(exact)


def test_vmform_round_trip_through_envelope(ctx):
    e1 = eis1(ctx, 8)
    env = ser.envelope(ctx, "vmform", 8, ser.vmform_to_json(e1))
    text = ser.canonical_dumps(env)
    back = ser.load_envelope(ctx, text)
    assert back.first_difference(e1) is None
    assert back.k == e1.k and back.m == e1.m and back.regular
    assert back.lam == e1.lam


def test_classical_round_trip(ctx):
    g = gen_g(ctx, 10)
    data = ser.classical_to_json(g)
    back = ser.classical_from_json(ctx, data)
    assert back.series.eq_to_prec(g.series)
    assert (back.weight, back.type_) == (g.weight, g.type_)


def test_specialized_round_trip(ctx):
    from carlitz_vmf.specialize import RootContext, eval_root_form

    p = (ctx.base_field.zero, ctx.base_field.one)
    rc = RootContext(ctx, p)
    F = eval_root_form(eis1(ctx, 8), rc)
    data = ser.specialized_to_json(F)
    back = ser.specialized_from_json(ctx, data)
    assert back.series.first_difference(F.series) is None
    assert back.character_exponent == F.character_exponent


def test_envelope_validation(ctx):
    e1 = eis1(ctx, 6)
    env = ser.envelope(ctx, "vmform", 6, ser.vmform_to_json(e1))
    bad = dict(env)
    bad["schema"] = "other/9"
    with pytest.raises(ValueError):
        ser.load_envelope(ctx, json.dumps(bad))
    bad = dict(env)
    bad["field"] = {"p": 7, "e": 1}
    with pytest.raises(ValueError):
        ser.load_envelope(ctx, json.dumps(bad))
    bad = dict(env)
    bad["kind"] = "mystery"
    with pytest.raises(ValueError):
        ser.load_envelope(ctx, json.dumps(bad))


def test_canonical_dumps_deterministic(ctx):
    Delta = gen_Delta(ctx, 8)
    a = ser.canonical_dumps(ser.envelope(ctx, "classical", 8,
                                         ser.classical_to_json(Delta)))
    b = ser.canonical_dumps(ser.envelope(ctx, "classical", 8,
                                         ser.classical_to_json(gen_Delta(ctx, 8))))
    assert a == b
    assert " " not in a


def test_laurent_series_round_trip(ctx):
    _, d2, d3 = legendre_fstar(ctx, 8)
    for f in (d2, d3):
        back = ser.series_from_json(ctx, ser.series_to_json(f))
        assert back.eq_to_prec(f)
