"""Canonical JSON for every artifact type.

Numbers never appear as floats: field elements are little-endian base-p
digit strings, polynomials are sorted (theta-exp, t-exp, digits) triples,
graded scalars sorted (pi-exp, om-exp, num, den) records.  Files carry a
schema tag and the field so readers can refuse mismatches.
"""

from __future__ import annotations

import json

from .context import Context
from .forms import ClassicalForm
from .polys import Poly, RatFunc
from .scalars import GradedScalar
from .useries import USeries
from .vmf import VMForm

SCHEMA = "carlitz-vmf/1"


def digits_str(field, x) -> str:
    return "".join(str(d) for d in field.digits(x))


def elt_from_digits(field, s: str):
    return field.from_digits([int(ch) for ch in s])


def poly_to_json(p: Poly):
    f = p.ring.field
    return [[i, j, digits_str(f, c)] for (i, j), c in sorted(p.c.items())]


def poly_from_json(ring, data) -> Poly:
    f = ring.field
    return Poly(ring, {(i, j): elt_from_digits(f, s) for i, j, s in data})


def rat_to_json(r: RatFunc):
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def rat_from_json(ring, data) -> RatFunc:
    return RatFunc(poly_from_json(ring, data["num"]),
                   poly_from_json(ring, data["den"]), reduce=False)


def scalar_to_json(s: GradedScalar):
    return [[a, b, poly_to_json(c.num), poly_to_json(c.den)]
            for (a, b), c in sorted(s.terms.items())]


def scalar_from_json(ring, data) -> GradedScalar:
    return GradedScalar(ring, {
        (a, b): RatFunc(poly_from_json(ring, num), poly_from_json(ring, den),
                        reduce=False)
        for a, b, num, den in data
    })


def series_to_json(f: USeries):
    return {
        "prec": f.prec,
        "coeffs": [[n, scalar_to_json(c)] for n, c in sorted(f.c.items())],
    }


def series_from_json(ctx: Context, data) -> USeries:
    return USeries(
        ctx,
        {n: scalar_from_json(ctx.ring, s) for n, s in data["coeffs"]},
        data["prec"],
    )


def classical_to_json(f: ClassicalForm):
    return {
        "weight": f.weight,
        "type": f.type_,
        "series": series_to_json(f.series),
        "gh": None if f.gh is None else
            [[a, b, scalar_to_json(c)] for (a, b), c in sorted(f.gh.items())],
    }


def classical_from_json(ctx: Context, data) -> ClassicalForm:
    gh = None
    if data.get("gh") is not None:
        gh = {(a, b): scalar_from_json(ctx.ring, c) for a, b, c in data["gh"]}
    return ClassicalForm(ctx, data["weight"], data["type"],
                         series_from_json(ctx, data["series"]), gh)


def vmform_to_json(H: VMForm):
    return {
        "q": H.ctx.q,
        "weight": H.k,
        "type": H.m,
        "regular": H.regular,
        "trunc": H.h1.prec,
        "h1": series_to_json(H.h1),
        "h3": series_to_json(H.h3),
        "lambda": None if H.lam is None else scalar_to_json(H.lam),
    }


def vmform_from_json(ctx: Context, data) -> VMForm:
    lam = None
    if data.get("lambda") is not None:
        lam = scalar_from_json(ctx.ring, data["lambda"])
    return VMForm(ctx, data["weight"], data["type"],
                  series_from_json(ctx, data["h1"]),
                  series_from_json(ctx, data["h3"]),
                  regular=data["regular"], lam=lam)


def specialized_to_json(F):
    rctx = F.rctx
    base = rctx.ctx.base_field
    return {
        "q": rctx.ctx.q,
        "prime": [digits_str(base, c) for c in rctx.p],
        "degree": rctx.degree,
        "power": F.level_power,
        "frobenius_power": rctx.frobenius_power,
        "character_exponent": F.character_exponent,
        "weight": F.weight,
        "type": F.type_,
        "series": series_to_json(F.series),
    }


def specialized_from_json(ctx: Context, data):
    from .specialize import RootContext, SpecializedForm

    base = ctx.base_field
    p = tuple(elt_from_digits(base, s) for s in data["prime"])
    rctx = RootContext(ctx, p, data["frobenius_power"])
    series = series_from_json(rctx.spec_ctx, data["series"])
    return SpecializedForm(rctx, data["weight"], data["type"], series,
                           level_power=data["power"],
                           character_exponent=data["character_exponent"])


def envelope(ctx: Context, kind: str, trunc, payload) -> dict:
    return {
        "schema": SCHEMA,
        "field": {"p": ctx.p, "e": ctx.e},
        "trunc": trunc,
        "kind": kind,
        "payload": payload,
    }


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def load_envelope(ctx: Context, text: str):
    data = json.loads(text)
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unknown schema {data.get('schema')!r}")
    f = data["field"]
    if (f["p"], f["e"]) != (ctx.p, ctx.e):
        raise ValueError("field mismatch")
    kind = data["kind"]
    payload = data["payload"]
    readers = {
        "vmform": vmform_from_json,
        "classical": classical_from_json,
        "series": series_from_json,
        "specialized": specialized_from_json,
    }
    if kind not in readers:
        raise ValueError(f"unknown kind {kind!r}")
    return readers[kind](ctx, payload)
