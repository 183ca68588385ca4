"""Scalar Drinfeld modular forms as truncated u-expansions.

All stored series are period-normalized: the honest expansion of a weight
k form equals pi^k times the stored one, and the stored coefficients are
rational (grade zero).  The generators g, h, Delta, E and the special
families are produced from their expansions indexed by monic polynomials;
h is built from the weight-raising derivation applied to g and is
cross-checked elsewhere against its own monic-indexed expansion.
"""

from __future__ import annotations

import math

from .carlitz import goss_poly, period_lattice, zeta_ratio
from .context import Context
from .errors import NotInSpanError, NotIrreducibleError, PrecisionError
from .polys import Poly, RatFunc
from .scalars import GradedScalar
from .useries import USeries, dz, goss_series, scale_arg, u_scale


class ClassicalForm:
    """A weight/type-tagged u-expansion, optionally with a g,h expression."""

    __slots__ = ("ctx", "weight", "type_", "series", "gh")

    def __init__(self, ctx, weight: int, type_: int, series: USeries, gh=None):
        self.ctx = ctx
        self.weight = weight
        self.type_ = type_ % max(ctx.q - 1, 1)
        self.series = series
        self.gh = gh

    def __mul__(self, other):
        return ClassicalForm(
            self.ctx,
            self.weight + other.weight,
            self.type_ + other.type_,
            self.series * other.series,
        )

    def __add__(self, other):
        if (self.weight, self.type_) != (other.weight, other.type_):
            raise ValueError("weights/types differ")
        return ClassicalForm(self.ctx, self.weight, self.type_, self.series + other.series)

    def __neg__(self):
        return ClassicalForm(self.ctx, self.weight, self.type_, -self.series)

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, n):
        return ClassicalForm(
            self.ctx, self.weight * n, self.type_ * n, self.series ** n
        )

    def scale(self, scalar: GradedScalar):
        return ClassicalForm(self.ctx, self.weight, self.type_, self.series.scale(scalar))

    def __repr__(self):
        return f"ClassicalForm(weight={self.weight}, type={self.type_}, {self.series})"


class QuasiPair:
    """Depth-graded components (f_0, ..., f_l) of a quasi-modular form."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(components)

    @property
    def depth(self):
        return len(self.components) - 1


def a_expansion(ctx: Context, coeff_fn, k: int, N: int) -> USeries:
    """sum over monic a of coeff_fn(a) * G_k(u(a z)), exact below u^N.

    ``coeff_fn`` takes the coefficient tuple of a monic a and returns a
    GradedScalar (or None to skip the term).
    """
    if k < 1:
        raise ValueError("k must be positive")
    L = period_lattice(ctx)
    out = USeries.zero(ctx, N)
    for a in ctx.monics_below(N):
        c = coeff_fn(a)
        if c is None or (hasattr(c, "is_zero") and c.is_zero()):
            continue
        S = u_scale(ctx, a, N)
        term = S if k == 1 else goss_series(ctx, L, k, S)
        out = out + term.scale(c)
    return out.truncate(N)


def _cached_form(ctx, key, builder):
    hit = ctx.cache.get(key)
    if hit is not None:
        return hit
    val = builder()
    ctx.cache[key] = val
    return val


def gen_E(ctx: Context, N: int) -> ClassicalForm:
    """False Eisenstein series of weight 2, type 1: sum a u(az)."""
    def build():
        s = a_expansion(ctx, lambda a: ctx.gs(ctx.apoly(a)), 1, N)
        return ClassicalForm(ctx, 2, 1, s)

    return _cached_form(ctx, ("E", N), build)


def gen_g(ctx: Context, N: int) -> ClassicalForm:
    """Weight q-1, type 0: 1 - (theta^q - theta) sum u(az)^(q-1)."""
    def build():
        q = ctx.q
        br = ctx.D(1)
        s = a_expansion(ctx, lambda a: ctx.gs_one(), q - 1, N)
        series = USeries.one(ctx, N) - s.scale(ctx.gs(br))
        return ClassicalForm(ctx, q - 1, 0, series)

    return _cached_form(ctx, ("g", N), build)


def gen_Delta(ctx: Context, N: int) -> ClassicalForm:
    """The discriminant: -sum a^(q^2-q) u(az)^(q-1), weight q^2-1.

    The sign is pinned by the rank-2 module coefficient derived from the
    lattice exponential (equivalently by Delta = -h^(q-1)); the unsigned
    monic-indexed sum equals +h^(q-1)."""
    def build():
        q = ctx.q
        s = a_expansion(
            ctx, lambda a: ctx.gs(ctx.apoly(a) ** (q * q - q)), q - 1, N
        )
        return ClassicalForm(ctx, q * q - 1, 0, -s)

    return _cached_form(ctx, ("Delta", N), build)


def gen_fs(ctx: Context, s: int, N: int) -> ClassicalForm:
    """Single-cuspidal family: sum a^(1+s(q-1)) u(az)."""
    if s < 1:
        raise ValueError("s must be positive")
    exp = 1 + s * (ctx.q - 1)
    series = a_expansion(ctx, lambda a: ctx.gs(ctx.apoly(a) ** exp), 1, N)
    return ClassicalForm(ctx, 2 + s * (ctx.q - 1), 1, series)


def gen_goss_eis(ctx: Context, m: int, N: int) -> ClassicalForm:
    """Period-normalized Eisenstein series of weight m, (q-1) | m:
    -zeta_ratio(m) - sum_a G_m(u(az))."""
    def build():
        zr = zeta_ratio(ctx, m)
        s = a_expansion(ctx, lambda a: ctx.gs_one(), m, N)
        series = USeries.const(ctx, -zr, N) - s
        return ClassicalForm(ctx, m, 0, series)

    return _cached_form(ctx, ("goss_eis", m, N), build)


def ramanujan_serre(ctx: Context, f: ClassicalForm) -> ClassicalForm:
    """Weight-raising derivation: pi^(-1) D_z f + (weight) E f."""
    N = f.series.prec
    pi_inv = GradedScalar(ctx.ring, {(-1, 0): RatFunc(ctx.ring.one, None, reduce=False)})
    d = dz(f.series, 1).scale(pi_inv)
    kE = ctx.gs_int(f.weight)
    if kE.is_zero():
        series = d
    else:
        if N is None:
            raise PrecisionError("derivation of an exact series needs a truncation")
        series = d + gen_E(ctx, N).series.scale(kE) * f.series
    return ClassicalForm(ctx, f.weight + 2, f.type_ + 1, series)


def gen_h(ctx: Context, N: int) -> ClassicalForm:
    """Weight q+1, type 1, leading coefficient -1: the derivation applied
    to g."""
    def build():
        # run the derivation one order higher so the result is good to N
        g = gen_g(ctx, N + 1)
        d = ramanujan_serre(ctx, g)
        return ClassicalForm(ctx, ctx.q + 1, 1, d.series.truncate(N))

    return _cached_form(ctx, ("h", N), build)


def gen_h_a_expansion(ctx: Context, N: int) -> ClassicalForm:
    """Independent route to h: -sum a^q u(az)."""
    series = -a_expansion(ctx, lambda a: ctx.gs(ctx.apoly(a) ** ctx.q), 1, N)
    return ClassicalForm(ctx, ctx.q + 1, 1, series)


def para_eisenstein(ctx: Context, k: int, N: int) -> ClassicalForm:
    """Normalized coefficient forms of the rank-2 lattice exponential:
    alpha_0 = 1, alpha_1 = g/D_1, and

        alpha_k (theta^(q^k) - theta) = g alpha_(k-1)^q + Delta alpha_(k-2)^(q^2).
    """
    if k < 0:
        raise ValueError("k must be non-negative")

    def build():
        if k == 0:
            return ClassicalForm(ctx, 0, 0, USeries.one(ctx, N))
        g = gen_g(ctx, N)
        if k == 1:
            series = g.series.scale(ctx.gs_rat(RatFunc(ctx.ring.one, ctx.D(1))))
            return ClassicalForm(ctx, ctx.q - 1, 0, series)
        Delta = gen_Delta(ctx, N)
        am1 = para_eisenstein(ctx, k - 1, N)
        am2 = para_eisenstein(ctx, k - 2, N)
        q = ctx.q
        f = ctx.ring.field
        den = Poly(ctx.ring, {(q ** k, 0): f.one}) - ctx.ring.theta
        series = (
            g.series * am1.series ** q + Delta.series * am2.series ** (q * q)
        ).scale(ctx.gs_rat(RatFunc(ctx.ring.one, den)))
        return ClassicalForm(ctx, q ** k - 1, 0, series)

    return _cached_form(ctx, ("para", k, N), build)


# -- expression in the g, h monomial basis ---------------------------------


def gh_monomials(ctx: Context, weight: int, type_: int):
    """Exponent pairs (alpha, beta) with alpha(q-1) + beta(q+1) = weight
    and beta = type (mod q-1)."""
    q = ctx.q
    mod = q - 1
    out = []
    for beta in range(weight // (q + 1) + 1):
        rem = weight - beta * (q + 1)
        if mod == 1:
            out.append((rem, beta))
        elif rem % mod == 0 and (beta - type_) % mod == 0:
            out.append((rem // mod, beta))
    return out


def _monomial_series(ctx, pairs, N):
    g = gen_g(ctx, N)
    h = gen_h(ctx, N)
    out = []
    for (al, be) in pairs:
        s = g.series ** al * h.series ** be if (al or be) else USeries.one(ctx, N)
        out.append(s.truncate(N))
    return out


def express_in_gh(ctx: Context, f: ClassicalForm) -> dict:
    """Write f as a combination of g^alpha h^beta monomials.

    Raises NotInSpanError (with the residual series) when f is not in the
    span to its known precision, and PrecisionError when the truncation
    does not even exceed the number of admissible monomials.
    """
    series = f.series
    if series.prec is None:
        raise PrecisionError("an exact series has no tracked truncation to solve against")
    N = series.prec
    pairs = gh_monomials(ctx, f.weight, f.type_)
    if not pairs:
        if series.is_zero():
            return {}
        raise NotInSpanError("no admissible monomials for this weight/type",
                             residual=series)
    if N <= len(pairs):
        raise PrecisionError(f"truncation {N} must exceed {len(pairs)} monomials")
    basis = _monomial_series(ctx, pairs, N)
    lo = min(min((b.val() for b in basis), default=0), series.val() if series.c else 0)
    rows = list(range(int(lo), N))
    grades = set()
    for c in series.c.values():
        grades |= c.grades()
    if not grades:
        grades = {(0, 0)}
    solution = {pair: GradedScalar.zero(ctx.ring) for pair in pairs}
    mat = [[b.c.get(n, GradedScalar.zero(ctx.ring)).rational_part() for b in basis]
           for n in rows]
    residual: dict = {}
    for grade in sorted(grades):
        rhs = [series.c.get(n, GradedScalar.zero(ctx.ring)).grade_part(*grade)
               for n in rows]
        sol = _gauss_pivot_solution(ctx, mat, rhs)
        for row_i, n in enumerate(rows):
            acc = rhs[row_i]
            for c in range(len(pairs)):
                if not mat[row_i][c].is_zero() and not sol[c].is_zero():
                    acc = acc - mat[row_i][c] * sol[c]
            if not acc.is_zero():
                cur = residual.get(n, GradedScalar.zero(ctx.ring))
                residual[n] = cur + GradedScalar.from_rat(acc, *grade)
        for pair, cval in zip(pairs, sol):
            if not cval.is_zero():
                solution[pair] = solution[pair] + GradedScalar.from_rat(cval, *grade)
    if residual:
        raise NotInSpanError(
            "series is not in the g,h span to its precision",
            residual=USeries(ctx, residual, N),
        )
    return {pair: s for pair, s in solution.items() if not s.is_zero()}


def _gauss_pivot_solution(ctx, mat, rhs):
    """Exact Gaussian elimination; returns the pivot-variable solution
    (free variables zero) without asserting consistency."""
    m = [row[:] + [r] for row, r in zip(mat, rhs)]
    nrows, ncols = len(m), len(mat[0])
    piv_rows = []
    r0 = 0
    for col in range(ncols):
        piv = None
        for r in range(r0, nrows):
            if not m[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        m[r0], m[piv] = m[piv], m[r0]
        inv = m[r0][col].inv()
        m[r0] = [x * inv for x in m[r0]]
        for r in range(nrows):
            if r != r0 and not m[r][col].is_zero():
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[r0])]
        piv_rows.append((r0, col))
        r0 += 1
        if r0 == nrows:
            break
    sol = [RatFunc(ctx.ring.zero, None, reduce=False)] * ncols
    for r, c in piv_rows:
        sol[c] = m[r][ncols]
    return sol


# -- level structures --------------------------------------------------------


def level_Ep(ctx: Context, p, N: int) -> ClassicalForm:
    """E - p E(p z): weight 2, type 1 at Hecke level p."""
    if len(p) - 1 < 1:
        raise ValueError("level must have positive degree")
    if not ctx.is_irreducible(p):
        raise NotIrreducibleError(f"{p} is not irreducible")
    E = gen_E(ctx, N)
    scaled = scale_arg(E.series, p, N).scale(ctx.gs(ctx.apoly(p)))
    return ClassicalForm(ctx, 2, 1, E.series - scaled)


def quasi_E_pair(ctx: Context, N: int) -> QuasiPair:
    """Depth-1 data of E: components (E, -1/pi)."""
    minus_pi_inv = GradedScalar(
        ctx.ring, {(-1, 0): RatFunc(-ctx.ring.one, None, reduce=False)}
    )
    return QuasiPair((gen_E(ctx, N).series, USeries.const(ctx, minus_pi_inv)))


def w_involution_check(ctx: Context, p, N: int):
    """Verify the Fricke-type sign on E - p E(pz) symbolically.

    Expressions are dictionaries {(symbol, z-power): scalar} over the
    symbols E(z), E(pz) and 1; only substitutions by the inversion
    (z -> -1/z, a unimodular move) and by z -> pz are used, exactly the
    steps that are legitimate for a depth-1 quasi-modular pair.
    """
    if not ctx.is_irreducible(p):
        raise NotIrreducibleError(f"{p} is not irreducible")
    ring = ctx.ring
    one = ctx.gs_one()
    pp = ctx.gs(ctx.apoly(p))
    pi_inv = GradedScalar(ring, {(-1, 0): RatFunc(ring.one, None, reduce=False)})

    def add_into(d, key, val):
        cur = d.get(key)
        s = val if cur is None else cur + val
        if s.is_zero():
            d.pop(key, None)
        else:
            d[key] = s

    # E_p = E(z) - p E(pz)
    ep = {}
    add_into(ep, ("E", 0), one)
    add_into(ep, ("Ep", 0), -pp)

    # images of the symbols under w := -1/(p z):
    #   E(w)     = (p z)^2 E(pz) - (p z)/pi        [inversion at p z]
    #   E(p w)   = E(-1/z) = z^2 E(z) - z/pi       [inversion at z]
    img_E = {("Ep", 2): pp * pp, ("1", 1): -(pp * pi_inv)}
    img_Ep = {("E", 2): one, ("1", 1): -pi_inv}

    transformed = {}
    for (sym, zk), coef in ep.items():
        img = {"E": img_E, "Ep": img_Ep, "1": {("1", 0): one}}[sym]
        # w^zk factor: (-1)^zk p^(-zk) z^(-zk)
        for (sym2, zk2), c2 in img.items():
            factor = coef * c2
            if zk:
                factor = factor * (-(pp.inv())) ** zk
            add_into(transformed, (sym2, zk2 - zk), factor)

    # slash by W: det^1 j^(-2) = p (p z)^(-2)
    final = {}
    for (sym, zk), coef in transformed.items():
        add_into(final, (sym, zk - 2), coef * pp.inv())

    target = {}
    add_into(target, ("E", 0), -one)
    add_into(target, ("Ep", 0), pp)
    ok = final == target
    return {"ok": ok, "got": final, "expected": target}
