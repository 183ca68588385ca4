"""Vectorial modular forms in the unipotent gauge.

A form of weight k and type m is stored as the gauge pair (h1, h3): the
actual coordinate vector is (h1, h3 - chi h1) where chi is the character
extension carried by the gauge matrix, so both stored components are
honest u-series.  Stored series are period-normalized (the honest pair is
pi^k times the stored one).

The twist acts on the gauge by

    (h1, h3)  ->  (tau h1, tau h3 - (u (t-theta) om)^(-1) tau h1),

and the Hecke operator at a monic prime p acts by the coset formulas with
two correction terms r0, r1 coming from the failure of the character to
be multiplicative on arguments; both corrections are produced by the
functional equation of the Anderson generating function.
"""

from __future__ import annotations

import math

from .carlitz import b_poly_twist, goss_poly, period_lattice, zeta_ratio
from .context import Context
from .errors import (CarlitzVMFError, NotInSpanError, NotIrreducibleError,
                     PrecisionError)
from .forms import (ClassicalForm, express_in_gh, gen_Delta, gen_g, gen_goss_eis,
                    gen_h, gh_monomials)
from .polys import Poly, RatFunc
from .scalars import GradedScalar
from .useries import USeries, goss_series, scale_arg, trace_div, u_scale


def regular_weight_ok(ctx: Context, k: int, m: int) -> bool:
    """Nonzero regular forms exist exactly for k = 2m + 1 (mod q-1)."""
    if ctx.q == 2:
        return True
    return (k - 2 * m - 1) % (ctx.q - 1) == 0


class VMForm:
    __slots__ = ("ctx", "k", "m", "h1", "h3", "regular", "lam")

    def __init__(self, ctx, k: int, m: int, h1: USeries, h3: USeries,
                 regular: bool = False, lam: GradedScalar | None = None):
        self.ctx = ctx
        self.k = k
        self.m = m % max(ctx.q - 1, 1)
        if regular:
            if h1.c and h1.val() < 1:
                raise CarlitzVMFError("regular form needs h1 in u T[[u]]")
            if h3.c and h3.val() < 0:
                raise CarlitzVMFError("regular form needs h3 in T[[u]]")
            if (h1.c or h3.c) and not regular_weight_ok(ctx, k, self.m):
                raise CarlitzVMFError(
                    f"no nonzero regular forms of weight {k}, type {self.m}"
                )
        self.h1 = h1
        self.h3 = h3
        self.regular = regular
        self.lam = lam

    def __add__(self, other):
        if (self.k, self.m) != (other.k, other.m):
            raise ValueError("weights/types differ")
        return VMForm(self.ctx, self.k, self.m, self.h1 + other.h1,
                      self.h3 + other.h3, regular=self.regular and other.regular)

    def __neg__(self):
        return VMForm(self.ctx, self.k, self.m, -self.h1, -self.h3,
                      regular=self.regular)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar: GradedScalar):
        return VMForm(self.ctx, self.k, self.m, self.h1.scale(scalar),
                      self.h3.scale(scalar), regular=self.regular, lam=self.lam)

    def mul_classical(self, f: ClassicalForm):
        h1 = self.h1 * f.series
        h3 = self.h3 * f.series
        reg = (not h1.c or h1.val() >= 1) and (not h3.c or h3.val() >= 0) \
            and regular_weight_ok(self.ctx, self.k + f.weight, self.m + f.type_)
        return VMForm(self.ctx, self.k + f.weight, self.m + f.type_, h1, h3,
                      regular=reg)

    def mul_series(self, s: USeries, dweight: int = 0, dtype: int = 0):
        return VMForm(self.ctx, self.k + dweight, self.m + dtype,
                      self.h1 * s, self.h3 * s)

    def truncate(self, N: int):
        return VMForm(self.ctx, self.k, self.m, self.h1.truncate(N),
                      self.h3.truncate(N), regular=self.regular, lam=self.lam)

    def eq_to_prec(self, other, at_least=None):
        return (self.h1.eq_to_prec(other.h1, at_least)
                and self.h3.eq_to_prec(other.h3, at_least))

    def first_difference(self, other):
        d1 = self.h1.first_difference(other.h1)
        if d1 is not None:
            return ("h1",) + d1
        d3 = self.h3.first_difference(other.h3)
        if d3 is not None:
            return ("h3",) + d3
        return None

    def is_regular_valued(self):
        return (not self.h1.c or self.h1.val() >= 1) and \
               (not self.h3.c or self.h3.val() >= 0)

    def __repr__(self):
        return (f"VMForm(k={self.k}, m={self.m}, regular={self.regular},\n"
                f"  h1={self.h1},\n  h3={self.h3})")


# -- gauge scalars -----------------------------------------------------------


def tau_omega_inv(ctx: Context) -> GradedScalar:
    """((t - theta) om)^(-1), the twisted reciprocal unit."""
    return GradedScalar(
        ctx.ring, {(0, -1): RatFunc(ctx.ring.one, ctx.ring.t - ctx.ring.theta)}
    )


def lambda_1(ctx: Context) -> GradedScalar:
    """Constant of the weight-one series: 1/((t - theta) om)."""
    return tau_omega_inv(ctx)


def lambda_q(ctx: Context) -> GradedScalar:
    """1/((t - theta^q)(t - theta) om)."""
    tq = Poly(ctx.ring, {(ctx.q, 0): ctx.ring.field.one})
    den = (ctx.ring.t - tq) * (ctx.ring.t - ctx.ring.theta)
    return GradedScalar(ctx.ring, {(0, -1): RatFunc(ctx.ring.one, den)})


# -- the character correction --------------------------------------------------


def chi_correction(ctx: Context, a, N: int | None = None) -> USeries:
    """The failure of multiplicativity of the character on arguments:
    chi(a z) = a(t) chi(z) + om^(-1) * (this Laurent polynomial in u).

    Exact and finitely supported; lowest exponent -q^(deg a - 1)."""
    d = len(a) - 1
    if d <= 0:
        return USeries.zero(ctx)
    coeffs = ctx.carlitz_coeffs(a)
    out: dict = {}
    for l in range(d):
        for i in range(l + 1, d + 1):
            Ei = coeffs[i]
            if Ei.is_zero():
                continue
            exp = -(ctx.q ** (i - (l + 1)))
            c = GradedScalar(
                ctx.ring,
                {(0, -1): RatFunc(Ei * b_poly_twist(ctx, l, i - l), None)},
            )
            cur = out.get(exp)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = s
    series = USeries(ctx, out, None)
    return series if N is None else series.truncate(N)


# -- Eisenstein series -----------------------------------------------------------


def eis1(ctx: Context, N: int) -> VMForm:
    """The weight-one series: h1 = -sum a(t) u(az),
    h3 = 1/((t-theta) om) + sum chi_corr(a) u(az)."""
    def build():
        h1 = USeries.zero(ctx, N)
        h3 = USeries.const(ctx, lambda_1(ctx), N)
        for a in ctx.monics_below(N):
            d = len(a) - 1
            S = u_scale(ctx, a, N)
            h1 = h1 - S.scale(ctx.gs(ctx.chi(a)))
            if d >= 1:
                cc = chi_correction(ctx, a)
                S_hi = u_scale(ctx, a, N + ctx.q ** (d - 1))
                h3 = h3 + (cc * S_hi).truncate(N)
        return VMForm(ctx, 1, 0, h1.truncate(N), h3.truncate(N), regular=True,
                      lam=lambda_1(ctx))

    return ctx.memo(("eis1", N), build)


def eis_q(ctx: Context, N: int) -> VMForm:
    """The weight-q series from its displayed expansion:
    h1 = -sum a(t) u(az)^q,
    h3 = lambda_q + tau(om)^(-1) sum u(az)^(q-1) + sum chi_corr(a) u(az)^q."""
    def build():
        q = ctx.q
        h1 = USeries.zero(ctx, N)
        mid = USeries.zero(ctx, N)
        h3 = USeries.const(ctx, lambda_q(ctx), N)
        for a in ctx.monics_below(N):
            d = len(a) - 1
            S = u_scale(ctx, a, N)
            Sq = (S ** q).truncate(N)
            h1 = h1 - Sq.scale(ctx.gs(ctx.chi(a)))
            mid = mid + (S ** (q - 1)).truncate(N)
            if d >= 1:
                cc = chi_correction(ctx, a)
                S_hi = u_scale(ctx, a, N + ctx.q ** (d - 1))
                h3 = h3 + (cc * S_hi ** q).truncate(N)
        h3 = h3 + mid.scale(tau_omega_inv(ctx))
        return VMForm(ctx, q, 0, h1.truncate(N), h3.truncate(N), regular=True,
                      lam=lambda_q(ctx))

    return ctx.memo(("eis_q", N), build)


def tau_vmf(H: VMForm) -> VMForm:
    """The twist in gauge coordinates."""
    ctx = H.ctx
    h1t = H.h1.tau()
    corr = h1t.shift(-1).scale(tau_omega_inv(ctx))
    h3t = H.h3.tau() - corr
    reg = H.regular and (not H.h1.c or H.h1.val() >= 1)
    lam = H.lam.tau(ctx.q) if H.lam is not None else None
    return VMForm(ctx, H.k * ctx.q, H.m, h1t, h3t, regular=reg, lam=lam)


def untau_vmf(T: VMForm, k: int, m: int, regular: bool = False) -> VMForm:
    """Invert `tau_vmf`, recovering the pre-twist gauge pair."""
    ctx = T.ctx
    f1 = T.h1.untau()
    f3 = (T.h3 + T.h1.shift(-1).scale(tau_omega_inv(ctx))).untau()
    return VMForm(ctx, k, m, f1, f3, regular=regular)


def det_pair(H1: VMForm, H2: VMForm) -> ClassicalForm:
    """Determinant pairing; the gauge matrix is unipotent so the gauge
    components can be used directly."""
    ctx = H1.ctx
    series = H1.h1 * H2.h3 - H2.h1 * H1.h3
    return ClassicalForm(ctx, H1.k + H2.k, H1.m + H2.m + 1, series)


# -- Hecke action ------------------------------------------------------------------


def hecke(ctx: Context, p, H: VMForm) -> VMForm:
    """The Hecke operator at the monic prime p on a regular form."""
    if not ctx.is_irreducible(p):
        raise NotIrreducibleError(f"{p} is not irreducible")
    if not H.regular:
        raise CarlitzVMFError(
            "the Hecke operator is only closed on forms regular at infinity"
        )
    d = len(p) - 1
    q = ctx.q
    k = H.k
    pk = ctx.gs(ctx.apoly(p) ** k)
    chip = ctx.gs(ctx.chi(p))
    P1 = H.h1._p()
    P3 = H.h3._p()
    if P1 == math.inf or P3 == math.inf:
        raise PrecisionError("Hecke needs truncated input")
    h1_hi = scale_arg(H.h1, p, int(P1) + q ** max(d - 1, 0))
    new_h1 = h1_hi.truncate(int(P1)).scale(pk * chip) + trace_div(H.h1, p)

    # r0: traces of the shifted h1 against the torsion Goss polynomials
    r0 = USeries.zero(ctx)
    coeffs = ctx.carlitz_coeffs(p)
    for l in range(d):
        for i in range(l + 1, d + 1):
            Ei = coeffs[i]
            if Ei.is_zero():
                continue
            mu = q ** (i - (l + 1))
            shifted = H.h1.shift(-mu)
            pos = USeries(ctx, {n: c for n, c in shifted.c.items() if n >= 1},
                          shifted.prec)
            coef = GradedScalar(
                ctx.ring,
                {(0, -1): RatFunc(Ei * b_poly_twist(ctx, l, i - l), None)},
            )
            r0 = r0 + trace_div(pos, p).scale(coef)

    # r1: the non-multiplicative part of chi at p z against the scaled h1
    cc = chi_correction(ctx, p)
    r1 = -(cc * h1_hi).scale(pk)

    new_h3 = (scale_arg(H.h3, p, int(P3)).scale(pk)
              + trace_div(H.h3, p).scale(chip) + r0 + r1)
    out = VMForm(ctx, k, H.m, new_h1, new_h3, regular=False)
    if not out.is_regular_valued():
        raise CarlitzVMFError("Hecke image failed the regularity valuations")
    out.regular = True
    return out


# -- structure theorem -------------------------------------------------------------


def structure_decompose(ctx: Context, H: VMForm, N: int | None = None):
    """Write H = F e1 + G tau(e1) by Cramer elimination in the gauge.

    Returns (F, G) as ClassicalForms of weights k-1 and k-q; raises
    NotInSpanError with the residual when H is not in the module."""
    if not regular_weight_ok(ctx, H.k, H.m):
        raise CarlitzVMFError(
            f"weight {H.k} type {H.m} admits no nonzero regular forms"
        )
    P = min(H.h1._p(), H.h3._p())
    if N is None:
        if P == math.inf:
            raise PrecisionError("decomposition needs truncated input")
        N = int(P)
    e1 = eis1(ctx, N)
    eq = eis_q(ctx, N)
    den = det_pair(e1, eq).series
    F = det_pair(H, eq).series / den
    G = det_pair(e1, H).series / den
    res1 = (F * e1.h1 + G * eq.h1 - H.h1)
    res3 = (F * e1.h3 + G * eq.h3 - H.h3)
    if not res1.is_zero() or not res3.is_zero():
        raise NotInSpanError("form is not in the Eisenstein module",
                             residual=res1 if not res1.is_zero() else res3)
    Fc = ClassicalForm(ctx, H.k - 1, H.m, F)
    Gc = ClassicalForm(ctx, H.k - ctx.q, H.m, G)
    return Fc, Gc


def compose_structure(ctx: Context, F: ClassicalForm, G: ClassicalForm,
                      N: int) -> VMForm:
    """F e1 + G tau(e1) for classical F, G."""
    e1 = eis1(ctx, N)
    eq = eis_q(ctx, N)
    h1 = F.series * e1.h1 + G.series * eq.h1
    h3 = F.series * e1.h3 + G.series * eq.h3
    return VMForm(ctx, F.weight + 1, F.type_, h1, h3,
                  regular=(not h1.c or h1.val() >= 1) and
                          (not h3.c or h3.val() >= 0) and
                          regular_weight_ok(ctx, F.weight + 1, F.type_))


def eis_k(ctx: Context, k: int, N: int) -> VMForm:
    """The weight-k series, built through the structure theorem: the first
    coordinate is the monic-indexed expansion with the k-th Goss
    polynomial, the second is completed from the weight-1 and weight-q
    series by solving on first coordinates."""
    if k < 1:
        raise ValueError("k must be positive")
    if ctx.q > 2 and (k - 1) % (ctx.q - 1):
        raise ValueError(f"weight {k} is not 1 mod q-1")
    if k == 1:
        return eis1(ctx, N)

    def build():
        q = ctx.q
        L = period_lattice(ctx)
        h1 = USeries.zero(ctx, N)
        for a in ctx.monics_below(N):
            S = u_scale(ctx, a, N)
            h1 = h1 - goss_series(ctx, L, k, S).scale(ctx.gs(ctx.chi(a)))
        e1 = eis1(ctx, N)
        eq = eis_q(ctx, N)
        pairs_F = gh_monomials(ctx, k - 1, 0)
        pairs_G = gh_monomials(ctx, k - q, 0) if k >= q else []
        gN = gen_g(ctx, N)
        hN = gen_h(ctx, N)

        def monomial(al, be):
            if not al and not be:
                return USeries.one(ctx, N)
            return (gN.series ** al * hN.series ** be).truncate(N)

        cols = []
        for (al, be) in pairs_F:
            cols.append((monomial(al, be) * e1.h1, "F", (al, be)))
        for (al, be) in pairs_G:
            cols.append((monomial(al, be) * eq.h1, "G", (al, be)))
        if not cols:
            raise CarlitzVMFError("no basis columns; weight too small")
        if N <= len(cols) + 1:
            raise PrecisionError("truncation too small for the structure solve")
        rows = range(1, N)
        mat = [[col[0].coeff(n).rational_part() for col in cols] for n in rows]
        rhs = [h1.coeff(n).rational_part() for n in rows]
        from .forms import _gauss_pivot_solution

        sol = _gauss_pivot_solution(ctx, mat, rhs)
        Fs = USeries.zero(ctx, N)
        Gs = USeries.zero(ctx, N)
        for (al, be), c in zip(pairs_F, sol[: len(pairs_F)]):
            if not c.is_zero():
                Fs = Fs + monomial(al, be).scale(GradedScalar.from_rat(c))
        for (al, be), c in zip(pairs_G, sol[len(pairs_F):]):
            if not c.is_zero():
                Gs = Gs + monomial(al, be).scale(GradedScalar.from_rat(c))
        check = Fs * e1.h1 + Gs * eq.h1
        if not check.eq_to_prec(h1):
            raise NotInSpanError("weight-k first coordinate not in the module",
                                 residual=check - h1)
        h3 = Fs * e1.h3 + Gs * eq.h3
        lam = extract_lambda(ctx, k, h1, h3, N)
        return VMForm(ctx, k, 0, h1.truncate(N), h3.truncate(N), regular=True,
                      lam=lam)

    return ctx.memo(("eis_k", k, N), build)


def extract_lambda(ctx: Context, k: int, h1: USeries, h3: USeries, N: int):
    """Pull the weight-k constant out of h3 by removing the explicit part
    of the monic-indexed expansion; raises if the remainder is not a
    constant (the cross-check of the expansion theorem)."""
    q = ctx.q
    L = period_lattice(ctx)
    rest = h3
    for a in ctx.monics_below(N):
        d = len(a) - 1
        if d < 1:
            continue
        cc = chi_correction(ctx, a)
        S_hi = u_scale(ctx, a, N + q ** (d - 1))
        rest = rest - (cc * goss_series(ctx, L, k, S_hi)).truncate(N)
    lmax = 0
    while q ** (lmax + 1) <= k - 1:
        lmax += 1
    if k > 1:
        for l in range(lmax + 1):
            w = k - q ** l
            E_l = gen_goss_eis(ctx, w, N)
            zr = zeta_ratio(ctx, w)
            tq = Poly(ctx.ring, {(q ** l, 0): ctx.ring.field.one})
            den = (tq - ctx.ring.t) * ctx.D(l)
            coef = GradedScalar(ctx.ring, {(0, -1): RatFunc(ctx.ring.one, den)})
            combo = USeries.const(ctx, zr, N) + E_l.series
            rest = rest - combo.scale(coef)
    # the remainder must be a constant series
    nonconst = {n: c for n, c in rest.c.items() if n != 0}
    if nonconst:
        raise CarlitzVMFError(
            f"lambda extraction left non-constant terms at {sorted(nonconst)}"
        )
    return rest.c.get(0, GradedScalar.zero(ctx.ring))


# -- the Legendre pair ------------------------------------------------------------


def legendre_fstar(ctx: Context, N: int):
    """Recover the weak weight -1 pair and its two coordinate series from
    the weight-one series by Laurent division and untwisting.

    Returns (fstar, d2, d3)."""
    def build():
        M = ctx.q * (N + 2)
        e1 = eis1(ctx, M)
        h = gen_h(ctx, M)
        T1 = -(e1.h1 / h.series)
        T3 = -(e1.h3 / h.series)
        T = VMForm(ctx, -ctx.q, -1, T1, T3, regular=False)
        fstar = untau_vmf(T, -1, -1, regular=False)
        d2 = -fstar.h1
        d3 = fstar.h3
        return fstar.truncate(N), d2.truncate(N), d3.truncate(N)

    return ctx.memo(("legendre", N), build)
