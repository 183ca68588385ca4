"""Truncated Laurent series in the uniformizer u with graded coefficients.

A series knows its truncation: coefficients at exponents ``< prec`` are
exact, everything above is undetermined (``prec is None`` marks an exact,
finitely supported series).  Every operation computes the precision of
its output from the precisions and valuations of its inputs, so a
coefficient is never reported beyond what is actually known.
"""

from __future__ import annotations

import math

from .carlitz import goss_poly, period_lattice, torsion_lattice
from .context import Context
from .errors import MixedGradeError, PrecisionError
from .scalars import GradedScalar, eval_root, eval_theta_power


class USeries:
    __slots__ = ("ctx", "c", "prec")

    def __init__(self, ctx: Context, coeffs: dict, prec: int | None = None):
        if prec is not None:
            coeffs = {n: c for n, c in coeffs.items() if n < prec}
        coeffs = {n: c for n, c in coeffs.items() if not c.is_zero()}
        if coeffs and min(coeffs) < -(ctx.q ** 6):
            raise ArithmeticError("Laurent tail below the configured floor")
        self.ctx = ctx
        self.c = coeffs
        self.prec = prec

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(ctx, prec=None):
        return USeries(ctx, {}, prec)

    @staticmethod
    def const(ctx, scalar: GradedScalar, prec=None):
        return USeries(ctx, {0: scalar}, prec)

    @staticmethod
    def one(ctx, prec=None):
        return USeries.const(ctx, GradedScalar.one(ctx.ring), prec)

    @staticmethod
    def monomial(ctx, n: int, scalar=None, prec=None):
        s = scalar if scalar is not None else GradedScalar.one(ctx.ring)
        return USeries(ctx, {n: s}, prec)

    @staticmethod
    def u(ctx, prec=None):
        return USeries.monomial(ctx, 1, prec=prec)

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.c

    def val(self):
        """Valuation of the known part (inf for a zero series)."""
        return min(self.c) if self.c else math.inf

    def _p(self):
        return math.inf if self.prec is None else self.prec

    def coeff(self, n: int) -> GradedScalar:
        if self.prec is not None and n >= self.prec:
            raise PrecisionError(f"coefficient u^{n} beyond truncation {self.prec}")
        return self.c.get(n, GradedScalar.zero(self.ctx.ring))

    def support(self):
        return sorted(self.c)

    def truncate(self, prec: int):
        new = prec if self.prec is None else min(self.prec, prec)
        return USeries(self.ctx, self.c, new)

    def __repr__(self):
        parts = [f"({self.c[n]})*u^{n}" for n in sorted(self.c)[:8]]
        if len(self.c) > 8:
            parts.append("...")
        if self.prec is not None:
            parts.append(f"O(u^{self.prec})")
        return " + ".join(parts) if parts else "0"

    def require_prec(self, n: int):
        if self._p() < n:
            raise PrecisionError(f"series known only to O(u^{self.prec}), need {n}")
        return self

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        prec = min(self._p(), other._p())
        out = dict(self.c)
        for n, c in other.c.items():
            if n in out:
                s = out[n] + c
                if s.is_zero():
                    del out[n]
                else:
                    out[n] = s
            else:
                out[n] = c
        return USeries(self.ctx, out, None if prec == math.inf else prec)

    def __neg__(self):
        return USeries(self.ctx, {n: -c for n, c in self.c.items()}, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        pf, pg = self._p(), other._p()
        vf = self.val() if self.c else pf
        vg = other.val() if other.c else pg
        prec = min(pf + vg, pg + vf)
        if not self.c or not other.c:
            return USeries.zero(self.ctx, None if prec == math.inf else prec)
        out = {}
        items2 = sorted(other.c.items())
        for n1, c1 in self.c.items():
            for n2, c2 in items2:
                n = n1 + n2
                if n >= prec:
                    break
                prod = c1 * c2
                if n in out:
                    s = out[n] + prod
                    if s.is_zero():
                        del out[n]
                    else:
                        out[n] = s
                elif not prod.is_zero():
                    out[n] = prod
        return USeries(self.ctx, out, None if prec == math.inf else prec)

    def scale(self, scalar: GradedScalar):
        if scalar.is_zero():
            return USeries.zero(self.ctx)
        return USeries(self.ctx, {n: scalar * c for n, c in self.c.items()}, self.prec)

    def shift(self, k: int):
        prec = None if self.prec is None else self.prec + k
        return USeries(self.ctx, {n + k: c for n, c in self.c.items()}, prec)

    def inverse(self, rel_prec: int | None = None):
        """Inverse of a Laurent series with invertible lowest coefficient."""
        if not self.c:
            raise ZeroDivisionError("inverse of zero series")
        v = self.val()
        if rel_prec is None:
            if self.prec is None:
                raise PrecisionError("inverse of an exact series needs a target precision")
            rel_prec = self.prec - v
        lead = self.c[v]
        try:
            lead_inv = lead.inv()
        except MixedGradeError:
            raise MixedGradeError("lowest coefficient is not invertible (mixed grade)")
        out = {0: lead_inv}
        f_rel = {n - v: c for n, c in self.c.items()}
        for n in range(1, rel_prec):
            acc = None
            for k, fk in f_rel.items():
                if 0 < k <= n and (n - k) in out:
                    t = fk * out[n - k]
                    acc = t if acc is None else acc + t
            if acc is not None and not acc.is_zero():
                out[n] = -(lead_inv * acc)
        res = {n - v: c for n, c in out.items()}
        return USeries(self.ctx, res, rel_prec - v)

    def __truediv__(self, other):
        if not other.c:
            raise ZeroDivisionError("division by zero series")
        vg = other.val()
        if other._p() == math.inf and self._p() == math.inf:
            if len(other.c) == 1:
                return self * USeries.monomial(self.ctx, -vg, other.c[vg].inv())
            raise PrecisionError("dividing exact by exact needs a truncation")
        rel = min(self._p() - self.val() if self.c else self._p() - vg,
                  other._p() - vg)
        if rel == math.inf:
            rel = None
        inv = other.inverse(rel)
        return self * inv

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = USeries.one(self.ctx)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons ------------------------------------------------------------

    def common_prec(self, other):
        return min(self._p(), other._p())

    def eq_to_prec(self, other, at_least: int | None = None) -> bool:
        prec = self.common_prec(other)
        if at_least is not None and prec < at_least:
            raise PrecisionError(f"comparison needs O(u^{at_least}), have O(u^{prec})")
        a = {n: c for n, c in self.c.items() if n < prec}
        b = {n: c for n, c in other.c.items() if n < prec}
        return a == b

    def first_difference(self, other):
        """(exponent, this coefficient, other coefficient) or None."""
        prec = self.common_prec(other)
        exps = sorted(set(self.c) | set(other.c))
        for n in exps:
            if n >= prec:
                break
            if self.c.get(n) != other.c.get(n):
                z = GradedScalar.zero(self.ctx.ring)
                return (n, self.c.get(n, z), other.c.get(n, z))
        return None

    # -- coefficient maps ---------------------------------------------------------

    def map_scalars(self, fn, prec=None):
        out = {}
        for n, c in self.c.items():
            v = fn(c)
            if not v.is_zero():
                out[n] = v
        return USeries(self.ctx, out, self.prec if prec is None else prec)

    def tau(self):
        """Frobenius twist: coefficients tau'd, u^n -> u^(qn)."""
        q = self.ctx.q
        prec = None if self.prec is None else q * self.prec
        return USeries(self.ctx, {q * n: c.tau(q) for n, c in self.c.items()}, prec)

    def untau(self):
        """Inverse twist; exponents must be multiples of q, coefficients
        twist images."""
        from .errors import NotTauImageError

        q = self.ctx.q
        for n in self.c:
            if n % q:
                raise NotTauImageError(f"exponent {n} not divisible by {q}")
        prec = None if self.prec is None else math.ceil(self.prec / q)
        return USeries(
            self.ctx, {n // q: c.untau(q) for n, c in self.c.items()}, prec
        )

    def dt(self, n: int):
        """Coefficientwise divided-power t-derivative."""
        if n == 0:
            return self
        return self.map_scalars(lambda c: c.hyperderiv_t(n))

    # -- composition -------------------------------------------------------------

    def substitute(self, S: "USeries"):
        """f(u := S) for S of positive valuation."""
        if S.is_zero() or S.val() < 1:
            raise ValueError("substitution needs positive valuation")
        vS = S.val()
        tail = None if self.prec is None else vS * self.prec
        if not self.c:
            return USeries.zero(self.ctx, tail)
        exps = sorted(self.c, reverse=True)
        powers: dict = {}

        def spow(k):
            if k not in powers:
                if k == 1:
                    powers[1] = S
                else:
                    h = spow(k // 2)
                    powers[k] = h * h if k % 2 == 0 else h * h * S
            return powers[k]

        acc = USeries.const(self.ctx, self.c[exps[0]])
        for i in range(1, len(exps)):
            gap = exps[i - 1] - exps[i]
            acc = acc * spow(gap) + USeries.const(self.ctx, self.c[exps[i]])
        n0 = exps[-1]
        if n0 > 0:
            acc = acc * spow(n0)
        elif n0 < 0:
            rel = acc._p()
            if rel == math.inf and tail is None:
                big = max(abs(n0) * vS + 8, 2 * vS)
                acc = acc * S.inverse(big) ** (-n0)
            else:
                target = min(rel if rel != math.inf else math.inf,
                             tail if tail is not None else math.inf)
                acc = acc * S.inverse(int(target) + (1 - n0) * vS) ** (-n0)
        if tail is not None:
            acc = acc.truncate(tail)
        return acc

    # -- specializations -----------------------------------------------------------

    def eval_theta_power(self, j: int):
        return self.map_scalars(lambda c: eval_theta_power(c, j, self.ctx))

    def eval_root(self, rctx):
        out = {}
        for n, c in self.c.items():
            v = eval_root(c, rctx)
            if not v.is_zero():
                out[n] = v
        return USeries(rctx.spec_ctx, out, self.prec)


# -- named operations ------------------------------------------------------------


def series_arith(f: USeries, g, op: str) -> USeries:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "scalar-mul":
        return f.scale(g)
    if op == "div":
        return f / g
    raise ValueError(f"unknown op {op!r}")


def tau_series(f: USeries) -> USeries:
    return f.tau()


def untau_series(f: USeries) -> USeries:
    return f.untau()


def dt_series(f: USeries, n: int) -> USeries:
    return f.dt(n)


def u_scale(ctx: Context, a, prec: int) -> USeries:
    """The series of u(a z): invert the Carlitz action on 1/u."""
    if not a or a[-1] != ctx.base_field.one:
        raise ValueError("a must be monic")
    d = len(a) - 1
    if d == 0:
        return USeries.u(ctx).truncate(prec)
    key = ("u_scale", a)
    cached = ctx.cache.get(key)
    if cached is not None and cached.prec >= prec:
        return cached.truncate(prec)
    Q = ctx.q ** d
    coeffs = ctx.carlitz_coeffs(a)
    # C_a(1/u) = u^(-Q) * sum_i [a]_i u^(Q - q^i)
    P = USeries(
        ctx,
        {Q - ctx.q ** i: GradedScalar.from_poly(c)
         for i, c in enumerate(coeffs) if not c.is_zero()},
    )
    rel = max(prec - Q, 1)
    out = P.inverse(rel).shift(Q).truncate(prec)
    ctx.cache[key] = out
    return out


def scale_arg(f: USeries, a, prec: int | None = None) -> USeries:
    """f(z) -> f(a z) on u-expansions, for monic a."""
    ctx = f.ctx
    d = len(a) - 1
    if d == 0:
        return f if prec is None else f.truncate(prec)
    Q = ctx.q ** d
    if f.prec is None and prec is None:
        raise PrecisionError("scaling an exact series needs a target precision")
    target = min(Q * f._p(), prec if prec is not None else math.inf)
    lowest = min(f.val(), 0)
    S = u_scale(ctx, a, int(target) + (1 - lowest) * Q)
    out = f.substitute(S)
    return out.truncate(int(target))


def goss_series(ctx: Context, L, k: int, S: USeries) -> USeries:
    """G_k evaluated at the series S."""
    g = goss_poly(ctx, L, k)
    out = USeries.zero(ctx, None)
    powers: dict = {}

    def spow(e):
        if e not in powers:
            if e == 1:
                powers[1] = S
            else:
                h = spow(e // 2)
                powers[e] = h * h if e % 2 == 0 else h * h * S
        return powers[e]

    for e, c in sorted(g.coeffs.items()):
        out = out + spow(e).scale(GradedScalar.from_rat(c))
    return out


def trace_div(f: USeries, p) -> USeries:
    """sum over b in A(deg p) of f((z + b)/p), through the torsion Goss
    polynomials: u^n -> G_{p,n}(p u)."""
    ctx = f.ctx
    if f.c and f.val() < 0:
        raise ValueError("trace over cosets needs a non-negative valuation")
    d = len(p) - 1
    Q = ctx.q ** d
    L = torsion_lattice(ctx, p)
    P = f._p()
    prec_out = None if P == math.inf else math.ceil((P - 1) / Q) + 1
    pp = GradedScalar.from_poly(ctx.apoly(p))
    ppowers = {0: GradedScalar.one(ctx.ring)}

    def ppow(e):
        if e not in ppowers:
            ppowers[e] = ppow(e - 1) * pp
        return ppowers[e]

    out: dict = {}
    for n, cn in f.c.items():
        if n == 0:
            continue  # |A(d)| = q^d kills constants in characteristic p
        g = goss_poly(ctx, L, n)
        for e, c in g.coeffs.items():
            if prec_out is not None and e >= prec_out:
                continue
            v = cn * GradedScalar.from_rat(c) * ppow(e)
            if e in out:
                s = out[e] + v
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            elif not v.is_zero():
                out[e] = v
    return USeries(ctx, out, prec_out)


def dz(f: USeries, n: int) -> USeries:
    """n-th divided-power derivative in z of a u-expansion.

    Works through the additive expansion of u(z + eps): with ehat = pi*eps,
    u(z + eps) = sum_{k>=1} (-1)^(k-1) G_k(u) ehat^(k-1).  The output
    carries the period grade pi^n.
    """
    ctx = f.ctx
    if n == 0:
        return f
    L = period_lattice(ctx)
    u = USeries.u(ctx)
    U = [goss_series(ctx, L, k + 1, u).scale(ctx.gs_int((-1) ** k))
         for k in range(n + 1)]

    def emul(A, B):
        out = [USeries.zero(ctx, None) for _ in range(n + 1)]
        for i, ai in enumerate(A):
            if ai.is_zero() and ai.prec is None:
                continue
            for j, bj in enumerate(B):
                if i + j > n:
                    break
                out[i + j] = out[i + j] + ai * bj
        return out

    def epow(A, m):
        out = [USeries.one(ctx)] + [USeries.zero(ctx, None)] * n
        base = A
        while m:
            if m & 1:
                out = emul(out, base)
            base = emul(base, base)
            m >>= 1
        return out

    # inverse of U: U = u * (1 + W) with W[0] = 0
    uinv = USeries.monomial(ctx, -1)
    W = [USeries.zero(ctx, None)] + [Uk * uinv for Uk in U[1:]]
    Vinv = [USeries.one(ctx)] + [USeries.zero(ctx, None)] * n
    prev = [USeries.one(ctx)] + [USeries.zero(ctx, None)] * n
    for _ in range(n):
        prev = emul(prev, [(-w) for w in W])
        Vinv = [a + b for a, b in zip(Vinv, prev)]
    Uinv = [v * uinv for v in Vinv]

    exps = sorted(f.c, reverse=True)
    acc = [USeries.const(ctx, f.c[exps[0]])] + [USeries.zero(ctx, None)] * n
    pows: dict = {}

    def Upow(k):
        if k not in pows:
            pows[k] = epow(U, k)
        return pows[k]

    for i in range(1, len(exps)):
        gap = exps[i - 1] - exps[i]
        acc = emul(acc, Upow(gap))
        acc[0] = acc[0] + USeries.const(ctx, f.c[exps[i]])
    n0 = exps[-1]
    if n0 > 0:
        acc = emul(acc, Upow(n0))
    elif n0 < 0:
        acc = emul(acc, epow(Uinv, -n0))
    out = acc[n]
    if f.prec is not None:
        out = out.truncate(f.prec + 1)
    pi_n = GradedScalar(ctx.ring, {(n, 0): ctx.gs_one().rational_part()})
    return out.scale(pi_n)


def eval_series(f: USeries, point) -> USeries:
    """Specialize t: point is ('theta_power', j) or a RootContext."""
    if isinstance(point, tuple) and point and point[0] == "theta_power":
        return f.eval_theta_power(point[1])
    return f.eval_root(point)
