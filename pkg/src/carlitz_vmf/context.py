"""Shared arithmetic context: the field F_q, the coefficient ring, caches.

A `Context` fixes q = p^e and the coefficient field of the series
engine.  The structure constants (monic enumeration, Carlitz data) always
live over F_q; specializations at roots of unity reuse the same machinery
with the coefficient field enlarged to F_{q^d}.
"""

from __future__ import annotations

import functools

from .fields import GF, field_from_order
from .polys import Poly, PolyRing, RatFunc
from .scalars import GradedScalar


class Context:
    def __init__(self, q: int | None = None, *, p: int | None = None,
                 e: int | None = None, coeff_field=None):
        if q is None:
            if p is None:
                raise ValueError("give q or (p, e)")
            e = e or 1
            self.base_field = GF(p, e)
        else:
            self.base_field = field_from_order(q)
        self.p = self.base_field.p
        self.e = self.base_field.e
        self.q = self.base_field.order
        self.coeff_field = coeff_field if coeff_field is not None else self.base_field
        self.ring = PolyRing(self.coeff_field)
        self.cache: dict = {}
        if self.coeff_field == self.base_field:
            self.embed = lambda x: x
        else:
            if self.coeff_field.base != self.base_field:
                raise ValueError("coefficient field must extend F_q directly")
            self.embed = self.coeff_field.embed

    def __repr__(self):
        tag = f"q={self.q}"
        if self.coeff_field != self.base_field:
            tag += f", coeffs={self.coeff_field}"
        return f"Context({tag})"

    def memo(self, key, fn):
        if key not in self.cache:
            self.cache[key] = fn()
        return self.cache[key]

    # -- scalar builders ---------------------------------------------------

    def gs(self, p: Poly, pi: int = 0, om: int = 0) -> GradedScalar:
        return GradedScalar.from_poly(p, pi, om)

    def gs_rat(self, r: RatFunc, pi: int = 0, om: int = 0) -> GradedScalar:
        return GradedScalar.from_rat(r, pi, om)

    def gs_int(self, n: int) -> GradedScalar:
        return GradedScalar.from_int(self.ring, n)

    def gs_one(self) -> GradedScalar:
        return GradedScalar.one(self.ring)

    def gs_zero(self) -> GradedScalar:
        return GradedScalar.zero(self.ring)

    # -- A = F_q[theta] ------------------------------------------------------

    def apoly(self, a) -> Poly:
        """theta-polynomial of a coefficient tuple over F_q."""
        return self.ring.theta_poly([self.embed(c) for c in a])

    def chi(self, a) -> Poly:
        """The character value: same coefficients read in the variable t."""
        return self.ring.t_poly([self.embed(c) for c in a])

    def monics(self, d: int):
        """Monic elements of degree d as little-endian coefficient tuples,
        ordered lexicographically on the coefficient vector."""
        def build():
            base = self.base_field
            elems = sorted(base.elements(), key=base.digits)
            out = []

            def rec(prefix):
                if len(prefix) == d:
                    out.append(tuple(prefix) + (base.one,))
                    return
                for c in elems:
                    rec(prefix + [c])

            rec([])
            return tuple(out)

        return self.memo(("monics", d), build)

    def monics_below(self, bound_val: int):
        """All monic a with q^(deg a) < bound_val, by (degree, lex)."""
        out = []
        d = 0
        while self.q ** d < bound_val:
            out.extend(self.monics(d))
            d += 1
        return out

    def poly_space(self, d: int):
        """A(d): all polynomials of degree < d (including 0), lex ordered."""
        def build():
            base = self.base_field
            elems = sorted(base.elements(), key=base.digits)
            out = []

            def rec(prefix):
                if len(prefix) == d:
                    tup = tuple(prefix)
                    while len(tup) > 0 and tup[-1] == base.zero:
                        tup = tup[:-1]
                    out.append(tup)
                    return
                for c in elems:
                    rec(prefix + [c])

            rec([])
            return tuple(out)

        return self.memo(("poly_space", d), build)

    # -- Carlitz structure constants ------------------------------------------

    def D(self, j: int) -> Poly:
        """D_0 = 1, D_j = prod_{i<j} (theta^(q^j) - theta^(q^i))."""
        def build():
            if j == 0:
                return self.ring.one
            f = self.ring.field
            top = Poly(self.ring, {(self.q ** j, 0): f.one})
            out = self.ring.one
            for i in range(j):
                out = out * (top - Poly(self.ring, {(self.q ** i, 0): f.one}))
            return out

        return self.memo(("D", j), build)

    def carlitz_theta_power(self, i: int):
        """Coefficients [theta^i]_j of the module action of theta^i."""
        def build():
            if i == 0:
                return (self.ring.one,)
            prev = self.carlitz_theta_power(i - 1)
            theta = self.ring.theta
            out = []
            for jj in range(i + 1):
                term = self.ring.zero
                if jj <= i - 1:
                    term = term + theta * prev[jj]
                if jj >= 1:
                    term = term + prev[jj - 1].subs_theta_power(self.q)
                out.append(term)
            return tuple(out)

        return self.memo(("Ctheta", i), build)

    def carlitz_coeffs(self, a) -> tuple:
        """Coefficients [a]_j of the Carlitz action polynomial of a."""
        def build():
            d = len(a) - 1
            out = [self.ring.zero] * (d + 1)
            for i, c in enumerate(a):
                if c == self.base_field.zero:
                    continue
                row = self.carlitz_theta_power(i)
                ce = self.embed(c)
                for jj, p in enumerate(row):
                    out[jj] = out[jj] + p.scale(ce)
            return tuple(out)

        return self.memo(("Ca", a), build)

    def is_irreducible(self, a) -> bool:
        """Rabin irreducibility test for a monic a over F_q."""
        base = self.base_field
        n = len(a) - 1
        if n < 1:
            return False
        if a[-1] != base.one:
            raise ValueError("element must be monic")

        def pmod_mul(u, v):
            prod = [base.zero] * (len(u) + len(v) - 1)
            for i, x in enumerate(u):
                if x == base.zero:
                    continue
                for j, y in enumerate(v):
                    prod[i + j] = base.add(prod[i + j], base.mul(x, y))
            # reduce mod a
            for k in range(len(prod) - 1, n - 1, -1):
                c = prod[k]
                if c == base.zero:
                    continue
                for i in range(n):
                    prod[k - n + i] = base.sub(prod[k - n + i], base.mul(c, a[i]))
                prod[k] = base.zero
            out = prod[:n]
            while len(out) < n:
                out.append(base.zero)
            return out

        def pmod_pow(u, m):
            out = [base.one] + [base.zero] * (n - 1)
            while m:
                if m & 1:
                    out = pmod_mul(out, u)
                u = pmod_mul(u, u)
                m >>= 1
            return out

        def gcd_with_a(u):
            def deg(w):
                for i in range(len(w) - 1, -1, -1):
                    if w[i] != base.zero:
                        return i
                return -1

            x, y = list(a), list(u)
            while deg(y) >= 0:
                dx, dy = deg(x), deg(y)
                if dx < dy:
                    x, y = y, x
                    continue
                c = base.mul(x[dx], base.inv(y[dy]))
                for i in range(dy + 1):
                    x[dx - dy + i] = base.sub(x[dx - dy + i], base.mul(c, y[i]))
                if deg(x) < deg(y):
                    x, y = y, x
            return deg(x)

        if n == 1:
            return True
        x = [base.zero, base.one] + [base.zero] * (n - 2)
        xqn = pmod_pow(x, self.q ** n)
        sub = list(xqn)
        sub[1] = base.sub(sub[1], base.one)
        if any(c != base.zero for c in sub):
            return False
        for r in set(_prime_factors(n)):
            xqm = pmod_pow(x, self.q ** (n // r))
            sub = list(xqm)
            sub[1] = base.sub(sub[1], base.one)
            if all(c == base.zero for c in sub):
                return False
            if gcd_with_a(sub) > 0:
                return False
        return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@functools.cache
def default_context(q: int) -> Context:
    return Context(q)
