"""Sparse polynomials in (theta, t) over a finite field, and the rational
function field built on them.

Monomials are exponent pairs ``(i, j)`` for theta^i t^j.  The monomial
order everywhere is graded lexicographic with theta > t, i.e. compare
``(i + j, i)``.  Rational functions are kept in the canonical form
``num/den`` with gcd(num, den) = 1 and den monic for that order, so
equality is literal dictionary equality.
"""

from __future__ import annotations

from .fields import GF, PrimeField, PolyExtField  # noqa: F401  (re-export)


def _glex(key):
    i, j = key
    return (i + j, i)


class PolyRing:
    """Polynomials over ``field`` in theta and t."""

    def __init__(self, field):
        self.field = field
        self.zero = Poly(self, {})
        self.one = Poly(self, {(0, 0): field.one})
        self.theta = Poly(self, {(1, 0): field.one})
        self.t = Poly(self, {(0, 1): field.one})

    def const(self, c):
        if c == self.field.zero:
            return self.zero
        return Poly(self, {(0, 0): c})

    def from_int(self, n):
        return self.const(self.field.from_int(n))

    def monomial(self, c, i, j):
        if c == self.field.zero:
            return self.zero
        return Poly(self, {(i, j): c})

    def theta_poly(self, coeffs):
        """Polynomial in theta from little-endian field coefficients."""
        f = self.field
        return Poly(self, {(i, 0): c for i, c in enumerate(coeffs) if c != f.zero})

    def t_poly(self, coeffs):
        f = self.field
        return Poly(self, {(0, j): c for j, c in enumerate(coeffs) if c != f.zero})

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.field == self.field

    def __hash__(self):
        return hash(("PolyRing", self.field))

    def __repr__(self):
        return f"{self.field}[theta, t]"


class Poly:
    __slots__ = ("ring", "c", "_hash")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.c = coeffs
        self._hash = None

    # -- basic structure ------------------------------------------------

    def is_zero(self):
        return not self.c

    def is_one(self):
        return self.c == {(0, 0): self.ring.field.one}

    def is_constant(self):
        return not self.c or (len(self.c) == 1 and (0, 0) in self.c)

    def deg_theta(self):
        return max((k[0] for k in self.c), default=-1)

    def deg_t(self):
        return max((k[1] for k in self.c), default=-1)

    def lead(self):
        """(monomial, coefficient) for the graded-lex order."""
        if not self.c:
            raise ValueError("zero polynomial has no leading term")
        k = max(self.c, key=_glex)
        return k, self.c[k]

    def __eq__(self, other):
        return isinstance(other, Poly) and other.ring == self.ring and other.c == self.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(sorted(self.c.items()))))
        return self._hash

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for (i, j) in sorted(self.c, key=_glex, reverse=True):
            coef = self.c[(i, j)]
            s = "" if coef == self.ring.field.one and (i or j) else str(coef)
            if i:
                s += ("*" if s else "") + ("theta" if i == 1 else f"theta^{i}")
            if j:
                s += ("*" if s else "") + ("t" if j == 1 else f"t^{j}")
            parts.append(s or str(coef))
        return " + ".join(parts)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        f = self.ring.field
        out = dict(self.c)
        for k, v in other.c.items():
            s = f.add(out.get(k, f.zero), v)
            if s == f.zero:
                out.pop(k, None)
            else:
                out[k] = s
        return Poly(self.ring, out)

    def __neg__(self):
        f = self.ring.field
        return Poly(self.ring, {k: f.neg(v) for k, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.ring.field
        if not self.c or not other.c:
            return self.ring.zero
        if len(self.c) == 1:
            ((i0, j0), v0), = self.c.items()
            if v0 == f.one:
                return Poly(self.ring,
                            {(i + i0, j + j0): v for (i, j), v in other.c.items()})
            return Poly(self.ring, {(i + i0, j + j0): f.mul(v, v0)
                                    for (i, j), v in other.c.items()})
        if len(other.c) == 1:
            return other * self
        out = {}
        if f.int_elements:
            p = f.p
            for (i1, j1), v1 in self.c.items():
                for (i2, j2), v2 in other.c.items():
                    k = (i1 + i2, j1 + j2)
                    s = (out.get(k, 0) + v1 * v2) % p
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
            return Poly(self.ring, out)
        for (i1, j1), v1 in self.c.items():
            for (i2, j2), v2 in other.c.items():
                k = (i1 + i2, j1 + j2)
                s = f.add(out.get(k, f.zero), f.mul(v1, v2))
                if s == f.zero:
                    out.pop(k, None)
                else:
                    out[k] = s
        return Poly(self.ring, out)

    def scale(self, c):
        f = self.ring.field
        if c == f.zero:
            return self.ring.zero
        return Poly(self.ring, {k: f.mul(v, c) for k, v in self.c.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = self.ring.one, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self):
        """Scale so the graded-lex leading coefficient is 1."""
        if not self.c:
            return self
        _, lc = self.lead()
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    # -- division --------------------------------------------------------

    def exact_div(self, d):
        """Quotient self / d, assuming the division is exact."""
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if d.is_one():
            return self
        f = self.ring.field
        (dk, dc) = d.lead()
        dinv = f.inv(dc)
        rem = dict(self.c)
        q = {}
        while rem:
            k = max(rem, key=_glex)
            i, j = k[0] - dk[0], k[1] - dk[1]
            if i < 0 or j < 0:
                raise ArithmeticError("division is not exact")
            coef = f.mul(rem[k], dinv)
            q[(i, j)] = coef
            for (mi, mj), v in d.c.items():
                kk = (mi + i, mj + j)
                s = f.sub(rem.get(kk, f.zero), f.mul(coef, v))
                if s == f.zero:
                    rem.pop(kk, None)
                else:
                    rem[kk] = s
        return Poly(self.ring, q)

    # -- substitutions ----------------------------------------------------

    def subs_theta_power(self, q):
        """theta -> theta^q.  Coefficients in F_q are fixed by x -> x^q."""
        return Poly(self.ring, {(i * q, j): v for (i, j), v in self.c.items()})

    def subs_t_poly(self, s):
        """t -> s for a t-free polynomial s (in theta)."""
        out = self.ring.zero
        powers = [self.ring.one]

        def spow(n):
            while len(powers) <= n:
                powers.append(powers[-1] * s)
            return powers[n]

        for (i, j), v in self.c.items():
            out = out + spow(j).scale(v) * self.ring.monomial(self.ring.field.one, i, 0)
        return out

    def subs_t_elt(self, ring2, elt, embed):
        """t -> elt (a field element of ring2), coefficients through embed."""
        f2 = ring2.field
        out = {}
        for (i, j), v in self.c.items():
            w = f2.mul(embed(v), f2.pow(elt, j)) if j else embed(v)
            k = (i, 0)
            s = f2.add(out.get(k, f2.zero), w)
            if s == f2.zero:
                out.pop(k, None)
            else:
                out[k] = s
        return Poly(ring2, out)

    def eval_theta_elt(self, zeta):
        """Value at theta = zeta for a t-free polynomial; element of the field."""
        f = self.ring.field
        acc = f.zero
        for (i, j), v in self.c.items():
            if j:
                raise ValueError("polynomial must be t-free")
            acc = f.add(acc, f.mul(v, f.pow(zeta, i)))
        return acc

    def t_order_at(self, s):
        """Order of vanishing at t = s (s a t-free polynomial)."""
        if self.is_zero():
            raise ValueError("zero polynomial has infinite order")
        tm = self.ring.t - s
        n, cur = 0, self
        while True:
            if not cur.subs_t_poly(s).is_zero():
                return n
            cur = cur.exact_div(tm)
            n += 1

    def theta_order_at(self, zeta):
        """Order of vanishing at theta = zeta (element of the field), t-free."""
        if self.is_zero():
            raise ValueError("zero polynomial has infinite order")
        lin = self.ring.theta - self.ring.const(zeta)
        n, cur = 0, self
        while True:
            if cur.eval_theta_elt(zeta) != self.ring.field.zero:
                return n
            cur = cur.exact_div(lin)
            n += 1

    # -- hyperderivative in t ---------------------------------------------

    def hyperderiv_t(self, n):
        """n-th divided-power derivative in t: t^m -> C(m, n) t^(m-n)."""
        if n == 0:
            return self
        f = self.ring.field
        p = f.char
        out = {}
        for (i, j), v in self.c.items():
            if j < n:
                continue
            b = _lucas_binom(j, n, p)
            if b == 0:
                continue
            w = f.mul(v, f.from_int(b))
            k = (i, j - n)
            s = f.add(out.get(k, f.zero), w)
            if s == f.zero:
                out.pop(k, None)
            else:
                out[k] = s
        return Poly(self.ring, out)


def _lucas_binom(m, n, p):
    """binomial(m, n) mod p via Lucas."""
    out = 1
    while n:
        mi, ni = m % p, n % p
        if ni > mi:
            return 0
        num = den = 1
        for k in range(ni):
            num = num * (mi - k) % p
            den = den * (k + 1) % p
        out = out * num * pow(den, p - 2, p) % p
        m //= p
        n //= p
    return out % p


# -- gcd ------------------------------------------------------------------


def _to_univar(poly, var):
    """Coefficient list (little-endian) of a polynomial using only ``var``."""
    deg = poly.deg_theta() if var == 0 else poly.deg_t()
    f = poly.ring.field
    out = [f.zero] * (deg + 1)
    for (i, j), v in poly.c.items():
        out[i if var == 0 else j] = v
    return out


def _from_univar(ring, coeffs, var):
    f = ring.field
    if var == 0:
        return Poly(ring, {(i, 0): c for i, c in enumerate(coeffs) if c != f.zero})
    return Poly(ring, {(0, j): c for j, c in enumerate(coeffs) if c != f.zero})


def _univar_gcd(a, b, field):
    if field.int_elements:
        return _univar_gcd_prime(list(a), list(b), field.p)

    def deg(u):
        for i in range(len(u) - 1, -1, -1):
            if u[i] != field.zero:
                return i
        return -1

    a, b = list(a), list(b)
    while deg(b) >= 0:
        da, db = deg(a), deg(b)
        if da < db:
            a, b = b, a
            continue
        c = field.mul(a[da], field.inv(b[db]))
        for i in range(db + 1):
            a[da - db + i] = field.sub(a[da - db + i], field.mul(c, b[i]))
        if deg(a) < deg(b):
            a, b = b, a
    d = deg(a)
    inv = field.inv(a[d])
    return [field.mul(x, inv) for x in a[: d + 1]]


def _univar_gcd_prime(a, b, p):
    """Euclid over F_p with plain int lists."""
    def deg(u):
        for i in range(len(u) - 1, -1, -1):
            if u[i]:
                return i
        return -1

    da, db = deg(a), deg(b)
    while db >= 0:
        if da < db:
            a, b, da, db = b, a, db, da
            continue
        c = a[da] * pow(b[db], p - 2, p) % p
        off = da - db
        for i in range(db + 1):
            if b[i]:
                a[off + i] = (a[off + i] - c * b[i]) % p
        da = deg(a)
        if da < db:
            a, b, da, db = b, a, db, da
    inv = pow(a[da], p - 2, p)
    return [x * inv % p for x in a[: da + 1]]


def _monomial_gcd(mono: Poly, other: Poly) -> Poly:
    ((i0, j0), _), = mono.c.items()
    i1 = min((k[0] for k in other.c), default=0)
    j1 = min((k[1] for k in other.c), default=0)
    return Poly(mono.ring, {(min(i0, i1), min(j0, j1)): mono.ring.field.one})


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic (graded-lex) gcd in F[theta, t]."""
    ring = a.ring
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if len(a.c) == 1:
        return _monomial_gcd(a, b)
    if len(b.c) == 1:
        return _monomial_gcd(b, a)
    f = ring.field
    if a.deg_t() == 0 and b.deg_t() == 0:
        return _from_univar(ring, _univar_gcd(_to_univar(a, 0), _to_univar(b, 0), f), 0)
    if a.deg_theta() == 0 and b.deg_theta() == 0:
        return _from_univar(ring, _univar_gcd(_to_univar(a, 1), _to_univar(b, 1), f), 1)
    return _bivar_gcd(a, b)


def _t_coeffs(poly):
    """Polynomial as dict t-degree -> theta-polynomial."""
    ring = poly.ring
    out = {}
    for (i, j), v in poly.c.items():
        out.setdefault(j, {})[(i, 0)] = v
    return {j: Poly(ring, d) for j, d in out.items()}


def _from_t_coeffs(ring, coeffs):
    out = {}
    for j, p in coeffs.items():
        for (i, _), v in p.c.items():
            out[(i, j)] = v
    return Poly(ring, out)


def _content_theta(poly):
    """gcd over F[theta] of the t-coefficients."""
    ring = poly.ring
    cs = list(_t_coeffs(poly).values())
    g = cs[0]
    for c in cs[1:]:
        if g.is_one():
            break
        g = _from_univar(
            ring, _univar_gcd(_to_univar(g, 0), _to_univar(c, 0), ring.field), 0
        )
    return g.monic()


def _bivar_gcd(a, b):
    """Primitive PRS gcd with t as the main variable."""
    ring = a.ring
    ca, cb = _content_theta(a), _content_theta(b)
    g_cont = _from_univar(
        ring, _univar_gcd(_to_univar(ca, 0), _to_univar(cb, 0), ring.field), 0
    )
    pa, pb = a.exact_div(ca), b.exact_div(cb)
    while not pb.is_zero():
        r = _prem_t(pa, pb)
        pa = pb
        pb = r if r.is_zero() else r.exact_div(_content_theta(r))
    return (g_cont * pa.exact_div(_content_theta(pa))).monic()


def _prem_t(a, b):
    """Pseudo-remainder of a by b in the main variable t."""
    da, db = a.deg_t(), b.deg_t()
    if da < db:
        return a
    bc = _t_coeffs(b)
    lb = bc[db]
    r = a
    while not r.is_zero() and r.deg_t() >= db:
        rc = _t_coeffs(r)
        dr = r.deg_t()
        lr = rc[dr]
        # lb * r - lr * t^(dr-db) * b
        shift = Poly(a.ring, {(0, dr - db): a.ring.field.one})
        r = lb * r - lr * shift * b
    return r


# -- rational functions -----------------------------------------------------


class RatFunc:
    """Canonical fraction num/den of polynomials."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly | None = None, reduce: bool = True):
        ring = num.ring
        if den is None:
            den = ring.one
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = ring.one
        elif reduce and not den.is_one():
            g = poly_gcd(num, den)
            if not g.is_one():
                num, den = num.exact_div(g), den.exact_div(g)
            _, lc = den.lead()
            if lc != ring.field.one:
                inv = ring.field.inv(lc)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @property
    def ring(self):
        return self.num.ring

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and other.num == self.num
            and other.den == self.den
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num})/({self.den})"

    def __add__(self, other):
        d1one, d2one = self.den.is_one(), other.den.is_one()
        if d1one and d2one:
            return RatFunc(self.num + other.num, None, reduce=False)
        if d2one:
            # gcd(n1 + n2 d1, d1) = gcd(n1, d1) = 1: already canonical
            return RatFunc(self.num + other.num * self.den, self.den,
                           reduce=False)
        if d1one:
            return RatFunc(other.num + self.num * other.den, other.den,
                           reduce=False)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc(self.ring.zero, None, reduce=False)
        d1one, d2one = self.den.is_one(), other.den.is_one()
        if d1one and d2one:
            return RatFunc(self.num * other.num, None, reduce=False)
        # cross-cancel: coprimality of each reduced pair makes the result
        # canonical without a gcd on the full product
        n1, d2 = self.num, other.den
        if not d2one:
            g = poly_gcd(n1, d2)
            if not g.is_one():
                n1, d2 = n1.exact_div(g), d2.exact_div(g)
        n2, d1 = other.num, self.den
        if not d1one:
            g = poly_gcd(n2, d1)
            if not g.is_one():
                n2, d1 = n2.exact_div(g), d1.exact_div(g)
        den = d1 * d2
        num = n1 * n2
        _, lc = den.lead()
        if lc != self.ring.field.one:
            inv = self.ring.field.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        return RatFunc(num, den, reduce=False)

    def inv(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        _, lc = den.lead()
        if lc != self.ring.field.one:
            w = self.ring.field.inv(lc)
            num, den = num.scale(w), den.scale(w)
        return RatFunc(num, den, reduce=False)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def tau(self, q):
        """theta -> theta^q (t fixed; F_q coefficients fixed)."""
        return RatFunc(self.num.subs_theta_power(q), self.den.subs_theta_power(q))

    def hyperderiv_t(self, n):
        """n-th divided-power t-derivative, via the Leibniz convolution."""
        if n == 0:
            return self
        if self.den.is_one():
            return RatFunc(self.num.hyperderiv_t(n), None)
        derivs = [RatFunc(self.num.hyperderiv_t(0), self.den)]
        dens = [RatFunc(self.den.hyperderiv_t(j), None) for j in range(n + 1)]
        nums = [RatFunc(self.num.hyperderiv_t(j), None) for j in range(n + 1)]
        for m in range(1, n + 1):
            acc = nums[m]
            for j in range(m):
                acc = acc - derivs[j] * dens[m - j]
            derivs.append(acc / dens[0])
        return derivs[n]
