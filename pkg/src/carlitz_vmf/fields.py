"""Finite fields F_q = F_{p^e} and finite extensions of them.

Prime-field elements are plain ints in ``{0, ..., p-1}``.  Extension
elements are little-endian digit tuples over the base field, reduced
modulo a fixed monic polynomial.  F_{p^e} is always built on the Conway
polynomial for (p, e), so element encodings are stable across runs and
machines; extensions of F_q by a user-supplied irreducible (used for the
residue fields F_q[y]/(P(y))) keep the supplied modulus.
"""

from __future__ import annotations

import functools
import itertools

# Conway polynomials, little-endian coefficient lists over F_p (monic).
_CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (11, 1): (9, 1),
    (13, 1): (11, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(n ** 0.5) + 1):
        if n % d == 0:
            return False
    return True


class PrimeField:
    """F_p with int elements."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.e = 1
        self.order = p
        self.zero = 0
        self.one = 1
        self.char = p
        self.int_elements = True  # elements are plain ints mod p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, n):
        if n < 0:
            return self.inv(pow(a, -n, self.p) if a else 0)
        return pow(a, n, self.p)

    def frobenius(self, a, n: int = 1):
        # x -> x^(p^n) is the identity on the prime field
        return a

    def from_int(self, n: int):
        return n % self.p

    def elements(self):
        return range(self.p)

    def digits(self, a):
        """Little-endian base-p digit list of an element."""
        return [a]

    def from_digits(self, ds):
        if len(ds) != 1:
            raise ValueError("prime field element has one digit")
        return ds[0] % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class PolyExtField:
    """base[y]/(modulus), elements as little-endian tuples over base.

    ``modulus`` is a monic coefficient tuple of length degree+1 over the
    base field.  Irreducibility is the caller's responsibility (checked
    for the Conway table; user-supplied moduli come from an explicit
    irreducibility test at the call site).
    """

    def __init__(self, base, modulus, name="y"):
        self.base = base
        self.modulus = tuple(modulus)
        self.deg = len(self.modulus) - 1
        if self.deg < 1:
            raise ValueError("modulus must have positive degree")
        if self.modulus[-1] != base.one:
            raise ValueError("modulus must be monic")
        self.p = base.p
        self.e = base.e * self.deg
        self.order = base.order ** self.deg
        self.char = base.char
        self.name = name
        self.int_elements = False
        self.zero = tuple([base.zero] * self.deg)
        self.one = tuple([base.one] + [base.zero] * (self.deg - 1))
        # y^(deg+k) reduced, for k = 0..deg-2 (enough for products)
        self._red = self._reduction_table()

    def _reduction_table(self):
        b, d = self.base, self.deg
        top = [b.neg(c) for c in self.modulus[:-1]]  # y^d = top(y)
        table = [tuple(top)]
        for _ in range(d - 2):
            prev = table[-1]
            shifted = [b.zero] + list(prev[: d - 1])
            carry = prev[d - 1]
            row = [b.add(shifted[i], b.mul(carry, top[i])) for i in range(d)]
            table.append(tuple(row))
        return table

    def gen(self):
        d = self.deg
        if d == 1:
            return self._red[0]
        return tuple([self.base.zero, self.base.one] + [self.base.zero] * (d - 2))

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        base, d = self.base, self.deg
        prod = [base.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == base.zero:
                continue
            for j, y in enumerate(b):
                if y == base.zero:
                    continue
                prod[i + j] = base.add(prod[i + j], base.mul(x, y))
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c == base.zero:
                continue
            row = self._red[k - d]
            out = [base.add(out[i], base.mul(c, row[i])) for i in range(d)]
        return tuple(out)

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero in extension field")
        # extended Euclid on coefficient lists over the base field
        b = self.base

        def deg(u):
            for i in range(len(u) - 1, -1, -1):
                if u[i] != b.zero:
                    return i
            return -1

        def scale(u, c):
            return [b.mul(x, c) for x in u]

        def sub_shift(u, v, c, k):
            out = list(u)
            for i, x in enumerate(v):
                if x != b.zero:
                    out[i + k] = b.sub(out[i + k], b.mul(c, x))
            return out

        r0, r1 = list(self.modulus), list(a) + [b.zero]
        s0, s1 = [b.zero] * (self.deg + 1), [b.one] + [b.zero] * self.deg
        while deg(r1) > 0:
            d0, d1 = deg(r0), deg(r1)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            c = b.mul(r0[d0], b.inv(r1[d1]))
            r0 = sub_shift(r0, r1, c, d0 - d1)
            s0 = sub_shift(s0, s1, c, d0 - d1)
            if deg(r0) < deg(r1):
                r0, r1, s0, s1 = r1, r0, s1, s0
        lead = r1[deg(r1)]
        s1 = scale(s1, b.inv(lead))
        return tuple(s1[: self.deg])

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        out, base = self.one, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def frobenius(self, a, n: int = 1):
        return self.pow(a, self.char ** n)

    def embed(self, a):
        """Embed a base-field element."""
        return tuple([a] + [self.base.zero] * (self.deg - 1))

    def from_int(self, n: int):
        return self.embed(self.base.from_int(n))

    def elements(self):
        for digits in itertools.product(self.base.elements(), repeat=self.deg):
            yield tuple(digits)

    def digits(self, a):
        out = []
        for x in a:
            out.extend(self.base.digits(x))
        return out

    def from_digits(self, ds):
        k = self.base.e
        if len(ds) != k * self.deg:
            raise ValueError("digit vector has wrong length")
        return tuple(
            self.base.from_digits(list(ds[i * k : (i + 1) * k])) for i in range(self.deg)
        )

    def __eq__(self, other):
        return (
            isinstance(other, PolyExtField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("PolyExtField", self.base, self.modulus))

    def __repr__(self):
        return f"GF({self.order})"


@functools.cache
def GF(p: int, e: int = 1):
    """The field F_{p^e} on its Conway polynomial."""
    if e == 1:
        return PrimeField(p)
    if (p, e) not in _CONWAY:
        raise ValueError(f"no Conway polynomial stored for ({p}, {e})")
    base = PrimeField(p)
    return PolyExtField(base, _CONWAY[(p, e)], name="x")


def field_from_order(q: int):
    """Resolve q = p^e to GF(p, e)."""
    for p in range(2, q + 1):
        if not is_prime(p):
            continue
        e, n = 0, q
        while n % p == 0:
            n //= p
            e += 1
        if n == 1 and e >= 1:
            return GF(p, e)
        if q % p == 0:
            break
    raise ValueError(f"{q} is not a prime power")
