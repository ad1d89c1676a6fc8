"""Deterministic small Galois fields.

Elements of GF(p^k) are encoded as integers in ``range(p**k)``: the integer
``sum(c_i * p**i)`` stands for the polynomial ``sum(c_i * T**i)`` in the
residue ring F_p[T] / (modulus).  With this encoding, numeric order on the
integers coincides with lexicographic order on coefficient tuples read from
the highest degree down, which is the order used for all canonical choices:

* modulus: the least monic irreducible polynomial of degree k,
* generator: the least element of full multiplicative order q - 1.

For prime q the generator is the least primitive root and the encoding is the
usual residue 0..p-1.
"""

from __future__ import annotations

from functools import lru_cache

import sympy


class NotPrimePower(ValueError):
    """q is not of the form p^k with p prime and k >= 1."""


def prime_power(q):
    """Split q as (p, k), or raise :class:`NotPrimePower`."""
    if not isinstance(q, int) or q < 2:
        raise NotPrimePower(f"{q!r} is not a prime power")
    fac = sympy.factorint(q)
    if len(fac) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    [(p, k)] = fac.items()
    return int(p), int(k)


class GF:
    """Arithmetic tables for GF(p^k), q <= a few thousand."""

    def __init__(self, q):
        self.p, self.k = prime_power(q)
        self.q = q
        self.modulus = self._least_irreducible() if self.k > 1 else None
        self._mul_cache = {}
        self.generator = self._least_generator()
        self.exp = [1]
        for _ in range(q - 2):
            self.exp.append(self.mul(self.exp[-1], self.generator))
        self.dlog = {e: i for i, e in enumerate(self.exp)}

    # -- polynomial plumbing ------------------------------------------------

    def _digits(self, n):
        p, out = self.p, []
        for _ in range(self.k):
            out.append(n % p)
            n //= p
        return out  # coefficient of T^i at index i

    def _undigits(self, cs):
        n = 0
        for c in reversed(cs):
            n = n * self.p + c
        return n

    def _polymulmod(self, a, b, mod):
        # a, b, mod are coefficient lists (ascending), mod monic
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] = (res[i + j] + x * y) % self.p
        deg = len(mod) - 1
        for i in range(len(res) - 1, deg - 1, -1):
            c = res[i]
            if c:
                res[i] = 0
                for j in range(deg):
                    res[i - deg + j] = (res[i - deg + j] - c * mod[j]) % self.p
        return res[:deg] + [0] * max(0, deg - len(res))

    def _least_irreducible(self):
        p, k = self.p, self.k
        for tail in range(p**k):
            cand = self._digits(tail) + [1]  # monic degree k
            if all(self._trial(cand, d) for d in range(1, k // 2 + 1)):
                return cand
        raise AssertionError("no irreducible polynomial found")

    def _trial(self, cand, d):
        # no monic divisor of degree d
        p = self.p
        for tail in range(p**d):
            div = []
            n = tail
            for _ in range(d):
                div.append(n % p)
                n //= p
            div.append(1)
            if self._polyrem(cand, div) == [0] * d:
                return False
        return True

    def _polyrem(self, a, b):
        # remainder of a by monic b, coefficient lists ascending
        a = list(a)
        db = len(b) - 1
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c:
                a[i] = 0
                for j in range(db):
                    a[i - db + j] = (a[i - db + j] - c * b[j]) % self.p
        return a[:db]

    # -- field operations ---------------------------------------------------

    def add(self, a, b):
        p = self.p
        return self._undigits([(x + y) % p for x, y in
                               zip(self._digits(a), self._digits(b))])

    def neg(self, a):
        p = self.p
        return self._undigits([(-x) % p for x in self._digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        key = (a, b)
        got = self._mul_cache.get(key)
        if got is None:
            got = self._undigits(
                self._polymulmod(self._digits(a), self._digits(b), self.modulus))
            self._mul_cache[key] = got
        return got

    def power(self, a, n):
        out = 1
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.dlog[a]) % (self.q - 1)]

    def _order(self, a):
        n, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            n += 1
            if n > self.q:
                raise AssertionError("order computation ran away")
        return n

    def _least_generator(self):
        if self.q == 2:
            return 1
        for a in range(2, self.q):
            if self._order(a) == self.q - 1:
                return a
        raise AssertionError("no generator found")

    @property
    def minus_one(self):
        return self.neg(1)

    def elements(self):
        return range(self.q)


@lru_cache(maxsize=None)
def field(q) -> GF:
    return GF(q)
