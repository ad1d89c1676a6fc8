"""Fundamental pairs and hexagons.

A fundamental pair of a pasture P is a pair of units (a, b) with
a + b - 1 = 0.  The six-element dihedral group D3 acts on pairs by

    sigma(a, b) = (b, a)          rho(a, b) = (1/b, -a/b)

and a *hexagon* is an orbit of this action.  Orbit sizes divide 6 and
classify the hexagon:

    mu = 1  ternary       single pair (-1, -1)
    mu = 2  hexagonal     pairs (a, 1/a) with a^3 = -1
    mu = 3  dyadic        a diagonal pair (a, a), a != -1
    mu = 6  near-regular  free orbit

The *support* of a hexagon is the set of first coordinates of its pairs; for
partial fields these supports partition P minus {0, 1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .pasture import Pasture
from . import pasture as pa


class NotFundamental(ValueError):
    """The dihedral action is only defined on fundamental pairs."""


KIND_BY_MU = {1: "ternary", 2: "hexagonal", 3: "dyadic", 6: "near-regular"}


def is_fundamental(P: Pasture, pair) -> bool:
    a, b = pair
    return P._null3(a, b, P.eps)


def _check(P, pair):
    pair = (P.units.reduce(pair[0]), P.units.reduce(pair[1]))
    if not is_fundamental(P, pair):
        raise NotFundamental(f"{pair} is not a fundamental pair")
    return pair


def sigma(P: Pasture, pair):
    """Swap a fundamental pair."""
    a, b = _check(P, pair)
    return (b, a)

def rho(P: Pasture, pair):
    """Rotate a fundamental pair: (a, b) -> (1/b, -a/b)."""
    g = P.units
    a, b = _check(P, pair)
    binv = g.inv(b)
    return (binv, g.mul(g.epsilon, g.mul(a, binv)))


def pair_orbit(P: Pasture, pair):
    """The D3 orbit of a fundamental pair, as a set."""
    seen = set()
    frontier = [_check(P, pair)]
    while frontier:
        p = frontier.pop()
        if p in seen:
            continue
        seen.add(p)
        frontier.append(sigma(P, p))
        frontier.append(rho(P, p))
    return frozenset(seen)


def fundamental_pairs(P: Pasture):
    """All fundamental pairs, read off the stored null orbits.

    A null triple a + b + c = 0 yields the pairs (-a/c, -b/c) over the six
    orderings of its entries; unit scalings of the triple yield the same
    pairs, so one representative per orbit suffices.
    """
    g = P.units
    pairs = set()
    for o in P.null_orbits:
        for x, y, z in itertools.permutations(o):
            zinv = g.inv(z)
            pairs.add((g.mul(g.epsilon, g.mul(x, zinv)),
                       g.mul(g.epsilon, g.mul(y, zinv))))
    return frozenset(pairs)


@dataclass(frozen=True)
class Hexagon:
    """A D3 orbit of fundamental pairs of a fixed pasture."""

    pairs: tuple                    # orbit, sorted
    canonical_pair: tuple           # minimum pair in the element order
    mu: int
    kind: str
    support: frozenset              # first coordinates of the orbit pairs

    def diagonal_element(self):
        """For a dyadic hexagon, the x with (x, x) in the orbit."""
        for a, b in self.pairs:
            if a == b:
                return a
        return None

    def record(self, P: Pasture) -> dict:
        g = P.units
        return {
            "pair": [list(self.canonical_pair[0]), list(self.canonical_pair[1])],
            "mu": self.mu,
            "kind": self.kind,
            "support": [list(s) for s in
                        sorted(self.support, key=g.key)],
        }


def _mk_hexagon(P: Pasture, orbit) -> Hexagon:
    g = P.units

    def pkey(p):
        return (g.key(p[0]), g.key(p[1]))

    pairs = tuple(sorted(orbit, key=pkey))
    mu = len(pairs)
    return Hexagon(pairs, pairs[0], mu, KIND_BY_MU[mu],
                   frozenset(a for a, _ in pairs))


def hexagons(P: Pasture):
    """All hexagons of P, sorted by canonical pair."""
    g = P.units
    remaining = set(fundamental_pairs(P))
    out = []
    while remaining:
        p = next(iter(remaining))
        orbit = pair_orbit(P, p)
        remaining -= orbit
        out.append(_mk_hexagon(P, orbit))
    out.sort(key=lambda h: (g.key(h.canonical_pair[0]),
                            g.key(h.canonical_pair[1])))
    return tuple(out)


def hexagon_of_pair(P: Pasture, pair) -> Hexagon:
    return _mk_hexagon(P, pair_orbit(P, pair))


def classify_by_shape(P: Pasture, hexagon: Hexagon) -> str:
    """Recompute the kind from the orbit structure alone (no orbit count):
    used as an independent cross-check of the mu-based classification."""
    g = P.units
    pairs = set(hexagon.pairs)
    if pairs == {(g.epsilon, g.epsilon)}:
        return "ternary"
    if any(a == b for a, b in pairs):
        return "dyadic"
    if all(b == g.inv(a) and g.power(b, 3) == g.epsilon for a, b in pairs):
        return "hexagonal"
    return "near-regular"


def census(q: int):
    """Hexagon type counts for GF(q)."""
    P = pa.finite_field(q)
    counts = {"dyadic": 0, "hexagonal": 0, "ternary": 0, "near-regular": 0}
    for h in hexagons(P):
        counts[h.kind] += 1
    return counts


def partition_check(P: Pasture):
    """Check that hexagon supports are pairwise disjoint and, for finite P,
    cover the units other than 1.  Returns (ok, counterexample)."""
    hexes = hexagons(P)
    seen = {}
    for i, h in enumerate(hexes):
        for s in h.support:
            if s in seen:
                return False, s
            seen[s] = i
    if P.is_finite:
        expected = set(P.units.elements()) - {P.units.identity()}
        missing = expected - set(seen)
        if missing:
            return False, min(missing, key=P.units.key)
    return True, None


@dataclass(frozen=True)
class PsiData:
    """The map induced by a product on hexagons: each hexagon of P1 x P2 lies
    over a pair of factor hexagons, with multiplicities multiplying along the
    fibers."""

    product: Pasture
    hexes: tuple                # hexagons of the product
    factor_hexes: tuple         # (hexagons of P1, hexagons of P2)
    fibers: dict                # (i1, i2) -> tuple of product hexagon indices


def psi_product(P1: Pasture, P2: Pasture) -> PsiData:
    res = pa.product_full(P1, P2)
    R = res.pasture
    h1 = hexagons(P1)
    h2 = hexagons(P2)
    hr = hexagons(R)

    def locate(hs, pair):
        for i, h in enumerate(hs):
            if pair in h.pairs:
                return i
        raise AssertionError(f"pair {pair} not in any hexagon")

    fibers = {}
    for idx, h in enumerate(hr):
        a, b = h.canonical_pair
        p1 = (res.proj1(a), res.proj1(b))
        p2 = (res.proj2(a), res.proj2(b))
        key = (locate(h1, p1), locate(h2, p2))
        fibers.setdefault(key, []).append(idx)
    return PsiData(R, hr, (h1, h2), {k: tuple(v) for k, v in fibers.items()})
