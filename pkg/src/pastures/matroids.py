"""Matroids and their representations over pastures.

A representation assigns a unit of the pasture to every basis (the basis
minimum gets 1; nonbases are implicitly 0), subject to the 3-term Pluecker
relations holding in the nullset.  Representation classes are orbits under
rescaling each ground-set element by a unit, renormalized so the minimum
basis keeps value 1.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .groups import SearchSpaceExceeded
from .pasture import InfinitePasture, Pasture, PastureElement, ZERO


class ExchangeAxiomViolation(ValueError):
    """The given collection of bases fails the basis exchange axiom."""


@dataclass(frozen=True)
class Matroid:
    n: int
    rank: int
    bases: tuple          # lex-sorted tuple of sorted tuples over 1..n
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {b: i for i, b in enumerate(self.bases)})

    @classmethod
    def from_bases(cls, n, rank, bases) -> "Matroid":
        clean = sorted({tuple(sorted(b)) for b in bases})
        if not clean:
            raise ValueError("a matroid needs at least one basis")
        for b in clean:
            if len(b) != rank or len(set(b)) != rank:
                raise ValueError(f"basis {b} does not have {rank} distinct "
                                 "elements")
            if b and (b[0] < 1 or b[-1] > n):
                raise ValueError(f"basis {b} is not a subset of 1..{n}")
        bset = set(clean)
        for b1 in clean:
            for b2 in clean:
                for x in set(b1) - set(b2):
                    rest = set(b1) - {x}
                    if not any(tuple(sorted(rest | {y})) in bset
                               for y in set(b2) - set(b1)):
                        raise ExchangeAxiomViolation(
                            f"no exchange for {x} from {b1} into {b2}")
        return cls(n, rank, tuple(clean))

    def is_basis(self, b) -> bool:
        return tuple(sorted(b)) in self._index

    def nonbases(self):
        return tuple(b for b in itertools.combinations(range(1, self.n + 1),
                                                       self.rank)
                     if b not in self._index)

    def to_json(self) -> dict:
        return {"n": self.n, "rank": self.rank,
                "bases": [list(b) for b in self.bases]}


def matroid_from_json(data: dict) -> Matroid:
    return Matroid.from_bases(int(data["n"]), int(data["rank"]),
                              [tuple(int(e) for e in b)
                               for b in data["bases"]])


def uniform(rank: int, n: int) -> Matroid:
    return Matroid.from_bases(
        n, rank, itertools.combinations(range(1, n + 1), rank))


def u24() -> Matroid:
    return uniform(2, 4)


def mk4() -> Matroid:
    """The cycle matroid of K4.  Edges 1..6 are ab, ac, ad, bc, bd, cd; the
    bases are the 16 spanning trees (all triples except the four
    triangles)."""
    triangles = {(1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6)}
    bases = [b for b in itertools.combinations(range(1, 7), 3)
             if b not in triangles]
    return Matroid.from_bases(6, 3, bases)


def _sorted_with_parity(seq):
    seq = list(seq)
    parity = 0
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            parity ^= 1
            j -= 1
    return tuple(seq), parity


@dataclass(frozen=True)
class Representation:
    matroid: Matroid
    pasture: Pasture
    values: tuple           # one unit per basis, aligned with matroid.bases

    def delta(self, seq) -> PastureElement:
        """The basis value of the (unordered) index sequence, with the sign
        of the sorting permutation; zero on repeats and nonbases."""
        seq = tuple(seq)
        if len(set(seq)) < len(seq):
            return ZERO
        srt, parity = _sorted_with_parity(seq)
        i = self.matroid._index.get(srt)
        if i is None:
            return ZERO
        v = self.values[i]
        if parity:
            v = self.pasture.mul(self.pasture.minus_one(), v)
        return v

    def record(self):
        return {"values": {"".join(map(str, b)) if self.matroid.n < 10
                           else ",".join(map(str, b)): list(v.coords)
                           for b, v in zip(self.matroid.bases, self.values)}}


def _constraints(M: Matroid):
    """The 3-term Pluecker constraints, precompiled to basis positions.

    Each constraint is three terms (i, j, sign): positions of the two bases
    whose values multiply (None for a nonbasis, killing the term) and the
    parity of the sorting sign, with the middle term's extra -1 folded in.
    Constraints are bucketed by the largest basis position they mention so
    the search can check them as early as possible.
    """
    r = M.rank
    buckets = [[] for _ in M.bases]
    if r < 2:
        return buckets

    def term(seq, extra):
        srt, parity = _sorted_with_parity(seq)
        i = M._index.get(srt)
        return i, parity ^ extra

    ground = range(1, M.n + 1)
    for J in itertools.combinations(ground, r - 2):
        rest = [e for e in ground if e not in J]
        for e1, e2, e3, e4 in itertools.combinations(rest, 4):
            a1 = term(J + (e1, e2), 0)
            b1 = term(J + (e3, e4), 0)
            a2 = term(J + (e1, e3), 1)
            b2 = term(J + (e2, e4), 0)
            a3 = term(J + (e1, e4), 0)
            b3 = term(J + (e2, e3), 0)
            con = ((a1, b1), (a2, b2), (a3, b3))
            used = [t[0] for pair in con for t in pair if t[0] is not None]
            if used:
                buckets[max(used)].append(con)
    return buckets


def _check_constraint(P: Pasture, con, values, meps):
    prods = []
    for (i, pi), (j, pj) in con:
        if i is None or j is None:
            prods.append(ZERO)
            continue
        v = P.mul(values[i], values[j])
        if (pi + pj) & 1:
            v = P.mul(meps, v)
        prods.append(v)
    return P.null_contains(*prods)


def plucker_check(rep: Representation):
    """(ok, witness): whether all 3-term Pluecker relations of the
    representation land in the nullset; the witness is a failing constraint
    as basis-position terms."""
    buckets = _constraints(rep.matroid)
    P = rep.pasture
    meps = P.minus_one()
    for bucket in buckets:
        for con in bucket:
            if not _check_constraint(P, con, rep.values, meps):
                return False, con
    return True, None


@dataclass(frozen=True)
class RepresentationClass:
    representative: Representation
    members: frozenset

    @property
    def size(self) -> int:
        return len(self.members)


def representation_classes(M: Matroid, P: Pasture, *, cap: int = 10**9,
                           orbit_cap: int = 10**6,
                           threads: int = 1) -> list:
    """All rescaling classes of representations of M over P.

    Exhaustive search over unit values for every basis, with the minimum
    basis pinned to 1 and constraints checked as soon as their last basis
    is assigned.  Raises InfinitePasture for infinite P, SearchSpaceExceeded
    when the normalized search space is larger than ``cap`` or the rescaling
    torus is larger than ``orbit_cap``.
    """
    if not P.is_finite:
        raise InfinitePasture(
            "representation search needs a finite pasture")
    units = [PastureElement(c) for c in
             sorted(P.units.elements(), key=P.units.key)]
    B = len(M.bases)
    if len(units) ** (B - 1) > cap:
        raise SearchSpaceExceeded(
            f"{len(units)}^{B - 1} normalized assignments exceed the cap "
            f"of {cap}")
    if len(units) ** M.n > orbit_cap:
        raise SearchSpaceExceeded(
            f"rescaling torus of size {len(units)}^{M.n} exceeds the cap "
            f"of {orbit_cap}")
    buckets = _constraints(M)
    meps = P.minus_one()
    one = P.one()

    def extend(k, values, out):
        if k == B:
            out.append(tuple(values))
            return
        for u in units:
            values.append(u)
            if all(_check_constraint(P, c, values, meps)
                   for c in buckets[k]):
                extend(k + 1, values, out)
            values.pop()

    accepted = []
    values = [one]
    if all(_check_constraint(P, c, values, meps) for c in buckets[0]):
        if threads > 1 and B > 1:
            branches = []
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for u in units:
                    vals = [one, u]
                    if all(_check_constraint(P, c, vals, meps)
                           for c in buckets[1]):
                        out = []
                        branches.append(
                            (pool.submit(extend, 2, vals, out), out))
                for fut, out in branches:
                    fut.result()
                    accepted.extend(out)
        else:
            extend(1, values, accepted)

    accepted_set = set(accepted)
    seen = set()
    classes = []
    key = P.units.key
    for vals in accepted:
        if vals in seen:
            continue
        orbit = set()
        for d in itertools.product(units, repeat=M.n):
            scaled = []
            for b, v in zip(M.bases, vals):
                w = v
                for e in b:
                    w = P.mul(d[e - 1], w)
                scaled.append(w)
            c = P.inv(scaled[0])
            orbit.add(tuple(P.mul(c, w) for w in scaled))
        assert orbit <= accepted_set, \
            "rescaling left the accepted set; search was not exhaustive"
        seen |= orbit
        rep_vals = min(orbit, key=lambda t: tuple(key(v.coords) for v in t))
        classes.append(RepresentationClass(
            Representation(M, P, rep_vals), frozenset(orbit)))
    classes.sort(key=lambda c: tuple(key(v.coords)
                                     for v in c.representative.values))
    return classes


@dataclass(frozen=True)
class LiftBijectionReport:
    ok: bool
    pairs: tuple            # (source class index, target class index)
    source_classes: int
    target_classes: int


def lift_bijection_check(M: Matroid, lift_result, *, cap: int = 10**9,
                         orbit_cap: int = 10**6,
                         threads: int = 1) -> LiftBijectionReport:
    """Push every representation class over the lift through lambda and
    check the induced map on classes is a bijection."""
    lam = lift_result.lam
    cl_L = representation_classes(M, lift_result.lift, cap=cap,
                                  orbit_cap=orbit_cap, threads=threads)
    cl_P = representation_classes(M, lam.target, cap=cap,
                                  orbit_cap=orbit_cap, threads=threads)
    pairs = []
    for i, cls in enumerate(cl_L):
        image = tuple(lam.apply(v) for v in cls.representative.values)
        hits = [j for j, tcls in enumerate(cl_P) if image in tcls.members]
        assert len(hits) == 1, "pushforward misses the target classes"
        pairs.append((i, hits[0]))
    ok = (len({j for _, j in pairs}) == len(cl_P)
          and len(cl_L) == len(cl_P))
    return LiftBijectionReport(ok, tuple(pairs), len(cl_L), len(cl_P))
