"""Pastures and their constructors.

A pasture is stored as its unit group (an :class:`AbelianGroup` whose
``epsilon`` is the element -1) together with the set of *null orbits*: the
all-unit triples ``{a, b, c}`` with ``a + b + c = 0``, kept one canonical
representative per orbit under simultaneous unit scaling.  Triples containing
zero are never stored; they are forced by the axioms and answered by rule
(``a + b + 0`` is null exactly when ``b = -a``, and ``a + 0 + 0`` only for
``a = 0``).

The canonical representative of an orbit is the lexicographic minimum, in the
element total order, over the at most three scalings that send one entry to 1,
each sorted.  Since every such scaling arises from every orbit member, the
representative does not depend on the member we start from.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field, replace
from functools import lru_cache

from . import gf as gf_mod
from .groups import (
    AbelianGroup,
    GroupMap,
    reduce_presentation,
    quotient_by,
)

log = logging.getLogger(__name__)

NotPrimePower = gf_mod.NotPrimePower


class BadRelationShape(ValueError):
    """A quotient relation is not a 2- or 3-term sum of the expected shape."""


class DuplicateName(ValueError):
    """Free algebra generator names must be distinct."""


class InfinitePasture(ValueError):
    """An operation requiring finitely many units met an infinite pasture."""


class QuotientDepthExceeded(RuntimeError):
    """Quotient closure failed to stabilize within the round cap."""


@dataclass(frozen=True)
class PastureElement:
    """Either zero (``coords is None``) or a unit given by its canonical
    coordinate tuple in the ambient unit group."""

    coords: tuple[int, ...] | None

    @property
    def is_zero(self) -> bool:
        return self.coords is None


ZERO = PastureElement(None)


def unit(coords) -> PastureElement:
    return PastureElement(tuple(coords))


def canonical_orbit(group: AbelianGroup, triple):
    """Canonical representative of the scaling orbit of an all-unit triple."""
    best = None
    best_key = None
    for t in set(triple):
        tinv = group.inv(t)
        cand = tuple(sorted((group.mul(x, tinv) for x in triple), key=group.key))
        ck = tuple(group.key(x) for x in cand)
        if best is None or ck < best_key:
            best, best_key = cand, ck
    return best


@dataclass(frozen=True)
class Pasture:
    units: AbelianGroup
    null_orbits: frozenset
    label: str | None = field(default=None, compare=False)

    # -- elements -----------------------------------------------------------

    @property
    def eps(self) -> tuple[int, ...]:
        return self.units.epsilon

    def one(self) -> PastureElement:
        return PastureElement(self.units.identity())

    def minus_one(self) -> PastureElement:
        return PastureElement(self.units.epsilon)

    def zero(self) -> PastureElement:
        return ZERO

    def mul(self, a: PastureElement, b: PastureElement) -> PastureElement:
        if a.is_zero or b.is_zero:
            return ZERO
        return PastureElement(self.units.mul(a.coords, b.coords))

    def inv(self, a: PastureElement) -> PastureElement:
        if a.is_zero:
            raise ZeroDivisionError("zero has no inverse")
        return PastureElement(self.units.inv(a.coords))

    @property
    def is_finite(self) -> bool:
        return self.units.is_finite

    def elements(self):
        """Zero followed by the units in total order; finite pastures only."""
        if not self.is_finite:
            raise InfinitePasture("cannot list elements of an infinite pasture")
        out = [ZERO]
        out.extend(PastureElement(c) for c in
                   sorted(self.units.elements(), key=self.units.key))
        return out

    # -- nullset ------------------------------------------------------------

    def null_contains(self, a: PastureElement, b: PastureElement,
                      c: PastureElement) -> bool:
        """Whether ``a + b + c`` is a null triple."""
        return self._null3(a.coords, b.coords, c.coords)

    def _null3(self, x, y, z) -> bool:
        parts = [p for p in (x, y, z) if p is not None]
        if not parts:
            return True
        if len(parts) == 1:
            return False
        if len(parts) == 2:
            u, w = parts
            return w == self.units.mul(u, self.eps)
        return canonical_orbit(self.units, tuple(parts)) in self.null_orbits

    def sorted_orbits(self):
        g = self.units
        return sorted(self.null_orbits,
                      key=lambda o: tuple(g.key(x) for x in o))

    # -- bookkeeping ---------------------------------------------------------

    def with_label(self, label: str) -> "Pasture":
        return replace(self, label=label)

    def descriptor(self) -> dict:
        return {
            "units": {
                "free_rank": self.units.free_rank,
                "torsion": list(self.units.torsion),
                "epsilon": list(self.eps),
            },
            "null_orbits": [[list(x) for x in o] for o in self.sorted_orbits()],
            "label": self.label,
        }

    def validate(self):
        """Structural checks; returns a list of problem strings."""
        problems = []
        g = self.units
        for i, d in enumerate(g.torsion):
            if d < 2:
                problems.append(f"invariant factor {d} < 2")
            if i and g.torsion[i - 1] and d % g.torsion[i - 1]:
                problems.append("invariant factors out of divisibility order")
        if len(g.epsilon) != g.ngens or g.reduce(g.epsilon) != g.epsilon:
            problems.append("epsilon not in reduced canonical coordinates")
        if g.mul(g.epsilon, g.epsilon) != g.identity():
            problems.append("epsilon does not square to 1")
        for o in self.null_orbits:
            if len(o) != 3:
                problems.append(f"orbit {o} is not a triple")
                continue
            if any(len(x) != g.ngens or g.reduce(x) != x for x in o):
                problems.append(f"orbit {o} has malformed coordinates")
                continue
            if canonical_orbit(g, o) != o:
                problems.append(f"orbit {o} is not in canonical form")
        return problems


# -- construction results ----------------------------------------------------


@dataclass(frozen=True)
class QuotientResult:
    pasture: Pasture
    unit_map: GroupMap          # old canonical coordinates -> new
    sections: tuple             # new canonical generators as words over old


@dataclass(frozen=True)
class ProductResult:
    pasture: Pasture
    proj1: GroupMap             # product units -> first factor units
    proj2: GroupMap
    embed1: GroupMap
    embed2: GroupMap


@dataclass(frozen=True)
class TensorResult:
    pasture: Pasture
    inclusions: tuple           # one GroupMap per factor
    sections: tuple             # canonical generators as words over the
                                # concatenated factor generators


def _identity_map(g: AbelianGroup) -> GroupMap:
    rows = []
    for i in range(g.ngens):
        e = [0] * g.ngens
        e[i] = 1
        rows.append(g.reduce(e))
    return GroupMap(g, tuple(rows))


# -- constructors ------------------------------------------------------------


def free_algebra(P: Pasture, names) -> Pasture:
    """Adjoin free commuting unit generators, one per name.

    The new generators occupy the last ``len(names)`` canonical coordinates,
    in the order given.
    """
    names = tuple(names)
    if len(set(names)) != len(names):
        raise DuplicateName(f"duplicate generator name in {names}")
    if not all(isinstance(n, str) and n for n in names):
        raise DuplicateName("generator names must be nonempty strings")
    g = P.units
    n = g.ngens + len(names)
    rows = [r + [0] * len(names) for r in g.relation_rows()]
    red = reduce_presentation(n, rows, list(g.epsilon) + [0] * len(names))
    # relations were already diagonal, so coordinates pass through unchanged
    assert red.group.torsion == g.torsion and red.group.free_rank == g.free_rank + len(names)
    orbits = frozenset(
        tuple(red.project(list(x) + [0] * len(names)) for x in o)
        for o in P.null_orbits)
    label = None
    if P.label:
        label = f"{P.label}<{','.join(names)}>"
    return Pasture(red.group, orbits, label)


def _as_unit_coords(P: Pasture, e: PastureElement):
    if not isinstance(e, PastureElement):
        raise BadRelationShape(f"expected a PastureElement, got {e!r}")
    if e.is_zero:
        return None
    if len(e.coords) != P.units.ngens:
        raise BadRelationShape(
            f"element {e.coords} does not live in a group with "
            f"{P.units.ngens} generators")
    return P.units.reduce(e.coords)


def quotient_full(P: Pasture, relations, identifications=(),
                  max_rounds: int = 10000) -> QuotientResult:
    """Quotient of ``P`` by null relations and unit identifications.

    Each relation is a triple of :class:`PastureElement` with at most one
    zero entry (a 2- or 3-term vanishing sum; the sign of a term is folded
    into the element, so ``a + b - c = 0`` is passed as ``(a, b, -c)``).
    Identifications are pairs of units forced equal.  All-unit triples adjoin
    null orbits; two-term triples ``{x, y, 0}`` force the unit identification
    ``y = -x`` and contribute the kill element ``x * y^-1 * (-1)``.
    """
    units = P.units
    orbits = set(P.null_orbits)
    adjoin = []
    kill = []
    for tri in relations:
        tri = tuple(tri)
        if len(tri) != 3:
            raise BadRelationShape(f"relation {tri} is not a triple")
        coords = [_as_unit_coords(P, e) for e in tri]
        parts = [c for c in coords if c is not None]
        if len(parts) < 2:
            raise BadRelationShape(
                "a relation needs at least two nonzero terms")
        if len(parts) == 2:
            x, y = parts
            kill.append(units.mul(units.mul(x, units.inv(y)), units.epsilon))
        else:
            adjoin.append(tuple(parts))
    for g, h in identifications:
        cg = _as_unit_coords(P, g)
        ch = _as_unit_coords(P, h)
        if cg is None or ch is None:
            raise BadRelationShape("identifications must relate units")
        kill.append(units.mul(cg, units.inv(ch)))

    cum = _identity_map(units)
    sections = tuple(tuple(r) for r in _identity_map(units).rows)
    rounds = 0
    while True:
        rounds += 1
        if rounds > max_rounds:
            raise QuotientDepthExceeded(
                f"quotient closure did not stabilize in {max_rounds} rounds")
        if kill:
            if rounds > 1:
                log.debug("quotient closure cascaded to round %d", rounds)
            red = quotient_by(units, kill)
            units = red.group
            orbits = {tuple(red.project(x) for x in o) for o in orbits}
            adjoin = [tuple(red.project(x) for x in t) for t in adjoin]
            cum = cum.then(red.project)
            sections = tuple(
                tuple(sum(c * old[k] for k, c in enumerate(w))
                      for old in zip(*sections))
                for w in red.sections)
            kill = []
        orbits = {canonical_orbit(units, o) for o in orbits}
        orbits.update(canonical_orbit(units, t) for t in adjoin)
        adjoin = []
        # stored orbits are all-unit triples and stay that way under
        # projection, so they can never force further identifications;
        # closure is reached after the single kill round
        if not kill:
            break
    return QuotientResult(Pasture(units, frozenset(orbits)), cum, sections)


def quotient(P: Pasture, relations, identifications=(),
             max_rounds: int = 10000) -> Pasture:
    return quotient_full(P, relations, identifications, max_rounds).pasture


def product_full(P: Pasture, Q: Pasture) -> ProductResult:
    """Direct product: units multiply componentwise and a product triple is
    null exactly when both components are."""
    gp, gq = P.units, Q.units
    n1, n2 = gp.ngens, gq.ngens
    rows = [list(r) + [0] * n2 for r in gp.relation_rows()]
    rows += [[0] * n1 + list(r) for r in gq.relation_rows()]
    red = reduce_presentation(n1 + n2, rows, list(gp.epsilon) + list(gq.epsilon))
    R = red.group

    def pad1(x):
        return list(x) + [0] * n2

    def pad2(y):
        return [0] * n1 + list(y)

    embed1 = GroupMap(R, tuple(red.project(pad1(e)) for e in _basis(n1)))
    embed2 = GroupMap(R, tuple(red.project(pad2(e)) for e in _basis(n2)))
    proj1 = GroupMap(gp, tuple(gp.reduce(w[:n1]) for w in red.sections))
    proj2 = GroupMap(gq, tuple(gq.reduce(w[n1:]) for w in red.sections))

    orbits = set()
    for a in P.null_orbits:
        for b in Q.null_orbits:
            for perm in itertools.permutations(range(3)):
                tri = tuple(
                    R.mul(red.project(pad1(a[i])), red.project(pad2(b[perm[i]])))
                    for i in range(3))
                orbits.add(canonical_orbit(R, tri))
    label = None
    if P.label and Q.label:
        label = f"{P.label} x {Q.label}"
    return ProductResult(Pasture(R, frozenset(orbits), label),
                         proj1, proj2, embed1, embed2)


def _basis(n):
    out = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out.append(e)
    return out


def product(*pastures) -> Pasture:
    """Direct product of any number of pastures; the empty product is K."""
    if not pastures:
        return named("K")
    acc = pastures[0]
    for Q in pastures[1:]:
        acc = product_full(acc, Q).pasture
    return acc


def tensor_full(factors) -> TensorResult:
    """Tensor product over F1pm: unit groups are glued along -1 and the
    nullset is generated by the factors' nullsets.  The empty tensor is
    F1pm."""
    factors = tuple(factors)
    if not factors:
        return TensorResult(named("F1pm"), (), ())
    ngs = [F.units.ngens for F in factors]
    total = sum(ngs)
    offs = [sum(ngs[:i]) for i in range(len(factors))]

    def pad(i, x):
        return [0] * offs[i] + list(x) + [0] * (total - offs[i] - ngs[i])

    rows = []
    for i, F in enumerate(factors):
        for r in F.units.relation_rows():
            rows.append(pad(i, r))
    for i in range(len(factors) - 1):
        a = pad(i, factors[i].units.epsilon)
        b = pad(i + 1, factors[i + 1].units.epsilon)
        rows.append([x - y for x, y in zip(a, b)])
    red = reduce_presentation(total, rows, pad(0, factors[0].units.epsilon))
    R = red.group
    inclusions = tuple(
        GroupMap(R, tuple(red.project(pad(i, e)) for e in _basis(ngs[i])))
        for i in range(len(factors)))
    orbits = set()
    for i, F in enumerate(factors):
        inc = inclusions[i]
        for o in F.null_orbits:
            orbits.add(canonical_orbit(R, tuple(inc(x) for x in o)))
    labels = [F.label for F in factors]
    label = " ox ".join(labels) if all(labels) else None
    return TensorResult(Pasture(R, frozenset(orbits), label),
                        inclusions, red.sections)


def tensor(*pastures) -> Pasture:
    return tensor_full(pastures).pasture


def finite_field(q: int) -> Pasture:
    """The pasture of GF(q): cyclic unit group written multiplicatively via
    the deterministic generator, nullset from the additive structure."""
    f = gf_mod.field(q)
    if q == 2:
        g = AbelianGroup((), 0, ())
        return Pasture(g, frozenset(), "F2")
    eps = ((q - 1) // 2,) if q % 2 else (0,)
    g = AbelianGroup((q - 1,), 0, eps)
    orbits = set()
    for i in range(q - 1):
        a = f.exp[i]
        for j in range(q - 1):
            b = f.exp[j]
            c = f.neg(f.add(a, b))
            if c == 0:
                continue
            tri = ((i,), (j,), (f.dlog[c],))
            orbits.add(canonical_orbit(g, tri))
    return Pasture(g, frozenset(orbits), f"F{q}")


@lru_cache(maxsize=None)
def named(name: str) -> Pasture:
    """The stock pastures: F1pm, K, S, W, F2, F3, U, D, H, G."""
    if name == "F1pm":
        red = reduce_presentation(1, [[2]], [1])
        return Pasture(red.group, frozenset(), "F1pm")
    base = named("F1pm")
    one = base.one()
    meps = base.minus_one()
    if name == "K":
        return quotient(base, [(one, one, ZERO), (one, one, one)]).with_label("K")
    if name == "S":
        return quotient(base, [(one, one, meps)]).with_label("S")
    if name == "W":
        return quotient(base, [(one, one, one), (one, one, meps)]).with_label("W")
    if name == "F2":
        return quotient(base, [(one, one, ZERO)]).with_label("F2")
    if name == "F3":
        return quotient(base, [(one, one, one)]).with_label("F3")
    if name == "U":
        amb = free_algebra(base, ("x", "y"))
        x = unit((0, 1, 0))
        y = unit((0, 0, 1))
        return quotient(amb, [(x, y, amb.minus_one())]).with_label("U")
    if name == "D":
        amb = free_algebra(base, ("z",))
        z = unit((0, 1))
        return quotient(amb, [(z, z, amb.minus_one())]).with_label("D")
    if name == "H":
        amb = free_algebra(base, ("z",))
        z = unit((0, 1))
        z3 = unit((0, 3))
        zinv = unit((0, -1))
        return quotient(
            amb, [(z3, amb.one(), ZERO), (z, zinv, amb.minus_one())]
        ).with_label("H")
    if name == "G":
        amb = free_algebra(base, ("z",))
        z = unit((0, 1))
        z2 = unit((0, 2))
        return quotient(amb, [(z2, z, amb.minus_one())]).with_label("G")
    raise KeyError(f"unknown pasture name {name!r}")


NAMED = ("F1pm", "K", "S", "W", "F2", "F3", "U", "D", "H", "G")
