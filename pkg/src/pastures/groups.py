"""Finitely generated abelian groups in Smith normal form coordinates.

Everything downstream stores unit groups of pastures as instances of
:class:`AbelianGroup`: a tuple of invariant factors (each dividing the next),
a free rank, and a distinguished element ``epsilon`` of order at most two that
plays the role of -1.  Elements are coordinate tuples, torsion coordinates
first (reduced into ``range(d)``), free coordinates after.  All arithmetic is
exact over Python integers.

Groups presented by arbitrary integer relation rows are brought into this
canonical shape by :func:`reduce_presentation`, which also returns the
projection onto canonical coordinates and a section expressing each canonical
generator as a word in the presentation generators.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass


class EpsilonOrderError(ValueError):
    """The designated sign element does not square to the identity."""


class InfiniteTargetError(ValueError):
    """A hom-set enumeration would have infinitely many candidates."""


class SearchSpaceExceeded(RuntimeError):
    """An enumeration would exceed the configured candidate cap."""


def _identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(rows, width):
    """Diagonalize an integer relation matrix, tracking column transforms.

    Returns ``(diag, v, vinv)`` where ``diag`` has length ``width`` and lists
    the diagonal of the Smith normal form (entries nonnegative, each dividing
    the next, padded with zeros past the rank), and ``v``/``vinv`` are mutually
    inverse unimodular ``width x width`` matrices such that after the change of
    coordinates ``y = x*v`` the row lattice of the input equals the row lattice
    of the diagonal matrix.

    >>> smith_normal_form([[4, 6]], 2)[0]
    [2, 0]
    >>> smith_normal_form([[2, 0], [1, 3]], 2)[0]
    [1, 6]
    """
    a = [list(row) for row in rows]
    m = len(a)
    n = width
    for row in a:
        if len(row) != n:
            raise ValueError("relation row of wrong width")
    v = _identity_matrix(n)
    vinv = _identity_matrix(n)

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def col_add(j, i, k):
        # column j += k * column i
        for r in a:
            r[j] += k * r[i]
        for r in v:
            r[j] += k * r[i]
        vinv[i] = [x - k * y for x, y in zip(vinv[i], vinv[j])]

    def col_neg(i):
        for r in a:
            r[i] = -r[i]
        for r in v:
            r[i] = -r[i]
        vinv[i] = [-x for x in vinv[i]]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]

    def row_add(j, i, k):
        a[j] = [x + k * y for x, y in zip(a[j], a[i])]

    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        row_swap(t, best[1])
        col_swap(t, best[2])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_add(i, t, -q)
                    if a[i][t]:
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_add(j, t, -q)
                    if a[t][j]:
                        col_swap(t, j)
                        dirty = True
            if dirty:
                continue
            d = a[t][t]
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % d:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        t += 1
    diag = [a[j][j] if j < m else 0 for j in range(n)]
    for j in range(n):
        if diag[j] < 0:
            col_neg(j)
            diag[j] = -diag[j]
    return diag, v, vinv


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group in canonical coordinates.

    ``torsion`` holds the invariant factors (all >= 2, each dividing the
    next); ``free_rank`` counts free coordinates appended after the torsion
    ones; ``epsilon`` is the canonical coordinate tuple of the distinguished
    sign element.
    """

    torsion: tuple[int, ...]
    free_rank: int
    epsilon: tuple[int, ...]

    @property
    def ngens(self) -> int:
        return len(self.torsion) + self.free_rank

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.ngens == 0

    def size(self):
        """Group order, or None when infinite."""
        if not self.is_finite:
            return None
        return math.prod(self.torsion)

    def identity(self) -> tuple[int, ...]:
        return (0,) * self.ngens

    def reduce(self, vec) -> tuple[int, ...]:
        out = []
        for i, c in enumerate(vec):
            if i < len(self.torsion):
                out.append(c % self.torsion[i])
            else:
                out.append(c)
        return tuple(out)

    def mul(self, a, b) -> tuple[int, ...]:
        return self.reduce([x + y for x, y in zip(a, b)])

    def inv(self, a) -> tuple[int, ...]:
        return self.reduce([-x for x in a])

    def power(self, a, k: int) -> tuple[int, ...]:
        return self.reduce([k * x for x in a])

    def key(self, a):
        """Total order key: torsion coordinates verbatim, then free ones by
        (absolute value, sign) with the positive value first.

        >>> g = AbelianGroup((), 1, ())
        >>> sorted([(2,), (-1,), (0,), (1,), (-2,)], key=g.key)
        [(0,), (1,), (-1,), (2,), (-2,)]
        """
        out = list(a[: len(self.torsion)])
        for c in a[len(self.torsion):]:
            out.append(abs(c))
            out.append(0 if c >= 0 else 1)
        return tuple(out)

    def element_order(self, a):
        """Multiplicative order, or None for elements of infinite order."""
        if any(a[len(self.torsion):]):
            return None
        n = 1
        for c, d in zip(a, self.torsion):
            if c:
                n = math.lcm(n, d // math.gcd(c, d))
        return n

    def elements(self):
        """All elements in total order; the group must be finite."""
        if not self.is_finite:
            raise InfiniteTargetError("cannot enumerate an infinite group")
        return list(itertools.product(*(range(d) for d in self.torsion)))

    def torsion_elements(self):
        """Elements of finite order, in total order."""
        pad = (0,) * self.free_rank
        boxes = itertools.product(*(range(d) for d in self.torsion))
        return [tuple(b) + pad for b in boxes]

    def relation_rows(self):
        rows = []
        for i, d in enumerate(self.torsion):
            row = [0] * self.ngens
            row[i] = d
            rows.append(row)
        return rows


@dataclass(frozen=True)
class GroupMap:
    """A homomorphism out of a group in canonical coordinates, given by the
    image of each canonical generator of the source."""

    target: AbelianGroup
    rows: tuple[tuple[int, ...], ...]

    def __call__(self, vec) -> tuple[int, ...]:
        acc = [0] * self.target.ngens
        for c, row in zip(vec, self.rows):
            if c:
                for i, r in enumerate(row):
                    acc[i] += c * r
        return self.target.reduce(acc)

    def then(self, other: "GroupMap") -> "GroupMap":
        """Composite map ``x -> other(self(x))``."""
        return GroupMap(other.target, tuple(other(r) for r in self.rows))


@dataclass(frozen=True)
class Reduction:
    """Result of collapsing a presentation to canonical coordinates."""

    group: AbelianGroup
    project: GroupMap
    sections: tuple[tuple[int, ...], ...]


def reduce_presentation(num_gens, relation_rows, epsilon_row) -> Reduction:
    """Collapse ``Z^num_gens`` modulo the rows to canonical coordinates.

    ``epsilon_row`` is the sign element as a word in the presentation
    generators; it must have order at most 2 in the quotient, else
    :class:`EpsilonOrderError` is raised.

    >>> r = reduce_presentation(2, [[0, 2], [2, 1]], [0, 1])
    >>> r.group.torsion, r.group.free_rank
    ((4,), 0)
    """
    diag, v, vinv = smith_normal_form(relation_rows, num_gens)
    keep = [j for j in range(num_gens) if diag[j] >= 2]
    keep += [j for j in range(num_gens) if diag[j] == 0]
    torsion = tuple(diag[j] for j in keep if diag[j] >= 2)
    free_rank = sum(1 for j in keep if diag[j] == 0)
    shell = AbelianGroup(torsion, free_rank, (0,) * len(keep))
    rows = tuple(shell.reduce(tuple(v[i][j] for j in keep)) for i in range(num_gens))
    proj = GroupMap(shell, rows)
    eps = proj(epsilon_row)
    if shell.mul(eps, eps) != shell.identity():
        raise EpsilonOrderError(f"sign element has order > 2: {eps}")
    group = AbelianGroup(torsion, free_rank, eps)
    proj = GroupMap(group, rows)
    sections = tuple(tuple(vinv[j]) for j in keep)
    return Reduction(group, proj, sections)


def quotient_by(group: AbelianGroup, kill) -> Reduction:
    """Quotient by the subgroup generated by ``kill`` (canonical coordinate
    tuples).  The returned projection maps old canonical coordinates to new
    ones and the sections express new canonical generators over the old."""
    rows = group.relation_rows() + [list(k) for k in kill]
    return reduce_presentation(group.ngens, rows, list(group.epsilon))


def evaluate_word(target: AbelianGroup, gen_images, word) -> tuple[int, ...]:
    """Evaluate a presentation word given images for presentation generators."""
    acc = target.identity()
    for c, img in zip(word, gen_images):
        if c:
            acc = target.mul(acc, target.power(img, c))
    return acc


def map_from_presentation(reduction: Reduction, gen_images, target: AbelianGroup) -> GroupMap:
    """Build the map on canonical generators induced by images of the
    presentation generators, via the reduction's sections."""
    rows = tuple(evaluate_word(target, gen_images, w) for w in reduction.sections)
    return GroupMap(target, rows)


def is_surjective(source: AbelianGroup, gmap: GroupMap) -> bool:
    """Whether the images of the source generators generate the target."""
    tgt = gmap.target
    rows = tgt.relation_rows() + [list(r) for r in gmap.rows]
    red = reduce_presentation(tgt.ngens, rows, [0] * tgt.ngens)
    return red.group.is_trivial


def enumerate_homs(source: AbelianGroup, target: AbelianGroup, *,
                   eps_to_eps: bool = True, cap: int = 10**8):
    """All homomorphisms source -> target as image tuples, in a deterministic
    order.

    The target may be infinite provided the source is all-torsion (every
    generator image is then confined to the finite torsion subgroup).  When a
    free source generator meets an infinite target, the hom set has no finite
    enumeration and :class:`InfiniteTargetError` is raised.  Candidate counts
    above ``cap`` raise :class:`SearchSpaceExceeded`.
    """
    per_gen = []
    for i in range(source.ngens):
        if i < len(source.torsion):
            d = source.torsion[i]
            pool = [e for e in target.torsion_elements()
                    if all((d * c) % dt == 0 for c, dt in zip(e, target.torsion))]
        else:
            if not target.is_finite:
                raise InfiniteTargetError(
                    "free source generator with infinite target")
            pool = list(target.elements())
        pool.sort(key=target.key)
        per_gen.append(pool)
    total = math.prod(len(p) for p in per_gen) if per_gen else 1
    if total > cap:
        raise SearchSpaceExceeded(
            f"{total} candidate homomorphisms exceed the cap of {cap}")
    out = []
    for images in itertools.product(*per_gen):
        if eps_to_eps:
            if evaluate_word(target, images, source.epsilon) != target.epsilon:
                continue
        out.append(tuple(images))
    return out
