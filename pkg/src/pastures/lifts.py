"""Binary, hexagon, ternary, WLUM and GRS lifts.

Each lift of a pasture P is a pasture L together with a morphism
``lam: L -> P`` through which representations over structured sources
factor.  The hexagon lift of a single hexagon is (isomorphic to) one of the
four model pastures U, D, H, F3, picked by the hexagon's type; the ternary
lift tensors the hexagon lifts over all hexagons of P; the WLUM lift tensors
one extra F2 factor when -1 = 1 in P; the GRS lift is presented by one
generator per fundamental element with the induced multiplicative relations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groups import AbelianGroup, evaluate_word
from .pasture import (
    Pasture,
    PastureElement,
    ZERO,
    named,
    quotient_full,
    tensor_full,
    unit,
)
from .hexagons import Hexagon, fundamental_pairs, hexagons
from .morphisms import PastureMorphism, make


class HexagonNotOfPasture(ValueError):
    """The hexagon's pairs are not fundamental pairs of the pasture."""


class KindMismatch(ValueError):
    """Descriptor comparison needs two ternary or WLUM lifts."""


class NotFinitary(ValueError):
    """The pasture has too many fundamental elements to present its GRS
    lift."""


@dataclass(frozen=True)
class LiftResult:
    lift: Pasture
    lam: PastureMorphism
    kind: str                       # binary | hexagon | ternary | wlum | grs
    factor_descriptor: dict | None  # counts of U, D, H, F3, F2 tensor factors


def _descriptor(counts) -> dict:
    d = {"U": 0, "D": 0, "H": 0, "F3": 0, "F2": 0}
    d.update(counts)
    return d


def binary_lift(P: Pasture) -> LiftResult:
    """F2 when -1 = 1 in P, else F1pm, with the unique morphism to P."""
    g = P.units
    if g.epsilon == g.identity():
        lift = named("F2")
        lam = make(lift, P, ())
        return LiftResult(lift, lam, "binary", None)
    lift = named("F1pm")
    lam = make(lift, P, (g.epsilon,))
    return LiftResult(lift, lam, "binary", None)


def _model_and_images(P: Pasture, h: Hexagon):
    """The model pasture for a hexagon and the images of the model's
    canonical generators under lambda.

    The distinguished pair of the model maps into the hexagon: for U the
    canonical (minimum) pair, for H its first element, for D the unique
    diagonal pair (the canonical pair of a dyadic hexagon need not be
    diagonal), for F3 the forced (-1, -1).
    """
    eps = P.units.epsilon
    if h.kind == "ternary":
        return named("F3"), (eps,)
    if h.kind == "dyadic":
        return named("D"), (eps, h.diagonal_element())
    if h.kind == "hexagonal":
        return named("H"), (h.canonical_pair[0],)
    a, b = h.canonical_pair
    return named("U"), (eps, a, b)


_MODEL_KEYS = {"ternary": "F3", "dyadic": "D", "hexagonal": "H",
               "near-regular": "U"}


def _check_hexagon(P: Pasture, h: Hexagon):
    try:
        ok = all(len(a) == P.units.ngens and len(b) == P.units.ngens
                 and P._null3(a, b, P.eps) for a, b in h.pairs)
    except (TypeError, IndexError):
        ok = False
    if not ok:
        raise HexagonNotOfPasture(
            f"pairs {h.pairs} are not fundamental pairs of this pasture")


def hexagon_lift(P: Pasture, h: Hexagon) -> LiftResult:
    """The lift of a single hexagon: the model pasture of its type with
    lambda sending the model's fundamental pairs onto the hexagon."""
    _check_hexagon(P, h)
    model, images = _model_and_images(P, h)
    lam = make(model, P, images)
    return LiftResult(model, lam, "hexagon",
                      _descriptor({_MODEL_KEYS[h.kind]: 1}))


def _tensor_lift(P: Pasture, extra_f2: bool):
    hexes = hexagons(P)
    models = []
    gen_images = []
    counts = {"U": 0, "D": 0, "H": 0, "F3": 0, "F2": 0}
    for h in hexes:
        model, images = _model_and_images(P, h)
        models.append(model)
        gen_images.extend(images)
        counts[_MODEL_KEYS[h.kind]] += 1
    if extra_f2:
        models.append(named("F2"))   # contributes no generators
        counts["F2"] = 1
    if not models:
        lift = named("F1pm")
        lam = make(lift, P, (P.units.epsilon,))
        return lift, lam, counts
    res = tensor_full(models)
    rows = tuple(evaluate_word(P.units, gen_images, w) for w in res.sections)
    lam = make(res.pasture, P, rows)
    return res.pasture, lam, counts


def _check_pair_bijection(lam: PastureMorphism):
    src_pairs = fundamental_pairs(lam.source)
    mapped = {(lam.unit_map(a), lam.unit_map(b)) for a, b in src_pairs}
    tgt_pairs = fundamental_pairs(lam.target)
    assert len(mapped) == len(src_pairs) == len(tgt_pairs), \
        "lambda is not injective on fundamental pairs"
    assert mapped == tgt_pairs, "lambda does not cover the fundamental pairs"


def ternary_lift(P: Pasture) -> LiftResult:
    """Tensor of the hexagon lifts over all hexagons of P."""
    lift, lam, counts = _tensor_lift(P, extra_f2=False)
    _check_pair_bijection(lam)
    return LiftResult(lift, lam, "ternary", _descriptor(counts))


def wlum_lift(P: Pasture) -> LiftResult:
    """The ternary lift, tensored with F2 when -1 = 1 in P (so that the lift
    itself satisfies -1 = 1 and binary data lifts too)."""
    collapse = P.units.epsilon == P.units.identity()
    lift, lam, counts = _tensor_lift(P, extra_f2=collapse)
    _check_pair_bijection(lam)
    return LiftResult(lift, lam, "wlum", _descriptor(counts))


def grs_lift(P: Pasture, *, max_fundamental: int = 512) -> LiftResult:
    """The lift presented by one generator t_a per fundamental element a.

    Relations, with F the set of fundamental elements of P:

      G1  1 + 1 = 0 when -1 = 1 in P
      G2  t_a * t_{1/a} = 1
      G3  t_a + t_b - 1 = 0 for every fundamental pair (a, b)
      G4  t_a t_b t_c = -1 whenever (a, 1/b) is a fundamental pair and
          c = -1/(ab)
      G5  t_a t_b t_c = 1 for every unordered triple (with repetition) from
          F whose product is 1

    lambda sends t_a to a and restricts to a bijection on fundamental
    elements.
    """
    g = P.units
    pairs = fundamental_pairs(P)
    F = sorted({a for a, _ in pairs}, key=g.key)
    if len(F) > max_fundamental:
        raise NotFinitary(
            f"{len(F)} fundamental elements exceed the cap of "
            f"{max_fundamental}")
    index = {a: i for i, a in enumerate(F)}
    n = len(F)
    ambient_units = AbelianGroup((2,), n, (1,) + (0,) * n)
    ambient = Pasture(ambient_units, frozenset())

    def t(a, power=1):
        coords = [0] * (n + 1)
        coords[1 + index[a]] = power
        return unit(coords)

    def t_word(*elts):
        coords = [0] * (n + 1)
        for a in elts:
            coords[1 + index[a]] += 1
        return unit(coords)

    one = ambient.one()
    meps = ambient.minus_one()
    relations = []
    idents = []
    if g.epsilon == g.identity():
        relations.append((one, one, ZERO))
    for a, b in sorted(pairs, key=lambda p: (g.key(p[0]), g.key(p[1]))):
        relations.append((t(a), t(b), meps))                       # G3
        binv = g.inv(b)
        c = g.mul(g.epsilon, g.inv(g.mul(a, binv)))
        assert binv in index and c in index, \
            "fundamental elements are not closed under the pair relations"
        idents.append((t_word(a, binv, c), meps))                  # G4
    for a in F:
        ainv = g.inv(a)
        assert ainv in index
        idents.append((t_word(a, ainv), one))                      # G2
    for a, b, c in itertools.combinations_with_replacement(F, 3):
        if g.mul(g.mul(a, b), c) == g.identity():
            idents.append((t_word(a, b, c), one))                  # G5
    res = quotient_full(ambient, relations, idents)
    lift = res.pasture
    gen_images = (g.epsilon,) + tuple(F)
    rows = tuple(evaluate_word(g, gen_images, w) for w in res.sections)
    lam = make(lift, P, rows)
    lifted_F = {a for a, _ in fundamental_pairs(lift)}
    mapped = {lam.unit_map(a) for a in lifted_F}
    assert len(mapped) == len(lifted_F) == len(F) and mapped == set(F), \
        "lambda is not a bijection on fundamental elements"
    return LiftResult(lift, lam, "grs", None)


def lift_descriptor_iso(L1: LiftResult, L2: LiftResult) -> bool:
    """Whether two ternary/WLUM lifts are isomorphic, decided by their
    tensor factor descriptors (complete for these kinds)."""
    for L in (L1, L2):
        if L.kind not in ("ternary", "wlum"):
            raise KindMismatch(
                f"descriptor comparison needs ternary or WLUM lifts, "
                f"got {L.kind}")
    if L1.kind != L2.kind:
        raise KindMismatch("cannot compare lifts of different kinds")
    return L1.factor_descriptor == L2.factor_descriptor
