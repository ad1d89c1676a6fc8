"""Frozen reference data for the verification suites.

Hexagon lists for small finite fields and named pastures, the ternary/WLUM
lift table, the fiber shapes of hexagons in products, and the list of
triples (q, p1, p2) of prime powers with q - 2 = (p1-2)(p2-2) and 3 not
dividing q, for which the rescaling class spaces satisfy
X_M(F_q) = X_M(F_p1) x X_M(F_p2).
"""

from __future__ import annotations

from .gf import field

# Hexagon lists for F_q, 2 <= q <= 13: (kind, mu, support).  Supports over
# prime fields are residues; over prime powers they are powers of the
# documented generator alpha, a root of the given polynomial (coefficients
# ascending, reduced mod p), resolved to the canonical field encoding at
# check time.
HEX_LISTS = {
    2: (),
    3: (("ternary", 1, ("res", (2,))),),
    4: (("hexagonal", 2, ("pow", (1, 1, 1), (1, 2))),),          # T^2+T-1
    5: (("dyadic", 3, ("res", (2, 3, 4))),),
    7: (("dyadic", 3, ("res", (2, 4, 6))),
        ("hexagonal", 2, ("res", (3, 5)))),
    8: (("near-regular", 6, ("pow", (1, 1, 0, 1),
                             (1, 2, 3, 4, 5, 6))),),             # T^3+T-1
    9: (("ternary", 1, ("res", (2,))),
        ("near-regular", 6, ("pow", (2, 1, 1),
                             (1, 2, 3, 5, 6, 7)))),              # T^2+T-1
    11: (("dyadic", 3, ("res", (2, 6, 10))),
         ("near-regular", 6, ("res", (3, 4, 5, 7, 8, 9)))),
    13: (("dyadic", 3, ("res", (2, 7, 12))),
         ("hexagonal", 2, ("res", (4, 10))),
         ("near-regular", 6, ("res", (3, 5, 6, 8, 9, 11)))),
}

# Hexagon lists for the named pastures, supports in canonical unit
# coordinates.
NAMED_HEX = {
    "F1pm": (),
    "F2": (),
    "K": (("ternary", 1, ((),)),),
    "S": (("dyadic", 3, ((0,), (1,))),),
    "W": (("dyadic", 3, ((0,), (1,))),
          ("ternary", 1, ((1,),))),
    "F3": (("ternary", 1, ((1,),)),),
    "U": (("near-regular", 6, ((0, 1, 0), (0, 0, 1), (0, -1, 0),
                               (0, 0, -1), (1, 1, -1), (1, -1, 1))),),
    "D": (("dyadic", 3, ((0, 1), (0, -1), (1, 0))),),
    "H": (("hexagonal", 2, ((1,), (5,))),),
    "G": (("near-regular", 6, ((0, 1), (0, 2), (0, -1),
                               (0, -2), (1, 1), (1, -1))),),
}


def resolve_support(q, entry):
    """A golden support entry as a set of canonical field encodings."""
    tag = entry[0]
    if tag == "res":
        return frozenset(entry[1])
    _, coeffs, powers = entry
    F = field(q)
    roots = [e for e in range(1, q) if _poly(F, coeffs, e) == 0]
    if not roots:
        raise ValueError(f"golden polynomial {coeffs} has no root in F{q}")
    alpha = min(roots)
    return frozenset(F.power(alpha, k) for k in powers)


def _poly(F, coeffs, e):
    acc = 0
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, e), c % F.p)
    return acc


# Ternary lift factor counts (model pastures per hexagon), and the WLUM
# instances that differ from the ternary ones by an F2 factor.
LIFT_TABLE = {
    "F2": {},
    "F4": {"H": 1},
    "F5": {"D": 1},
    "F7": {"D": 1, "H": 1},
    "F8": {"U": 1},
    "F9": {"F3": 1, "U": 1},
    "F11": {"D": 1, "U": 1},
    "F13": {"D": 1, "H": 1, "U": 1},
    "G": {"U": 1},
    "S": {"D": 1},
    "W": {"F3": 1, "D": 1},
    "K": {"F3": 1},
}

WLUM_TABLE = {
    "F4": {"H": 1, "F2": 1},
    "F8": {"U": 1, "F2": 1},
}

# Orbit lengths of the hexagons in a product lying over a pair of factor
# hexagons with orbit lengths (mu1, mu2); symmetric in the two entries.
PRODUCT_FIBERS = {
    (1, 1): (1,),
    (1, 2): (2,),
    (1, 3): (3,),
    (1, 6): (6,),
    (2, 2): (2, 2),
    (2, 3): (6,),
    (2, 6): (6, 6),
    (3, 3): (3, 6),
    (3, 6): (6, 6, 6),
    (6, 6): (6, 6, 6, 6, 6, 6),
}


def fiber_shape(mu1, mu2):
    return PRODUCT_FIBERS[(mu1, mu2) if mu1 <= mu2 else (mu2, mu1)]


def expected_census(q: int) -> dict:
    """Hexagon counts of F_q by type from the congruence rules."""
    return {
        "ternary": 1 if q % 3 == 0 else 0,
        "hexagonal": 1 if (q - 1) % 3 == 0 else 0,
        "dyadic": 1 if (q % 2 == 1 and q % 3 != 0) else 0,
        "near-regular": (q - 2) // 6,
    }


# Triples (q, p1, p2) with q, p1, p2 prime powers >= 4, 3 not dividing q and
# q - 2 = (p1-2)(p2-2); two typos in the source list are repaired: (51,5,19)
# is (53,5,19), and the entry (32,5,11), whose arithmetic fails outright, is
# replaced by (107,5,37), the smallest valid triple missing from the list.
ZAGIER_TRIPLES = (
    (8, 4, 5), (11, 5, 5), (16, 4, 9), (17, 5, 7), (23, 5, 9),
    (29, 5, 11), (32, 4, 17), (32, 7, 8), (37, 7, 9), (47, 5, 17),
    (47, 7, 11), (53, 5, 19), (71, 5, 25), (79, 9, 13), (83, 5, 29),
    (83, 11, 11), (89, 5, 31), (101, 11, 13), (107, 5, 37), (121, 9, 19),
    (125, 5, 43), (128, 8, 23), (128, 11, 16), (137, 5, 47), (137, 7, 29),
    (137, 11, 17), (149, 9, 23), (163, 9, 25), (167, 13, 17), (173, 5, 59),
)

# Triples whose lift-descriptor identity the verify suite checks at the
# pasture level (finite-field triples with q <= 64).
DESCRIPTOR_CHECK_MAX_Q = 64
