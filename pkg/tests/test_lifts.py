import pytest

from pastures.hexagons import fundamental_pairs, hexagons
from pastures.lifts import (HexagonNotOfPasture, KindMismatch, NotFinitary,
                            binary_lift, grs_lift, hexagon_lift,
                            lift_descriptor_iso, ternary_lift, wlum_lift)
from pastures.morphisms import is_isomorphism, iso_check
from pastures.pasture import finite_field, named, product
from pastures.tables import LIFT_TABLE, WLUM_TABLE


def test_binary_lift_cases():
    res = binary_lift(finite_field(2))
    assert res.lift.label == "F2"
    assert res.kind == "binary"
    res = binary_lift(finite_field(4))
    assert res.lift.label == "F2"       # char 2: -1 = 1
    res = binary_lift(finite_field(5))
    assert res.lift.label == "F1pm"
    assert res.lam.apply_unit((1,)) == (2,)


def test_hexagon_lift_models():
    F7 = finite_field(7)
    hx, dy = hexagons(F7)
    assert hx.kind == "hexagonal" and dy.kind == "dyadic"
    res = hexagon_lift(F7, hx)
    assert res.lift.units.torsion == (6,)           # model H
    res = hexagon_lift(F7, dy)
    assert res.lift.units.torsion == (2,)           # model D
    assert res.lift.units.free_rank == 1
    # the morphism hits the hexagon's pairs
    assert is_isomorphism(res.lam) is False


def test_hexagon_lift_rejects_foreign_hexagon():
    F7 = finite_field(7)
    F13 = finite_field(13)
    h = hexagons(F7)[0]
    with pytest.raises(HexagonNotOfPasture):
        hexagon_lift(F13, h)


def test_ternary_descriptors_match_table():
    for name, want in LIFT_TABLE.items():
        P = finite_field(int(name[1:])) if name[1:].isdigit() else named(name)
        res = ternary_lift(P)
        assert res.kind == "ternary"
        for factor, count in res.factor_descriptor.items():
            assert count == want.get(factor, 0), (name, factor)


def test_wlum_descriptors():
    for name, want in WLUM_TABLE.items():
        res = wlum_lift(finite_field(int(name[1:])))
        assert res.kind == "wlum"
        for factor, count in res.factor_descriptor.items():
            assert count == want.get(factor, 0), (name, factor)
    # wlum only differs from ternary when -1 = 1
    res = wlum_lift(finite_field(5))
    assert res.factor_descriptor["F2"] == 0
    assert res.factor_descriptor["D"] == 1


def test_lift_of_pasture_without_hexagons():
    res = ternary_lift(named("F1pm"))
    assert res.lift.label == "F1pm"
    assert sum(res.factor_descriptor.values()) == 0
    res = wlum_lift(finite_field(2))
    assert res.factor_descriptor["F2"] == 1


def test_lambda_restricts_to_pair_bijection():
    P = finite_field(9)
    res = ternary_lift(P)
    lam = res.lam
    down = {tuple(map(lam.apply_unit, p)) for p in
            fundamental_pairs(res.lift)}
    assert down == set(fundamental_pairs(P))
    assert len(fundamental_pairs(res.lift)) == len(fundamental_pairs(P))


def test_grs_small_cases():
    assert bool(iso_check(grs_lift(finite_field(5)).lift, finite_field(5)))
    assert bool(iso_check(grs_lift(named("K")).lift, named("K")))
    res = grs_lift(product(finite_field(4), finite_field(5)))
    assert bool(iso_check(res.lift, named("G")))
    assert res.kind == "grs"


def test_grs_guard():
    with pytest.raises(NotFinitary):
        grs_lift(finite_field(7), max_fundamental=1)


def test_idempotence_spot_checks():
    for P in (finite_field(7), named("S"), product(named("S"), named("S"))):
        for fn in (ternary_lift, wlum_lift, grs_lift):
            relift = fn(fn(P).lift)
            assert is_isomorphism(relift.lam), (P.label, fn.__name__)


def test_descriptor_iso():
    L1 = ternary_lift(finite_field(8))
    L2 = ternary_lift(product(finite_field(4), finite_field(5)))
    assert lift_descriptor_iso(L1, L2)      # both are U
    L3 = ternary_lift(finite_field(5))
    assert not lift_descriptor_iso(L1, L3)
    with pytest.raises(KindMismatch):
        lift_descriptor_iso(L1, grs_lift(finite_field(5)))
