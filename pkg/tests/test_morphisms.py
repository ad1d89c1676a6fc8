import pytest

from pastures.morphisms import (EpsilonViolation, GroupHomViolation, Iso,
                                NotIso, NullsetViolation, Unknown, compose,
                                hom_set, identity_morphism, is_isomorphism,
                                iso_check, make)
from pastures.pasture import finite_field, free_algebra, named, product, \
    quotient, tensor, unit


def test_make_validates_nullset():
    H = named("H")
    F7 = finite_field(7)
    # zeta -> 3 and zeta -> 5 are the two embeddings
    m = make(H, F7, ((1,),))
    assert m.apply_unit((1,)) == (1,)
    with pytest.raises(NullsetViolation):
        make(H, F7, ((3,),))        # 1 + zeta^2 + zeta^4 -> 1 + 1 + 1 != 0
    with pytest.raises(EpsilonViolation):
        make(H, F7, ((2,),))        # zeta^2 has trivial eps component
    with pytest.raises(GroupHomViolation):
        make(H, finite_field(5), ((1,),))   # no order-6 image in C4


def test_make_validates_epsilon():
    F3 = named("F3")
    # killing -1 lands on 1 != -1 in F5
    with pytest.raises(EpsilonViolation):
        make(F3, finite_field(5), ((0,),))
    # in F4 the epsilon condition is vacuous but 1+1+1 != 0
    with pytest.raises(NullsetViolation):
        make(F3, finite_field(4), ((0,),))


def test_identity_and_compose():
    F9 = finite_field(9)
    i = identity_morphism(F9)
    assert is_isomorphism(i)
    H = named("H")
    f = make(H, finite_field(7), ((1,),))
    assert compose(identity_morphism(finite_field(7)), f).images() == \
        f.images()
    g = make(named("F1pm"), H, ((3,),))
    fg = compose(f, g)
    assert fg.source is g.source
    assert fg.apply_unit((1,)) == (3,)  # -1 goes to -1


def test_hom_set_counts():
    H = named("H")
    assert len(hom_set(H, finite_field(4))) == 2
    assert len(hom_set(H, finite_field(7))) == 2
    assert len(hom_set(H, finite_field(5))) == 0
    assert len(hom_set(named("F3"), finite_field(4))) == 0
    assert len(hom_set(named("F3"), finite_field(3))) == 1
    # every pasture receives exactly one morphism from F1pm (eps -> eps)
    for target in (finite_field(5), named("H"), named("S")):
        assert len(hom_set(named("F1pm"), target)) == 1


def test_hom_set_infinite_source_torsion_only_images():
    # D has a free generator; homs into a finite target are still finite
    # because the generator image ranges over the whole finite group
    D = named("D")
    homs = hom_set(D, finite_field(7))
    # z -> 2, 4, or the other dyadic support points; check they all validate
    assert homs
    for m in homs:
        assert m.apply_unit(D.units.epsilon) == (3,)


def test_iso_check_finite():
    assert isinstance(iso_check(finite_field(4), finite_field(4)), Iso)
    res = iso_check(finite_field(4), finite_field(5))
    assert isinstance(res, NotIso)
    assert bool(res) is False
    # same unit group, different nullsets: F1pm vs F3
    res = iso_check(named("F1pm"), named("F3"))
    assert isinstance(res, NotIso)


def test_iso_check_rank_one():
    D = named("D")
    P = free_algebra(named("F1pm"), ("z",))
    z = unit((0, 1))
    Q = quotient(P, [(z, z, P.minus_one())])     # z + z - 1 = 0
    assert isinstance(iso_check(Q, D), Iso)
    assert isinstance(iso_check(D, named("G")), NotIso)


def test_iso_check_unknown_at_rank_two():
    U = named("U")
    T = tensor(named("G"), free_algebra(named("F1pm"), ("t",)))
    res = iso_check(U, T)
    assert isinstance(res, Unknown)
    assert bool(res) is False


def test_is_isomorphism_detects_non_surjective():
    H = named("H")
    m = make(named("F1pm"), H, ((3,),))
    assert not is_isomorphism(m)


def test_product_projections_are_morphisms():
    F4, F5 = finite_field(4), finite_field(5)
    R = product(F4, F5)
    # the projection coordinates: a product unit maps onto each factor
    homs4 = hom_set(R, F4)
    homs5 = hom_set(R, F5)
    assert homs4 and homs5
