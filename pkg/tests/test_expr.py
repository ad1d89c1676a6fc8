import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pastures.expr import (ExprError, Fq, Lift, Name, Presentation, Product,
                           Tensor, evaluate_text, parse, pasture_of,
                           print_expr)
from pastures.gf import NotPrimePower
from pastures.morphisms import hom_set, iso_check
from pastures.pasture import named

atoms = st.one_of(
    st.sampled_from(["F1pm", "K", "S", "W", "U", "D", "H", "G"]).map(Name),
    st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 27]).map(Fq),
)


def exprs(children):
    return st.one_of(
        st.tuples(children, children).map(lambda t: Product(*t)),
        st.tuples(children, children).map(lambda t: Tensor(*t)),
        st.tuples(st.sampled_from(["binary", "ternary", "wlum", "grs"]),
                  children).map(lambda t: Lift(*t)),
    )


ast = st.recursive(atoms, exprs, max_leaves=12)


@given(ast)
@settings(max_examples=300, deadline=None)
def test_parse_print_roundtrip(tree):
    assert parse(print_expr(tree)) == tree


def test_grammar_examples():
    assert parse("F4 x F5") == Product(Fq(4), Fq(5))
    assert parse("Lg(F4 x F5)") == Lift("grs", Product(Fq(4), Fq(5)))
    # ox binds tighter than x, both left-associative; F<digits> is always
    # a finite field atom, so F3 here means GF(3)
    assert parse("F3 x F4 ox F5") == Product(Fq(3), Tensor(Fq(4), Fq(5)))
    assert parse("K x S x W") == Product(Product(Name("K"), Name("S")),
                                         Name("W"))
    assert parse("D ox H ox K") == Tensor(Tensor(Name("D"), Name("H")),
                                          Name("K"))
    assert parse(" F4   x\tF5 ") == Product(Fq(4), Fq(5))


def test_presentation_parses():
    tree = parse("F1pm<x,y>//(x+y-1)")
    assert isinstance(tree, Presentation)
    assert tree.names == ("x", "y")
    assert len(tree.relations) == 1
    # evaluates to the near-regular partial field
    assert bool(iso_check(pasture_of("F1pm<x,y>//(x+y-1)"), named("U")))
    assert bool(iso_check(pasture_of("F1pm<z>//(z+z-1)"), named("D")))
    # z + 1/z - 1 imposes only a null relation, so the result keeps a free
    # generator; it covers the hexagonal pasture without being equal to it
    Q = pasture_of("F1pm<z>//(z+z^-1-1)")
    assert (Q.units.torsion, Q.units.free_rank) == ((2,), 1)
    assert not bool(iso_check(Q, named("H")))
    assert hom_set(Q, named("H"))
    # two relations, two null orbits; the unit group is untouched
    P = pasture_of("F1pm<a,b>//(a+b-1; a+a-1)")
    assert (P.units.torsion, P.units.free_rank) == ((2,), 2)
    assert len(P.null_orbits) == 2


def test_syntax_errors_have_positions():
    for text, pos in [("F4xF5", 0), ("F4 x", 4), ("x F4", 0),
                      ("F1pm<x,>//(x+x-1)", 7), ("Lt(F4", 5),
                      ("F1pm<x>//(x)", 11), ("F1pm<x>//(x+x+x+x)", 17),
                      ("", 0)]:
        with pytest.raises(ExprError) as exc:
            parse(text)
        assert exc.value.position == pos, text


def test_unknown_names_rejected():
    with pytest.raises(ExprError):
        parse("F4 x Q7")
    with pytest.raises(ExprError):
        parse("F1pm<x>//(x+y-1)")      # y never declared


def test_evaluate_errors():
    with pytest.raises(NotPrimePower):
        evaluate_text("F6")
    with pytest.raises(NotPrimePower):
        evaluate_text("Lt(F6)")


def test_lift_expressions_evaluate():
    P = pasture_of("Lt(F9)")
    assert P.units.free_rank == 2
    assert P.units.torsion == (2,)
    assert bool(iso_check(pasture_of("Lg(F4 x F5)"), named("G")))


def test_labels_round_trip_through_printer():
    for text in ("F4 x F5", "D ox H", "Lt(F9)", "F1pm<x,y>//(x+y-1)",
                 "K x (S x W)", "(F4 x F5) ox D"):
        P = pasture_of(text)
        Q = pasture_of(P.label)
        assert P.descriptor() == Q.descriptor()


def test_evaluate_deterministic():
    a = json.dumps(pasture_of("Lt(F4 x F5)").descriptor(), sort_keys=True)
    b = json.dumps(pasture_of("Lt(F4 x F5)").descriptor(), sort_keys=True)
    assert a == b
