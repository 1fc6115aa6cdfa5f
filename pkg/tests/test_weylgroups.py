import pytest

from charsheaf.exactfield import parse_poly
from charsheaf.weylgroups import (RootDatum, cartan_b2, f_classes, generate_weyl,
                                  match_fclasses_to_columns, mat_mul, root_datum, roots,
                                  simple_reflections, torus_order, twist_apply)

import oracles
from oracles import same, to_sympy

ORDERS = {"B2": 8, "G2": 12, "F4": 1152}
ROOTS = {"B2": 8, "G2": 12, "F4": 48}
F_CLASS_SIZES = {"B2": [2, 2, 4], "G2": [2, 2, 2, 6],
                 "F4": [12, 12, 24, 72, 72, 96, 96, 144, 144, 192, 288]}


@pytest.fixture(scope="module")
def groups():
    return {name: generate_weyl(root_datum(name)) for name in ORDERS}


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_order_and_roots(groups, name):
    w = groups[name]
    assert w.order == ORDERS[name]
    assert len(roots(w.datum, w)) == ROOTS[name]


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_generators_are_involutions_and_words_are_consistent(groups, name):
    w = groups[name]
    one = w.identity()
    for s in w.generators:
        assert mat_mul(s, s) == one
    for e in w.elements[:: max(1, w.order // 50)]:
        assert w.from_word(w.words[e]) == e
        assert mat_mul(e, w.inverse(e)) == one


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_twist_is_an_involution_on_w(groups, name):
    w = groups[name]
    for e in w.elements:
        t = twist_apply(w.datum, e, w)
        assert twist_apply(w.datum, t, w) == e


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_f_class_sizes(groups, name):
    classes = f_classes(groups[name])
    assert sorted(c.size for c in classes) == F_CLASS_SIZES[name]
    assert sum(c.size for c in classes) == groups[name].order
    members = [m for c in classes for m in c.members]
    assert len(set(members)) == groups[name].order


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_torus_orders_against_determinant(groups, name):
    w = groups[name]
    for c in f_classes(w):
        assert same(to_sympy(c.torus_order), oracles.torus_order(w.datum, c.representative))
        # constant on the class
        for m in c.members[:: max(1, c.size // 6)]:
            assert torus_order(w.datum, m) == c.torus_order


def test_b2_identity_torus():
    w = generate_weyl(root_datum("B2"))
    assert torus_order(w.datum, w.identity()) == parse_poly("q^2-1", 2)


def test_torus_orders_are_monic_of_degree_rank(groups):
    for name, w in groups.items():
        for c in f_classes(w):
            assert c.torus_order.degree == w.datum.rank
            assert c.torus_order.lead() == 1


def test_malformed_cartan_is_rejected():
    bad = RootDatum("X", ((2, -1), (-1, 3)), ((0, 2), (1, 0)), 2)
    with pytest.raises(ValueError):
        bad.validate()
    infinite = RootDatum("X", ((2, -3), (-3, 2)), ((0, 1), (1, 0)), 1)
    with pytest.raises(ValueError):
        generate_weyl(infinite, bound=2000)


def test_bad_twist_is_rejected():
    b2 = cartan_b2()
    bad = RootDatum("B2", b2.cartan, ((0, 1), (1, 0)), 2)
    with pytest.raises(ValueError):
        bad.validate()


def test_simple_reflection_fixes_orthogonal_complement():
    d = root_datum("B2")
    s = simple_reflections(d)[0]
    # s_a(a) = -a
    assert [row[0] for row in s] == [-1, 0]


def test_matching_errors(groups):
    classes = f_classes(groups["B2"])
    tori = [c.torus_order for c in classes]
    with pytest.raises(ValueError):
        match_fclasses_to_columns(classes, tori[:2])
    with pytest.raises(ValueError):
        match_fclasses_to_columns(classes, [tori[0], tori[0], tori[1]])
    with pytest.raises(ValueError):
        match_fclasses_to_columns(classes, [tori[0], tori[1], parse_poly("q^2+1", 2)])
