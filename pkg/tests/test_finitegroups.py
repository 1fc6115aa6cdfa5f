import pytest

from charsheaf import finitegroups as fg


GROUPS = {
    "Z4": (fg.cyclic(4), 4, 4),
    "S3": (fg.symmetric(3), 6, 3),
    "S4": (fg.symmetric(4), 24, 5),
    "A4": (fg.alternating(4), 12, 4),
    "D8": (fg.dihedral8(), 8, 5),
    "Q8": (fg.quaternion8(), 8, 5),
    "1": (fg.trivial_group(), 1, 1),
}


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_orders_and_class_counts(name):
    g, order, n_classes = GROUPS[name]
    assert g.order == order
    assert len(g.conjugacy_classes()) == n_classes


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_group_axioms(name):
    g = GROUPS[name][0]
    n = len(g)
    e = g.identity
    for a in range(n):
        assert g.mul[a][e] == a == g.mul[e][a]
        assert g.mul[a][g.inv[a]] == e
        for b in range(n):
            for c in range(n):
                assert g.mul[g.mul[a][b]][c] == g.mul[a][g.mul[b][c]]


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_class_equation(name):
    g = GROUPS[name][0]
    for cl in g.conjugacy_classes():
        assert len(cl) * len(g.centralizer(cl[0])) == g.order


def test_labels():
    d = fg.dihedral8()
    assert sorted(d.labels) == sorted(["1", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"])
    q = fg.quaternion8()
    i = q.labels.index("i")
    assert q.labels[q.mul[i][i]] == "-1"
    assert fg.cycle_label((1, 2, 0)) == "(123)"


def test_element_orders():
    q = fg.quaternion8()
    assert sorted(q.element_order(x) for x in range(8)) == [1, 2, 4, 4, 4, 4, 4, 4]


def test_twisted_classes_identity_equals_conjugacy():
    s = fg.symmetric(3)
    assert s.twisted_classes(fg.identity_automorphism(s)) == s.conjugacy_classes()


def test_twisted_classes_by_inner_automorphism_match_in_count():
    # twisting by an inner automorphism only translates the classes
    s = fg.symmetric(4)
    t = s.index[(1, 0, 2, 3)]
    assert len(s.twisted_classes(fg.inner_automorphism(s, t))) == len(s.conjugacy_classes())


def test_automorphism_checks():
    z = fg.cyclic(4)
    assert z.is_automorphism(fg.automorphism_from_map(z, lambda k: (-k) % 4))
    with pytest.raises(ValueError):
        fg.automorphism_from_map(z, lambda k: (2 * k) % 4)
    assert not z.is_automorphism([0, 1, 1, 3])


def test_hom_from_generators():
    s = fg.symmetric(3)
    a = s.index[(1, 0, 2)]
    b = s.index[(0, 2, 1)]
    perm = s.hom_from_generators([a, b], [b, a])
    assert perm is not None and s.is_automorphism(perm)
    # (12) has order 2, (123) order 3; a map sending an involution to a 3-cycle is no hom
    c = s.index[(1, 2, 0)]
    assert s.hom_from_generators([a, b], [c, a]) is None


def test_closure_bound():
    with pytest.raises(ValueError):
        fg.FiniteGroup.generate([1], lambda x, y: x + y, bound=50)
