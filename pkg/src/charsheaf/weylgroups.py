"""Weyl groups of B2, G2, F4 as integer matrix groups, with the diagram twist.

Elements act on the root lattice in the simple-root basis; a matrix is a
tuple of row tuples so it can be hashed.  The twist is conjugation by the
lattice matrix M of the special isogeny (M @ M = delta * I).
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .exactfield import Poly, QuadRational


def mat_mul(a, b):
    n, m = len(a), len(b[0])
    inner = len(b)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(m))
        for i in range(n))


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _inverse_scaled(m, scale):
    # M^-1 = M / delta, exact because M @ M = delta * I
    return tuple(tuple(Fraction(x, scale) for x in row) for row in m)


@dataclass(frozen=True)
class RootDatum:
    name: str
    cartan: tuple
    twist_matrix: tuple
    twist_scale: int

    @property
    def rank(self):
        return len(self.cartan)

    @property
    def d(self):
        return self.twist_scale

    def validate(self):
        n = self.rank
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise ValueError("%s: Cartan diagonal entry %d is not 2" % (self.name, i))
            for j in range(n):
                if i != j and self.cartan[i][j] > 0:
                    raise ValueError("%s: positive off-diagonal Cartan entry" % self.name)
                if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0):
                    raise ValueError("%s: Cartan matrix zero pattern is not symmetric" % self.name)
        m2 = mat_mul(self.twist_matrix, self.twist_matrix)
        if m2 != tuple(tuple(self.twist_scale * x for x in row) for row in identity(n)):
            raise ValueError("%s: twist matrix does not square to %d*I" % (self.name, self.twist_scale))
        gens = simple_reflections(self)
        for s in gens:
            if twist_matrix_conj(self, s) not in gens:
                raise ValueError("%s: twist does not permute the simple reflections" % self.name)
        return self


def simple_reflections(datum):
    """s_i(a_j) = a_j - C[j][i] a_i, written as matrices acting on columns."""
    n = datum.rank
    gens = []
    for i in range(n):
        rows = [list(r) for r in identity(n)]
        for j in range(n):
            rows[i][j] -= datum.cartan[j][i]
        gens.append(tuple(tuple(r) for r in rows))
    return gens


def twist_matrix_conj(datum, w):
    m = datum.twist_matrix
    minv = _inverse_scaled(m, datum.twist_scale)
    out = mat_mul(mat_mul(m, w), minv)
    if any(x.denominator != 1 for row in out for x in row):
        raise ValueError("twist of an element is not integral")
    return tuple(tuple(int(x) for x in row) for row in out)


def cartan_b2():
    # a short, b long
    return RootDatum("B2", ((2, -1), (-2, 2)), ((0, 2), (1, 0)), 2)


def cartan_g2():
    # a short, b long
    return RootDatum("G2", ((2, -1), (-3, 2)), ((0, 3), (1, 0)), 3)


def cartan_f4():
    # Bourbaki labels: a1, a2 long, a3, a4 short; C[j][i] = <a_j, a_i^vee>
    cartan = (
        (2, -1, 0, 0),
        (-1, 2, -2, 0),
        (0, -1, 2, -1),
        (0, 0, -1, 2),
    )
    # short simple roots go to long ones, long ones to twice a short one:
    # a1 -> 2 a4, a2 -> 2 a3, a3 -> a2, a4 -> a1 (columns are images)
    twist = (
        (0, 0, 0, 1),
        (0, 0, 1, 0),
        (0, 2, 0, 0),
        (2, 0, 0, 0),
    )
    return RootDatum("F4", cartan, twist, 2)


ROOT_DATA = {"B2": cartan_b2, "G2": cartan_g2, "F4": cartan_f4}


def root_datum(name):
    return ROOT_DATA[name]().validate()


@dataclass
class WeylGroup:
    datum: RootDatum
    generators: list
    elements: list
    words: dict
    index: dict = field(repr=False)

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w in self.index

    def identity(self):
        return identity(self.datum.rank)

    def inverse(self, w):
        word = self.words[w]
        out = identity(self.datum.rank)
        for i in reversed(word):
            out = mat_mul(out, self.generators[i])
        return out

    def from_word(self, word):
        out = identity(self.datum.rank)
        for i in word:
            out = mat_mul(out, self.generators[i])
        return out


def generate_weyl(datum, bound=100000):
    """Breadth-first closure of the simple reflections, one word per element."""
    gens = simple_reflections(datum)
    one = identity(datum.rank)
    words = {one: ()}
    queue = deque([one])
    while queue:
        w = queue.popleft()
        for i, s in enumerate(gens):
            ws = mat_mul(w, s)
            if ws not in words:
                words[ws] = words[w] + (i,)
                if len(words) > bound:
                    raise ValueError("Weyl group closure exceeded %d elements; malformed Cartan matrix?" % bound)
                queue.append(ws)
    elements = list(words)
    return WeylGroup(datum, gens, elements, words, {w: k for k, w in enumerate(elements)})


def twist_apply(datum, w, group=None):
    out = twist_matrix_conj(datum, w)
    if group is not None and out not in group:
        raise ValueError("twisted element is not in W; wrong twist matrix")
    return out


def roots(datum, group):
    """All roots, as the W-orbit of the simple roots."""
    n = datum.rank
    simple = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    out = set()
    for w in group.elements:
        for a in simple:
            out.add(tuple(sum(w[i][k] * a[k] for k in range(n)) for i in range(n)))
    return out


@dataclass
class FClass:
    representative: tuple
    word: tuple
    size: int
    torus_order: Poly
    members: list = field(repr=False, default_factory=list)
    column_index: int = None
    column_label: str = None


def f_classes(group, twist=None):
    """Orbits of x.w = x^-1 w twist(x); generator moves suffice since they generate W."""
    datum = group.datum
    if twist is None:
        def twist(x):
            return twist_matrix_conj(datum, x)
    tgens = [twist(s) for s in group.generators]
    seen = set()
    classes = []
    for w in group.elements:
        if w in seen:
            continue
        orbit = [w]
        seen.add(w)
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for s, ts in zip(group.generators, tgens):
                y = mat_mul(mat_mul(s, x), ts)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
                    queue.append(y)
        rep = min(orbit, key=lambda e: (len(group.words[e]), group.words[e]))
        classes.append(FClass(rep, group.words[rep], len(orbit), torus_order(datum, rep), orbit))
    return classes


def _char_poly(a):
    """Coefficients e_0..e_n of det(x I - A) = sum (-1)^k e_k x^(n-k) via Faddeev-LeVerrier."""
    n = len(a)
    am = [[Fraction(x) for x in row] for row in a]
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I ; c_k = -tr(A M_k)/k
        prev = m
        m = [[sum(am[i][t] * prev[t][j] for t in range(n)) + (coeffs[-1] if i == j else 0)
              for j in range(n)] for i in range(n)]
        am_m = [[sum(am[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(am_m[i][i] for i in range(n)) / k)
    # coeffs[k] is the coefficient of x^(n-k) in det(xI - A)
    return coeffs


def torus_order(datum, w):
    """|T_w| = +-det((q/sqrt delta) M w - I), sign fixed by a positive leading coefficient."""
    n = datum.rank
    delta = datum.twist_scale
    a = mat_mul(datum.twist_matrix, w)
    c = _char_poly(a)
    # det(xA - I) = (-1)^n det(I - xA) and det(I - xA) = sum_k c[k] x^k
    coeffs = []
    for k in range(n + 1):
        # x = q / sqrt(delta): x^k = q^k * delta^(-k/2)
        ck = c[k] * (-1) ** n
        if k % 2 == 0:
            coeffs.append(QuadRational(ck / delta ** (k // 2), 0, delta))
        else:
            coeffs.append(QuadRational(0, ck / delta ** ((k + 1) // 2), delta))
    p = Poly(coeffs, delta)
    if p.lead().a < 0 or (p.lead().a == 0 and p.lead().b < 0):
        p = -p
    return p


def match_fclasses_to_columns(classes, column_torus_orders, column_labels=None):
    """Assign each F-class the table column with the same torus order."""
    if len(classes) != len(column_torus_orders):
        raise ValueError("%d F-classes but %d table columns" % (len(classes), len(column_torus_orders)))
    if len(set(column_torus_orders)) != len(column_torus_orders):
        raise ValueError("ambiguous match: duplicate torus orders among table columns")
    if len({c.torus_order for c in classes}) != len(classes):
        raise ValueError("ambiguous match: duplicate torus orders among F-classes")
    lookup = {t: i for i, t in enumerate(column_torus_orders)}
    out = [None] * len(classes)
    for c in classes:
        i = lookup.get(c.torus_order)
        if i is None:
            raise ValueError("no table column has torus order %s" % c.torus_order)
        c.column_index = i
        if column_labels is not None:
            c.column_label = column_labels[i]
        out[i] = c
    return out
