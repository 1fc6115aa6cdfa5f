"""Case tables: Springer pairs, component groups, coset character tables, Y functions."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy

from . import finitegroups as fg
from .exactfield import MatrixRF, QuadRational, RatFunc

COMPONENT_KINDS = ("trivial", "Z2", "Z3", "Z4", "S3", "D8")
F_ACTIONS = ("identity", "swap")
EXPECTED_F_CLASS_COUNT = {
    ("trivial", "identity"): 1,
    ("Z2", "identity"): 2,
    ("Z3", "identity"): 3,
    ("Z4", "identity"): 4,
    ("S3", "identity"): 3,
    ("D8", "swap"): 3,
}


def _d8_swap(e):
    # r -> r, s -> r s : fixes the kernel <r> and exchanges <r^2, s> with <r^2, rs>
    k, f = e
    return ((k + f) % 4, f)


@lru_cache(maxsize=None)
def _concrete(kind):
    if kind == "trivial":
        return fg.trivial_group()
    if kind == "Z2":
        return fg.cyclic(2)
    if kind == "Z3":
        return fg.cyclic(3)
    if kind == "Z4":
        return fg.cyclic(4)
    if kind == "S3":
        return fg.symmetric(3)
    if kind == "D8":
        return fg.dihedral8()
    raise ValueError("unknown component group %r" % (kind,))


def _cyclic_chars(n, names):
    zeta = sympy.exp(2 * sympy.pi * sympy.I / n)
    return {name: [sympy.nsimplify(sympy.expand_complex(zeta ** (j * k))) for k in range(n)]
            for j, name in enumerate(names)}


@lru_cache(maxsize=None)
def _character_table(kind):
    """Irreducible characters as {label: values per element index}, exact."""
    g = _concrete(kind)
    if kind == "trivial":
        return {"1": [sympy.Integer(1)]}
    if kind == "Z2":
        return {"1": [sympy.Integer(1)] * 2, "epsilon": [sympy.Integer(1), sympy.Integer(-1)]}
    if kind == "Z3":
        return _cyclic_chars(3, ["1", "omega", "omega2"])
    if kind == "Z4":
        return _cyclic_chars(4, ["1", "i", "-1", "-i"])
    if kind == "S3":
        table = {"1": [], "sign": [], "theta": []}
        for p in g.elements:
            fixed = sum(1 for i in range(3) if p[i] == i)
            moved = 3 - fixed
            sign = -1 if moved == 2 else 1
            table["1"].append(sympy.Integer(1))
            table["sign"].append(sympy.Integer(sign))
            table["theta"].append(sympy.Integer(fixed - 1))
        return table
    if kind == "D8":
        table = {"1": [], "sign": [], "epsilon'": [], "epsilon''": [], "chi": []}
        for k, f in g.elements:
            table["1"].append(sympy.Integer(1))
            # kernel <r>
            table["sign"].append(sympy.Integer(-1 if f else 1))
            # kernels <r^2, s> and <r^2, rs>
            table["epsilon'"].append(sympy.Integer((-1) ** k))
            table["epsilon''"].append(sympy.Integer((-1) ** (k + f)))
            table["chi"].append(sympy.Integer(0 if (f or k % 2) else (2 if k == 0 else -2)))
        return table
    raise ValueError("unknown component group %r" % (kind,))


@dataclass(frozen=True)
class ComponentGroup:
    kind: str
    f_action: str = "identity"

    def __post_init__(self):
        if self.kind not in COMPONENT_KINDS:
            raise ValueError("unknown component group %r" % (self.kind,))
        if self.f_action not in F_ACTIONS:
            raise ValueError("unknown F-action %r" % (self.f_action,))
        if self.f_action == "swap" and self.kind != "D8":
            raise ValueError("the swap action is only defined on D8")

    @property
    def group(self):
        return _concrete(self.kind)

    @property
    def automorphism(self):
        g = self.group
        if self.f_action == "identity":
            return fg.identity_automorphism(g)
        return fg.automorphism_from_map(g, _d8_swap)

    def characters(self):
        return _character_table(self.kind)


def component_f_classes(g):
    """F-classes of A(u) as (representative label, size), identity class first.

    Classes are ordered by the order of their representative, then by label.
    """
    grp = g.group
    classes = grp.twisted_classes(g.automorphism)
    out = []
    for cl in classes:
        rep = min(cl, key=lambda x: (grp.element_order(x), grp.labels[x]))
        out.append((rep, len(cl)))
    out.sort(key=lambda rs: (rs[0] != grp.identity, grp.element_order(rs[0]), grp.labels[rs[0]]))
    return [(grp.labels[rep], size) for rep, size in out]


def _class_reps(g):
    grp = g.group
    by_label = {lab: i for i, lab in enumerate(grp.labels)}
    return [by_label[lab] for lab, _ in component_f_classes(g)]


def is_f_stable(g, char):
    values = g.characters()[char]
    auto = g.automorphism
    return all(sympy.simplify(values[auto[x]] - values[x]) == 0 for x in range(len(values)))


SELECTORS = {"trivial": 1, "sign": -1}


def extension_values(g, char, choice, d):
    """Values phi~(aF) on the F-classes of ``g`` for the extension picked by ``choice``.

    ``choice`` is "trivial" (F acts by 1) or "sign" (F acts by -1), i.e.
    phi~(aF) = zeta * phi(a) with zeta = +1 or -1.
    """
    chars = g.characters()
    if char not in chars:
        raise ValueError("%s has no character %r" % (g.kind, char))
    if not is_f_stable(g, char):
        raise ValueError("character %r of %s is not F-stable" % (char, g.kind))
    if choice not in SELECTORS:
        raise ValueError("unknown extension selector %r" % (choice,))
    zeta = SELECTORS[choice]
    out = []
    for rep in _class_reps(g):
        v = sympy.nsimplify(zeta * chars[char][rep])
        if not v.is_rational:
            raise ValueError("extension value %s is not in Q(sqrt%d)" % (v, d))
        out.append(QuadRational(Fraction(int(v.p), int(v.q)), 0, d))
    return out


@dataclass
class SpringerPair:
    class_label: str
    component_group: ComponentGroup
    character_label: str
    weyl_char_label: str
    d_u: int
    order_index: int
    block_id: int

    @property
    def key(self):
        return (self.class_label, self.character_label)


@dataclass
class ExtensionChoice:
    class_label: str
    character_label: str
    selector: str
    values: list = field(default_factory=list)


@dataclass
class UnipotentLayout:
    columns: list
    blocks: list  # [(class_label, [column labels in F-class order])]

    def assignment(self):
        out = {}
        for label, cols in self.blocks:
            for k, c in enumerate(cols):
                out[c] = (label, k)
        return out

    def relabeled(self, mapping):
        return UnipotentLayout([mapping[c] for c in self.columns],
                               [(lab, [mapping[c] for c in cols]) for lab, cols in self.blocks])


@dataclass
class CosetCharTable:
    rows: list
    columns: list
    values: list  # rows x columns of QuadRational
    torus_orders: list

    def row(self, label):
        return self.values[self.rows.index(label)]


def validate_layout(layout, pairs):
    groups = {}
    for p in pairs:
        groups.setdefault(p.class_label, p.component_group)
    seen = [c for _, cols in layout.blocks for c in cols]
    if seen != list(layout.columns):
        raise ValueError("layout blocks do not list the columns consecutively in order")
    if [lab for lab, _ in layout.blocks] != list(dict.fromkeys(p.class_label for p in pairs)):
        raise ValueError("layout blocks do not follow the Springer order of classes")
    for label, cols in layout.blocks:
        n = len(component_f_classes(groups[label]))
        if len(cols) != n:
            raise ValueError("class %s has %d F-classes but %d layout columns" % (label, n, len(cols)))


def build_Y_table(pairs, layout, choices):
    """Rows: pairs in order; columns: split classes; the value phi~(aF) on the pair's block."""
    if not pairs:
        raise ValueError("no Springer pairs")
    d = choices[0].values[0].d if choices and choices[0].values else 1
    by_key = {(c.class_label, c.character_label): c for c in choices}
    if set(by_key) != {p.key for p in pairs}:
        raise ValueError("layout/choices mismatch: extension choices do not cover the Springer pairs")
    block_cols = dict((lab, cols) for lab, cols in layout.blocks)
    col_index = {c: j for j, c in enumerate(layout.columns)}
    zero = RatFunc.const(0, d)
    rows = []
    for p in pairs:
        row = [zero] * len(layout.columns)
        cols = block_cols.get(p.class_label)
        if cols is None:
            raise ValueError("layout/choices mismatch: no columns for class %s" % p.class_label)
        vals = by_key[p.key].values
        if len(vals) != len(cols):
            raise ValueError("layout/choices mismatch at %s: %d values for %d columns"
                             % (p.class_label, len(vals), len(cols)))
        for c, v in zip(cols, vals):
            row[col_index[c]] = RatFunc.const(v, d)
        rows.append(row)
    return MatrixRF.from_rows(rows, d)


@dataclass
class OrthogonalityReport:
    gram: list
    defect: list
    ok: bool


def coset_orthogonality_check(table, sizes, weyl_order):
    """(1/|W|) sum_i size_i rho~(w_i F) rho~'(w_i F) against the identity."""
    n = len(table.rows)
    gram, defect = [], []
    ok = True
    for a in range(n):
        grow, drow = [], []
        for b in range(n):
            acc = 0
            for s, x, y in zip(sizes, table.values[a], table.values[b]):
                acc = x * y * s + acc
            val = acc * Fraction(1, weyl_order)
            grow.append(val)
            dv = val - (1 if a == b else 0)
            drow.append(dv)
            if not dv.is_zero():
                ok = False
        gram.append(grow)
        defect.append(drow)
    return OrthogonalityReport(gram, defect, ok)


def derive_sizes_from_columns(table, weyl_order):
    """size_i = |W| / sum_rho rho~(w_i F)^2 (column orthogonality)."""
    sizes = []
    for j, col in enumerate(table.columns):
        sq = sum((table.values[i][j] * table.values[i][j] for i in range(len(table.rows))),
                 QuadRational(0, 0, table.values[0][j].d))
        if sq.b != 0 or sq.a == 0:
            raise ValueError("column %s: squared norm %s is not a nonzero rational" % (col, sq))
        s = Fraction(weyl_order) / sq.a
        if s.denominator != 1:
            raise ValueError("column %s: derived class size %s is not an integer" % (col, s))
        sizes.append(int(s))
    return sizes
