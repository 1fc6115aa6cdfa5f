"""The coset construction (H x H) x| <tau> checked on finite groups, and the disconnected runs.

A finite group H with an automorphism ``auto`` stands in for G0 with F0.
The ambient group has elements (g1, g2, t), t in {0, 1}, meaning
(g1, g2) tau^t, with tau (g1, g2) tau^-1 = (g2, g1).  F acts as
F(g1, g2) = (auto g2, auto g1), F(tau) = tau.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from . import finitegroups as fg
from .cosetdata import _d8_swap
from .lusztig import run_case

MODEL_NAMES = ("z4", "s3", "d8", "q8", "a4", "sp42")


class CosetModel:

    def __init__(self, base, auto, name="", auto_name=""):
        if not base.is_automorphism(auto):
            raise ValueError("%s: %s is not an automorphism" % (name or base.name, auto_name))
        self.base = base
        self.auto = list(auto)
        self.name = name or base.name
        self.auto_name = auto_name

    @property
    def ambient_order(self):
        return 2 * len(self.base) ** 2

    def elements(self):
        n = len(self.base)
        return [(a, b, t) for t in (0, 1) for a in range(n) for b in range(n)]

    def coset(self):
        n = len(self.base)
        return [(a, b, 1) for a in range(n) for b in range(n)]

    def mul(self, x, y):
        m = self.base.mul
        a1, a2, t = x
        b1, b2, s = y
        if t:
            b1, b2 = b2, b1
        return (m[a1][b1], m[a2][b2], t ^ s)

    def inv(self, x):
        i = self.base.inv
        a, b, t = x
        if t:
            return (i[b], i[a], 1)
        return (i[a], i[b], 0)

    def one(self):
        e = self.base.identity
        return (e, e, 0)

    def tau(self):
        e = self.base.identity
        return (e, e, 1)

    def conj(self, g, x):
        return self.mul(self.mul(g, x), self.inv(g))

    def order(self, x):
        k, y = 1, x
        while y != self.one():
            y = self.mul(y, x)
            k += 1
        return k

    def f(self, x):
        """f(x) = (x, 1) tau."""
        return (x, self.base.identity, 1)

    def frobenius(self, x):
        a, b, t = x
        return (self.auto[b], self.auto[a], t)

    def _conj_gens(self):
        e = self.base.identity
        gens = [(h, e, 0) for h in range(len(self.base))]
        gens += [(e, h, 0) for h in range(len(self.base))]
        gens.append(self.tau())
        return gens

    def coset_classes(self):
        gens = self._conj_gens()
        seen = {}
        classes = []
        for y in self.coset():
            if y in seen:
                continue
            cid = len(classes)
            orbit = [y]
            seen[y] = cid
            queue = deque([y])
            while queue:
                z = queue.popleft()
                for g in gens:
                    w = self.conj(g, z)
                    if w not in seen:
                        seen[w] = cid
                        orbit.append(w)
                        queue.append(w)
            classes.append(orbit)
        return classes, seen

    def centralizer(self, x):
        return [g for g in self.elements() if self.mul(g, x) == self.mul(x, g)]


@dataclass
class ClassReport:
    model: str
    auto_name: str
    base_order: int
    ambient_order: int
    coset_class_count: int
    base_class_count: int
    lemma_ok: bool
    pairs_checked: int
    centralizer_pairs: list  # (|C_ambient(f(x))|, |C_H(x)|) per base class
    centralizer_ok: bool
    centralizer_shape_ok: bool
    order_pairs: list  # distinct (order of (x1,x2)tau, order of x1x2)
    order_ok: bool
    tau_identity_ok: bool
    isomorphisms: dict = field(default_factory=dict)
    twisted_counts: tuple = None

    @property
    def ok(self):
        return (self.lemma_ok and self.coset_class_count == self.base_class_count
                and self.centralizer_ok and self.centralizer_shape_ok and self.order_ok
                and self.tau_identity_ok and all(self.isomorphisms.values()))

    def to_json(self):
        return {
            "model": self.model, "automorphism": self.auto_name,
            "base_order": self.base_order, "ambient_order": self.ambient_order,
            "coset_class_count": self.coset_class_count, "base_class_count": self.base_class_count,
            "lemma_ok": self.lemma_ok, "pairs_checked": self.pairs_checked,
            "centralizer_pairs": [list(p) for p in self.centralizer_pairs],
            "centralizer_ok": self.centralizer_ok, "centralizer_shape_ok": self.centralizer_shape_ok,
            "order_pairs": [list(p) for p in self.order_pairs], "order_ok": self.order_ok,
            "tau_identity_ok": self.tau_identity_ok, "isomorphisms": dict(self.isomorphisms),
            "twisted_counts": list(self.twisted_counts) if self.twisted_counts else None,
            "ok": self.ok,
        }


def verify_coset_conjugacy(model):
    """Exhaustive check of the class criterion, the class bijection and centralizer/order doubling."""
    H = model.base
    m = H.mul
    base_classes = H.conjugacy_classes()
    hclass = {}
    for k, cl in enumerate(base_classes):
        for x in cl:
            hclass[x] = k
    classes, cid = model.coset_classes()

    # (g1,g2)tau ~ (g1',g2')tau  <=>  g1 g2 ~ g1' g2' ; a bijection of partitions settles all pairs
    fwd, back = {}, {}
    lemma_ok = True
    for (a, b, _), c in cid.items():
        h = hclass[m[a][b]]
        if fwd.setdefault(c, h) != h or back.setdefault(h, c) != c:
            lemma_ok = False
    lemma_ok = lemma_ok and len(fwd) == len(classes) and len(back) == len(base_classes)
    surjective = {cid[model.f(x)] for x in range(len(H))} == set(range(len(classes)))

    cent_pairs, cent_ok, shape_ok = [], True, True
    for cl in base_classes:
        for x in cl:
            fx = model.f(x)
            c_amb = model.centralizer(fx)
            c_h = H.centralizer(x)
            if len(c_amb) != 2 * len(c_h):
                cent_ok = False
            # C(f(x)) = mu(C_H(x)) . <(x,1)tau>
            mu = [(h, h, 0) for h in c_h]
            shape = set(mu) | {model.mul(g, fx) for g in mu}
            if shape != set(c_amb):
                shape_ok = False
            if x == cl[0]:
                cent_pairs.append((len(c_amb), len(c_h)))

    orders, order_ok = set(), True
    for y in model.coset():
        a, b, _ = y
        pair = (model.order(y), H.element_order(m[a][b]))
        orders.add(pair)
        if pair[0] != 2 * pair[1]:
            order_ok = False

    tau = model.tau()
    tau_ok = all(model.conj(tau, (a, b, 0)) == (b, a, 0)
                 and model.mul(model.conj(tau, (a, b, 0)), tau) == (b, a, 1)
                 for a in range(len(H)) for b in range(len(H)))

    n_coset = len(H) ** 2
    return ClassReport(model.name, model.auto_name, len(H), model.ambient_order, len(classes),
                       len(base_classes), lemma_ok and surjective, n_coset * n_coset, cent_pairs,
                       cent_ok, shape_ok, sorted(orders), order_ok, tau_ok,
                       verify_isomorphisms(model), twisted_class_counts(model))


def verify_isomorphisms(model):
    """G^tau = phi(H), (G^tau)^F = phi(H^auto), G^F = phi'(H^auto^2), phi' o auto = tau o phi'."""
    H = model.base
    n = len(H)
    a = model.auto
    tau = model.tau()
    out = {}
    g_tau = {(x, y, 0) for x in range(n) for y in range(n) if model.conj(tau, (x, y, 0)) == (x, y, 0)}
    phi = [(g, g, 0) for g in range(n)]
    out["G^tau = phi(H)"] = g_tau == set(phi) and all(
        model.mul(phi[g], phi[h]) == phi[H.mul[g][h]] for g in range(n) for h in range(n))
    fixed_a = [g for g in range(n) if a[g] == g]
    out["(G^tau)^F = phi(H^F0)"] = {x for x in g_tau if model.frobenius(x) == x} == {phi[g] for g in fixed_a}
    fixed_a2 = [g for g in range(n) if a[a[g]] == g]
    g_f = {(x, y, 0) for x in range(n) for y in range(n) if model.frobenius((x, y, 0)) == (x, y, 0)}
    phi2 = {g: (g, a[g], 0) for g in fixed_a2}
    out["G^F = phi'(H^F0^2)"] = g_f == set(phi2.values()) and len(set(phi2.values())) == len(phi2) \
        and all(model.mul(phi2[g], phi2[h]) == phi2[H.mul[g][h]] for g in fixed_a2 for h in fixed_a2)
    out["phi' o F0 = tau o phi'"] = all(phi2[a[g]] == model.conj(tau, phi2[g]) for g in fixed_a2)
    return out


def twisted_class_counts(model):
    """(classes of H^F0^2 x| <F0> in the outer coset, classes of H^F0); informational for small models."""
    H, a = model.base, model.auto
    fixed2 = sorted(g for g in range(len(H)) if a[a[g]] == g)
    fixed = sorted(g for g in range(len(H)) if a[g] == g)
    sub2 = fg.FiniteGroup(fixed2, lambda x, y: H.mul[x][y], "H^F0^2")
    sub = fg.FiniteGroup(fixed, lambda x, y: H.mul[x][y], "H^F0")
    auto2 = [sub2.index[a[g]] for g in sub2.elements]
    return (len(sub2.twisted_classes(auto2)), len(sub.conjugacy_classes()))


# ------------------------------------------------------------ model suite

def _a4_conj():
    A = fg.alternating(4)
    t = (1, 0, 2, 3)
    return A, fg.automorphism_from_map(A, lambda p: fg.perm_mul(fg.perm_mul(t, p), t))


def _q8_cycle():
    Q = fg.quaternion8()
    rot = {"1": "1", "i": "j", "j": "k", "k": "i"}
    return Q, fg.automorphism_from_map(Q, lambda e: (e[0], rot[e[1]]))


def model_cases(name):
    """[(CosetModel)] for one model name, at least two automorphisms each."""
    if name == "z4":
        Z = fg.cyclic(4)
        return [CosetModel(Z, fg.identity_automorphism(Z), "Z4", "identity"),
                CosetModel(Z, fg.automorphism_from_map(Z, lambda k: (-k) % 4), "Z4", "inversion")]
    if name == "s3":
        S = fg.symmetric(3)
        t = S.index[(1, 0, 2)]
        return [CosetModel(S, fg.identity_automorphism(S), "S3", "identity"),
                CosetModel(S, fg.inner_automorphism(S, t), "S3", "inner (12)")]
    if name == "d8":
        D = fg.dihedral8()
        return [CosetModel(D, fg.identity_automorphism(D), "D8", "identity"),
                CosetModel(D, fg.automorphism_from_map(D, _d8_swap), "D8", "swap"),
                CosetModel(D, fg.inner_automorphism(D, D.index[(0, 1)]), "D8", "inner s")]
    if name == "q8":
        Q, cyc = _q8_cycle()
        return [CosetModel(Q, fg.identity_automorphism(Q), "Q8", "identity"),
                CosetModel(Q, cyc, "Q8", "i->j->k")]
    if name == "a4":
        A, c = _a4_conj()
        return [CosetModel(A, fg.identity_automorphism(A), "A4", "identity"),
                CosetModel(A, c, "A4", "conjugation by (12)")]
    raise ValueError("unknown model %r (choose from %s)" % (name, ", ".join(MODEL_NAMES)))


# ------------------------------------------------------------ Sp4(2)

def _swap_pairs(v):
    # symplectic partner: e0 <-> e2, e1 <-> e3
    return ((v & 0b0011) << 2) | ((v & 0b1100) >> 2)


def symplectic_form(x, y):
    return bin(x & _swap_pairs(y)).count("1") & 1


def _apply(mat, v):
    out = 0
    for i in range(4):
        if v >> i & 1:
            out ^= mat[i]
    return out


def _compose(a, b):
    # columns are images of basis vectors: (a o b)(e_i) = a(b(e_i))
    return tuple(_apply(a, b[i]) for i in range(4))


def transvection(v):
    return tuple((1 << i) ^ (v if symplectic_form(1 << i, v) else 0) for i in range(4))


@lru_cache(maxsize=None)
def sp4_2_group():
    gens = [transvection(v) for v in range(1, 16)]
    return fg.FiniteGroup.generate(gens, _compose, "Sp4(2)",
                                   label_fn=lambda m: "".join("%x" % c for c in m))


@dataclass
class Sp42Report:
    group_order: int
    preserves_form: bool
    generators: tuple
    automorphism_candidates: int
    outer_found: bool
    involution: list = field(repr=False)
    fixed_order: int = 0
    fixed_class_count: int = 0
    fixed_class_orders: list = field(default_factory=list)
    fixed_class_sizes: list = field(default_factory=list)
    frobenius: bool = False
    extension_order: int = 0
    outer_coset_class_count: int = 0
    outer_centralizer_orders: list = field(default_factory=list)
    fixed_centralizer_orders: list = field(default_factory=list)

    @property
    def centralizer_doubling(self):
        return sorted(self.outer_centralizer_orders) == sorted(2 * c for c in self.fixed_centralizer_orders)

    @property
    def ok(self):
        return (self.group_order == 720 and self.preserves_form and self.outer_found
                and self.fixed_order == 20 and self.fixed_class_count == 5 and self.frobenius
                and sorted(self.fixed_class_orders) == [1, 2, 4, 4, 5]
                and self.extension_order == 1440 and self.outer_coset_class_count == 5)

    def to_json(self):
        return {
            "group_order": self.group_order, "preserves_form": self.preserves_form,
            "automorphism_candidates": self.automorphism_candidates, "outer_found": self.outer_found,
            "fixed_order": self.fixed_order, "fixed_class_count": self.fixed_class_count,
            "fixed_class_orders": self.fixed_class_orders, "fixed_class_sizes": self.fixed_class_sizes,
            "frobenius": self.frobenius, "extension_order": self.extension_order,
            "outer_coset_class_count": self.outer_coset_class_count,
            "outer_centralizer_orders": self.outer_centralizer_orders,
            "fixed_centralizer_orders": self.fixed_centralizer_orders,
            "centralizer_doubling": self.centralizer_doubling, "ok": self.ok,
        }


def _generating_pair(G):
    n = len(G)
    orders = [G.element_order(x) for x in range(n)]
    firsts = sorted((x for x in range(n) if orders[x] == 2), key=lambda x: G.labels[x])
    for g1 in firsts:
        for g2 in sorted(range(n), key=lambda x: (-orders[x], G.labels[x])):
            if len(G.generated_closure([g1, g2])) == n:
                return g1, g2
    raise ValueError("no generating pair")


def _is_inner(G, auto, gens):
    target = [auto[g] for g in gens]
    return any([G.conj(h, g) for g in gens] == target for h in range(len(G)))


def find_outer_automorphism(G, gens):
    """One automorphism not induced by conjugation, searched on images of a generating pair."""
    g1, g2 = gens
    n = len(G)
    classes = G.conjugacy_classes()
    size = {x: len(cl) for cl in classes for x in cl}
    o1, o2 = G.element_order(g1), G.element_order(g2)
    firsts = [cl[0] for cl in classes if len(cl) == size[g1] and G.element_order(cl[0]) == o1]
    seconds = [x for x in range(n) if G.element_order(x) == o2 and size[x] == size[g2]]
    tried = 0
    for h1 in firsts:
        for h2 in seconds:
            tried += 1
            perm = G.hom_from_generators([g1, g2], [h1, h2])
            if perm is None or len(set(perm)) != n:
                continue
            if not _is_inner(G, perm, [g1, g2]):
                return perm, tried
    return None, tried


def sp4_2_model():
    """Sp4(2), an outer involutive automorphism with fixed subgroup of order 20, and checks."""
    G = sp4_2_group()
    n = len(G)
    form_ok = all(symplectic_form(_apply(m, x), _apply(m, y)) == symplectic_form(x, y)
                  for m in G.elements for x in range(16) for y in range(16))
    gens = _generating_pair(G)
    alpha, tried = find_outer_automorphism(G, gens)
    report = Sp42Report(n, form_ok, gens, tried, alpha is not None, None)
    if alpha is None:
        raise ValueError("no outer automorphism found")
    beta = None
    for g in range(n):
        cand = [alpha[G.conj(g, x)] for x in range(n)]
        if all(cand[cand[x]] == x for x in range(n)) and len(G.fixed_points(cand)) == 20:
            beta = cand
            break
    if beta is None:
        raise ValueError("no involution with a fixed subgroup of order 20 in the outer coset")
    report.involution = beta
    fixed = G.fixed_points(beta)
    sub = fg.FiniteGroup(fixed, lambda x, y: G.mul[x][y], "Sp4(2)^F0")
    sclasses = sub.conjugacy_classes()
    report.fixed_order = len(sub)
    report.fixed_class_count = len(sclasses)
    report.fixed_class_orders = sorted(sub.element_order(cl[0]) for cl in sclasses)
    report.fixed_class_sizes = sorted(len(cl) for cl in sclasses)
    report.fixed_centralizer_orders = sorted(len(sub) // len(cl) for cl in sclasses)
    fives = [x for x in range(len(sub)) if sub.element_order(x) == 5]
    kernel = set(fives) | {sub.identity}
    normal = all(sub.conj(g, k) in kernel for g in range(len(sub)) for k in kernel)
    report.frobenius = (len(kernel) == 5 and normal
                        and all(set(sub.centralizer(k)) == kernel for k in fives))
    # classes of Sp4(2) x| <F0> inside the coset Sp4(2) F0 are the F0-twisted classes
    twisted = G.twisted_classes(beta)
    report.extension_order = 2 * n
    report.outer_coset_class_count = len(twisted)
    report.outer_centralizer_orders = sorted(2 * n // len(cl) for cl in twisted)
    return report


def run_model_suite(names=MODEL_NAMES):
    reports, sp = [], None
    for name in names:
        if name == "sp42":
            sp = sp4_2_model()
        else:
            reports.extend(verify_coset_conjugacy(m) for m in model_cases(name))
    return reports, sp


# ------------------------------------------------------------ disconnected runs

DISCONNECTED_CASES = ("b2-disconnected", "f4-disconnected")

B2_SHINTANI = {"u1": "(1,sigma)", "u4": "(x_{a+b},sigma)", "rho": "(x_a,sigma)",
               "rho^-1": "(x_ax_{a+b},sigma)"}


def disconnected_layout(base):
    if base.name == "b2":
        mapping = B2_SHINTANI
    elif base.name == "f4":
        mapping = {c: "N(%s)" % c for c in base.layout.columns}
    else:
        raise ValueError("no disconnected variant of case %r" % base.name)
    return base.layout.relabeled(mapping)


def disconnected_bundle(base):
    """Same Springer, torus and extension data; only the split classes are relabeled."""
    from dataclasses import replace
    name = base.name + "-disconnected"
    return replace(base, name=name, layout=disconnected_layout(base),
                   conjectural=(base.name == "f4"), _weyl=base._weyl, _classes=base._classes)


def run_disconnected(case_name, directory=None):
    from .caseio import load_named
    if case_name not in DISCONNECTED_CASES:
        raise ValueError("unknown disconnected case %r" % case_name)
    base = load_named(case_name.split("-")[0], directory)
    return run_case(disconnected_bundle(base))
