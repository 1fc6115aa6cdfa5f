"""Lusztig's algorithm: Omega, the block factorization tP Lambda P = Omega, and X."""

from dataclasses import dataclass, field
import time

from .exactfield import MatrixRF, Poly, RatFunc, is_polynomial, poly_divmod, poly_gcd
from .weylgroups import f_classes, generate_weyl, match_fclasses_to_columns
from . import cosetdata


@dataclass
class CaseBundle:
    name: str
    d: int
    group_order: Poly
    datum: object
    springer: list
    coset_chars: cosetdata.CosetCharTable
    layout: cosetdata.UnipotentLayout
    choices: list
    target: MatrixRF = None
    target_rows: list = None
    conjectural: bool = False
    expected: dict = field(default_factory=dict)
    p_errata: list = field(default_factory=list)
    source: str = ""
    all_springer: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    declared_weyl_order: int = None
    _weyl: object = field(default=None, repr=False)
    _classes: list = field(default=None, repr=False)

    @property
    def weyl(self):
        if self._weyl is None:
            self._weyl = generate_weyl(self.datum)
        return self._weyl

    @property
    def fclasses(self):
        """F-classes of W, ordered to match the coset table columns."""
        if self._classes is None:
            classes = f_classes(self.weyl)
            self._classes = match_fclasses_to_columns(
                classes, self.coset_chars.torus_orders, self.coset_chars.columns)
        return self._classes

    @property
    def n_pairs(self):
        return len(self.springer)

    def blocks(self):
        return [p.block_id for p in self.springer]

    def d_values(self):
        return [p.d_u for p in self.springer]

    def rho_rows(self):
        return [self.coset_chars.row(p.weyl_char_label) for p in self.springer]


@dataclass
class Verdict:
    rows: list
    columns: list
    mismatches: list  # (row label, column label, computed, expected)
    checked: int
    skipped: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

    def summary(self):
        status = "pass" if self.ok else "FAIL"
        return "%s, %d/%d cells" % (status, self.checked - len(self.mismatches), self.checked)


@dataclass
class LusztigResult:
    case: str
    omega: MatrixRF
    p_matrix: MatrixRF
    lambda_matrix: MatrixRF
    y_table: MatrixRF
    x_table: MatrixRF
    verdict: Verdict
    matrix_checks: dict
    conjectural: bool
    row_labels: list
    column_labels: list
    pair_labels: list
    fclass_rows: list
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        if self.conjectural:
            return True
        return self.verdict.ok and all(v.ok for v in self.matrix_checks.values())


def _lcm(polys):
    out = Poly((1,), polys[0].d)
    for p in polys:
        g = poly_gcd(out, p)
        out = poly_divmod(out * p, g)[0]
    return out.monic()


def build_omega(bundle):
    """w_(u,v) = |G|/|W| sum_w rho~_u(wF) rho~_v(wF) / (|T_w| q^(d_u+d_v)), summed per F-class."""
    classes = bundle.fclasses
    d = bundle.d
    sizes = [c.size for c in classes]
    tori = [c.torus_order for c in classes]
    lcm = _lcm(tori)
    cofactors = []
    for t in tori:
        quo, rem = poly_divmod(lcm, t)
        assert rem.is_zero()
        cofactors.append(quo)
    rho = bundle.rho_rows()
    dus = bundle.d_values()
    n = len(rho)
    w_order = bundle.weyl.order
    entries = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            acc = Poly((), d)
            for s, x, y, cof in zip(sizes, rho[i], rho[j], cofactors):
                c = x * y * s
                if not c.is_zero():
                    acc = acc + cof * c
            num = bundle.group_order * acc
            den = (lcm * w_order).shift(dus[i] + dus[j])
            r = RatFunc(num, den)
            if is_polynomial(r) is None:
                raise ValueError("Omega entry (%d, %d) is not a polynomial: %s" % (i, j, r))
            entries[i][j] = entries[j][i] = r
    return MatrixRF.from_rows(entries, d)


def _block_ranges(blocks):
    ranges = []
    start = 0
    for k in range(1, len(blocks) + 1):
        if k == len(blocks) or blocks[k] != blocks[start]:
            ranges.append(list(range(start, k)))
            start = k
    if len({blocks[r[0]] for r in ranges}) != len(ranges):
        raise ValueError("pairs of one block are not consecutive in the order")
    return ranges


def _block_inverse(m, rng=None):
    if rng is None or m.rows == 1:
        return m.inverse()
    perm = list(range(m.rows))
    rng.shuffle(perm)
    inv_p = m.submatrix(perm, perm).inverse()
    back = [perm.index(i) for i in range(m.rows)]
    return inv_p.submatrix(back, back)


def solve_block_factorization(omega, blocks, rng=None):
    """Unique (P, Lambda) with P unit upper block-triangular and tP Lambda P = omega.

    Block forward elimination over the rational-function field.  ``rng``
    optionally shuffles the elimination order inside each diagonal block.
    """
    n = omega.rows
    if omega.cols != n or len(blocks) != n:
        raise ValueError("omega must be square with one block id per row")
    if not omega.is_symmetric():
        raise ValueError("omega is not symmetric")
    d = omega.d
    ranges = _block_ranges(blocks)
    zero, one = RatFunc.const(0, d), RatFunc.const(1, d)
    P = [[one if i == j else zero for j in range(n)] for i in range(n)]
    L = [[zero] * n for _ in range(n)]
    pm = lambda rows, cols: MatrixRF.from_rows([[P[i][j] for j in cols] for i in rows], d)
    lm = lambda rows: MatrixRF.from_rows([[L[i][j] for j in rows] for i in rows], d)
    for a, I in enumerate(ranges):
        lam = omega.submatrix(I, I)
        for K in ranges[:a]:
            pki = pm(K, I)
            lam = lam - pki.transpose() @ lm(K) @ pki
        for x, i in enumerate(I):
            for y, j in enumerate(I):
                L[i][j] = lam[x, y]
        try:
            lam_inv = _block_inverse(lam, rng)
        except ZeroDivisionError:
            raise ValueError("singular Lambda block at rows %s; the algorithm does not apply" % I)
        for J in ranges[a + 1:]:
            rhs = omega.submatrix(I, J)
            for K in ranges[:a]:
                rhs = rhs - pm(K, I).transpose() @ lm(K) @ pm(K, J)
            pij = lam_inv @ rhs
            for x, i in enumerate(I):
                for y, j in enumerate(J):
                    P[i][j] = pij[x, y]
    return MatrixRF.from_rows(P, d), MatrixRF.from_rows(L, d)


def compute_X(P, Y, d_values):
    """X_(u,phi) = q^d_u sum_(v,psi) p_(v,psi),(u,phi) Y_(v,psi)."""
    n = P.rows
    if P.cols != n or Y.rows != n or len(d_values) != n:
        raise ValueError("dimension mismatch: P %dx%d, Y %dx%d, %d exponents"
                         % (P.rows, P.cols, Y.rows, Y.cols, len(d_values)))
    d = P.d
    q = Poly.q(d)
    rows = []
    for u in range(n):
        scale = RatFunc.from_poly(q ** d_values[u])
        row = []
        for c in range(Y.cols):
            acc = RatFunc.const(0, d)
            for v in range(n):
                p, y = P[v, u], Y[v, c]
                if p.is_zero() or y.is_zero():
                    continue
                acc = acc + p * y
            row.append(acc * scale)
        rows.append(row)
    return MatrixRF.from_rows(rows, d)


def compare_with_target(computed, target, row_labels=None, column_labels=None, skip=()):
    if (computed.rows, computed.cols) != (target.rows, target.cols):
        raise ValueError("shape mismatch: computed %dx%d vs target %dx%d"
                         % (computed.rows, computed.cols, target.rows, target.cols))
    row_labels = row_labels or [str(i) for i in range(computed.rows)]
    column_labels = column_labels or [str(j) for j in range(computed.cols)]
    skip = {tuple(s) for s in skip}
    mismatches, skipped = [], []
    checked = 0
    for i in range(computed.rows):
        for j in range(computed.cols):
            if (i, j) in skip:
                skipped.append((row_labels[i], column_labels[j], computed[i, j], target[i, j]))
                continue
            checked += 1
            if computed[i, j] != target[i, j]:
                mismatches.append((row_labels[i], column_labels[j], computed[i, j], target[i, j]))
    return Verdict(row_labels, column_labels, mismatches, checked, skipped)


def _root_multiplicity_at_one(p):
    k = 0
    lin = Poly((-1, 1), p.d)
    while True:
        quo, rem = poly_divmod(p, lin)
        if not rem.is_zero():
            return k
        p, k = quo, k + 1


def uniform_degree(bundle, index):
    """R_rho~(1) straight from Deligne-Lusztig degrees, independent of Omega and P.

    R_rho~(1) = (1/|W|) sum_w rho~(wF) eps_G eps_Tw |G|_p' / |T_w|, where the
    relative rank of T_w is the multiplicity of q = 1 as a root of |T_w|.
    """
    classes = bundle.fclasses
    d = bundle.d
    order = bundle.group_order
    while order.coeffs and order.coeffs[0].is_zero():
        order = Poly(order.coeffs[1:], d)
    ranks = [_root_multiplicity_at_one(c.torus_order) for c in classes]
    top = max(ranks)
    rho = bundle.rho_rows()[index]
    acc = RatFunc.const(0, d)
    for c, r, v in zip(classes, ranks, rho):
        if v.is_zero():
            continue
        sign = 1 if (top - r) % 2 == 0 else -1
        acc = acc + RatFunc(Poly.const(v * (sign * c.size), d), c.torus_order)
    return acc * RatFunc(order, Poly.const(bundle.weyl.order, d))


def pair_label(p):
    return "(%s,%s)" % (p.class_label, p.character_label)


def run_case(bundle, rng=None):
    t0 = time.perf_counter()
    omega = build_omega(bundle)
    P, Lam = solve_block_factorization(omega, bundle.blocks(), rng)
    y = cosetdata.build_Y_table(bundle.springer, bundle.layout, bundle.choices)
    x = compute_X(P, y, bundle.d_values())
    labels = [pair_label(p) for p in bundle.springer]
    rows = bundle.target_rows or [p.weyl_char_label for p in bundle.springer]
    if bundle.target is not None and not bundle.conjectural:
        verdict = compare_with_target(x, bundle.target, rows, bundle.layout.columns)
    else:
        verdict = Verdict(rows, bundle.layout.columns, [], 0)
    checks = {}
    for name, computed in (("omega", omega), ("P", P), ("Lambda", Lam)):
        expected = bundle.expected.get(name)
        if expected is not None:
            skip = bundle.p_errata if name == "P" else ()
            checks[name] = compare_with_target(computed, expected, labels, labels, skip)
    fclass_rows = [
        {"column": c.column_label, "word": c.word, "size": c.size, "torus_order": c.torus_order}
        for c in bundle.fclasses
    ]
    return LusztigResult(bundle.name, omega, P, Lam, y, x, verdict, checks, bundle.conjectural,
                         rows, list(bundle.layout.columns), labels, fclass_rows,
                         time.perf_counter() - t0, list(bundle.notes))
