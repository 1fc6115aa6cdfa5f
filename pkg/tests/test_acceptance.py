"""Acceptance criteria 1-10, exact arithmetic throughout (zero tolerance).

Each test records one line ``criterion N: PASS|FAIL  ...``; the lines are
printed together in the terminal summary.  Run standalone with
``python3 tests/test_acceptance.py``.
"""

import io
import json
import random
import shutil
import time
from collections import Counter
from fractions import Fraction

import pytest

from charsheaf import caseio, cli, cosetdata, disconnected
from charsheaf.exactfield import MatrixRF, Poly, QuadRational, RatFunc, parse_poly
from charsheaf.lusztig import run_case, solve_block_factorization
from charsheaf.weylgroups import f_classes

import oracles
from oracles import same, to_sympy

RESULTS = {}

TITLES = {
    1: "B2 pipeline: Omega, P, Lambda and X (12 cells), < 1 s",
    2: "G2 pipeline: Omega, P, Lambda and X (28 cells), < 1 s",
    3: "F4 pipeline: X (209 cells), Lambda, P off the errata cells, < 10 s",
    4: "torus orders match the printed lists as multisets",
    5: "coset orthogonality and column-derived class sizes",
    6: "trivial row is 1, sign row is (q^N, 0, ..., 0)",
    7: "coset model suite and Sp4(2)",
    8: "disconnected B2 equals connected B2 and passes",
    9: "disconnected F4 is the connected table, flagged conjectural",
    10: "property suites: axioms, zero residual, uniqueness, fault injection",
}


def record(n, problems, detail=""):
    ok = not problems
    line = "criterion %d: %s  %s" % (n, "PASS" if ok else "FAIL", TITLES[n])
    if detail:
        line += " [%s]" % detail
    for p in problems:
        line += "\n    - %s" % p
    RESULTS[n] = line
    print(line)
    assert ok, line


def fresh(name):
    """Load and run from scratch, timing Weyl generation and F-class enumeration too."""
    t0 = time.perf_counter()
    bundle = caseio.load_named(name)
    caseio.check_weyl(bundle)
    res = run_case(bundle)
    return bundle, res, time.perf_counter() - t0


def matrix_problems(res, keys=("omega", "P", "Lambda")):
    out = []
    for key in keys:
        v = res.matrix_checks.get(key)
        if v is None:
            out.append("%s: no printed matrix to compare" % key)
            continue
        for row, col, got, want in v.mismatches:
            out.append("%s %s / %s: computed %s, printed %s" % (key, row, col, got, want))
    return out


def x_problems(res, cells):
    out = []
    if res.verdict.checked != cells:
        out.append("X: %d cells compared, expected %d" % (res.verdict.checked, cells))
    for row, col, got, want in res.verdict.mismatches:
        out.append("X %s / %s: computed %s, printed %s" % (row, col, got, want))
    return out


def diag_problems(res, expected):
    L = res.lambda_matrix
    out = []
    for i in range(L.rows):
        for j in range(L.cols):
            want = expected[i] if i == j else RatFunc.const(0, L.d)
            if L[i, j] != want:
                out.append("Lambda[%d][%d] = %s, expected %s" % (i, j, L[i, j], want))
    return out


def product(texts, d):
    out = Poly.const(1, d)
    for t in texts:
        out = out * parse_poly(t, d)
    return out


# ------------------------------------------------------------------ 1-3

def test_criterion_1_b2():
    bundle, res, secs = fresh("b2")
    problems = matrix_problems(res) + x_problems(res, 12)
    if secs >= 1:
        problems.append("runtime %.2f s" % secs)
    record(1, problems, "%.2f s" % secs)


def test_criterion_2_g2():
    bundle, res, secs = fresh("g2")
    d = 3
    p1 = product(["q^4-1", "q^4-q^2+1"], d)
    q = Poly.q(d)
    lam = [RatFunc.const(1, d)] + [RatFunc.from_poly(q ** k * p1) for k in (0, 2, 4)]
    problems = matrix_problems(res) + diag_problems(res, lam) + x_problems(res, 28)
    if secs >= 1:
        problems.append("runtime %.2f s" % secs)
    record(2, problems, "%.2f s" % secs)


def test_criterion_3_f4():
    bundle, res, secs = fresh("f4")
    d = 2
    f1 = product(["q^2-1", "q^2+1", "q^2+1", "q^4+1", "q^4-q^2+1", "q^8-q^4+1"], d)
    f2 = product(["q^4-1", "q^4+1", "q^4+1", "q^4-q^2+1", "q^8-q^4+1"], d)
    f3 = product(["q^2-1", "q^2-1", "q^2+1", "q^2+1", "q^4+1", "q^4+1", "q^4-q^2+1",
                  "q^8-q^4+1"], d)
    q = Poly.q(d)
    shape = [(0, None), (0, f1), (4, f2), (10, f1), (8, f3), (10, f3), (12, f3), (12, f3),
             (16, f3), (18, f3), (20, f3)]
    lam = [RatFunc.from_poly(q ** k * f) if f is not None else RatFunc.const(1, d)
           for k, f in shape]
    problems = x_problems(res, 209) + diag_problems(res, lam) + matrix_problems(res, ("P", "Lambda"))
    pv = res.matrix_checks["P"]
    if not pv.skipped:
        problems.append("no errata cells were set aside")
    # the computed P at the errata cells still solves the factorization and reproduces X
    residual = res.p_matrix.transpose() @ res.lambda_matrix @ res.p_matrix - res.omega
    if residual != MatrixRF.zeros(residual.rows, residual.cols, d):
        problems.append("tP Lambda P != Omega")
    if secs >= 10:
        problems.append("runtime %.2f s" % secs)
    record(3, problems, "%.2f s, %d errata cells" % (secs, len(pv.skipped)))


# ------------------------------------------------------------------ 4-6

def test_criterion_4_torus_orders():
    problems = []
    sizes = {}
    for name, count in (("b2", 3), ("g2", 4), ("f4", 11)):
        b = caseio.load_named(name)
        printed = b.coset_chars.torus_orders
        classes = f_classes(b.weyl)
        computed = [c.torus_order for c in classes]
        if len(printed) != count:
            problems.append("%s: %d printed torus orders" % (name, len(printed)))
        if Counter(computed) != Counter(printed):
            problems.append("%s: multisets differ" % name)
        if len(set(computed)) != len(computed):
            problems.append("%s: torus orders do not separate the F-classes" % name)
        for c in classes:
            if not same(to_sympy(c.torus_order), oracles.torus_order(b.datum, c.representative)):
                problems.append("%s: class %s disagrees with the determinant" % (name, c.word))
        sizes[name] = len(classes)
    b2 = caseio.load_named("b2")
    identity_class = next(c for c in f_classes(b2.weyl) if c.word == ())
    if identity_class.torus_order != parse_poly("q^2-1", 2):
        problems.append("b2: |T_1| = %s" % identity_class.torus_order)
    record(4, problems, ", ".join("%s %d" % kv for kv in sizes.items()))


def test_criterion_5_orthogonality():
    problems = []
    for name in ("b2", "g2", "f4"):
        b = caseio.load_named(name)
        brute = oracles.column_counts(b)
        rep = cosetdata.coset_orthogonality_check(b.coset_chars, brute, b.weyl.order)
        if not rep.ok:
            problems.append("%s: orthogonality fails" % name)
        derived = cosetdata.derive_sizes_from_columns(b.coset_chars, b.weyl.order)
        if derived != brute:
            problems.append("%s: derived sizes %s, brute force %s" % (name, derived, brute))
        if name == "f4" and dict(zip(b.coset_chars.columns, derived))["w1F0"] != 72:
            problems.append("f4: column w1 does not give 72")
    record(5, problems)


def test_criterion_6_trivial_and_sign_rows(cases):
    problems = []
    for name, n in (("b2", 4), ("g2", 6), ("f4", 24)):
        x = cases.result(name).x_table
        d = x.d
        one, zero = RatFunc.const(1, d), RatFunc.const(0, d)
        if [x[x.rows - 1, j] for j in range(x.cols)] != [one] * x.cols:
            problems.append("%s: trivial row is not 1" % name)
        sign = [RatFunc.from_poly(Poly.q(d) ** n)] + [zero] * (x.cols - 1)
        if [x[0, j] for j in range(x.cols)] != sign:
            problems.append("%s: sign row is not (q^%d, 0, ...)" % (name, n))
        target = cases.bundle(name).target
        if [target[0, j] for j in range(x.cols)] != sign:
            problems.append("%s: printed sign row is not (q^%d, 0, ...)" % (name, n))
    record(6, problems)


# ------------------------------------------------------------------ 7-9

def test_criterion_7_models():
    reports, sp = disconnected.run_model_suite()
    problems = []
    seen = Counter(r.model for r in reports)
    for model in ("Z4", "S3", "D8", "Q8", "A4"):
        if seen[model] < 2:
            problems.append("%s: fewer than two automorphisms" % model)
    for r in reports:
        if not (r.lemma_ok and r.coset_class_count == r.base_class_count):
            problems.append("%s / %s: class bijection" % (r.model, r.auto_name))
        if not r.centralizer_ok:
            problems.append("%s / %s: centralizer doubling" % (r.model, r.auto_name))
        if not r.order_ok:
            problems.append("%s / %s: order doubling" % (r.model, r.auto_name))
    if sp.group_order != 720:
        problems.append("|Sp4(2)| = %d" % sp.group_order)
    if (sp.fixed_order, sp.fixed_class_count) != (20, 5):
        problems.append("fixed subgroup %d with %d classes" % (sp.fixed_order, sp.fixed_class_count))
    if (sp.extension_order, sp.outer_coset_class_count) != (1440, 5):
        problems.append("extension %d with %d outer classes"
                        % (sp.extension_order, sp.outer_coset_class_count))
    record(7, problems, "%d coset models" % len(reports))


def test_criterion_8_disconnected_b2(cases):
    ref = cases.result("b2")
    res = run_case(disconnected.disconnected_bundle(cases.bundle("b2")))
    problems = x_problems(res, 12) + matrix_problems(res)
    if res.conjectural:
        problems.append("flagged conjectural")
    for attr in ("omega", "p_matrix", "lambda_matrix", "y_table", "x_table"):
        if getattr(res, attr) != getattr(ref, attr):
            problems.append("%s differs from connected B2" % attr)
    if res.column_labels != [disconnected.B2_SHINTANI[c] for c in ref.column_labels]:
        problems.append("columns are not the relabeled split classes")
    record(8, problems)


def test_criterion_9_disconnected_f4(cases):
    ref = cases.result("f4")
    res = run_case(disconnected.disconnected_bundle(cases.bundle("f4")))
    problems = []
    if not res.conjectural:
        problems.append("not flagged conjectural")
    if res.x_table != ref.x_table:
        problems.append("X differs from connected F4")
    buf = io.StringIO()
    code = cli.main(["run", "--case", "f4-disconnected", "--no-figures"], out=buf)
    if code != 0:
        problems.append("run exits %d" % code)
    if "status: CONJECTURAL" not in buf.getvalue():
        problems.append("report is not marked CONJECTURAL")
    record(9, problems)


# ------------------------------------------------------------------ 10

def _axiom_failures(rng, n):
    out = []

    def frac():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 6))

    def quad(d):
        return QuadRational(frac(), frac(), d)

    def poly(d):
        return Poly([quad(d) for _ in range(rng.randint(0, 4))], d)

    for k in range(n):
        d = rng.choice((1, 2, 3))
        x, y, z = quad(d), quad(d), quad(d)
        if not (x + y == y + x and x * y == y * x and (x + y) + z == x + (y + z)
                and (x * y) * z == x * (y * z) and x * (y + z) == x * y + x * z
                and x - x == 0 and (x.is_zero() or x * x.inverse() == 1)):
            out.append("field axiom fails at %s, %s, %s" % (x, y, z))
        a, b, c = poly(d), poly(d), poly(d)
        if not (a + b == b + a and a * b == b * a and (a * b) * c == a * (b * c)
                and a * (b + c) == a * b + a * c and (a - a).is_zero()):
            out.append("ring axiom fails at %s, %s, %s" % (a, b, c))
        if k % 10 == 0:
            den = poly(d)
            if not den.is_zero():
                r = RatFunc(a, den)
                if not r.is_zero() and r * r.inverse() != RatFunc.const(1, d):
                    out.append("RatFunc inverse fails at %s" % r)
        if len(out) > 5:
            break
    return out


def test_criterion_10_properties(cases, tmp_path):
    rng = random.Random(20240601)
    problems = _axiom_failures(rng, 10_000)
    for name in ("b2", "g2", "f4"):
        b, r = cases.bundle(name), cases.result(name)
        residual = r.p_matrix.transpose() @ r.lambda_matrix @ r.p_matrix - r.omega
        if residual != MatrixRF.zeros(residual.rows, residual.cols, residual.d):
            problems.append("%s: nonzero residual" % name)
        for seed in (1, 2, 3):
            P, L = solve_block_factorization(r.omega, b.blocks(), random.Random(seed))
            if P != r.p_matrix or L != r.lambda_matrix:
                problems.append("%s: solution depends on elimination order (seed %d)" % (name, seed))
    data = tmp_path / "data"
    shutil.copytree(caseio.data_dir(), data)
    path = data / "b2.json"
    args = ["verify", "--data-dir", str(data), "--cases", "b2", "--models", "none"]
    if cli.main(args, out=io.StringIO()) != 0:
        problems.append("pristine b2 does not verify")
    raw = json.loads(path.read_text())
    raw["target_table"]["values"][1][1] = "-q+1"
    path.write_text(json.dumps(raw))
    buf = io.StringIO()
    if cli.main(args, out=buf) != 1 or "R_chi / u4" not in buf.getvalue():
        problems.append("perturbed table cell does not exit 1 naming R_chi / u4")
    record(10, problems, "10^4 random instances")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
