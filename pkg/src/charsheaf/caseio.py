"""Case files: load and validate the JSON transcriptions shipped in ``charsheaf/data``."""

import json
import os
from importlib import resources

from . import cosetdata
from .cosetdata import (ComponentGroup, CosetCharTable, ExtensionChoice, SpringerPair,
                        UnipotentLayout)
from .exactfield import MatrixRF, Poly, QuadRational, RatFunc, parse_poly
from .lusztig import CaseBundle
from .weylgroups import RootDatum

CONNECTED_CASES = ("b2", "g2", "f4")


class CaseDataError(ValueError):
    """Malformed or inconsistent case data; the message names the table and cell."""


def data_dir():
    return str(resources.files("charsheaf") / "data")


def case_path(name, directory=None):
    return os.path.join(directory or data_dir(), name + ".json")


def _need(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise CaseDataError("%s: missing field %r" % (where, key))
    return obj[key]


def _poly(value, d, where):
    try:
        if isinstance(value, str):
            return parse_poly(value, d)
        if isinstance(value, (int,)):
            return Poly.const(value, d)
        return Poly.from_json(value, d)
    except CaseDataError:
        raise
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise CaseDataError("%s: cannot read polynomial %r (%s)" % (where, value, exc))


def _scalar(value, d, where):
    try:
        if isinstance(value, (int, str)) and not isinstance(value, bool):
            p = parse_poly(str(value), d)
            if p.degree > 0:
                raise ValueError("not a constant")
            return p.coeffs[0] if p.coeffs else QuadRational(0, 0, d)
        return QuadRational.from_json(value, d)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise CaseDataError("%s: cannot read scalar %r (%s)" % (where, value, exc))


def _matrix(rows, d, where, shape=None):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise CaseDataError("%s: expected a list of rows" % where)
    if shape is not None:
        if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
            raise CaseDataError("%s: expected shape %dx%d" % (where, shape[0], shape[1]))
    return MatrixRF.from_rows(
        [[RatFunc.from_poly(_poly(v, d, "%s[%d][%d]" % (where, i, j)))
          for j, v in enumerate(r)] for i, r in enumerate(rows)], d)


def _root_datum(raw, d):
    where = "root_datum"
    try:
        datum = RootDatum(str(_need(raw, "type", where)),
                          tuple(tuple(int(x) for x in r) for r in _need(raw, "cartan", where)),
                          tuple(tuple(int(x) for x in r) for r in _need(raw, "twist_matrix", where)),
                          int(_need(raw, "twist_scale", where)))
        datum.validate()
    except CaseDataError:
        raise
    except (TypeError, ValueError) as exc:
        raise CaseDataError("%s: %s" % (where, exc))
    if datum.twist_scale != d:
        raise CaseDataError("root_datum: twist_scale %d disagrees with field d=%d" % (datum.twist_scale, d))
    return datum


def _component_groups(raw):
    out = {}
    for label, spec in raw.items():
        out[label] = spec
    return out


def _springer(raw, groups):
    pairs, all_rows = [], []
    for k, row in enumerate(raw):
        where = "springer_table[%d]" % k
        cls = str(_need(row, "class_label", where))
        if cls not in groups:
            raise CaseDataError("%s: class %s has no component_groups entry" % (where, cls))
        du = _need(row, "d_u", where)
        if not isinstance(du, int) or du < 0:
            raise CaseDataError("%s: d_u must be a non-negative integer, got %r" % (where, du))
        all_rows.append(row)
        if not _need(row, "f_stable", where):
            continue
        g = groups[cls]
        try:
            comp = ComponentGroup(g.get("kind"), g.get("f_action") or "identity")
        except ValueError as exc:
            raise CaseDataError("component_groups[%s]: %s" % (cls, exc))
        char = str(_need(row, "character_label", where))
        if char not in comp.characters():
            raise CaseDataError("%s: %s has no character %r" % (where, comp.kind, char))
        pairs.append(SpringerPair(cls, comp, char, str(_need(row, "weyl_char_label", where)), du,
                                  _need(row, "order_index", where), _need(row, "block_id", where)))
    if not pairs:
        raise CaseDataError("springer_table: no F-stable pairs")
    for a, b in zip(pairs, pairs[1:]):
        if not (isinstance(a.order_index, int) and isinstance(b.order_index, int)) \
                or b.order_index <= a.order_index:
            raise CaseDataError("springer_table: order_index not strictly increasing at pair %s"
                                % (b.key,))
    block_of = {}
    for p in pairs:
        prev = block_of.setdefault(p.class_label, p.block_id)
        if prev != p.block_id:
            raise CaseDataError("springer_table: pair %s has block_id %r but class %s uses %r"
                                % (p.key, p.block_id, p.class_label, prev))
    if len(set(block_of.values())) != len(block_of):
        raise CaseDataError("springer_table: distinct classes share a block_id")
    for label in block_of:
        comp = next(p.component_group for p in pairs if p.class_label == label)
        count = len(cosetdata.component_f_classes(comp))
        expected = cosetdata.EXPECTED_F_CLASS_COUNT.get((comp.kind, comp.f_action))
        if expected is not None and expected != count:
            raise CaseDataError("component_groups[%s]: %d F-classes, expected %d"
                                % (label, count, expected))
    return pairs, all_rows


def _coset_table(raw, d):
    where = "coset_char_table"
    cols = list(_need(raw, "columns", where))
    rows = list(_need(raw, "rows", where))
    tori = [_poly(t, d, "%s.torus_orders[%d]" % (where, i))
            for i, t in enumerate(_need(raw, "torus_orders", where))]
    vals = _need(raw, "values", where)
    if len(tori) != len(cols):
        raise CaseDataError("%s: %d torus orders for %d columns" % (where, len(tori), len(cols)))
    if len(vals) != len(rows) or any(len(r) != len(cols) for r in vals):
        raise CaseDataError("%s: values are not %dx%d" % (where, len(rows), len(cols)))
    values = [[_scalar(v, d, "%s[%s][%s]" % (where, rows[i], cols[j])) for j, v in enumerate(r)]
              for i, r in enumerate(vals)]
    if len(set(rows)) != len(rows):
        raise CaseDataError("%s: duplicate row labels" % where)
    return CosetCharTable(rows, cols, values, tori)


def _layout(raw, pairs):
    where = "layout"
    cols = list(_need(raw, "columns", where))
    blocks = [(str(_need(b, "class_label", where)), list(_need(b, "columns", where)))
              for b in _need(raw, "blocks", where)]
    layout = UnipotentLayout(cols, blocks)
    try:
        cosetdata.validate_layout(layout, pairs)
    except ValueError as exc:
        raise CaseDataError("layout: %s" % exc)
    return layout


def _choices(raw, pairs, d):
    by_key = {p.key: p for p in pairs}
    out = []
    for k, row in enumerate(raw):
        where = "extension_choices[%d]" % k
        key = (str(_need(row, "class_label", where)), str(_need(row, "character_label", where)))
        if key not in by_key:
            raise CaseDataError("%s: no F-stable Springer pair %s" % (where, key))
        sel = _need(row, "selector", where)
        try:
            vals = cosetdata.extension_values(by_key[key].component_group, key[1], sel, d)
        except ValueError as exc:
            raise CaseDataError("%s: %s" % (where, exc))
        out.append(ExtensionChoice(key[0], key[1], sel, vals))
    missing = set(by_key) - {(c.class_label, c.character_label) for c in out}
    if missing:
        raise CaseDataError("extension_choices: no choice for pairs %s" % sorted(missing))
    return out


def parse_case(raw, name_hint="case"):
    """Build a validated CaseBundle from decoded JSON."""
    if not isinstance(raw, dict):
        raise CaseDataError("%s: top level must be an object" % name_hint)
    d = _need(raw, "d", "case")
    if d not in (1, 2, 3):
        raise CaseDataError("case: field d must be 1, 2 or 3, got %r" % (d,))
    name = str(_need(raw, "name", "case"))
    datum = _root_datum(_need(raw, "root_datum", "case"), d)
    groups = _component_groups(_need(raw, "component_groups", "case"))
    pairs, all_rows = _springer(_need(raw, "springer_table", "case"), groups)
    coset = _coset_table(_need(raw, "coset_char_table", "case"), d)
    for p in pairs:
        if p.weyl_char_label not in coset.rows:
            raise CaseDataError("coset_char_table: no row for %s (pair %s)" % (p.weyl_char_label, p.key))
    one = QuadRational(1, 0, d)
    trivial = pairs[-1].weyl_char_label
    if any(v != one for v in coset.row(trivial)):
        raise CaseDataError("coset_char_table[%s]: trivial row is not all ones" % trivial)
    layout = _layout(_need(raw, "layout", "case"), pairs)
    choices = _choices(_need(raw, "extension_choices", "case"), pairs, d)

    target, target_rows, conjectural = None, None, False
    tt = raw.get("target_table")
    if tt is not None:
        target_rows = list(_need(tt, "rows", "target_table"))
        if list(_need(tt, "columns", "target_table")) != list(layout.columns):
            raise CaseDataError("target_table: columns differ from layout columns")
        target = _matrix(_need(tt, "values", "target_table"), d, "target_table",
                         (len(pairs), len(layout.columns)))
        if len(target_rows) != len(pairs):
            raise CaseDataError("target_table: %d rows for %d pairs" % (len(target_rows), len(pairs)))
        conjectural = tt.get("status") == "conjectural"

    expected, errata = {}, []
    ex = raw.get("expected") or {}
    n = len(pairs)
    for key, attr in (("Omega", "omega"), ("P", "P"), ("Lambda", "Lambda")):
        if ex.get(key) is not None:
            expected[attr] = _matrix(ex[key], d, "expected.%s" % key, (n, n))
    for cell in ex.get("P_errata") or []:
        if len(cell) != 2 or not all(isinstance(c, int) and 0 <= c < n for c in cell):
            raise CaseDataError("expected.P_errata: bad cell %r" % (cell,))
        errata.append(tuple(cell))

    bundle = CaseBundle(
        name=name, d=d, group_order=_poly(_need(raw, "group_order", "case"), d, "group_order"),
        datum=datum, springer=pairs, coset_chars=coset, layout=layout, choices=choices,
        target=target, target_rows=target_rows, conjectural=conjectural, expected=expected,
        p_errata=errata, source=raw.get("source", ""), all_springer=all_rows,
        notes=list(raw.get("notes") or []), declared_weyl_order=raw.get("weyl_order"))
    return bundle


def load_case(path):
    """Read and validate one case file."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CaseDataError("cannot read %s: %s" % (path, exc.strerror or exc))
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CaseDataError("%s: JSON parse error at line %d column %d: %s"
                            % (path, exc.lineno, exc.colno, exc.msg))
    return parse_case(raw, os.path.basename(path))


def load_named(name, directory=None):
    return load_case(case_path(name, directory))


def check_weyl(bundle):
    """Structural checks that need W: declared order, torus-order matching, orthogonality."""
    problems = []
    declared = bundle.declared_weyl_order
    if declared is not None and declared != bundle.weyl.order:
        problems.append("weyl_order: declared %d, generated %d" % (declared, bundle.weyl.order))
    try:
        classes = bundle.fclasses
    except ValueError as exc:
        raise CaseDataError("coset_char_table.torus_orders: %s" % exc)
    sizes = [c.size for c in classes]
    rep = cosetdata.coset_orthogonality_check(bundle.coset_chars, sizes, bundle.weyl.order)
    if not rep.ok:
        bad = [(bundle.coset_chars.rows[i], bundle.coset_chars.rows[j])
               for i, r in enumerate(rep.defect) for j, v in enumerate(r) if not v.is_zero()]
        problems.append("coset_char_table: orthogonality fails for row pairs %s" % bad[:4])
    try:
        derived = cosetdata.derive_sizes_from_columns(bundle.coset_chars, bundle.weyl.order)
    except ValueError as exc:
        problems.append("coset_char_table: %s" % exc)
    else:
        if derived != sizes:
            problems.append("coset_char_table: column-derived sizes %s differ from F-class sizes %s"
                            % (derived, sizes))
    if problems:
        raise CaseDataError("; ".join(problems))
    return rep
