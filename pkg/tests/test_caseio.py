import copy
import json

import pytest

from charsheaf import caseio
from charsheaf.caseio import CaseDataError, check_weyl, load_case, load_named, parse_case


@pytest.fixture(scope="module")
def raw():
    out = {}
    for name in caseio.CONNECTED_CASES:
        with open(caseio.case_path(name), encoding="utf-8") as fh:
            out[name] = json.load(fh)
    return out


@pytest.mark.parametrize("name,pairs,columns,split", [("b2", 3, 3, 4), ("g2", 4, 4, 7),
                                                      ("f4", 11, 11, 19)])
def test_shapes(cases, name, pairs, columns, split):
    b = cases.bundle(name)
    assert b.n_pairs == pairs
    assert len(b.coset_chars.columns) == columns
    assert len(b.layout.columns) == split
    assert (b.target.rows, b.target.cols) == (pairs, split)
    assert not b.conjectural


@pytest.mark.parametrize("name", caseio.CONNECTED_CASES)
def test_structural_checks_pass(cases, name):
    assert check_weyl(cases.bundle(name)).ok


def test_every_file_names_its_sources(raw):
    for name, data in raw.items():
        assert data["source"], name
        assert {"springer_table", "coset_char_table", "target_table"} <= set(data["source"])


def test_only_f4_ships_errata(cases):
    assert cases.bundle("b2").p_errata == []
    assert len(cases.bundle("f4").p_errata) == 3


def _bad(raw, name, mutate):
    data = copy.deepcopy(raw[name])
    mutate(data)
    return data


def test_block_id_contradicting_class(raw):
    data = copy.deepcopy(raw["f4"])
    stable = [r for r in data["springer_table"] if r["f_stable"]]
    labels = [r["class_label"] for r in stable]
    shared = next(lab for lab in labels if labels.count(lab) > 1)
    rows = [r for r in stable if r["class_label"] == shared]
    rows[-1]["block_id"] = rows[0]["block_id"] + 100
    with pytest.raises(CaseDataError, match="has block_id"):
        parse_case(data)


def test_missing_field_is_named(raw):
    data = _bad(raw, "b2", lambda d: d.pop("coset_char_table"))
    with pytest.raises(CaseDataError, match="coset_char_table"):
        parse_case(data)


def test_bad_polynomial_is_named(raw):
    def m(d):
        d["target_table"]["values"][1][1] = "q^^2"
    with pytest.raises(CaseDataError, match=r"target_table\[1\]\[1\]"):
        parse_case(_bad(raw, "b2", m))


def test_trivial_row_must_be_ones(raw):
    def m(d):
        d["coset_char_table"]["values"][-1][0] = -1
    with pytest.raises(CaseDataError, match="trivial row"):
        parse_case(_bad(raw, "b2", m))


def test_wrong_field(raw):
    with pytest.raises(CaseDataError, match="field d"):
        parse_case(_bad(raw, "b2", lambda d: d.update(d=5)))
    with pytest.raises(CaseDataError, match="twist_scale"):
        parse_case(_bad(raw, "b2", lambda d: d.update(d=3)))


def test_order_index_must_increase(raw):
    def m(d):
        d["springer_table"][-1]["order_index"] = 0
    with pytest.raises(CaseDataError, match="order_index"):
        parse_case(_bad(raw, "b2", m))


def test_unknown_selector(raw):
    def m(d):
        d["extension_choices"][0]["selector"] = "half"
    with pytest.raises(CaseDataError, match=r"extension_choices\[0\]"):
        parse_case(_bad(raw, "b2", m))


def test_layout_must_cover_columns(raw):
    def m(d):
        d["layout"]["blocks"][-1]["columns"] = ["rho"]
    with pytest.raises(CaseDataError, match="layout"):
        parse_case(_bad(raw, "b2", m))


def test_errata_cells_are_checked(raw):
    def m(d):
        d["expected"]["P_errata"] = [[0, 40]]
    with pytest.raises(CaseDataError, match="P_errata"):
        parse_case(_bad(raw, "f4", m))


def test_torus_order_typo_is_caught_by_weyl_checks(raw):
    def m(d):
        d["coset_char_table"]["torus_orders"][0] = "q^2+1"
    bundle = parse_case(_bad(raw, "b2", m))
    with pytest.raises(CaseDataError, match="torus_orders"):
        check_weyl(bundle)


def test_table_typo_is_caught_by_orthogonality(raw):
    def m(d):
        d["coset_char_table"]["values"][0][1] = 1
    bundle = parse_case(_bad(raw, "b2", m))
    with pytest.raises(CaseDataError, match="orthogonality"):
        check_weyl(bundle)


def test_declared_weyl_order(raw):
    bundle = parse_case(_bad(raw, "g2", lambda d: d.update(weyl_order=10)))
    with pytest.raises(CaseDataError, match="weyl_order"):
        check_weyl(bundle)


def test_json_errors_report_position(tmp_path):
    path = tmp_path / "b2.json"
    path.write_text('{"name": "b2",\n  "d": 2,,\n}')
    with pytest.raises(CaseDataError, match="line 2 column"):
        load_case(str(path))
    with pytest.raises(CaseDataError, match="cannot read"):
        load_named("g2", str(tmp_path))
