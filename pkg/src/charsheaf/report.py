"""Render results as text, JSON, CSV, LaTeX, and matplotlib figures.

Output bytes depend only on the result (no timings, no timestamps), so two
runs on the same data produce identical files.
"""

import csv
import io
import json
import os

from .exactfield import is_polynomial, latex_ratfunc, render_poly, render_ratfunc

FORMATS = ("text", "json", "csv", "latex")
EXTENSIONS = {"text": "txt", "json": "json", "csv": "csv", "latex": "tex"}


def status(result):
    if result.conjectural:
        return "CONJECTURAL"
    return "PASS" if result.ok else "FAIL"


def word_text(word):
    return "".join("s%d" % (i + 1) for i in word) or "1"


def _is_diagonal(m):
    return all(m[i, j].is_zero() for i in range(m.rows) for j in range(m.cols) if i != j)


def diag_text(m):
    return "diag(%s)" % ", ".join(render_ratfunc(m[i, i]) for i in range(m.rows))


def _note(result, table, row, col):
    rows = result.pair_labels if table in ("Omega", "P", "Lambda") else result.row_labels
    cols = result.pair_labels if table in ("Omega", "P", "Lambda") else result.column_labels
    for n in result.notes:
        if n.get("table") != table:
            continue
        r, c = n.get("row"), n.get("column")
        if (r is None or rows[r] == row) and (c is None or cols[c] == col):
            return n.get("note")
    return None


def _checks(result):
    out = []
    if not result.conjectural:
        out.append(("target", "X vs target", result.verdict))
    names = {"omega": "Omega", "P": "P", "Lambda": "Lambda"}
    for key in ("omega", "P", "Lambda"):
        if key in result.matrix_checks:
            out.append((names[key], "%s vs expected" % names[key], result.matrix_checks[key]))
    return out


def mismatch_lines(result):
    lines = []
    for table, _, verdict in _checks(result):
        for row, col, got, want in verdict.mismatches:
            lines.append("%s %s / %s: computed %s, expected %s"
                         % (table, row, col, render_ratfunc(got), render_ratfunc(want)))
            note = _note(result, table, row, col)
            if note:
                lines.append("  note: " + note)
    return lines


def _table_lines(labels, cols, m, header=True):
    lines = []
    if header:
        lines.append(" | ".join([""] + list(cols)))
    for i, lab in enumerate(labels):
        lines.append(" | ".join([lab] + [render_ratfunc(m[i, j]) for j in range(m.cols)]))
    return lines


def render_text(result):
    out = ["case: %s" % result.case, "status: %s" % status(result), ""]
    out.append("## F-classes")
    out.append("column | word | size | torus order")
    for r in result.fclass_rows:
        out.append("%s | %s | %d | %s" % (r["column"], word_text(r["word"]), r["size"],
                                           render_poly(r["torus_order"])))
    out += ["", "## Omega"] + _table_lines(result.pair_labels, result.pair_labels, result.omega)
    out += ["", "## P"] + _table_lines(result.pair_labels, result.pair_labels, result.p_matrix)
    out += ["", "## Lambda"]
    if _is_diagonal(result.lambda_matrix):
        out.append(diag_text(result.lambda_matrix))
    else:
        out += _table_lines(result.pair_labels, result.pair_labels, result.lambda_matrix)
    out += ["", "## Y"] + _table_lines(result.pair_labels, result.column_labels, result.y_table)
    title = "## X (CONJECTURAL)" if result.conjectural else "## X"
    out += ["", title] + _table_lines(result.row_labels, result.column_labels, result.x_table)
    out += ["", "## checks"]
    if result.conjectural:
        out.append("X: CONJECTURAL, not compared")
    for _, name, verdict in _checks(result):
        out.append("%s: %s" % (name, verdict.summary()))
    mm = mismatch_lines(result)
    if mm:
        out += ["", "## mismatches"] + mm
    skipped = [(t, s) for t, _, v in _checks(result) for s in v.skipped]
    if skipped:
        out += ["", "## errata cells (compared with the corrected reading, not the printed value)"]
        for t, (row, col, got, want) in skipped:
            out.append("%s %s / %s: computed %s, reading %s, %s"
                       % (t, row, col, render_ratfunc(got), render_ratfunc(want),
                          "agree" if got == want else "DIFFER"))
    return "\n".join(out) + "\n"


def _matrix_json(m, rows, cols):
    cells = []
    for i in range(m.rows):
        row = []
        for j in range(m.cols):
            p = is_polynomial(m[i, j])
            row.append(p.to_json() if p is not None else None)
        cells.append(row)
    return {"rows": list(rows), "columns": list(cols), "values": cells,
            "text": [[render_ratfunc(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]}


def result_to_dict(result):
    checks = {}
    for table, name, verdict in _checks(result):
        checks[table] = {
            "summary": verdict.summary(), "ok": verdict.ok, "checked": verdict.checked,
            "mismatches": [{"row": r, "column": c, "computed": render_ratfunc(g),
                            "expected": render_ratfunc(w), "note": _note(result, table, r, c)}
                           for r, c, g, w in verdict.mismatches],
            "errata_cells": [{"row": r, "column": c, "computed": render_ratfunc(g),
                              "reading": render_ratfunc(w), "agree": g == w}
                             for r, c, g, w in verdict.skipped],
        }
    return {
        "case": result.case,
        "status": status(result),
        "conjectural": result.conjectural,
        "fclasses": [{"column": r["column"], "word": word_text(r["word"]), "size": r["size"],
                      "torus_order": render_poly(r["torus_order"])}
                     for r in result.fclass_rows],
        "pairs": list(result.pair_labels),
        "omega": _matrix_json(result.omega, result.pair_labels, result.pair_labels),
        "P": _matrix_json(result.p_matrix, result.pair_labels, result.pair_labels),
        "Lambda": _matrix_json(result.lambda_matrix, result.pair_labels, result.pair_labels),
        "Y": _matrix_json(result.y_table, result.pair_labels, result.column_labels),
        "X": _matrix_json(result.x_table, result.row_labels, result.column_labels),
        "checks": checks,
    }


def render_json(result):
    return json.dumps(result_to_dict(result), indent=1, sort_keys=True) + "\n"


def render_csv(result):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["table", "row", "column", "value"])
    for name, m, rows, cols in (
            ("Omega", result.omega, result.pair_labels, result.pair_labels),
            ("P", result.p_matrix, result.pair_labels, result.pair_labels),
            ("Lambda", result.lambda_matrix, result.pair_labels, result.pair_labels),
            ("Y", result.y_table, result.pair_labels, result.column_labels),
            ("X", result.x_table, result.row_labels, result.column_labels)):
        for i, r in enumerate(rows):
            for j, c in enumerate(cols):
                w.writerow([name, r, c, render_ratfunc(m[i, j])])
    return buf.getvalue()


def latex_bmatrix(m):
    rows = ["&".join(latex_ratfunc(m[i, j]) for j in range(m.cols)) for i in range(m.rows)]
    return "\\begin{bmatrix}\n" + "\\\\\n".join(rows) + "\n\\end{bmatrix}"


def latex_table(m, rows, cols):
    lines = ["\\begin{array}{c|%s}" % ("c" * len(cols)),
             " &" + "&".join(cols) + "\\\\\\hline"]
    for i, r in enumerate(rows):
        lines.append(r + "&" + "&".join(latex_ratfunc(m[i, j]) for j in range(m.cols)) + "\\\\")
    lines.append("\\end{array}")
    return "\n".join(lines)


def render_latex(result):
    parts = [
        "% case " + result.case + ", status " + status(result),
        "$$\\Omega=" + latex_bmatrix(result.omega) + "$$",
        "$$P=" + latex_bmatrix(result.p_matrix) + "$$",
        "$$\\Lambda=" + latex_bmatrix(result.lambda_matrix) + "$$",
        "$$" + latex_table(result.x_table, result.row_labels, result.column_labels) + "$$",
    ]
    return "\n".join(parts) + "\n"


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv, "latex": render_latex}


def emit(result, fmt, sink=None):
    """Render ``result`` in ``fmt``; write to ``sink`` (file object) when given, return the text."""
    if fmt not in RENDERERS:
        raise ValueError("unknown format %r (choose from %s)" % (fmt, ", ".join(FORMATS)))
    text = RENDERERS[fmt](result)
    if sink is not None:
        sink.write(text)
    return text


def write_reports(result, out_dir, formats=FORMATS):
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for fmt in formats:
        path = os.path.join(out_dir, "%s.%s" % (result.case, EXTENSIONS[fmt]))
        with open(path, "w", encoding="utf-8", newline="") as fh:
            emit(result, fmt, fh)
        paths.append(path)
    return paths


# ------------------------------------------------------------ models

def render_models_text(reports, sp):
    out = ["## coset models"]
    out.append("model | automorphism | |H| | coset classes | classes of H | criterion | "
               "centralizers | orders | tau | isomorphisms | status")
    for r in reports:
        out.append(" | ".join([
            r.model, r.auto_name, str(r.base_order), str(r.coset_class_count),
            str(r.base_class_count), "ok" if r.lemma_ok else "FAIL",
            "ok" if (r.centralizer_ok and r.centralizer_shape_ok) else "FAIL",
            "ok" if r.order_ok else "FAIL", "ok" if r.tau_identity_ok else "FAIL",
            "ok" if all(r.isomorphisms.values()) else "FAIL", "PASS" if r.ok else "FAIL"]))
    if sp is not None:
        out += ["", "## Sp4(2)"]
        for k, v in sp.to_json().items():
            out.append("%s: %s" % (k, v))
        out.append("status: %s" % ("PASS" if sp.ok else "FAIL"))
    return "\n".join(out) + "\n"


def models_to_dict(reports, sp):
    return {"models": [r.to_json() for r in reports], "sp42": sp.to_json() if sp else None}


# ------------------------------------------------------------ figures

def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _degree(r):
    p = is_polynomial(r)
    if p is None or p.is_zero():
        return -1
    return p.degree


def _save(fig, path):
    fig.savefig(path, dpi=100, metadata={"Software": None})


def write_figures(result, out_dir):
    """X-cell degree heatmap with mismatch markers, and the degree structure of P and Lambda."""
    plt = _pyplot()
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    x = result.x_table
    grid = [[_degree(x[i, j]) for j in range(x.cols)] for i in range(x.rows)]
    fig, ax = plt.subplots(figsize=(max(4, 0.5 * x.cols + 2), max(3, 0.4 * x.rows + 1.5)))
    im = ax.imshow(grid, cmap="viridis", vmin=-1, aspect="auto")
    ax.set_xticks(range(x.cols))
    ax.set_xticklabels(result.column_labels, rotation=90, fontsize=7)
    ax.set_yticks(range(x.rows))
    ax.set_yticklabels(result.row_labels, fontsize=7)
    bad = {(r, c) for r, c, _, _ in result.verdict.mismatches}
    for i, r in enumerate(result.row_labels):
        for j, c in enumerate(result.column_labels):
            if (r, c) in bad:
                ax.plot(j, i, marker="x", color="red", markersize=10, mew=2)
    ax.set_title("%s: degree of X cells (%s)" % (result.case, status(result)), fontsize=9)
    fig.colorbar(im, ax=ax, label="degree in q (-1 = zero)")
    fig.tight_layout()
    path = os.path.join(out_dir, "%s_x_degrees.png" % result.case)
    _save(fig, path)
    plt.close(fig)
    paths.append(path)

    p, lam = result.p_matrix, result.lambda_matrix
    fig, (a1, a2) = plt.subplots(1, 2, figsize=(9, 4))
    pg = [[_degree(p[i, j]) for j in range(p.cols)] for i in range(p.rows)]
    im = a1.imshow(pg, cmap="magma", vmin=-1)
    a1.set_title("P: entry degree", fontsize=9)
    a1.set_xticks(range(p.cols))
    a1.set_xticklabels(result.pair_labels, rotation=90, fontsize=6)
    a1.set_yticks(range(p.rows))
    a1.set_yticklabels(result.pair_labels, fontsize=6)
    fig.colorbar(im, ax=a1)
    a2.bar(range(lam.rows), [_degree(lam[i, i]) for i in range(lam.rows)], color="steelblue")
    a2.set_xticks(range(lam.rows))
    a2.set_xticklabels(result.pair_labels, rotation=90, fontsize=6)
    a2.set_title("Lambda: diagonal degree", fontsize=9)
    fig.suptitle(result.case, fontsize=10)
    fig.tight_layout()
    path = os.path.join(out_dir, "%s_p_lambda.png" % result.case)
    _save(fig, path)
    plt.close(fig)
    paths.append(path)
    return paths


def write_model_figure(reports, out_dir):
    plt = _pyplot()
    os.makedirs(out_dir, exist_ok=True)
    labels = ["%s\n%s" % (r.model, r.auto_name) for r in reports]
    fig, ax = plt.subplots(figsize=(max(6, 0.9 * len(reports)), 4))
    xs = range(len(reports))
    ax.bar([i - 0.2 for i in xs], [r.coset_class_count for r in reports], 0.4, label="classes in coset")
    ax.bar([i + 0.2 for i in xs], [r.base_class_count for r in reports], 0.4, label="classes of H")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, fontsize=7)
    ax.legend(fontsize=8)
    ax.set_title("coset class bijection per model", fontsize=9)
    fig.tight_layout()
    path = os.path.join(out_dir, "models_classes.png")
    _save(fig, path)
    plt.close(fig)
    return [path]
