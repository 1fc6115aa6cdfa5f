"""Command line: ``charsheaf run`` for one case, ``charsheaf verify`` for everything.

Exit status: 0 when every comparison passes, 1 on a mismatch, 2 on a data or I/O error.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import caseio, disconnected, report
from .caseio import CaseDataError
from .lusztig import run_case

CASES = ("b2", "g2", "f4", "b2-disconnected", "f4-disconnected", "models")
VERIFY_CASES = ("b2", "g2", "f4", "b2-disconnected", "f4-disconnected")
EXIT_OK, EXIT_MISMATCH, EXIT_DATA = 0, 1, 2


class Runner:
    """Runs cases once each, sharing the connected result with its disconnected variant."""

    def __init__(self, data_dir=None):
        self.data_dir = data_dir
        self.bundles = {}
        self.results = {}

    def bundle(self, name):
        if name not in self.bundles:
            b = caseio.load_named(name, self.data_dir)
            caseio.check_weyl(b)
            self.bundles[name] = b
        return self.bundles[name]

    def result(self, name):
        if name not in self.results:
            if name in disconnected.DISCONNECTED_CASES:
                base = self.bundle(name.split("-")[0])
                self.results[name] = run_case(disconnected.disconnected_bundle(base))
            else:
                self.results[name] = run_case(self.bundle(name))
        return self.results[name]


def _same_numbers(a, b):
    return (a.omega == b.omega and a.p_matrix == b.p_matrix and a.lambda_matrix == b.lambda_matrix
            and a.x_table == b.x_table and a.y_table == b.y_table)


def _summary(result):
    parts = []
    if not result.conjectural:
        parts.append("X %d/%d" % (result.verdict.checked - len(result.verdict.mismatches),
                                  result.verdict.checked))
    for key, name in (("omega", "Omega"), ("P", "P"), ("Lambda", "Lambda")):
        v = result.matrix_checks.get(key)
        if v is not None:
            extra = ", %d errata cells" % len(v.skipped) if v.skipped else ""
            parts.append("%s %d/%d%s" % (name, v.checked - len(v.mismatches), v.checked, extra))
    return ", ".join(parts)


def verify_case(runner, name):
    """(lines, ok) for one case; raises CaseDataError on bad data."""
    res = runner.result(name)
    lines = ["%s: %s (%s)" % (name, report.status(res), _summary(res))]
    ok = res.ok
    lines += ["  " + ln for ln in report.mismatch_lines(res)]
    if name in disconnected.DISCONNECTED_CASES:
        base = runner.result(name.split("-")[0])
        same = _same_numbers(res, base)
        lines.append("  numeric output identical to %s: %s" % (base.case, "yes" if same else "NO"))
        if not res.conjectural:
            ok = ok and same
    return lines, ok


def verify_models(names):
    reports, sp = disconnected.run_model_suite(names)
    ok = all(r.ok for r in reports) and (sp is None or sp.ok)
    lines = ["models: %s (%d coset models%s)" % (
        "PASS" if ok else "FAIL", len(reports),
        ", sp42 %s" % ("ok" if sp.ok else "FAIL") if sp is not None else "")]
    for r in reports:
        if not r.ok:
            lines.append("  %s / %s failed: %s" % (r.model, r.auto_name, json.dumps(r.to_json())))
    if sp is not None and not sp.ok:
        lines.append("  sp42 failed: %s" % json.dumps(sp.to_json(), sort_keys=True))
    return lines, ok, reports, sp


def _verify_group(args):
    names, data_dir = args
    runner = Runner(data_dir)
    out = []
    for name in names:
        try:
            lines, ok = verify_case(runner, name)
            out.append((name, lines, EXIT_OK if ok else EXIT_MISMATCH))
        except (CaseDataError, OSError) as exc:
            out.append((name, ["%s: DATA ERROR: %s" % (name, exc)], EXIT_DATA))
    return out


def _groups(cases):
    by_base = {}
    for c in cases:
        by_base.setdefault(c.split("-")[0], []).append(c)
    return list(by_base.values())


def cmd_verify(args, out):
    cases = _split(args.cases, VERIFY_CASES, "case")
    models = _split(args.models, disconnected.MODEL_NAMES, "model") if args.models != "none" else []
    groups = _groups(cases)
    if args.parallel and len(groups) > 1:
        with ProcessPoolExecutor() as pool:
            chunks = list(pool.map(_verify_group, [(g, args.data_dir) for g in groups]))
    else:
        chunks = [_verify_group((g, args.data_dir)) for g in groups]
    by_name = {name: (lines, code) for chunk in chunks for name, lines, code in chunk}
    codes = []
    for name in cases:
        lines, code = by_name[name]
        out.write("\n".join(lines) + "\n")
        codes.append(code)
    if models:
        lines, ok, reports, sp = verify_models(models)
        out.write("\n".join(lines) + "\n")
        codes.append(EXIT_OK if ok else EXIT_MISMATCH)
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            with open(os.path.join(args.out, "models.json"), "w", encoding="utf-8") as fh:
                json.dump(report.models_to_dict(reports, sp), fh, indent=1, sort_keys=True)
                fh.write("\n")
            if reports:
                report.write_model_figure(reports, args.out)
    code = EXIT_DATA if EXIT_DATA in codes else (EXIT_MISMATCH if EXIT_MISMATCH in codes else EXIT_OK)
    out.write("verify: %s\n" % {EXIT_OK: "PASS", EXIT_MISMATCH: "FAIL", EXIT_DATA: "DATA ERROR"}[code])
    return code


def cmd_run(args, out):
    formats = args.emit or ["text"]
    if args.case == "models":
        reports, sp = disconnected.run_model_suite(disconnected.MODEL_NAMES)
        out.write(report.render_models_text(reports, sp))
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            with open(os.path.join(args.out, "models.json"), "w", encoding="utf-8") as fh:
                json.dump(report.models_to_dict(reports, sp), fh, indent=1, sort_keys=True)
                fh.write("\n")
            if not args.no_figures:
                report.write_model_figure(reports, args.out)
        ok = all(r.ok for r in reports) and sp.ok
        return EXIT_OK if ok else EXIT_MISMATCH
    runner = Runner(args.data_dir)
    res = runner.result(args.case)
    report.emit(res, formats[0], out)
    if args.out:
        report.write_reports(res, args.out, formats)
        if not args.no_figures:
            report.write_figures(res, args.out)
    if res.conjectural:
        return EXIT_OK
    return EXIT_OK if res.ok else EXIT_MISMATCH


def _split(text, allowed, what):
    if text is None:
        return list(allowed)
    items = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in items if t not in allowed]
    if bad:
        raise SystemExit("unknown %s %s; choose from %s" % (what, ", ".join(bad), ", ".join(allowed)))
    return items


def build_parser():
    p = argparse.ArgumentParser(prog="charsheaf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run one case and print its report")
    r.add_argument("--case", required=True, choices=CASES)
    r.add_argument("--emit", action="append", choices=report.FORMATS,
                   help="output format; repeat for several (the first goes to stdout)")
    r.add_argument("--out", help="directory for report files and figures")
    r.add_argument("--data-dir", help="directory holding the case JSON files")
    r.add_argument("--no-figures", action="store_true", help="skip the PNG figures")
    v = sub.add_parser("verify", help="run every case and the model suite; exit 0 iff all pass")
    v.add_argument("--data-dir", help="directory holding the case JSON files")
    v.add_argument("--models", help="comma-separated models (%s), or 'none'"
                   % ",".join(disconnected.MODEL_NAMES))
    v.add_argument("--cases", help="comma-separated cases (%s)" % ",".join(VERIFY_CASES))
    v.add_argument("--out", help="directory for the model-suite JSON and figure")
    v.add_argument("--parallel", action="store_true", help="run independent cases in processes")
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(args, out)
        return cmd_verify(args, out)
    except (CaseDataError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
