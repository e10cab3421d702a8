"""Command line driver: ``cmw verify | compute | e1 | export``.

Exit status: 0 when everything passes, 1 when an identity fails (the report
shows expected, computed and their difference), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional

from .core import FormalSum, IntegrityError, MalformedInput, to_json_terms, from_json_terms
from . import conventions, group, hopf, jets, lie, suites, text
from . import homology as H

SUITE_ORDER = ["core", "lie", "hopf", "spectral", "group"]


class UsageError(Exception):
    pass


def _check_config(args) -> None:
    if args.degree < 4:
        raise UsageError("--degree must be at least 4 (got %d)" % args.degree)
    if args.jet_order is None:
        args.jet_order = args.degree + 2
    if args.jet_order < args.degree + 2:
        raise UsageError("--jet-order must be at least degree + 2 = %d (got %d)" % (args.degree + 2, args.jet_order))


def _emit(args, payload: dict, lines: List[str], name: str) -> None:
    out = json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=True) + "\n" if args.format == "json" else "\n".join(lines) + "\n"
    sys.stdout.write(out)
    if args.out:
        d = Path(args.out)
        try:
            d.mkdir(parents=True, exist_ok=True)
            (d / (name + (".json" if args.format == "json" else ".txt"))).write_text(out, encoding="utf-8")
        except OSError as exc:
            raise OSError("cannot write report to %s: %s" % (d, exc)) from exc


def _ledger_lines(ledger: dict) -> List[str]:
    return ["conventions ledger (%s):" % conventions.ledger_path()] + ["  %s: %s" % (k, ledger[k]) for k in sorted(ledger)]


# ---------------------------------------------------------------------------
# verify

def _run_suite(name: str, cfg: suites.Config) -> List[suites.Check]:
    return suites.SUITES[name](cfg)


def _import_checks(directory: Path, cfg: suites.Config) -> List[suites.Check]:
    """Re-read exported classes and re-verify them."""
    fresh = export_payloads(cfg)
    out = []
    for name, payload in fresh.items():
        path = directory / (name + ".json")
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise MalformedInput("cannot import %s: %s" % (path, exc)) from exc
        v = from_json_terms(data["terms"])
        out.append(suites.eq("imported %s equals a fresh computation" % name, "import/%s-roundtrip" % name,
                             v, from_json_terms(payload["terms"])))
        what = "1 (x) theta^0 + l" if name == "l" else name
        out.append(suites.eq("imported %s is a cocycle in %s" % (what, data["complex"]), "import/%s-cocycle" % name,
                             _is_closed(name, data["complex"], v, data["window"], cfg), True))
    return out


def _is_closed(name: str, complex_name: str, v: FormalSum, D: int, cfg: suites.Config) -> bool:
    fw = lambda w: w.filter(lambda k: hopf.tuple_weight(k[2]) <= D)
    if complex_name == "lie-bicomplex":
        return lie.truncate_n(lie.d_tot(v, D), D) == 0
    if complex_name == "hopf-bicomplex":
        return fw(hopf.d_tot48(v, D)) == 0
    if complex_name == "hopf-cyclic":
        return hopf.is_total_cocycle(hopf.split_by_degree(v), D, cfg.delta0)
    if complex_name == "group":
        if name == "l":  # l alone is not closed; 1 (x) theta^0 + l is
            v = v + FormalSum.basis((("x", 0), (0,), ()))
        return fw(group.total_group(v, D)).filter(lambda k: group.form_weight(k[0]) <= D - 2) == 0
    raise MalformedInput("unknown complex %r" % complex_name)


def _diff_lines(c: suites.Check) -> List[str]:
    if c.expected is None:
        return ["      expected: %r" % (c.detail.get("expected"),), "      computed: %r" % (c.detail.get("computed"),)] + (
            ["      failures: %r" % (c.detail["failures"],)] if c.detail.get("failures") else [])
    return ["      expected:   " + text.render(c.expected), "      computed:   " + text.render(c.computed),
            "      difference: " + text.render(c.computed - c.expected)]


def _check_json(suite: str, c: suites.Check) -> dict:
    d = {"suite": suite, "name": c.name, "anchor": c.anchor, "status": "pass" if c.passed else "fail"}
    if not c.passed:
        if c.expected is not None:
            d["expected"] = to_json_terms(c.expected)
            d["computed"] = to_json_terms(c.computed)
        else:
            d["expected"] = repr(c.detail.get("expected"))
            d["computed"] = repr(c.detail.get("computed"))
    return d


def cmd_verify(args) -> int:
    _check_config(args)
    names = SUITE_ORDER if not args.suite or "all" in args.suite else [s for s in SUITE_ORDER if s in args.suite]
    # calibration runs first and freezes the ledger; suites only read it
    ledger = conventions.freeze()
    cfg = suites.Config(D=args.degree, k=args.jet_order, seed=args.seed, delta0=conventions.delta0(ledger),
                        coordinates=ledger["class_coordinates"], samples=args.samples)
    results: Dict[str, List[suites.Check]] = {}
    if len(names) > 1 and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=min(args.jobs, len(names))) as ex:
            futs = {n: ex.submit(_run_suite, n, cfg) for n in names}
            results = {n: futs[n].result() for n in names}
    else:
        results = {n: _run_suite(n, cfg) for n in names}
    if args.import_dir:
        results["import"] = _import_checks(Path(args.import_dir), cfg)
    calib = suites.Check("conventions ledger frozen and consistent with calibration", "calibration/ledger", True)
    order = [("calibration", [calib])] + [(n, results[n]) for n in names] + (
        [("import", results["import"])] if "import" in results else [])
    ok = all(c.passed for _, cs in order for c in cs)
    lines = ["config: degree=%d jet-order=%d seed=%d" % (args.degree, args.jet_order, args.seed)]
    for suite, cs in order:
        lines.append("[%s]" % suite)
        for c in cs:
            lines.append("  %s  %-40s %s" % ("PASS" if c.passed else "FAIL", c.anchor, c.name))
            if not c.passed:
                lines += _diff_lines(c)
    lines += _ledger_lines(ledger)
    lines.append("result: %s" % ("all identities pass" if ok else "FAILURES"))
    payload = {"config": {"degree": args.degree, "jet_order": args.jet_order, "seed": args.seed, "suites": names},
               "ledger": ledger, "status": "pass" if ok else "fail",
               "identities": [_check_json(s, c) for s, cs in order for c in cs]}
    _emit(args, payload, lines, "report")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# compute

def _cut_fw(v: FormalSum, D: int) -> FormalSum:
    return v.filter(lambda k: hopf.tuple_weight(k[2]) <= D)


HOPF_OPS = {
    "bnstar": lambda c, D: hopf.bN_star(c, D),
    "dce": lambda c, D: hopf.d_ce48(c, D),
    "dtot": lambda c, D: _cut_fw(hopf.d_tot48(c, D), D),
    "bs": lambda c, D: group.bs_group(c, D),
    "bn": lambda c, D: group.bN_group(c, D),
    "gtot": lambda c, D: group.total_group(c, D),
    "vanest": lambda c, D: lie.truncate_n(hopf.van_est(c), D),
    "pipeline": lambda c, D: hopf.pipeline(c, D),
}
LIE_OPS = {
    "dup": lambda c, D: lie.d_up(c, D),
    "dright": lambda c, D: lie.d_right(c, D),
    "lietot": lambda c, D: lie.truncate_n(lie.d_tot(c, D), D),
}
BINARY_OPS = {
    "cup": ("hopf", lambda a, b, D: _cut_fw(hopf.cup413(a, b, D), D)),
    "star": ("hopf", lambda a, b, D: _cut_fw(hopf.star(a, b, D), D)),
    "liecup": ("lie", lambda a, b, D: lie.truncate_n(lie.tot_cup(a, b), D)),
}
OUT_KIND = {"vanest": "lie", "pipeline": "cyclic"}
OPS = sorted(list(HOPF_OPS) + list(LIE_OPS) + list(BINARY_OPS) + ["eval"])


def cmd_compute(args) -> int:
    _check_config(args)
    D, op = args.degree, args.op
    if op == "eval":
        if not args.jets:
            raise UsageError("--op eval needs --jets")
        psis = [jets.Jet.from_text(s) for s in args.jets]
        c = text.parse(args.input, "hopf")
        result = group.evaluate(c, psis, D)
        kind = "hopf"
    elif op in BINARY_OPS:
        kind, fn = BINARY_OPS[op]
        if args.input2 is None:
            raise UsageError("--op %s needs --input2" % op)
        result = fn(text.parse(args.input, kind), text.parse(args.input2, kind), D)
    elif op in LIE_OPS:
        kind = "lie"
        result = LIE_OPS[op](text.parse(args.input, kind), D)
    else:
        result = HOPF_OPS[op](text.parse(args.input, "hopf"), D)
        kind = OUT_KIND.get(op, "hopf")
    shown = text.render(result, kind)
    payload = {"op": op, "input": args.input, "degree": D, "result": to_json_terms(result), "text": shown}
    _emit(args, payload, [shown], "compute-" + op)
    return 0


# ---------------------------------------------------------------------------
# e1

def cmd_e1(args) -> int:
    _check_config(args)
    D = args.degree
    if args.complex == "lie36":
        B, kind = H.lie_bicomplex(D, args.weight), "lie"
    else:
        B, kind = H.hopf_bicomplex(D, args.weight, args.normalized), "hopf"
    # column = n*-degree (--p), row = s*-degree (--q)
    dim, reps = B.column_complex(args.p).cohomology(args.q)
    payload = {"complex": args.complex, "page": 1, "p": args.p, "q": args.q, "weight": args.weight, "degree": D,
               "dim": dim,
               "representatives": [{"text": text.render(r, kind), "terms": to_json_terms(r)} for r in reps]}
    lines = ["E_1^{%d,%d} of %s (weight %d, window %d): dim %d" % (args.p, args.q, args.complex, args.weight, D, dim)]
    lines += ["  [%s]" % text.render(r, kind) for r in reps]
    args.format = args.format or "json"
    _emit(args, payload, lines, "e1-%s-%d-%d" % (args.complex, args.p, args.q))
    return 0


# ---------------------------------------------------------------------------
# export

def _bidegrees(v: FormalSum, complex_name: str) -> list:
    if complex_name == "hopf-cyclic":
        return sorted({(len(k[1]),) for k in v.keys()})
    return sorted({(len(k[2]), len(k[1])) for k in v.keys()})


def export_payloads(cfg: suites.Config) -> Dict[str, dict]:
    D = cfg.D
    classes = {
        "lambda": ("lie-bicomplex", lie.lam(D)),
        "mu": ("lie-bicomplex", lie.mu(D)),
        "lambda_prime": ("hopf-bicomplex", hopf.lambda_prime(D, cfg.coordinates)),
        "mu_prime": ("hopf-bicomplex", hopf.mu_prime(D, cfg.coordinates)),
    }
    for kind in ("lambda", "mu"):
        comps = suites.hopf_class_components(D, kind, cfg.coordinates)
        completed, _ = hopf.complete_total_cocycle(comps, D, cfg.delta0)
        if completed is None:
            raise IntegrityError("%s_Hopf does not complete to a total cocycle in window %d" % (kind, D))
        total = FormalSum()
        for v in completed.values():
            total = total + v
        classes[kind + "_hopf"] = ("hopf-cyclic", total)
    g = group.build_group_cocycles(D + 2)
    cut = lambda v: v.filter(lambda k: group.form_weight(k[0]) <= D)
    classes["dl"] = ("group", cut(g["dl"]))
    classes["l"] = ("group", cut(g["l"]))
    return {name: {"complex": cx, "window": D, "bidegree": [list(b) for b in _bidegrees(v, cx)],
                   "terms": to_json_terms(v)} for name, (cx, v) in classes.items()}


def cmd_export(args) -> int:
    _check_config(args)
    ledger = conventions.freeze()
    cfg = suites.Config(D=args.degree, k=args.jet_order, seed=args.seed, delta0=conventions.delta0(ledger),
                        coordinates=ledger["class_coordinates"])
    out = Path(args.out or "export")
    files = {name + ".json": json.dumps(p, indent=2, ensure_ascii=False, sort_keys=True) + "\n"
             for name, p in export_payloads(cfg).items()}
    files["conventions.json"] = conventions.dumps(ledger)
    try:
        out.mkdir(parents=True, exist_ok=True)
        for name, body in sorted(files.items()):
            (out / name).write_text(body, encoding="utf-8")
    except OSError as exc:
        raise OSError("cannot export to %s: %s" % (out, exc)) from exc
    lines = ["wrote %s" % (out / n) for n in sorted(files)]
    sys.stdout.write(json.dumps({"out": str(out), "files": sorted(files)}, indent=2) + "\n"
                     if args.format == "json" else "\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-D", "--degree", type=int, default=6, help="weight window bound D (>= 4)")
    common.add_argument("--jet-order", type=int, default=None, help="jet order k (>= D + 2; default D + 2)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=["text", "json"], default=None)
    common.add_argument("--out", default=None, help="directory for reports / exports")

    p = argparse.ArgumentParser(prog="cmw", description="exact verification of characteristic classes of formal vector fields")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", action="append", choices=SUITE_ORDER + ["all"])
    v.add_argument("--samples", type=int, default=20, help="random samples per randomized identity")
    v.add_argument("--jobs", type=int, default=1, help="run suites in parallel processes")
    v.add_argument("--import", dest="import_dir", default=None, help="re-verify classes exported to this directory")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("compute", parents=[common], help="apply an operator to a cochain")
    c.add_argument("--op", required=True, choices=OPS)
    c.add_argument("--input", required=True, help='cochain in text notation, e.g. "1⊗θ0"')
    c.add_argument("--input2", default=None, help="second factor for cup / star / liecup")
    c.add_argument("--jets", action="append", help='jet "[k; a1, ..., ak]" for --op eval (repeat per slot)')
    c.set_defaults(func=cmd_compute)

    e = sub.add_parser("e1", parents=[common], help="E_1 page of a bicomplex")
    e.add_argument("--complex", choices=["lie36", "hopf48"], required=True)
    e.add_argument("--p", type=int, required=True, help="column: n*-degree")
    e.add_argument("--q", type=int, required=True, help="row: s*-degree")
    e.add_argument("--weight", type=int, default=0)
    e.add_argument("--normalized", action="store_true")
    e.set_defaults(func=cmd_e1)

    x = sub.add_parser("export", parents=[common], help="write the classes as JSON")
    x.set_defaults(func=cmd_export)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format is None and args.command != "e1":
        args.format = "text"
    try:
        return args.func(args)
    except (UsageError, MalformedInput) as exc:
        sys.stderr.write("cmw: error: %s\n" % exc)
        return 2
    except (IntegrityError, OSError) as exc:
        sys.stderr.write("cmw: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
