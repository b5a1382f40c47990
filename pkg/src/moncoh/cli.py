"""Command-line front end.

Exit status: 0 when every theorem-guaranteed verdict holds, 1 when one fails,
2 on input errors. ``MONCOH_WORKERS`` caps the worker pool used by ``sweep``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import cohomology, lab
from .corpus import MODES, CorpusSpec, build_corpus, write_corpus
from .monomial import InputError, SimplicialComplex, bracket_power, complex_of, ideal_from_json, is_squarefree

CHECKS = ("injectivity", "depth", "vanishing", "ext-tor", "purity", "rspan", "phi-iso", "example-3-2")
SWEEP_CHECKS = ("injectivity", "depth", "vanishing", "purity", "phi-iso", "criterion", "duality")


def _load_ideal(text: str, what: str = "--ideal"):
    """An ideal from inline JSON or a path to a JSON file."""
    src = text
    if not text.lstrip().startswith("{"):
        path = Path(text)
        if not path.exists():
            raise InputError(f"{what}: no such file {text}")
        src = path.read_text()
        what = str(path)
    try:
        return ideal_from_json(src)
    except InputError as exc:
        raise InputError(f"{what}: {exc}") from None


def _load_complex(text: str) -> SimplicialComplex:
    src = Path(text).read_text() if not text.lstrip().startswith("{") else text
    try:
        obj = json.loads(src)
        return SimplicialComplex.from_facets(int(obj["vertex_count"]), obj["facets"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"--complex: malformed complex JSON ({exc})") from None


def _workers() -> int:
    cap = os.environ.get("MONCOH_WORKERS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise InputError(f"MONCOH_WORKERS must be an integer, got {cap!r}") from None
    return n


def _emit_table(table, as_json: bool, out):
    if as_json:
        out.write(json.dumps(table.to_json()) + "\n")
    else:
        out.write(table.pretty() + "\n")


def _emit_verdicts(verdicts, out) -> int:
    status = 0
    for v in verdicts:
        out.write(json.dumps(v.to_json()) + "\n")
        if v.guaranteed and not v.ok:
            status = 1
    return status


# -- commands -------------------------------------------------------------------


def cmd_ext(args, out):
    a = _load_ideal(args.ideal)
    if args.bracket:
        a = bracket_power(a, args.bracket if len(args.bracket) > 1 else args.bracket[0])
    coeff = _load_ideal(args.coeff, "--coeff") if args.coeff else None
    _emit_table(cohomology.ext_table(a, args.i, coeff=coeff), args.json, out)
    return 0


def cmd_lca(args, out):
    _emit_table(cohomology.ha_table(_load_ideal(args.ideal), args.i), args.json, out)
    return 0


def cmd_lcm(args, out):
    _emit_table(cohomology.hm_table(_load_ideal(args.ideal), args.j), args.json, out)
    return 0


def _k(args):
    return args.k[0] if len(args.k) == 1 else tuple(args.k)


def cmd_check(args, out):
    name = args.name
    if name == "example-3-2":
        return _emit_verdicts([lab.check_example_3_2(d, t) for d in args.d for t in args.t], out)
    if name == "vanishing":
        if args.complex:
            delta = _load_complex(args.complex)
        elif args.ideal:
            delta = complex_of(_load_ideal(args.ideal))
        else:
            raise InputError("check vanishing needs --complex or --ideal")
        return _emit_verdicts([lab.check_vanishing_equivalence(delta)], out)
    if not args.ideal:
        raise InputError(f"check {name} needs --ideal")
    a = _load_ideal(args.ideal)
    k = _k(args)
    if name == "injectivity":
        verdicts = lab.check_injectivity_chain(a, k, args.t_max)
    elif name == "depth":
        verdicts = [lab.check_depth_injectivity(a, window=args.window)]
    elif name == "ext-tor":
        if not args.coeff:
            raise InputError("check ext-tor needs --coeff")
        verdicts = [lab.check_ext_tor(a, _load_ideal(args.coeff, "--coeff"))]
    elif name == "purity":
        verdicts = [lab.check_purity_splitting(a, k, args.window)]
    elif name == "rspan":
        js = [args.j] if args.j is not None else range(a.num_vars + 1)
        verdicts = [lab.check_rspan_surjectivity(a, k, j, args.window) for j in js]
    elif name == "phi-iso":
        verdicts = [lab.check_phi_ext_iso(a, k)]
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown check {name}")
    return _emit_verdicts(verdicts, out)


def cmd_corpus(args, out):
    spec = CorpusSpec(args.vars, args.mode, args.bound, args.count, args.seed, args.field_char)
    ideals = build_corpus(spec)
    paths = write_corpus(ideals, args.out)
    out.write(json.dumps({"mode": spec.mode, "num_vars": spec.num_vars, "count": len(paths),
                          "directory": str(args.out)}) + "\n")
    return 0


def _run_checks(task):
    """Worker: all requested checks on one ideal; returns serializable results."""
    path, text, checks, k = task
    a = ideal_from_json(text)
    verdicts = []
    for name in checks:
        if name == "injectivity":
            verdicts += lab.check_injectivity_chain(a, k, 1)
        elif name == "depth":
            verdicts.append(lab.check_depth_injectivity(a))
        elif name == "vanishing":
            if is_squarefree(a) and not a.is_unit():
                verdicts.append(lab.check_vanishing_equivalence(complex_of(a)))
        elif name == "purity":
            verdicts.append(lab.check_purity_splitting(a, k))
        elif name == "phi-iso":
            verdicts.append(lab.check_phi_ext_iso(a, k))
        elif name == "criterion":
            verdicts += lab.check_vanishing_criterion(a, k)
        elif name == "duality":
            bad = cohomology.local_duality_mismatches(a)
            verdicts.append(lab.Verdict("local-duality", {"ideal": a.to_json()}, "fails" if bad else "holds",
                                        {"mismatches": [[i, list(x) if x else None] for i, x in bad]} if bad else None))
    return path, [(v.to_json(), v.guaranteed, v.ok) for v in verdicts]


def cmd_sweep(args, out):
    directory = Path(args.corpus)
    if not directory.is_dir():
        raise InputError(f"--corpus: {directory} is not a directory")
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = set(checks) - set(SWEEP_CHECKS)
    if unknown:
        raise InputError(f"--checks: unknown checks {sorted(unknown)}; choose from {', '.join(SWEEP_CHECKS)}")
    tasks = []
    for path in sorted(directory.glob("*.json")):
        text = path.read_text()
        try:
            ideal_from_json(text)
        except InputError as exc:
            raise InputError(f"{path}: {exc}") from None
        tasks.append((path.name, text, checks, args.k))
    workers = _workers()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_checks, tasks))
    else:
        results = [_run_checks(t) for t in tasks]
    results.sort(key=lambda r: r[0])
    totals = {}
    status = 0
    records = []
    for name, verdicts in results:
        for obj, guaranteed, ok in verdicts:
            bucket = totals.setdefault(obj["claim"], {})
            bucket[obj["result"]] = bucket.get(obj["result"], 0) + 1
            if guaranteed and not ok:
                status = 1
            records.append(dict(obj, file=name))
    report = {"corpus": str(directory), "checks": checks, "files": len(results),
              "verdict_count": len(records), "totals": totals, "verdicts": records}
    out.write(json.dumps(report, sort_keys=True) + "\n")
    return status


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="moncoh", description="Multigraded Ext and local cohomology of monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("ext", help="Ext^i(R/a, R) dimension table")
    e.add_argument("--ideal", required=True, help="ideal JSON (inline or file)")
    e.add_argument("--i", type=int, required=True)
    e.add_argument("--bracket", type=int, nargs="+", help="replace a by its bracket power a^[k]")
    e.add_argument("--coeff", help="compute Ext^i(R/a, R/b) for this ideal b")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_ext)

    la = sub.add_parser("lc-a", help="H^i_a(R) dimension table")
    la.add_argument("--ideal", required=True)
    la.add_argument("--i", type=int, required=True)
    la.add_argument("--json", action="store_true")
    la.set_defaults(func=cmd_lca)

    lm = sub.add_parser("lc-m", help="H^j_m(R/a) dimension table")
    lm.add_argument("--ideal", required=True)
    lm.add_argument("--j", type=int, required=True)
    lm.add_argument("--json", action="store_true")
    lm.set_defaults(func=cmd_lcm)

    c = sub.add_parser("check", help="run a theorem check and print verdict JSON lines")
    c.add_argument("name", choices=CHECKS)
    c.add_argument("--ideal")
    c.add_argument("--coeff")
    c.add_argument("--complex", help='{"vertex_count": n, "facets": [[0, 1], ...]} (0-based vertices)')
    c.add_argument("--k", type=int, nargs="+", default=[2])
    c.add_argument("--t-max", type=int, default=1)
    c.add_argument("--j", type=int)
    c.add_argument("--window", type=int)
    c.add_argument("--d", type=int, nargs="+", default=[2, 3])
    c.add_argument("--t", type=int, nargs="+", default=[1, 2])
    c.set_defaults(func=cmd_check)

    co = sub.add_parser("corpus", help="write a corpus of ideal JSON files")
    co.add_argument("--vars", type=int, required=True)
    co.add_argument("--mode", choices=MODES, default="all-squarefree")
    co.add_argument("--count", type=int, default=50)
    co.add_argument("--seed", type=int, default=0)
    co.add_argument("--bound", type=int, default=2)
    co.add_argument("--field-char", type=int, default=0)
    co.add_argument("--out", required=True)
    co.set_defaults(func=cmd_corpus)

    sw = sub.add_parser("sweep", help="run checks over a corpus directory")
    sw.add_argument("--corpus", required=True)
    sw.add_argument("--checks", default="injectivity,vanishing")
    sw.add_argument("--k", type=int, default=2)
    sw.set_defaults(func=cmd_sweep)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
