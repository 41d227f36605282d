"""Command-line front end: ``spectral-ham analyze|construct|scan|reproduce``.

Exit codes: 0 when every report is definite (certified or exceptional),
1 when some report is inconclusive or a check fails, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import certifier
from .acceptance import CRITERIA, SUITES, run_suite
from .certifier import SoundnessError, VerdictKind
from .graph import ExtremalSpec, Family, Graph, build_extremal
from .io import GraphFormatError, iter_graph6, parse_edge_list, write_edge_list, write_graph6
from .spectral import DEFAULT_TOL, spectral_radius
from .tightness import scan_to_csv, threshold_scan, to_json

THEOREMS = ("mtc", "mtp", "li-ning", "ore", "chvatal")
THREADS_ENV = "SPECTRAL_HAM_THREADS"


class InputError(Exception):
    pass


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    cap = os.cpu_count() or 1
    if raw is None:
        return cap
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{THREADS_ENV} must be an integer, got {raw!r}")
    return max(1, min(value, cap))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")


def load_graphs(path: str, fmt: str) -> list[tuple[int, Graph]]:
    text = _read_text(path)
    try:
        if fmt == "graph6":
            return list(iter_graph6(text))
        if fmt == "edgelist":
            return [(1, parse_edge_list(text))]
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}")
    raise InputError(f"unknown format {fmt!r}")


# -- analyze ---------------------------------------------------------------------


def _jobs(theorems: list[str], modes: list[str]) -> list[tuple[str, str]]:
    out = []
    for th in theorems:
        if th == "mtc":
            if "cycle" in modes:
                out.append((th, "cycle"))
        elif th == "mtp":
            if "path" in modes:
                out.append((th, "path"))
        else:
            out.extend((th, m) for m in modes)
    return out


def _run_one(G: Graph, theorem: str, mode: str, k: int | None, tol: Fraction, est) -> dict:
    try:
        if theorem == "mtc":
            v = certifier.certify_cycle(G, k, tol, est)
        elif theorem == "mtp":
            v = certifier.certify_path(G, k, tol, est)
        elif theorem == "li-ning":
            v = certifier.certify_li_ning(G, k, mode, tol, est)
        elif theorem == "ore":
            v = certifier.certify_ore(G, mode)
        else:
            v = certifier.certify_chvatal(G, mode)
    except SoundnessError as exc:
        return {"kind": "Contradiction", "theorem": theorem, "mode": mode, "error": str(exc)}
    except ValueError as exc:
        if k is not None and G.min_degree < k:
            raise InputError(f"k={k} exceeds the minimum degree {G.min_degree}")
        return {"kind": VerdictKind.INCONCLUSIVE.value, "theorem": theorem, "mode": mode,
                "failing_premise": "minimum-degree", "error": str(exc)}
    d = v.to_dict()
    d["mode"] = mode
    return d


def analyze_graph(args: tuple) -> dict:
    index, line, G, jobs, k, tol = args
    if k is not None and G.min_degree < k:
        raise InputError(f"graph {index} (line {line}): k={k} exceeds the minimum degree {G.min_degree}")
    est = spectral_radius(G, tol)
    reports = [_run_one(G, th, mode, k, tol, est) for th, mode in jobs]
    return {"graph": index, "line": line, "n": G.n, "m": G.m, "graph6": write_graph6(G), "reports": reports}


def _definite(report: dict) -> bool:
    return report["kind"] in (VerdictKind.CERTIFIED_CYCLE.value, VerdictKind.CERTIFIED_PATH.value, VerdictKind.EXCEPTIONAL.value)


def _human(result: dict) -> str:
    lines = [f"graph {result['graph']} (line {result['line']}): n={result['n']} m={result['m']}"]
    for r in result["reports"]:
        text = f"  {r['theorem']:8s} {r['mode']:5s} {r['kind']}"
        if r.get("exceptional_family"):
            text += f"({r['exceptional_family']})"
        if r.get("failing_premise"):
            text += f" [failing: {r['failing_premise']}]"
        if r.get("lambda_lo"):
            text += f" lambda in [{r['lambda_lo']['float']:.12g}, {r['lambda_hi']['float']:.12g}]"
        if r.get("certificate"):
            text += f" certificate={r['certificate']}"
        if r.get("error") and r["kind"] == "Contradiction":
            text += f" {r['error']}"
        lines.append(text)
    return "\n".join(lines)


def cmd_analyze(ns: argparse.Namespace) -> int:
    graphs = load_graphs(ns.input, ns.format)
    theorems = list(THEOREMS) if ns.theorem == "all" else [ns.theorem]
    modes = ["cycle", "path"] if ns.mode == "both" else [ns.mode]
    jobs = _jobs(theorems, modes)
    tol = Fraction(ns.tol)
    tasks = [(i, line, G, jobs, ns.k, tol) for i, (line, G) in enumerate(graphs)]
    workers = worker_count()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(analyze_graph, tasks))
    else:
        results = [analyze_graph(t) for t in tasks]
    if ns.json:
        sys.stdout.write(json.dumps(results, indent=2) + "\n")
    else:
        for r in results:
            print(_human(r))
    all_definite = all(_definite(rep) for r in results for rep in r["reports"])
    return 0 if all_definite else 1


# -- construct --------------------------------------------------------------------


def _class_pair(text: str) -> tuple[str, str]:
    cleaned = text.upper().replace("-", "").replace("_", "")
    if len(cleaned) != 2 or any(c not in "XYZ" for c in cleaned):
        raise InputError(f"edge class must be two of X, Y, Z (e.g. YZ), got {text!r}")
    return cleaned[0], cleaned[1]


def cmd_construct(ns: argparse.Namespace) -> int:
    try:
        spec = ExtremalSpec(Family.parse(ns.family), ns.k, ns.n)
    except ValueError as exc:
        raise InputError(str(exc))
    G, parts = build_extremal(spec)
    classes = dict(zip("XYZ", (list(p) for p in parts)))
    deleted = None
    if ns.delete_edge:
        a, b = _class_pair(ns.delete_edge)
        deleted = next(((u, v) for u in classes[a] for v in classes[b] if u != v and G.has_edge(u, v)), None)
        if deleted is None:
            raise InputError(f"{spec.name} has no edge between classes {a} and {b}")
        G = G.remove_edge(*deleted)
    body = write_graph6(G) + "\n" if ns.out == "graph6" else write_edge_list(G)
    sidecar = {
        "family": spec.family.value,
        "k": spec.k,
        "n": spec.n,
        "m": G.m,
        "sizes": list(spec.sizes),
        "X": classes["X"],
        "Y": classes["Y"],
        "Z": classes["Z"],
        "deleted_edge": list(deleted) if deleted else None,
    }
    side_text = json.dumps(sidecar, indent=2) + "\n"
    if ns.output:
        Path(ns.output).write_text(body)
        side_path = ns.sidecar or ns.output + ".partition.json"
        Path(side_path).write_text(side_text)
    else:
        sys.stdout.write(body)
        if ns.sidecar:
            Path(ns.sidecar).write_text(side_text)
    return 0


# -- scan --------------------------------------------------------------------------


def cmd_scan(ns: argparse.Namespace) -> int:
    try:
        family = Family.parse(ns.family)
    except ValueError as exc:
        raise InputError(str(exc))
    if ns.k < (0 if family is Family.N else 1):
        raise InputError(f"k={ns.k} is not admissible for family {family.value}")
    result = threshold_scan(family, ns.k, range(ns.n_min, ns.n_max + 1), Fraction(ns.tol), workers=worker_count())
    text = scan_to_csv(result) if ns.out == "csv" else to_json(result) + "\n"
    if ns.output:
        Path(ns.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# -- reproduce --------------------------------------------------------------------


def cmd_reproduce(ns: argparse.Namespace) -> int:
    criteria = None
    if ns.criteria:
        try:
            criteria = [int(c) for c in ns.criteria.split(",")]
        except ValueError:
            raise InputError(f"criteria must be comma-separated integers, got {ns.criteria!r}")
        unknown = [c for c in criteria if c not in CRITERIA]
        if unknown:
            raise InputError(f"unknown criteria {unknown}")
    results = run_suite(ns.seed, ns.sweep_size, criteria, on_result=lambda r: print(r.line(), flush=True))
    passed = sum(r.passed for r in results)
    summary = {
        "suite": ns.suite,
        "seed": ns.seed,
        "passed": passed,
        "total": len(results),
        "criteria": {str(r.number): r.passed for r in results},
    }
    print(json.dumps(summary, sort_keys=False))
    if ns.json:
        Path(ns.json).write_text(json.dumps([r.to_dict() for r in results], indent=2, default=str) + "\n")
    return 0 if passed == len(results) else 1


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spectral-ham", description="Spectral Hamiltonicity certificates for graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="apply the sufficient conditions to input graphs")
    a.add_argument("input", help="input file, or - for stdin")
    a.add_argument("--format", default="graph6", help="graph6 (one graph per line) or edgelist")
    a.add_argument("--k", type=int, default=None, help="degree parameter (default: minimum degree)")
    a.add_argument("--mode", choices=("cycle", "path", "both"), default="both")
    a.add_argument("--theorem", choices=THEOREMS + ("all",), default="all")
    a.add_argument("--tol", default=str(DEFAULT_TOL), help="width of certified intervals (rational or decimal)")
    a.add_argument("--json", action="store_true", help="emit JSON reports")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="write an extremal family graph")
    c.add_argument("--family", required=True, help="L, M, N or split")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--delete-edge", default=None, help="delete one edge between two classes, e.g. YZ")
    c.add_argument("--out", choices=("graph6", "edgelist"), default="graph6")
    c.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    c.add_argument("--sidecar", default=None, help="partition JSON path (default OUTPUT.partition.json)")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("scan", help="classify one-edge deletions against the threshold")
    s.add_argument("--family", required=True, help="M, N, L or split")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--out", choices=("csv", "json"), default="csv")
    s.add_argument("--tol", default=str(DEFAULT_TOL))
    s.add_argument("--output", "-o", default=None)
    s.set_defaults(func=cmd_scan)

    r = sub.add_parser("reproduce", help="run the numbered reproduction checks")
    r.add_argument("--suite", choices=SUITES, default="paper")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--sweep-size", type=int, default=10_000, help="random graphs in the soundness sweep")
    r.add_argument("--criteria", default=None, help="comma-separated subset, e.g. 1,4,8")
    r.add_argument("--json", default=None, help="write detailed results to this path")
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if hasattr(ns, "tol"):
            try:
                ns.tol = Fraction(ns.tol)
            except ValueError:
                raise InputError(f"bad --tol {ns.tol!r}")
            if ns.tol <= 0:
                raise InputError("--tol must be positive")
        return ns.func(ns)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
