"""Command line interface.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 solver budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from . import catalog
from .collapse import collapse_report
from .complex import DomainError, Kind, SpaceSpec, build_complex, enumerate_cells, top_dimension
from .groups import (
    DEFAULT_MAX_NODES,
    AnnularWord,
    CactusWord,
    SolverBudgetExceeded,
    TwinWord,
    WordError,
    bar,
    cactus_equal,
    cactus_is_trivial,
    free_reduce,
    kappa,
    mu,
    mu_prime,
    perm_image,
    round_to_annular,
    twin_equal,
    twin_is_trivial,
    verify_presentation,
)
from .homology import homology, homology_report

log = logging.getLogger("roundtwin")

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

WORD_TYPES = {"twin": TwinWord, "cactus": CactusWord, "annular": AnnularWord}


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="roundtwin", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="verb", required=True)

    def space_args(p, n_required=True):
        p.add_argument("--space", choices=[k.value for k in Kind], default="round")
        p.add_argument("--n", type=_positive, required=n_required)

    p = sub.add_parser("cells", help="cell counts or cell lists")
    space_args(p)
    p.add_argument("--dim", type=int)
    p.add_argument("--json", action="store_true", help="complex export JSON")

    p = sub.add_parser("homology", help="integral homology")
    space_args(p, n_required=False)
    p.add_argument("--all", action="store_true", help="every catalogued space")
    p.add_argument("--check", action="store_true", help="compare with the catalog")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("collapse", help="free-face collapse")
    space_args(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("euler", help="Euler characteristic gluing check")
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("word", help="word operations")
    p.add_argument("--group", choices=list(WORD_TYPES), required=True)
    p.add_argument("--n", type=_positive, required=True)
    ops = p.add_mutually_exclusive_group(required=True)
    for op in ("trivial", "equal", "perm", "kappa", "mu", "bar", "annular", "reduce"):
        ops.add_argument(f"--{op}", dest="op", action="store_const", const=op)
    p.add_argument("--max-nodes", type=_positive, default=DEFAULT_MAX_NODES)
    p.add_argument("words", nargs="+")

    p = sub.add_parser("verify", help="audit presentation relators")
    p.add_argument("--group", choices=list(WORD_TYPES), required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--max-nodes", type=_positive, default=DEFAULT_MAX_NODES)

    sub.add_parser("catalog", help="dump catalogued facts")
    return parser


def _validate(args) -> None:
    if args.verb == "cells" and args.dim is not None and args.dim < 0:
        raise UsageError("--dim must be nonnegative")
    if args.verb == "homology" and args.all == (args.n is not None):
        raise UsageError("give exactly one of --n or --all")
    if args.verb == "word":
        need = 2 if args.op == "equal" else 1
        if len(args.words) != need:
            raise UsageError(f"--{args.op} takes {need} word(s)")
        allowed = {"kappa": ("twin",), "annular": ("twin",), "mu": ("cactus",), "bar": ("cactus",)}
        if args.op in allowed and args.group not in allowed[args.op]:
            raise UsageError(f"--{args.op} applies to {allowed[args.op][0]} words")
        if args.op == "mu" and args.n < 4:
            raise UsageError("--mu needs n >= 4")
        if args.op == "kappa" and args.n < 2:
            raise UsageError("--kappa needs n >= 2")
    if args.verb == "verify" and args.group == "annular" and args.n < 2:
        raise UsageError("annular groups need n >= 2")
    if args.verb == "euler" and args.n < 3:
        raise UsageError("euler needs n >= 3")


def _cmd_cells(args, out) -> int:
    space = SpaceSpec(args.space, args.n)
    if args.json:
        doc = build_complex(space).to_json()
        if args.dim is not None:
            keep = {c["id"] for c in doc["cells"] if c["dim"] == args.dim}
            doc["cells"] = [c for c in doc["cells"] if c["id"] in keep]
            doc["boundary"] = [b for b in doc["boundary"] if b["cell"] in keep]
        out.write(_dump(doc) + "\n")
    elif args.dim is not None:
        for c in enumerate_cells(space, args.dim):
            out.write(f"{c}\n")
    else:
        out.write(" ".join(str(m) for m in build_complex(space).counts) + "\n")
    return EXIT_OK


def _homology_job(space: SpaceSpec) -> dict:
    cx = build_complex(space)
    return homology_report(cx, homology(cx))


def _cmd_homology(args, out) -> int:
    if args.all:
        spaces = [f.space for f in catalog.known_facts()]
    else:
        spaces = [SpaceSpec(args.space, args.n)]
    if args.jobs > 1 and len(spaces) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_homology_job, spaces))
    else:
        reports = [_homology_job(s) for s in spaces]
    status = EXIT_OK
    for space, rep in zip(spaces, reports):
        log.info("homology of %s done", space)
        if args.check:
            expected = catalog.expected_betti(space)
            if expected is None:
                rep["check"] = "unknown"
            elif catalog.betti_match(expected, rep["betti"]) and not any(rep["torsion"]):
                rep["check"] = "ok"
            else:
                rep["check"] = "mismatch"
                rep["expected"] = list(expected)
                status = EXIT_CHECK
        if args.json:
            out.write(_dump(rep) + "\n")
        else:
            out.write(f"{space}\n")
            out.write(f"betti: {rep['betti']}\n")
            out.write(f"torsion: {rep['torsion']}\n")
            out.write(f"euler: {rep['euler']}\n")
            if args.check:
                extra = f" expected {rep['expected']}" if rep["check"] == "mismatch" else ""
                out.write(f"check: {rep['check']}{extra}\n")
    return status


def _cmd_collapse(args, out) -> int:
    cx = build_complex(SpaceSpec(args.space, args.n))
    doc = collapse_report(cx)
    if args.json:
        out.write(_dump(doc) + "\n")
    else:
        counts = [0] * (cx.dimension + 1)
        for c in doc["cells"]:
            counts[c["dim"]] += 1
        while len(counts) > 1 and not counts[-1]:
            counts.pop()
        out.write("before: " + " ".join(map(str, cx.counts)) + "\n")
        out.write("after: " + " ".join(map(str, counts)) + "\n")
        out.write(f"collapses: {len(doc['log'])}\n")
    return EXIT_OK


def _cmd_euler(args, out) -> int:
    n = args.n
    q, m1, m2 = catalog.euler_sides(n)
    ok = q == m1 - (n - 1) * m2
    out.write(f"chi(Q{n}) = {q}\n")
    out.write(f"chi(M{n - 1}) - {n - 1}*chi(M{n - 2}) = {m1} - {n - 1}*{m2} = {m1 - (n - 1) * m2}\n")
    out.write(f"consistent: {'true' if ok else 'false'}\n")
    return EXIT_OK if ok else EXIT_CHECK


def _cmd_word(args, out) -> int:
    cls = WORD_TYPES[args.group]
    words = [cls.parse(args.n, text) for text in args.words]
    w = words[0]
    op = args.op
    try:
        if op == "trivial":
            if args.group == "annular":
                raise UsageError("no word problem solver for annular words")
            solve = twin_is_trivial if args.group == "twin" else cactus_is_trivial
            out.write(f"trivial: {'true' if solve(w, args.max_nodes) else 'false'}\n")
        elif op == "equal":
            if args.group == "annular":
                raise UsageError("no word problem solver for annular words")
            same = twin_equal if args.group == "twin" else cactus_equal
            out.write(f"equal: {'true' if same(*words, args.max_nodes) else 'false'}\n")
    except SolverBudgetExceeded as exc:
        log.warning("%s", exc)
        out.write(f"{op}: undecided\n")
        return EXIT_BUDGET
    if op == "perm":
        out.write(f"perm: {perm_image(w)}\n")
    elif op == "kappa":
        out.write(f"kappa: {kappa(w)}\n")
    elif op == "annular":
        out.write(f"annular: {round_to_annular(w)}\n")
    elif op == "bar":
        out.write(f"bar: {bar(w)}\n")
    elif op == "reduce":
        out.write(f"reduce: {free_reduce(w)}\n")
    elif op == "mu":
        prime, k = mu_prime(w)
        out.write(f"mu: {mu(w)}\n")
        out.write(f"mu_prime: {prime}\n")
        out.write(f"k: {k}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    try:
        report = verify_presentation(args.group, args.n, args.max_nodes)
    except SolverBudgetExceeded:
        out.write("verify: undecided\n")
        return EXIT_BUDGET
    out.write(f"relators: {len(report.relators)}\n")
    if args.group == "twin":
        out.write(f"kappa checked: {report.kappa_checked}\n")
    for rel, why in report.failures:
        out.write(f"FAIL {rel}: {why}\n")
    out.write(f"ok: {'true' if report.ok else 'false'}\n")
    if any("budget" in why for _, why in report.failures):
        return EXIT_BUDGET
    return EXIT_OK if report.ok else EXIT_CHECK


def _cmd_catalog(args, out) -> int:
    out.write(json.dumps({"facts": [f.to_json() for f in catalog.known_facts()]}, indent=2) + "\n")
    return EXIT_OK


COMMANDS = {
    "cells": _cmd_cells,
    "homology": _cmd_homology,
    "collapse": _cmd_collapse,
    "euler": _cmd_euler,
    "word": _cmd_word,
    "verify": _cmd_verify,
    "catalog": _cmd_catalog,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        _validate(args)
        return COMMANDS[args.verb](args, out)
    except (UsageError, WordError, DomainError) as exc:
        sys.stderr.write(f"roundtwin: error: {exc}\n")
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
