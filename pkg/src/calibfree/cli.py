"""Command-line front end.

Exit status: 0 on success, 1 when the expression denotes no valid manifold,
2 on usage, parse and catalog-file errors.  Diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Sequence

from . import families
from .expr import CatalogRef, ExprError, Repeat, Sum, evaluate, parse_expr, pretty
from .manifolds import CATALOG, Catalog, CatalogError, CatalogFileError, DomainError, InvalidManifoldError
from .report import document, render_text
from .verdicts import full_report

PROG = "calibfree"

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _family_flags(node) -> tuple[str, ...]:
    if not isinstance(node, Sum) or not isinstance(node.left, CatalogRef):
        return ()
    tail = node.right
    count = 1
    if isinstance(tail, Repeat):
        count, tail = tail.count, tail.expr
    if not isinstance(tail, CatalogRef) or tail.params or not node.left.params:
        return ()
    found = families.recognize((node.left.name, node.left.params, tail.name, count))
    return (found.flag,) if found and found.flag else ()


def evaluate_document(text: str, command: str, catalog: Catalog, lax: bool) -> dict:
    try:
        node = parse_expr(text, catalog)
    except ExprError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    try:
        m = evaluate(node, catalog, lax).relabel(pretty(node))
    except ExprError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    except (InvalidManifoldError, DomainError) as exc:
        raise CliError(f"invalid manifold: {exc}", EXIT_INVALID) from None
    return document(text, full_report(m, _family_flags(node)), command)


def _emit(doc: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(doc, ensure_ascii=False) + "\n")
    else:
        out.write(render_text(doc) + "\n")


def _load_catalog(paths: Sequence[str]) -> Catalog:
    cat = CATALOG
    for p in paths:
        try:
            cat = cat.with_file(p)
        except OSError as exc:
            raise CliError(f"cannot read catalog file {p}: {exc.strerror}", EXIT_USAGE) from None
        except (CatalogFileError, CatalogError) as exc:
            raise CliError(f"catalog file: {exc}", EXIT_USAGE) from None
    return cat


def _run_batch(path: str, catalog: Catalog, lax: bool, out, err) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise CliError(f"cannot read batch file {path}: {exc.strerror}", EXIT_USAGE) from None
    worst = EXIT_OK
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            doc = evaluate_document(text, "certificate", catalog, lax)
        except CliError as exc:
            err.write(f"{PROG}: {path}:{lineno}: {exc}\n")
            worst = max(worst, exc.code)
            doc = {"input": text, "error": {"code": exc.code, "message": str(exc)}}
        out.write(json.dumps(doc, ensure_ascii=False) + "\n")
    return worst


def _run_families(as_json: bool, out) -> int:
    audits = families.default_audits()
    for a in audits:
        m = a.manifold
        rec = {"family": a.family, "params": list(a.params), "expression": a.expression,
               "chi": m.euler, "tau": m.signature, "spin": m.spin,
               "claimed_chi": a.claimed_chi, "claimed_tau": a.claimed_tau,
               "claimed_parallelizable": a.claimed_parallelizable,
               "computed_parallelizable": a.computed_parallelizable, "flag": a.flag}
        if as_json:
            out.write(json.dumps(rec) + "\n")
        else:
            status = "FLAG" if a.flag else "ok"
            out.write(f"{status:4} {a.expression}: chi={m.euler} tau={m.signature} "
                      f"(claimed chi={a.claimed_chi})\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--catalog", action="append", default=[], metavar="FILE",
                        help="extra catalog file (repeatable)")
    common.add_argument("--lax", action="store_true",
                        help="downgrade Rokhlin violations to warnings")
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Decide calibration-free immersions, parallelizability and Gauss-map "
                    "contractibility for closed oriented 4-manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "invariants": "chi, tau, spin and characteristic classes",
        "gauss": "Gauss classes and intersection numbers",
        "verdicts": "all decision outcomes",
        "certificate": "decision outcomes with their full certificates",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("expr", metavar="EXPR", help='e.g. "M1(11) # 2*K3"')
    p = sub.add_parser("batch", parents=[common], help="one expression per line, JSON lines out")
    p.add_argument("file", metavar="FILE")
    sub.add_parser("families", parents=[common],
                   help="audit the known families against the connected-sum formulas")
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            catalog = _load_catalog(args.catalog)
            if args.command == "batch":
                code = _run_batch(args.file, catalog, args.lax, out, err)
            elif args.command == "families":
                code = _run_families(args.json, out)
            else:
                doc = evaluate_document(args.expr, args.command, catalog, args.lax)
                _emit(doc, args.json, out)
                code = EXIT_OK
        except CliError as exc:
            err.write(f"{PROG}: {exc}\n")
            code = exc.code
    for w in caught:
        err.write(f"{PROG}: warning: {w.message}\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
