"""Command line front end: ``qwalg check | analyze | quotient | search``.

Exit codes: 0 success, 1 the checked property fails, 2 bad input,
3 two characterizations that must agree did not.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .congruence import quotient
from .errors import FalsificationError, QWError
from .report import (
    analyze_record,
    check_record,
    quotient_record,
    render_text,
    search_record,
    to_json,
)
from .search import enumerate_qw
from .structure import is_deductive_system
from .subsets import Subset
from .textio import AlgebraDocument, dumps, parse

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_FALSIFIED = 0, 1, 2, 3


def _read(path: str) -> AlgebraDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise QWError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _emit(rec: dict, as_json: bool) -> None:
    sys.stdout.write(to_json(rec) if as_json else render_text(rec))


def cmd_check(args) -> int:
    doc = _read(args.file)
    A = doc.to_algebra()
    rec = check_record(A, doc.name)
    _emit(rec, args.json)
    return EXIT_OK if A.is_qw else EXIT_FAIL


def cmd_analyze(args) -> int:
    doc = _read(args.file)
    A = doc.to_algebra()
    rec = analyze_record(A, doc.name, args.override or None)
    _emit(rec, args.json)
    return EXIT_OK if A.is_qw else EXIT_FAIL


def cmd_quotient(args) -> int:
    doc = _read(args.file)
    A = doc.to_algebra()
    if not A.is_qw:
        rec = check_record(A, doc.name)
        _emit(rec, args.json)
        return EXIT_FAIL
    names = [t for t in args.ds.split(",") if t]
    F = Subset.of(A, names)
    v = is_deductive_system(A, F)
    if not v:
        detail = ", ".join(v.witness[1:])
        print(
            f"error: {{{', '.join(F.names(A))}}} is not a deductive system: {v.witness[0]} fails"
            + (f" at ({detail})" if detail else ""),
            file=sys.stderr,
        )
        return EXIT_INPUT
    Q = quotient(A, F)
    document = dumps(Q.algebra, f"{doc.name}.quotient")
    rec = quotient_record(A, doc.name, F, Q, document)
    if args.json:
        _emit(rec, True)
    else:
        sys.stdout.write("".join("# " + line + "\n" for line in render_text(rec).splitlines()))
        sys.stdout.write(document)
    return EXIT_OK


def cmd_search(args) -> int:
    rep = enumerate_qw(args.order, limit=args.limit, override=args.override or None, workers=args.workers)
    files = []
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, A in enumerate(rep.models, start=1):
            name = f"qw{args.order}_{i:03d}"
            path = out / f"{name}.qw"
            path.write_text(dumps(A, name))
            files.append(str(path))
    _emit(search_record(rep, files), args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qwalg", description="Finite quantum-Wajsberg algebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable report")

    sp = sub.add_parser("check", help="verify the axioms")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("analyze", help="filters, deductive systems, linearity, quotients")
    sp.add_argument("file")
    sp.add_argument("--override", action="store_true", help="lift enumeration size gates")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("quotient", help="quotient by a deductive system")
    sp.add_argument("file")
    sp.add_argument("--ds", required=True, help="comma-separated element names, e.g. a,1")
    common(sp)
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("search", help="enumerate QW algebras of one order up to isomorphism")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--limit", type=int)
    sp.add_argument("--out", help="directory for model files")
    sp.add_argument("--workers", type=int, help="processes, one per star-column type")
    sp.add_argument("--override", action="store_true", help="lift the order gate")
    common(sp)
    sp.set_defaults(func=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FalsificationError as exc:
        print(f"falsification: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except (QWError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
