"""Command line interface.

Every verb is a pure function of its arguments, and output is sorted so that
repeated runs are byte identical.  Exit codes: 0 on success, 1 on domain errors
(for instance a window that is not an involution, or a size bound exceeded) and
2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence, TextIO

from .census import TSV_HEADER, census
from .core import SignedPermutation, format_signed, parse_signed
from .errors import AtomkitError, ParseError
from .hecke import SignedInvolution, hecke_atoms_brute
from .orders import ORDERS, atoms_fast, component_probes, hasse, poset_probe
from .structure import nested_data, nested_descent_graph, ncsp, shape
from .tableaux import count_reduced_words, reduced_words, verify_identities

FORMATS = ("text", "json", "dot", "tsv")
_VALUE_FLAGS = {"-z", "--involution", "-w", "--word"}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise ParseError(message)


def _windows(ws: Sequence[SignedPermutation], inverse: bool) -> list[str]:
    items = sorted(w.inverse() for w in ws) if inverse else sorted(ws)
    return [format_signed(w) for w in items]


def _emit_list(lines: list[str], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(lines) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


def _need_format(args: argparse.Namespace, allowed: Sequence[str]) -> None:
    if args.format not in allowed:
        raise ParseError(f"{args.verb} does not support --format {args.format}; use one of {', '.join(allowed)}")


def _involution(args: argparse.Namespace) -> SignedInvolution:
    if args.z is None:
        raise ParseError(f"{args.verb} needs -z")
    return SignedInvolution.parse(args.z)


def _word(args: argparse.Namespace) -> SignedPermutation:
    if args.w is None:
        raise ParseError(f"{args.verb} needs -w")
    return parse_signed(args.w)


def cmd_atoms(args: argparse.Namespace, out: TextIO) -> None:
    _need_format(args, ("text", "json"))
    _emit_list(_windows(atoms_fast(_involution(args)), args.inverse), args.format, out)


def cmd_hecke_atoms(args: argparse.Namespace, out: TextIO) -> None:
    _need_format(args, ("text", "json"))
    z = _involution(args)
    # the brute-force oracle returns A(z); flip to the inverse side unless asked not to
    inverse_side = [w.inverse() for w in hecke_atoms_brute(z)]
    _emit_list(_windows(inverse_side, args.inverse), args.format, out)


def cmd_hasse(args: argparse.Namespace, out: TextIO) -> None:
    _need_format(args, ("text", "json", "dot"))
    d = hasse(_involution(args), args.order)
    if args.format == "dot":
        out.write(d.to_dot())
    elif args.format == "json":
        out.write(d.to_json() + "\n")
    else:
        for w in d.elements:
            out.write(f"{w}\n")
        for v, w, kind in d.edges():
            out.write(f"{v} -> {w} {kind}\n")


def cmd_ncsp(args: argparse.Namespace, out: TextIO) -> None:
    _need_format(args, ("text", "json"))
    ms = ncsp(_involution(args))
    if args.format == "json":
        out.write(json.dumps([[list(b) for b in m.sorted_blocks()] for m in ms]) + "\n")
    else:
        for m in ms:
            out.write(f"{m}\n")


def cmd_shape(args: argparse.Namespace, out: TextIO) -> None:
    _need_format(args, ("text", "json"))
    m = shape(_word(args))
    if args.format == "json":
        out.write(json.dumps([list(b) for b in m.sorted_blocks()]) + "\n")
    else:
        out.write(f"{m}\n")


def cmd_nested(args: argparse.Namespace, out: TextIO) -> None:
    _need_format(args, ("text", "json", "dot"))
    w = _word(args)
    if args.format == "dot":
        out.write(nested_descent_graph(w).to_dot())
        return
    d = nested_data(w)
    record = {
        "ndes": sorted(list(p) for p in d.ndes),
        "nfix": sorted(d.nfix),
        "nneg": sorted(d.nneg),
        "sink": format_signed(d.sink),
        "involution": format_signed(d.involution),
    }
    if args.format == "json":
        out.write(json.dumps(record) + "\n")
        return
    out.write("NDes " + " ".join(f"({b},{a})" for b, a in record["ndes"]) + "\n")
    out.write("NFix " + " ".join(str(x) for x in record["nfix"]) + "\n")
    out.write("NNeg " + " ".join(str(x) for x in record["nneg"]) + "\n")
    out.write(f"sink {record['sink']}\n")
    out.write(f"z {record['involution']}\n")


def cmd_census(args: argparse.Namespace, out: TextIO) -> None:
    _need_format(args, ("text", "tsv", "json"))
    if args.n is None:
        raise ParseError("census needs -n")
    rows = census(args.n, check=args.check)
    if args.format == "json":
        keys = ("n", "cls", "r", "k", "enumerated", "formula", "match")
        out.write(json.dumps([{k: getattr(r, k) for k in keys} for r in rows]) + "\n")
        return
    out.write(TSV_HEADER + "\n")
    for row in rows:
        out.write(row.tsv() + "\n")


def cmd_words(args: argparse.Namespace, out: TextIO) -> None:
    _need_format(args, ("text", "json"))
    w = _word(args)
    if args.count:
        n = count_reduced_words(w)
        out.write((json.dumps(n) if args.format == "json" else str(n)) + "\n")
        return
    words = reduced_words(w)
    if args.format == "json":
        out.write(json.dumps([list(u) for u in words]) + "\n")
    else:
        for u in words:
            out.write(" ".join(str(i) for i in u) + "\n")


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    _need_format(args, ("text", "json"))
    if args.suite != "identities":
        raise ParseError(f"unknown suite {args.suite!r}")
    sizes = [args.n] if args.n is not None else [1, 2, 3, 4]
    checks = [c for n in sizes for c in verify_identities(n)]
    if args.format == "json":
        out.write(
            json.dumps(
                [
                    {"name": c.name, "n": c.n, "lhs": str(c.lhs), "rhs": str(c.rhs),
                     "asserted": c.asserted, "passed": c.passed}
                    for c in checks
                ]
            )
            + "\n"
        )
    else:
        for c in checks:
            out.write(c.line() + "\n")
    return 0 if all(c.passed for c in checks if c.asserted) else 1


def cmd_probe(args: argparse.Namespace, out: TextIO) -> None:
    _need_format(args, ("text", "json"))
    z = _involution(args)
    orders = [args.order] if args.order else sorted(ORDERS)
    reports = []
    for order in orders:
        rep = poset_probe(z, order, paranoid=args.paranoid).as_dict()
        rep["scope"] = "whole"
        reports.append(rep)
    if args.components:
        for k, rep in enumerate(component_probes(z, paranoid=args.paranoid)):
            d = rep.as_dict()
            d["scope"] = f"component {k}"
            reports.append(d)
    if not args.lattice:
        for rep in reports:
            rep.pop("lattice")
            rep.pop("lower_semilattice")
    if args.format == "json":
        out.write(json.dumps(reports) + "\n")
        return
    for rep in reports:
        fields = " ".join(
            f"{k}={str(v).lower() if isinstance(v, bool) else v}"
            for k, v in rep.items()
            if k not in ("order", "scope") and v is not None
        )
        out.write(f"{rep['order']} {rep['scope']}: {fields}\n")


COMMANDS: dict[str, Callable[[argparse.Namespace, TextIO], int | None]] = {
    "atoms": cmd_atoms,
    "hecke-atoms": cmd_hecke_atoms,
    "hasse": cmd_hasse,
    "ncsp": cmd_ncsp,
    "shape": cmd_shape,
    "nested": cmd_nested,
    "census": cmd_census,
    "words": cmd_words,
    "verify": cmd_verify,
    "probe": cmd_probe,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="atomkit", description="Atoms of involutions in signed permutation groups.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb in COMMANDS:
        p = sub.add_parser(verb)
        p.add_argument("--format", choices=FORMATS, default="text")
        if verb in ("atoms", "hecke-atoms", "hasse", "ncsp", "probe"):
            p.add_argument("-z", "--involution", dest="z", help="window of an involution, e.g. -1,-2")
        if verb in ("shape", "nested", "words"):
            p.add_argument("-w", "--word", dest="w", help="window of a signed permutation")
        if verb in ("atoms", "hecke-atoms"):
            p.add_argument("--inverse", action="store_true", help="print A(z) instead of its inverses")
        if verb in ("hasse", "probe"):
            p.add_argument("--order", choices=sorted(ORDERS), default="ltB" if verb == "hasse" else None)
        if verb in ("census", "verify"):
            p.add_argument("-n", type=int)
        if verb == "census":
            p.add_argument("--check", action="store_true", help="enumerate and compare with the closed forms")
        if verb == "words":
            p.add_argument("--count", action="store_true")
        if verb == "verify":
            p.add_argument("--suite", default="identities")
        if verb == "probe":
            p.add_argument("--lattice", action="store_true", help="include meet and join checks")
            p.add_argument("--paranoid", action="store_true", help="cross-check gradedness by chain lengths")
            p.add_argument("--components", action="store_true", help="also probe each <_A component")
    return parser


def _attach_values(argv: Sequence[str]) -> list[str]:
    # windows start with '-', which argparse would read as a flag
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            value = next(it, None)
            out.append(tok if value is None else f"{tok}={value}")
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(_attach_values(argv))
        code = COMMANDS[args.verb](args, out)
    except ParseError as exc:
        err.write(f"atomkit: error: {exc}\n")
        return 2
    except AtomkitError as exc:
        err.write(f"atomkit: error: {exc}\n")
        return 1
    return code or 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
