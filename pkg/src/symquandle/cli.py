"""Command line front end.

Exit status: 0 on success, 1 when the input is well-formed but fails a
domain check (axiom, cocycle condition, coloring), 2 on input or parse
errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .algebra import enumerate_good_involutions, involution_violations
from .cocycle import check_lemma_admissible, cocycle_kernel_basis, cocycle_violations, verify_cocycle3
from .diagram import count_colorings, enumerate_colorings
from .errors import InconsistencyError, MalformedInputError, ViolationError
from .io import (
    assets_dir,
    cocycle_values_from_json,
    dumps,
    load_diagram,
    load_movie,
    load_symmetric_quandle,
    quandle_from_json,
    read_json,
)
from .movie import FamilyParams, format_report, lower_bound, theorem1_report, weight

log = logging.getLogger("symquandle")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _resolve(path: str) -> Path:
    """Use ``path`` as given, falling back to the bundled assets directory."""
    p = Path(path)
    if p.is_file():
        return p
    bundled = assets_dir() / path
    if bundled.is_file():
        log.debug("using bundled asset %s", bundled)
        return bundled
    raise InputError(f"file not found: {path}")


def _emit(args, text: str, data) -> None:
    out = dumps(data) if args.json else text.rstrip("\n") + "\n"
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)


def _int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# -- subcommands ---------------------------------------------------------------------


def cmd_quandle(args) -> int:
    data = read_json(_resolve(args.file))
    if args.action == "involutions":
        q, _ = quandle_from_json(data)
        found = [list(g.rho) for g in enumerate_good_involutions(q)]
        text = f"{len(found)} good involution(s)\n" + "\n".join(str(r) for r in found)
        _emit(args, text, {"n": q.n, "involutions": found})
        return EXIT_OK
    try:
        q, rho = quandle_from_json(data)
    except ViolationError as exc:
        text = "invalid quandle\n" + "\n".join(f"  {v}" for v in exc.violations)
        _emit(args, text, _violations_json("quandle", exc.violations))
        return EXIT_VIOLATION
    if rho is None:
        _emit(args, "valid quandle; no involution given", {"valid": True, "n": q.n, "involution": None})
        return EXIT_OK
    bad = involution_violations(q, rho)
    if bad:
        text = "valid quandle; good involution INVALID\n" + "\n".join(f"  {v}" for v in bad)
        _emit(args, text, {"valid": True, "n": q.n, "involution": _violations_json("good involution", bad)})
        return EXIT_VIOLATION
    data = {"valid": True, "n": q.n, "involution": {"valid": True, "rho": list(rho)}}
    _emit(args, "valid quandle; good involution valid", data)
    return EXIT_OK


def _violations_json(kind: str, violations) -> dict:
    return {"valid": False, "kind": kind, "violations": [{"condition": v.condition, "witness": list(v.witness)} for v in violations]}


def cmd_cocycle(args) -> int:
    sq = load_symmetric_quandle(_resolve(args.quandle))
    if args.action == "verify":
        if not args.file:
            raise InputError("cocycle verify needs a cocycle file")
        sig, values = cocycle_values_from_json(read_json(_resolve(args.file)))
        bad = cocycle_violations(sq, sig, values)
        if bad:
            text = "invalid symmetric 3-cocycle\n" + "\n".join(f"  {v}" for v in bad)
            _emit(args, text, _violations_json("symmetric 3-cocycle", bad))
            return EXIT_VIOLATION
        adm = check_lemma_admissible(verify_cocycle3(sq, sig, values))
        text = f"valid symmetric 3-cocycle; Lemma-admissible: {'yes' if adm else 'no'}"
        if not adm:
            text += "\n  offending triples: " + ", ".join(str(t) for t in adm.offenders)
        _emit(args, text, {"valid": True, "admissible": adm.ok, "offenders": [list(t) for t in adm.offenders]})
        return EXIT_OK
    if args.p is None:
        raise InputError("cocycle solve needs -p PRIME")
    try:
        space = cocycle_kernel_basis(sq, args.p)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    basis = [b.tolist() for b in space.basis]
    lines = [f"basis of dimension {space.dimension} over Z_{args.p}"]
    for i, b in enumerate(space.basis):
        support = [f"{tuple(int(v) for v in idx)}:{int(b[idx])}" for idx in zip(*b.nonzero())]
        lines.append(f"  [{i}] " + " ".join(support))
    _emit(args, "\n".join(lines), {"p": args.p, "dimension": space.dimension, "basis": basis})
    return EXIT_OK


def cmd_color(args) -> int:
    d = load_diagram(_resolve(args.diagram))
    sq = load_symmetric_quandle(_resolve(args.quandle))
    if args.action == "count":
        n = count_colorings(d, sq)
        _emit(args, str(n), {"count": n})
        return EXIT_OK
    cols = enumerate_colorings(d, sq)
    lines = [f"{len(cols)} coloring(s)"]
    for c in cols:
        line = " ".join(str(x) for x in c.colors)
        if c.crossingless_colors:
            line += (" | " if line else "| ") + " ".join(str(x) for x in c.crossingless_colors)
        lines.append(line)
    _emit(args, "\n".join(lines), {"count": len(cols), "colorings": [c.to_json() for c in cols]})
    return EXIT_OK


def cmd_weight(args) -> int:
    movie = load_movie(_resolve(args.movie))
    sig, values = cocycle_values_from_json(read_json(_resolve(args.cocycle)))
    phi = verify_cocycle3(movie.sq, sig, values)
    w = weight(movie, phi)
    bound = lower_bound(w, phi)
    shown = "inapplicable" if bound is None else str(bound)
    text = f"weight = {w}; lower bound = {shown}; triple points = {len(movie.triples)}"
    data = {
        "weight": {"signature": {"s": sig.s, "t": sig.t}, **w.to_json(), "text": str(w)},
        "lower_bound": bound,
        "triple_count": len(movie.triples),
    }
    _emit(args, text, data)
    return EXIT_OK


def cmd_family(args) -> int:
    g = args.g if args.g is not None else []
    gprime = args.gprime if args.gprime is not None else []
    try:
        params = FamilyParams(args.k, args.m, tuple(g), tuple(gprime))
    except MalformedInputError as exc:
        raise InputError(str(exc)) from None
    report = theorem1_report(params)
    text = format_report(report) + f"; G genus {report.components[0].genus}"
    _emit(args, text, report.to_json())
    return EXIT_OK


# -- wiring --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")
    common.add_argument("-o", "--output", help="write output to this file instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="symquandle",
        description="Symmetric quandle colorings, 3-cocycles and triple point weights.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pq = sub.add_parser("quandle", parents=[common], help="verify a quandle file or list its good involutions")
    pq.add_argument("action", choices=["verify", "involutions"])
    pq.add_argument("file")
    pq.set_defaults(func=cmd_quandle)

    pc = sub.add_parser("cocycle", parents=[common], help="verify a 3-cocycle or solve for all cocycles mod p")
    pc.add_argument("action", choices=["verify", "solve"])
    pc.add_argument("file", nargs="?")
    pc.add_argument("--quandle", required=True)
    pc.add_argument("-p", type=int)
    pc.set_defaults(func=cmd_cocycle)

    pd = sub.add_parser("color", parents=[common], help="count or list colorings of a link diagram")
    pd.add_argument("action", choices=["count", "enum"])
    pd.add_argument("diagram")
    pd.add_argument("--quandle", required=True)
    pd.set_defaults(func=cmd_color)

    pw = sub.add_parser("weight", parents=[common], help="cocycle weight and triple point bound of a movie")
    pw.add_argument("movie")
    pw.add_argument("--cocycle", required=True)
    pw.set_defaults(func=cmd_weight)

    pf = sub.add_parser("family", parents=[common], help="build and check the k + m + 1 component family")
    pf.add_argument("-k", type=int, default=0)
    pf.add_argument("-m", type=int, default=0)
    pf.add_argument("--g", type=_int_list, help="orientable genera, comma separated")
    pf.add_argument("--gprime", type=_int_list, help="non-orientable genera (even, >= 2), comma separated")
    pf.set_defaults(func=cmd_family)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (InputError, MalformedInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ViolationError, InconsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
