"""Command-line front end.

    parityperm [--output tsv|json] [--max-n N] [--jobs J] [--slow] COMMAND ...

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 overflow or brute-force bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import acceptance
from . import arrangement as A
from . import bijections as B
from . import perm as P
from .errors import BruteForceBoundExceeded, Overflow, ParityPermError
from .families import FamilyId, count, enumerate_family, refined_count_first_letter
from .labelings import label, label_all
from .sequences import seidel

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

DEFAULT_MAX_N_FAMILIES = 5
DEFAULT_MAX_N_REGIONS = A.BRUTE_FORCE_BOUND


class UsageError(Exception):
    pass


def _emit(args, obj, rows) -> None:
    """Print ``obj`` as JSON or ``rows`` (an iterable of tuples/strings) as TSV."""
    if args.output == "json":
        print(json.dumps(obj))
        return
    for row in rows:
        print(row if isinstance(row, str) else "\t".join(str(x) for x in row))


def _family(token: str) -> FamilyId:
    try:
        return FamilyId.parse(token)
    except ValueError:
        names = " ".join(f.value for f in FamilyId)
        raise UsageError(f"unknown family {token!r}; choose from: {names}") from None


def _family_bound(args, two_n: int) -> None:
    bound = args.max_n if args.max_n is not None else DEFAULT_MAX_N_FAMILIES
    if two_n > 2 * bound:
        raise BruteForceBoundExceeded(f"2n = {two_n} exceeds 2 * max-n = {2 * bound}")


def _region_bound(args) -> int:
    return args.max_n if args.max_n is not None else DEFAULT_MAX_N_REGIONS


# -- commands ------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    fam = _family(args.family)
    _family_bound(args, args.two_n)
    items = list(enumerate_family(fam, args.two_n))
    _emit(args, {"family": fam.value, "two_n": args.two_n, "items": [list(p) for p in items]},
          (P.format_word(p) for p in items))
    return EXIT_OK


def cmd_count(args) -> int:
    fam = _family(args.family)
    _family_bound(args, args.two_n)
    if args.refined:
        row = refined_count_first_letter(args.two_n, fam, jobs=args.jobs).row()
        _emit(args, {"family": fam.value, "two_n": args.two_n, "row": list(row)}, [row])
    else:
        c = count(fam, args.two_n, jobs=args.jobs)
        _emit(args, {"family": fam.value, "two_n": args.two_n, "count": c}, [(c,)])
    return EXIT_OK


def cmd_triangle(args) -> int:
    rows = seidel(args.rows)
    _emit(args, {"rows": [list(r) for r in rows]}, ((m,) + r for m, r in enumerate(rows, start=1)))
    return EXIT_OK


def cmd_regions(args) -> int:
    regions = A.sorted_regions(args.n, bound=_region_bound(args))
    if args.count:
        _emit(args, {"n": args.n, "count": len(regions)}, [(len(regions),)])
    else:
        texts = [A.format_region(r) for r in regions]
        _emit(args, {"n": args.n, "items": texts}, texts)
    return EXIT_OK


def _regions_for_label(args) -> list[A.Region]:
    if (args.region is None) == (args.n is None):
        raise UsageError("give exactly one of --region or --n")
    if args.region is not None:
        return [A.resolve_region(args.region)]
    return A.sorted_regions(args.n, bound=_region_bound(args))


def cmd_label(args) -> int:
    regions = _regions_for_label(args)
    if args.all:
        recs = []
        for r in regions:
            lab = label_all(r)
            recs.append((A.format_region(r), lab.gi, lab.gii, lab.giii, lab.giv))
        obj = {"items": [{"region": t, "gi": list(a), "gii": list(b), "giii": list(c), "giv": list(d)}
                         for t, a, b, c, d in recs]}
        rows = [(t,) + tuple(P.format_word(x) for x in ws) for t, *ws in recs]
        _emit(args, obj, rows)
        return EXIT_OK
    if args.family is None:
        raise UsageError("label needs --family or --all")
    fam = _family(args.family)
    out = [(A.format_region(r), label(fam, r)) for r in regions]
    obj = {"family": fam.value, "items": [{"region": t, "perm": list(p)} for t, p in out]}
    rows = [P.format_word(p) if args.region is not None else (t, P.format_word(p)) for t, p in out]
    _emit(args, obj, rows)
    return EXIT_OK


def _needs(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"map {args.name} needs --{name}")


def _apply_map(args, p: P.Word) -> P.Word:
    name, inv = args.name, args.inv
    simple = {
        "eta": (B.eta, B.eta_inv),
        "g": (B.g_adv, B.g_inv),
        "tau": (B.tau, B.tau_inv),
        "theta": (B.theta, B.theta_inv),
        "psi": (B.psi, B.psi_inv),
        "vartheta": (B.vartheta, B.vartheta_inv),
        "Theta": (B.capital_theta, B.capital_theta_inv),
    }
    if name in simple:
        return simple[name][1 if inv else 0](p)
    if name == "f":
        if not inv:
            return B.f_map(p)
        _needs(args, "n")
        return B.f_inv(p, 2 * args.n)
    indexed = {
        "varphi": (B.varphi, B.varphi_inv),
        "phi3": (B.phi_diii, B.phi_diii_inv),
        "Phi": (B.capital_phi, B.capital_phi_inv),
    }
    _needs(args, "n", "k")
    return indexed[name][1 if inv else 0](args.n, args.k, p)


def cmd_map(args) -> int:
    if args.perm.lstrip().startswith("("):
        p = P.from_cycles(P.parse_cycles(args.perm))
    else:
        p = P.parse_word(args.perm)
    q = _apply_map(args, p)
    text = P.format_cycles(P.to_cycles(q, P.MinimaOrder.DECREASING)) if args.cycles else P.format_word(q)
    _emit(args, {"map": args.name, "inverse": args.inv, "input": list(p), "output": list(q)}, [text])
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = acceptance.Config(
        max_n=args.max_n if args.max_n is not None else 5,
        jobs=args.jobs,
        slow=args.slow,
    )
    results = []
    for res in acceptance.run(cfg, include_invariants=not args.criteria_only):
        results.append(res)
        if args.output != "json":
            print(res.line(), flush=True)
    ok = all(r.ok for r in results)
    if args.output == "json":
        print(json.dumps({"ok": ok, "results": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results]}))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_export_dot(args) -> int:
    r = A.resolve_region(args.region)
    sys.stdout.write(A.export_dot(A.poset(r)))
    return EXIT_OK


# -- parser --------------------------------------------------------------------------

MAP_NAMES = ("eta", "f", "g", "varphi", "tau", "phi3", "Phi", "theta", "psi", "vartheta", "Theta")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # the same flags are accepted before and after the subcommand
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--output", choices=("tsv", "json"), default=d("tsv"))
    parser.add_argument("--max-n", type=_positive, default=d(None), help="brute-force bound")
    parser.add_argument("--jobs", type=_positive, default=d(os.cpu_count() or 1), help="worker processes")
    parser.add_argument("--slow", action="store_true", default=d(False), help="include the slow checks")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)

    ap = argparse.ArgumentParser(prog="parityperm", description=__doc__.splitlines()[0])
    _global_options(ap, suppress=False)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list a family")
    p.add_argument("family")
    p.add_argument("two_n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="count a family")
    p.add_argument("family")
    p.add_argument("two_n", type=int)
    p.add_argument("--refined", action="store_true", help="split the count by first letter")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("triangle", parents=[common], help="print the Seidel triangle")
    p.add_argument("rows", type=int)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("regions", parents=[common], help="regions of K_2n")
    p.add_argument("n", type=int)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("label", parents=[common], help="label regions by permutations")
    p.add_argument("--family")
    p.add_argument("--region", help='"n=<n>;<signs>" or @example-k18')
    p.add_argument("--n", type=int, help="label every region of K_2n")
    p.add_argument("--all", action="store_true", help="all four labelings")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("map", parents=[common], help="apply a bijection")
    p.add_argument("--name", required=True, choices=MAP_NAMES)
    p.add_argument("--perm", required=True, help='"6 5 10 1 ..." or cycle notation')
    p.add_argument("--inv", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--cycles", action="store_true", help="print the result in cycle notation")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    p.add_argument("--criteria-only", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", parents=[common], help="Hasse diagram of a region in DOT")
    p.add_argument("--region", required=True)
    p.set_defaults(func=cmd_export_dot)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (Overflow, BruteForceBoundExceeded) as exc:
        print(f"parityperm: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, ParityPermError, ValueError) as exc:
        print(f"parityperm: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
