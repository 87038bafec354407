"""Command-line interface: map generation, polynomial computation,
bijection round trips, series expansion, closed formulas and the
verification suites.

Exit codes: 0 all checks pass / command succeeded, 1 a check failed,
2 unknown family, equation, formula or suite, 3 malformed map file,
4 generation cap exceeded.  Output is byte-deterministic for fixed
inputs and flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from tuttelab.maps import MapError, RootedMap

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 2
EXIT_BAD_FILE = 3
EXIT_CAP = 4


def _families():
    from tuttelab import generate
    return {
        "maps": generate.all_maps,
        "bipartite": generate.bipartite_maps,
        "quadrangulations": generate.quadrangulations,
        "four_valent": generate.four_valent,
        "near_triangulations": generate.near_triangulations,
        "eulerian_near_triangulations":
            generate.eulerian_near_triangulations,
        "non_separable_near_triangulations":
            generate.non_separable_near_triangulations,
    }


def _fmt(args) -> str:
    if getattr(args, "json", False):
        return "json"
    if getattr(args, "csv", False):
        return "csv"
    return "plain"


def _add_format_flags(parser):
    parser.add_argument("--json", action="store_true",
                        help="emit JSON instead of plain text")
    parser.add_argument("--csv", action="store_true",
                        help="emit CSV instead of plain text")


def cmd_gen(args) -> int:
    families = _families()
    if args.family not in families:
        print(f"unknown family {args.family!r}; known: "
              + ", ".join(sorted(families)), file=sys.stderr)
        return EXIT_UNKNOWN
    maps = families[args.family](args.n)
    fmt = _fmt(args)
    if args.count_only:
        if fmt == "json":
            print(json.dumps({"family": args.family, "n": args.n,
                              "count": len(maps)}))
        elif fmt == "csv":
            print("family,n,count")
            print(f"{args.family},{args.n},{len(maps)}")
        else:
            print(len(maps))
        return EXIT_OK
    if fmt == "json":
        print(json.dumps([m.to_json_obj() for m in maps]))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["alpha", "sigma", "root"])
        for m in maps:
            writer.writerow([" ".join(map(str, m.alpha)),
                             " ".join(map(str, m.sigma)), m.root])
        sys.stdout.write(buf.getvalue())
    else:
        for m in maps:
            print(m.to_json())
    return EXIT_OK


def cmd_tutte(args) -> int:
    from tuttelab import potts
    try:
        with open(args.mapfile) as fh:
            m = RootedMap.from_json(fh.read())
    except (OSError, ValueError, KeyError, MapError) as err:
        print(f"cannot read map file {args.mapfile!r}: {err}",
              file=sys.stderr)
        return EXIT_BAD_FILE
    if args.special:
        rows = sorted((k, str(v)) for k, v in potts.specializations(m).items())
    elif args.potts:
        rows = [("potts", str(potts.potts(m)))]
    else:
        rows = [("tutte", str(potts.tutte(m)))]
    fmt = _fmt(args)
    if fmt == "json":
        print(json.dumps(dict(rows)))
    elif fmt == "csv":
        print("name,value")
        for k, v in rows:
            print(f"{k},\"{v}\"")
    else:
        for k, v in rows:
            print(f"{k}: {v}")
    return EXIT_OK


def _roundtrip_psi(k):
    from tuttelab.bijections import phi_close, psi_open
    from tuttelab.generate import four_valent
    for n in range(1, k + 1):
        for m in four_valent(n):
            if phi_close(psi_open(m)) != m:
                return False, f"4-valent map {m.to_json()}"
    return True, None


def _roundtrip_cvs(k):
    from tuttelab.bijections import BijectionError, cvs_backward, cvs_forward
    from tuttelab.generate import quadrangulations
    for n in range(1, k + 1):
        for q in quadrangulations(n):
            for v0 in range(q.n_vertices):
                try:
                    t = cvs_forward(q, v0)
                except BijectionError:
                    continue
                if not t.is_valid() or cvs_backward(t) != (q, v0):
                    return False, f"quadrangulation {q.to_json()}, v0={v0}"
    return True, None


def _roundtrip_mullin(k):
    from tuttelab.bijections import (mullin_decode, mullin_encode,
                                     tree_root_key)
    from tuttelab.generate import all_maps, all_spanning_trees
    for n in range(k + 1):
        for m in all_maps(n):
            trees = [()] if m.is_atomic else all_spanning_trees(m)
            for tr in trees:
                w = mullin_encode(m, tr)
                m2, tr2 = mullin_decode(w)
                if (tree_root_key(m2, tr2) != tree_root_key(m, tr)
                        or mullin_encode(m2, tr2) != w):
                    return False, f"map {m.to_json()}, tree {tr}"
    return True, None


def _roundtrip_ising(k):
    import itertools
    from tuttelab.bijections import (ising_erase, ising_series_identity,
                                     ising_subdivide)
    from tuttelab.generate import all_maps
    for n in range(1, min(k, 3) + 1):
        for m in all_maps(n):
            vo = m.vertex_of
            edges = m.edges()
            for col in itertools.product((0, 1), repeat=m.n_vertices):
                base = [1 if col[vo[d1]] == col[vo[d2]] else 0
                        for d1, d2 in edges]
                for extra in itertools.product((0, 2), repeat=len(edges)):
                    counts = [b + e for b, e in zip(base, extra)]
                    m2, _, squares = ising_subdivide(m, col, counts)
                    if ising_erase(m2, squares) != m:
                        return False, (f"map {m.to_json()}, colouring {col},"
                                       f" counts {counts}")
    lhs, rhs = ising_series_identity(min(k, 4))
    if lhs != rhs:
        return False, "series identity mismatch"
    return True, None


_ROUNDTRIPS = {
    "psi": _roundtrip_psi,
    "cvs": _roundtrip_cvs,
    "mullin": _roundtrip_mullin,
    "ising": _roundtrip_ising,
}


def cmd_bijection(args) -> int:
    if args.name not in _ROUNDTRIPS:
        print(f"unknown bijection {args.name!r}; known: "
              + ", ".join(sorted(_ROUNDTRIPS)), file=sys.stderr)
        return EXIT_UNKNOWN
    ok, counterexample = _ROUNDTRIPS[args.name](args.max_size)
    fmt = _fmt(args)
    if fmt == "json":
        print(json.dumps({"bijection": args.name, "max_size": args.max_size,
                          "pass": ok, "counterexample": counterexample}))
    elif fmt == "csv":
        print("bijection,max_size,pass,counterexample")
        print(f"{args.name},{args.max_size},"
              f"{'pass' if ok else 'FAIL'},\"{counterexample or ''}\"")
    else:
        print(f"{args.name} round trips up to size {args.max_size}: "
              + ("pass" if ok else f"FAIL ({counterexample})"))
    return EXIT_OK if ok else EXIT_FAIL


def _parse_set(text):
    params = {}
    if not text:
        return params
    for item in text.split(","):
        name, _, value = item.partition("=")
        if not _:
            raise ValueError(f"bad --set item {item!r} (want var=value)")
        params[name.strip()] = Fraction(value.strip())
    return params


def cmd_series(args) -> int:
    from tuttelab.equations import EquationId, expand
    try:
        eq = EquationId[args.eq]
    except KeyError:
        print(f"unknown equation {args.eq!r}; known: "
              + ", ".join(e.name for e in EquationId), file=sys.stderr)
        return EXIT_UNKNOWN
    try:
        params = _parse_set(args.set)
    except ValueError as err:
        print(str(err), file=sys.stderr)
        return EXIT_UNKNOWN
    series = expand(eq, args.order, params or None)
    rows = [(f"{series.var}^{n}", str(series.coeff(n)))
            for n in range(args.order + 1)]
    fmt = _fmt(args)
    if fmt == "json":
        print(json.dumps({"equation": eq.name, "var": series.var,
                          "order": args.order, "coefficients": dict(rows)}))
    elif fmt == "csv":
        print("power,coefficient")
        for k, v in rows:
            print(f"{k},\"{v}\"")
    else:
        for k, v in rows:
            print(f"{k}: {v}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from tuttelab import verify
    try:
        results = verify.run(args.suites or None)
    except KeyError as err:
        print(f"{err.args[0]}; known suites: all, "
              + ", ".join(verify.SUITES), file=sys.stderr)
        return EXIT_UNKNOWN
    sys.stdout.write(verify.format_report(results, _fmt(args)))
    return EXIT_OK if verify.all_pass(results) else EXIT_FAIL


def cmd_formula(args) -> int:
    from tuttelab.closed_forms import closed_form
    try:
        value = closed_form(args.name, *args.args)
    except KeyError as err:
        print(str(err.args[0]), file=sys.stderr)
        return EXIT_UNKNOWN
    except ValueError as err:
        print(f"bad arguments: {err}", file=sys.stderr)
        return EXIT_FAIL
    fmt = _fmt(args)
    if fmt == "json":
        print(json.dumps({"formula": args.name, "args": args.args,
                          "value": str(value)}))
    elif fmt == "csv":
        print("formula,args,value")
        print(f"{args.name},{' '.join(map(str, args.args))},{value}")
    else:
        print(value)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tuttelab",
        description="Exact enumeration of rooted planar maps: generation, "
                    "Potts/Tutte polynomials, bijections, series, formulas "
                    "and verification suites.  The map cache directory is "
                    "taken from the TUTTELAB_CACHE environment variable.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a map family")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True,
                   help="size parameter of the family")
    p.add_argument("--count-only", action="store_true")
    _add_format_flags(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("tutte", help="polynomials of a map from a JSON file")
    p.add_argument("mapfile")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--potts", action="store_true")
    g.add_argument("--tutte", action="store_true")
    g.add_argument("--special", action="store_true",
                   help="spanning trees, chromatic polynomial, bipolar count")
    _add_format_flags(p)
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("bijection", help="bijection round-trip checks")
    p.add_argument("mode", choices=["roundtrip"])
    p.add_argument("name")
    p.add_argument("--max-size", type=int, required=True)
    _add_format_flags(p)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("series", help="expand a functional equation")
    p.add_argument("mode", choices=["expand"])
    p.add_argument("--eq", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--set", default="",
                   help="parameter values, e.g. q=2,nu=5/2")
    _add_format_flags(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suites", nargs="*",
                   help="suite names, or 'all' (default)")
    _add_format_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("formula", help="evaluate a closed-form count")
    p.add_argument("name")
    p.add_argument("args", nargs="*", type=int)
    _add_format_flags(p)
    p.set_defaults(func=cmd_formula)

    return parser


def main(argv=None) -> int:
    from tuttelab.generate import CapExceeded
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as err:
        print(f"generation cap exceeded: {err}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
