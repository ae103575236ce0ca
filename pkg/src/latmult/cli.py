"""Batch command line front end with stable, machine-readable output.

Exit codes: 0 success (verify: all checks passed), 1 verification failure,
2 usage or input error, 3 resource guard rejection.
"""

import argparse
import json
import sys

from latmult import serialize
from latmult.avoidance import count_avoiders, lds_length
from latmult.bijections import sigma, tau
from latmult.enumeration import count_by_type, count_sequences
from latmult.guards import GUARD_ENV, ResourceLimitError
from latmult.partitions import count_syt, partitions_of, syt_sum, syt_sum_squares
from latmult.verify import render_report, run_verification
from latmult.weights import gamma, multiplicity, weight_pairings

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "tsv"], default=None,
                   help="output format (default depends on the command)")
    p.add_argument("--allow-large", action="store_true",
                   help=f"override resource guards (equivalent: {GUARD_ENV}=1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latmult",
        description="Exact counts of nested lattice path families, standard tableaux, "
                    "pattern-avoiding permutations, and matching affine weight multiplicities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="exact counting commands")
    what = count.add_subparsers(dest="what", required=True)

    tab = what.add_parser(
        "tableaux",
        help="total standard tableaux with bounded height",
        epilog="TSV columns with --per-shape: lambda, f; a final 'total' row closes the table.",
    )
    tab.add_argument("--ell", type=int, required=True, help="number of cells")
    tab.add_argument("--max-height", type=int, required=True, help="height bound (>= 2)")
    tab.add_argument("--per-shape", action="store_true", help="one output row per partition")
    _add_common(tab)
    tab.set_defaults(handler=cmd_count_tableaux, default_format="tsv")

    per_shape_columns = ("TSV columns with --per-shape: lambda, f, f_squared, "
                         "brute_admissible, brute_self_conjugate.")
    paths = what.add_parser(
        "paths",
        help="admissible nested path sequences",
        epilog=per_shape_columns,
    )
    paths.add_argument("--ell", type=int, required=True, help="square size")
    paths.add_argument("--k", type=int, required=True, help="one more than the path count")
    paths.add_argument("--method", choices=["brute", "formula"], default="formula")
    paths.add_argument("--per-shape", action="store_true",
                       help="per-type table with formula and enumeration columns")
    _add_common(paths)
    paths.set_defaults(handler=cmd_count_paths, self_conjugate=False, default_format="tsv")

    fixed = what.add_parser(
        "self-conjugate",
        help="reflection-fixed admissible sequences",
        epilog=per_shape_columns,
    )
    fixed.add_argument("--ell", type=int, required=True, help="square size")
    fixed.add_argument("--k", type=int, required=True, help="one more than the path count")
    fixed.add_argument("--method", choices=["brute", "formula"], default="formula")
    fixed.add_argument("--per-shape", action="store_true",
                       help="per-type table with formula and enumeration columns")
    _add_common(fixed)
    fixed.set_defaults(handler=cmd_count_paths, self_conjugate=True, default_format="tsv")

    avoid = what.add_parser("avoiders", help="permutations with bounded decreasing runs")
    avoid.add_argument("--ell", type=int, required=True, help="word length")
    avoid.add_argument("--k", type=int, required=True, help="longest allowed decreasing run")
    avoid.add_argument("--method", choices=["brute", "rsk", "formula"], default="formula")
    _add_common(avoid)
    avoid.set_defaults(handler=cmd_count_avoiders, default_format="tsv")

    mult = sub.add_parser("mult", help="maximal dominant weight multiplicity")
    mult.add_argument("--n", type=int, required=True, help="rank parameter (>= 2)")
    mult.add_argument("--k", type=int, required=True, help="level (>= 2)")
    mult.add_argument("--ell", type=int, required=True, help="family index, 1..floor(n/2)")
    _add_common(mult)
    mult.set_defaults(handler=cmd_mult, default_format="json")

    mapping = sub.add_parser("map", help="apply a bijection to JSON read from stdin")
    mapping.add_argument("direction", choices=["tau", "sigma"],
                         help="tau: tableau to path sequence; sigma: the inverse")
    mapping.add_argument("--k", type=int, default=None,
                         help="path count parameter for tau (default: tableau height, min 2)")
    _add_common(mapping)
    mapping.set_defaults(handler=cmd_map, default_format="json")

    lds = sub.add_parser("lds", help="longest decreasing subsequence of a one-line word")
    lds.add_argument("word", nargs="?", default=None,
                     help="digits, e.g. 26873415 (read from stdin when omitted)")
    _add_common(lds)
    lds.set_defaults(handler=cmd_lds, default_format="tsv")

    ver = sub.add_parser("verify", help="run the cross-check suite over an (ell, k) grid")
    ver.add_argument("--ell-max", type=int, required=True)
    ver.add_argument("--k-max", type=int, required=True)
    _add_common(ver)
    ver.set_defaults(handler=cmd_verify, default_format="tsv")

    return parser


def _fmt(args) -> str:
    return args.format or args.default_format


def _compact(values) -> str:
    return json.dumps(list(values), separators=(",", ":"))


def _emit_scalar(fmt: str, meta: dict, value: int) -> None:
    if fmt == "json":
        print(json.dumps({**meta, "count": str(value)}))
    else:
        print(value)


def cmd_count_tableaux(args) -> int:
    fmt = _fmt(args)
    total = syt_sum(args.ell, args.max_height)
    if not args.per_shape:
        _emit_scalar(fmt, {"ell": args.ell, "max_height": args.max_height}, total)
        return EXIT_OK
    rows = [(lam, count_syt(lam)) for lam in partitions_of(args.ell, args.max_height)]
    if fmt == "json":
        print(json.dumps({
            "ell": args.ell,
            "max_height": args.max_height,
            "total": str(total),
            "per_shape": [{"partition": list(lam.parts), "count": str(f)} for lam, f in rows],
        }))
    else:
        print("lambda\tf")
        for lam, f in rows:
            print(f"{_compact(lam.parts)}\t{f}")
        print(f"total\t{total}")
    return EXIT_OK


def cmd_count_paths(args) -> int:
    fmt = _fmt(args)
    meta = {"ell": args.ell, "k": args.k, "method": args.method}
    if args.per_shape:
        per = count_by_type(args.ell, args.k, allow_large=args.allow_large)
        rows = []
        for lam in partitions_of(args.ell, args.k):
            f = count_syt(lam)
            adm, fixed = per[lam]
            rows.append((lam, f, f * f, adm, fixed))
        if fmt == "json":
            print(json.dumps({
                "ell": args.ell,
                "k": args.k,
                "per_shape": [
                    {
                        "partition": list(lam.parts),
                        "f": str(f),
                        "f_squared": str(f2),
                        "brute_admissible": str(adm),
                        "brute_self_conjugate": str(fixed),
                    }
                    for lam, f, f2, adm, fixed in rows
                ],
            }))
        else:
            print("lambda\tf\tf_squared\tbrute_admissible\tbrute_self_conjugate")
            for lam, f, f2, adm, fixed in rows:
                print(f"{_compact(lam.parts)}\t{f}\t{f2}\t{adm}\t{fixed}")
        return EXIT_OK
    if args.method == "formula":
        value = (syt_sum if args.self_conjugate else syt_sum_squares)(args.ell, args.k)
    else:
        admissible, fixed = count_sequences(args.ell, args.k, allow_large=args.allow_large)
        value = fixed if args.self_conjugate else admissible
    _emit_scalar(fmt, meta, value)
    return EXIT_OK


def cmd_count_avoiders(args) -> int:
    value = count_avoiders(args.ell, args.k, args.method, allow_large=args.allow_large)
    _emit_scalar(_fmt(args), {"ell": args.ell, "k": args.k, "method": args.method}, value)
    return EXIT_OK


def cmd_mult(args) -> int:
    g = gamma(args.ell, args.n)
    w = weight_pairings(args.k, g)
    value = multiplicity(args.n, args.k, args.ell)
    if _fmt(args) == "json":
        print(json.dumps({
            "n": args.n,
            "k": args.k,
            "ell": args.ell,
            "gamma": list(g.coeffs),
            "pairings": list(w.pairings),
            "multiplicity": str(value),
        }))
    else:
        print(f"gamma\t{_compact(g.coeffs)}")
        print(f"pairings\t{_compact(w.pairings)}")
        print(f"multiplicity\t{value}")
    return EXIT_OK


def cmd_map(args) -> int:
    payload = json.loads(sys.stdin.read())
    fmt = _fmt(args)
    if args.direction == "tau":
        x = serialize.tableau_from_json(payload)
        k = args.k if args.k is not None else max(2, x.shape.height)
        z = tau(x, k)
        if fmt == "json":
            print(json.dumps(serialize.sequence_to_json(z)))
        else:
            for p in z.paths:
                print(p.moves)
    else:
        z = serialize.sequence_from_json(payload)
        x = sigma(z)
        if fmt == "json":
            print(json.dumps(serialize.tableau_to_json(x)))
        else:
            for row in x.rows:
                print("\t".join(str(e) for e in row))
    return EXIT_OK


def cmd_lds(args) -> int:
    text = args.word if args.word is not None else sys.stdin.read()
    w = serialize.permutation_from_word(text)
    value = lds_length(w)
    if _fmt(args) == "json":
        print(json.dumps({"word": list(w.word), "lds": value}))
    else:
        print(value)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_verification(args.ell_max, args.k_max, allow_large=args.allow_large)
    if _fmt(args) == "json":
        print(json.dumps({
            "checks": [
                {"name": r.name, "ell": r.ell, "k": r.k, "ok": r.ok,
                 **({"detail": r.detail} if not r.ok else {})}
                for r in results
            ],
            "passed": sum(r.ok for r in results),
            "total": len(results),
        }))
    else:
        print(render_report(results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return EXIT_OK
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except json.JSONDecodeError as exc:
        print(f"malformed JSON at line {exc.lineno} column {exc.colno} (char {exc.pos}): {exc.msg}",
              file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
