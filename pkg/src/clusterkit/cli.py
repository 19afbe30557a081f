"""Command-line interface.

Data goes to stdout, diagnostics to stderr, so verbs compose in pipes:

    clusterkit build --family unitriangular --n 3 | clusterkit enumerate

Exit codes: 0 success, 1 domain error, 2 usage error.  All vertex ids on
the command line and in JSON are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import builders, explore, flagvar, minors
from .errors import ClusterError
from .seed import Seed, seed_from_json, seed_to_json


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _read_seed(args) -> Seed:
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = json.load(sys.stdin)
    return seed_from_json(data)


def _parse_ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _limits(args) -> dict:
    """Map --limits "clusters=N,depth=M" onto enumeration keyword arguments."""
    out = {}
    spec = getattr(args, "limits", None)
    if spec:
        keys = {"clusters": "max_clusters", "depth": "max_depth"}
        for part in spec.split(","):
            key, _, value = part.partition("=")
            if key.strip() not in keys or not value.strip().isdigit():
                raise ValueError(f"bad --limits entry {part!r} "
                                 "(expected clusters=N,depth=M)")
            out[keys[key.strip()]] = int(value)
    return out


def cmd_build(args) -> int:
    params = {}
    if args.a is not None:
        params["a"] = args.a
    if args.n is not None:
        params["n"] = args.n
    if args.type is not None:
        params["type"] = args.type
    if args.ell is not None:
        params["ell"] = args.ell
    if args.i0 is not None:
        params["i0"] = _parse_ints(args.i0)
    if args.orientation is not None:
        params["orientation"] = ("bipartite" if args.orientation == "bipartite"
                                 else _parse_orientation(args.orientation))
    seed = builders.build_family(args.family, **params)
    if args.format == "dot":
        _emit(seed.quiver.to_dot())
    else:
        _emit(json.dumps(seed_to_json(seed), indent=2))
    return 0


def _parse_orientation(text: str):
    pairs = []
    for part in text.split(","):
        src, _, dst = part.partition(">")
        pairs.append((int(src), int(dst)))
    return pairs


def cmd_mutate(args) -> int:
    seed = _read_seed(args)
    for k in _parse_ints(args.at):
        seed = seed.mutate(k - 1)
    _emit(json.dumps(seed_to_json(seed), indent=2))
    return 0


def cmd_enumerate(args) -> int:
    seed = _read_seed(args)
    report = explore.enumerate_exchange_graph(seed, workers=args.workers,
                                              **_limits(args))
    if args.format == "text":
        _emit(f"clusters: {report.n_clusters}, variables: {report.n_variables} "
              f"({report.n_frozen} frozen)")
        if report.truncated:
            _emit("truncated: limits reached")
    elif args.format == "dot":
        _emit(report.exchange_dot())
    else:
        _emit(json.dumps(report.to_json(include_variables=args.variables), indent=2))
    return 0


def cmd_classify(args) -> int:
    seed = _read_seed(args)
    verdict = explore.classify_finite_type(seed.quiver)
    if args.format == "text":
        _emit(verdict.describe())
    else:
        data = {"kind": verdict.kind,
                "components": [f"{l}{r}" for l, r in verdict.components],
                "quivers_seen": verdict.quivers_seen}
        if verdict.reason:
            data["reason"] = verdict.reason
        _emit(json.dumps(data, indent=2))
    return 0


def cmd_fpoly(args) -> int:
    seed = _read_seed(args)
    table = explore.f_polynomials(seed, **_limits(args))
    entries = [{"variable": str(v), "f_polynomial": str(f)}
               for v, f in sorted(table.items(), key=lambda kv: kv[0].terms)]
    if args.format == "text":
        for e in entries:
            _emit(f"{e['variable']}  :  {e['f_polynomial']}")
    else:
        _emit(json.dumps({"count": len(entries), "entries": entries}, indent=2))
    return 0


def cmd_verify(args) -> int:
    if args.check == "laurent":
        seed = _read_seed(args)
        failures = []
        for w in range(args.walks):
            result = explore.random_walk_laurent_check(seed, args.depth,
                                                       args.rng_seed + w)
            if not result.ok:
                failures.append({"walk": w, "trace": [k + 1 for k in result.trace],
                                 "error": result.error})
        _emit(json.dumps({"walks": args.walks, "depth": args.depth,
                          "rng_seed": args.rng_seed, "failures": failures}, indent=2))
        return 0 if not failures else 1
    if args.check == "positivity":
        seed = _read_seed(args)
        report = explore.enumerate_exchange_graph(seed, **_limits(args))
        bad = explore.verify_positivity(report)
        _emit(json.dumps({"clusters": report.n_clusters,
                          "variables": report.n_variables,
                          "truncated": report.truncated,
                          "violations": [str(v) for v in bad]}, indent=2))
        return 0 if not bad else 1
    # minors
    seed = builders.build_unitriangular_seed(args.n)
    report = minors.verify_exchange_identities(seed, depth=args.depth)
    _emit(json.dumps(report.to_json(), indent=2))
    return 0


def cmd_euler(args) -> int:
    with open(args.module, "r", encoding="utf-8") as fh:
        module = flagvar.module_from_json(json.load(fh))
    if args.type:
        ftype = _parse_ints(args.type)
        details = flagvar.flag_count_details(module, ftype)
        if args.format == "text":
            _emit(f"chi = {details.euler}")
        else:
            _emit(json.dumps({"type": ftype, "euler": details.euler,
                              "counts": [list(c) for c in details.counts],
                              "polynomial": details.poly_str()}, indent=2))
    else:
        types = flagvar.enumerate_types(module)
        rows = [{"type": list(t),
                 "euler": flagvar.euler_characteristic(module, t)} for t in types]
        if args.format == "text":
            for row in rows:
                _emit(f"type {','.join(map(str, row['type']))}: chi = {row['euler']}")
            _emit(f"total = {sum(r['euler'] for r in rows)}")
        else:
            _emit(json.dumps({"types": rows,
                              "total": sum(r["euler"] for r in rows)}, indent=2))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(state_dir=args.state_dir, idle_seconds=args.idle_seconds)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clusterkit", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="construct a seed family")
    p.add_argument("--family", required=True,
                   choices=["rank2", "unitriangular", "gamma", "dynkin"])
    p.add_argument("--a", type=int, help="arrow multiplicity for rank2")
    p.add_argument("--n", type=int, help="rank for unitriangular")
    p.add_argument("--type", help="Dynkin type, e.g. A2 or D4")
    p.add_argument("--ell", type=int, help="level for gamma")
    p.add_argument("--i0", help="comma-separated source side of the bipartition")
    p.add_argument("--orientation", help='"bipartite" or pairs like "1>2,3>2"')
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("mutate", help="apply a mutation sequence to a seed")
    p.add_argument("--at", required=True, help="comma-separated 1-based vertices")
    p.add_argument("--input", help="seed JSON path (default: stdin)")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("enumerate", help="enumerate the exchange graph")
    p.add_argument("--input", help="seed JSON path (default: stdin)")
    p.add_argument("--limits", help="clusters=N,depth=M caps for the walk")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--variables", action="store_true",
                   help="include the full variable list in JSON output")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="finite-type classification")
    p.add_argument("--input", help="seed JSON path (default: stdin)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fpoly", help="coefficient polynomials of the class")
    p.add_argument("--input", help="seed JSON path (default: stdin)")
    p.add_argument("--limits", help="clusters=N,depth=M caps for the walk")
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_fpoly)

    p = sub.add_parser("verify", help="verification passes")
    vsub = p.add_subparsers(dest="check", required=True)

    v = vsub.add_parser("laurent", help="random mutation walks must divide exactly")
    v.add_argument("--input", help="seed JSON path (default: stdin)")
    v.add_argument("--walks", type=int, default=100)
    v.add_argument("--depth", type=int, default=8)
    v.add_argument("--rng-seed", type=int, required=True, dest="rng_seed")
    v.set_defaults(func=cmd_verify)

    v = vsub.add_parser("positivity", help="scan enumerated coefficients")
    v.add_argument("--input", help="seed JSON path (default: stdin)")
    v.add_argument("--limits", help="clusters=N,depth=M caps for the walk")
    v.set_defaults(func=cmd_verify)

    v = vsub.add_parser("minors", help="symbolic exchange identities for minors")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--depth", type=int, default=16)
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("euler", help="flag-variety Euler characteristics")
    p.add_argument("--module", required=True, help="graded module JSON path")
    p.add_argument("--type", help="composition type, e.g. 2,2,1,3 (default: all)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--state-dir", dest="state_dir")
    p.add_argument("--idle-seconds", type=float, default=3600.0, dest="idle_seconds")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "serve" and args.port is None:
        import os
        args.port = int(os.environ.get("CLUSTERKIT_PORT", "8642"))
    try:
        return args.func(args)
    except ClusterError as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        if hasattr(exc, "path") and exc.path:
            payload["path"] = [k + 1 for k in exc.path]
        print(json.dumps(payload), file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
