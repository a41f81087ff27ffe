"""Command-line interface.

Exit codes: 0 success or affirmative verdict, 1 negative verdict (non-member,
uncolorable, nothing found), 2 input error, 3 search budget exceeded.
JSON is the stable machine interface (every object carries "schema": 1);
plain output is for humans and may change.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as cat
from .budget import Budget
from .cutsets import CutsetCertificate, find_ear, verify_cutset
from .decomposer import (
    Coloring,
    UncolorableReport,
    brute_force_chromatic,
    classify_structure,
    three_color,
    verify_coloring,
)
from .errors import BudgetExceededError, HeptalibError, InputError
from .generators import GenSpec, random_member
from .graph import (
    Graph,
    cycle_seq,
    parse_graph_text,
    path_seq,
    to_edge_list_text,
    validate_sequence,
)
from .jumps import (
    classify_jump,
    seven_holes,
    short_jump_interiors,
)
from .jumps import list_jumps as enumerate_jumps
from .recognizer import enumerate_holes, find_big_odd_hole, membership

SCHEMA = 1

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _load_graph(source: str) -> Graph:
    if source.startswith("catalog:"):
        return cat.catalog_graph(source.split(":", 1)[1])
    if source == "-":
        return parse_graph_text(sys.stdin.read())
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return parse_graph_text(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc


def _emit(payload: dict, args, plain_lines: list[str]) -> None:
    if getattr(args, "plain", False):
        for line in plain_lines:
            print(line)
    else:
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, indent=None, sort_keys=False))


def _budget(args) -> Budget | None:
    if getattr(args, "budget", None) is not None:
        return Budget(args.budget)
    return None


def cmd_recognize(args) -> int:
    g = _load_graph(args.input)
    verdict = membership(g, args.ell, _budget(args))
    payload = {"kind": "membership", "ell": args.ell, **verdict.to_json()}
    plain = [f"member: {verdict.member}"]
    if verdict.witness is not None:
        w = verdict.to_json()["witness"]
        plain.append(f"witness {w['kind']}: {' '.join(map(str, w['vertices']))}")
    _emit(payload, args, plain)
    return EXIT_OK if verdict.member else EXIT_NEGATIVE


def cmd_holes(args) -> int:
    g = _load_graph(args.input)
    holes = enumerate_holes(g, args.max_len, _budget(args))
    payload = {
        "kind": "holes",
        "count": len(holes),
        "holes": [[v + 1 for v in h.vertices] for h in holes],
    }
    plain = [f"{len(holes)} holes"] + [
        " ".join(str(v + 1) for v in h.vertices) for h in holes
    ]
    _emit(payload, args, plain)
    return EXIT_OK if holes else EXIT_NEGATIVE


def cmd_jumps(args) -> int:
    g = _load_graph(args.input)
    ctxs = seven_holes(g, _budget(args))
    contexts = []
    for ctx in ctxs:
        jumps = enumerate_jumps(ctx, args.max_len, _budget(args))
        contexts.append(
            {
                "cycle": [v + 1 for v in ctx.cycle],
                "jumps": [j.to_json() for j in jumps],
            }
        )
    payload = {"kind": "jumps", "contexts": contexts}
    plain = []
    for c in contexts:
        plain.append("hole " + " ".join(map(str, c["cycle"])))
        for j in c["jumps"]:
            plain.append(
                f"  {j['kind']}-jump {j['ends']} across {j['across']} "
                f"local={j['local']} short={j['short']}"
            )
    _emit(payload, args, plain)
    return EXIT_OK if contexts else EXIT_NEGATIVE


def cmd_interiors(args) -> int:
    g = _load_graph(args.input)
    ctxs = seven_holes(g, _budget(args))
    contexts = []
    for ctx in ctxs:
        idx = short_jump_interiors(ctx, _budget(args))
        contexts.append({"cycle": [v + 1 for v in ctx.cycle], **idx.to_json()})
    payload = {"kind": "interiors", "contexts": contexts}
    plain = []
    for c in contexts:
        plain.append("hole " + " ".join(map(str, c["cycle"])))
        for key, vs in c["X"].items():
            if vs:
                plain.append(f"  X[{key}] = {vs}")
    _emit(payload, args, plain)
    return EXIT_OK if contexts else EXIT_NEGATIVE


def cmd_decompose(args) -> int:
    g = _load_graph(args.input)
    report = classify_structure(g, _budget(args))
    payload = {"kind": "structure", **report.to_json()}
    _emit(payload, args, [f"verdict: {report.verdict}"])
    negative = report.verdict in ("not_member", "theorem_violation")
    return EXIT_NEGATIVE if negative else EXIT_OK


def cmd_color(args) -> int:
    g = _load_graph(args.input)
    result = three_color(g, _budget(args))
    if isinstance(result, UncolorableReport):
        payload = {"kind": "coloring", **result.to_json()}
        _emit(payload, args, ["not 3-colorable"])
        return EXIT_NEGATIVE
    verified = verify_coloring(g, result) is None
    payload = {"kind": "coloring", **result.to_json(), "verified": verified}
    plain = [
        f"{v + 1}: {c}" for v, c in sorted(result.colors.items())
    ] + [f"verified: {verified}"]
    _emit(payload, args, plain)
    return EXIT_OK


def cmd_chromatic(args) -> int:
    g = _load_graph(args.input)
    chi = brute_force_chromatic(g, cap=args.cap)
    _emit({"kind": "chromatic", "chromatic_number": chi}, args, [f"chi = {chi}"])
    return EXIT_OK


def cmd_ear(args) -> int:
    g = _load_graph(args.input)
    try:
        subset = {int(tok) - 1 for tok in args.subset.split(",")}
    except ValueError as exc:
        raise InputError(f"bad subset spec {args.subset!r}") from exc
    cert = find_ear(g, subset, _budget(args))
    if cert is None:
        _emit({"kind": "ear", "found": False}, args, ["no ear"])
        return EXIT_NEGATIVE
    payload = {"kind": "ear", "found": True, **cert.to_json()}
    _emit(payload, args, [f"ear {cert.s + 1}..{cert.t + 1}: "
                          + " ".join(str(v + 1) for v in cert.path.vertices)])
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        names = cat.catalog_names()
        _emit({"kind": "catalog", "names": names}, args, names)
        return EXIT_OK
    entry = cat.catalog_entry(args.name)
    sys.stdout.write(to_edge_list_text(entry.graph))
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = GenSpec(n=args.n, target_m=args.m, seed=args.seed, ell=args.ell)
    g = random_member(spec)
    sys.stdout.write(to_edge_list_text(g))
    return EXIT_OK


# ---------------------------------------------------------------------------
# selftest: a quick built-in battery, plus re-validation of emitted JSON.
# ---------------------------------------------------------------------------


def _check_certificate(cert: dict, g: Graph) -> list[str]:
    """Re-validate an emitted JSON object against its graph. Returns a list
    of failures (empty means everything checked out)."""
    failures = []
    kind = cert.get("kind")
    if kind == "membership":
        w = cert.get("witness")
        if w is not None:
            vs = [v - 1 for v in w["vertices"]]
            if w["kind"] == "short_cycle":
                bad = validate_sequence(g, cycle_seq(vs))
                if bad is not None:
                    failures.append(f"short cycle witness: {bad}")
                if len(vs) > 2 * cert.get("ell", 3):
                    failures.append("short cycle witness too long")
            else:
                bad = validate_sequence(g, cycle_seq(vs), require_induced=True)
                if bad is not None:
                    failures.append(f"odd hole witness: {bad}")
                if len(vs) % 2 == 0 or len(vs) < 2 * cert.get("ell", 3) + 3:
                    failures.append("odd hole witness wrong size")
        if cert.get("member") and w is not None:
            failures.append("member verdict carries a witness")
    elif kind == "holes":
        for hole in cert["holes"]:
            vs = [v - 1 for v in hole]
            bad = validate_sequence(g, cycle_seq(vs), require_induced=True)
            if bad is not None:
                failures.append(f"hole {hole}: {bad}")
    elif kind == "jumps":
        for c in cert["contexts"]:
            ctx_vertices = [v - 1 for v in c["cycle"]]
            from .jumps import SevenHoleContext

            ctx = SevenHoleContext(g, ctx_vertices)
            for j in c["jumps"]:
                path = [v - 1 for v in j["path"]]
                rebuilt = classify_jump(ctx, path)
                if rebuilt.local != j["local"] or rebuilt.short != j["short"]:
                    failures.append(f"jump flags mismatch: {j}")
    elif kind == "interiors":
        from .jumps import SevenHoleContext

        for c in cert["contexts"]:
            ctx = SevenHoleContext(g, [v - 1 for v in c["cycle"]])
            idx = short_jump_interiors(ctx)
            if idx.to_json()["X"] != c["X"]:
                failures.append("interior index mismatch")
    elif kind == "structure":
        failures += _check_structure(cert, g)
    elif kind == "coloring":
        if cert.get("colorable") is False:
            if brute_force_chromatic(g) <= 3:
                failures.append("claimed uncolorable but a 3-coloring exists")
        else:
            colors = {int(k) - 1: v for k, v in cert["colors"].items()}
            bad = verify_coloring(g, Coloring(colors))
            if bad is not None:
                failures.append(f"coloring violates edge {bad}")
    elif kind == "ear":
        if cert.get("found"):
            path = [v - 1 for v in cert["path"]]
            bad = validate_sequence(g, path_seq(path), require_induced=True)
            if bad is not None:
                failures.append(f"ear path: {bad}")
    elif kind == "chromatic":
        if g.n <= 24 and brute_force_chromatic(g) != cert["chromatic_number"]:
            failures.append("chromatic number mismatch")
    else:
        failures.append(f"unknown certificate kind {kind!r}")
    return failures


def _check_structure(cert: dict, g: Graph) -> list[str]:
    failures = []
    verdict = cert["verdict"]
    if verdict == "min_degree_below_3":
        if g.degree(cert["vertex"] - 1) >= 3:
            failures.append("vertex has degree >= 3")
    elif verdict == "bipartite":
        sides = cert["partition"]
        color = {}
        for idx, side in enumerate(sides):
            for v in side:
                color[v - 1] = idx
        for u, v in g.edges():
            if color.get(u) == color.get(v):
                failures.append(f"partition not proper at ({u}, {v})")
                break
    elif verdict in ("p3_cutset", "parity_star_cutset"):
        failures += _check_cutset_json(cert["certificate"], g)
    elif verdict == "not_member":
        failures += _check_certificate(
            {"kind": "membership", **cert["membership"]}, g
        )
    return failures


def _check_cutset_json(cj: dict, g: Graph) -> list[str]:
    cut = tuple(sorted(v - 1 for v in cj["cut"]))
    components = tuple(
        tuple(sorted(v - 1 for v in comp)) for comp in cj["components"]
    )
    components = tuple(sorted(components, key=lambda c: c[0]))
    kind = cj["kind"]
    kwargs = {}
    if kind == "p3":
        kwargs["p3"] = tuple(v - 1 for v in cj["path"])
    if kind == "parity_star":
        kwargs["center"] = cj["center"] - 1
        kwargs["component_a"] = tuple(sorted(v - 1 for v in cj["component_a"]))
        kwargs["even_paths"] = tuple(
            (
                tuple(int(x) - 1 for x in key.split(",")),
                tuple(v - 1 for v in path),
            )
            for key, path in cj["even_paths"].items()
        )
    cert = CutsetCertificate(kind, cut, components, **kwargs)
    bad = verify_cutset(g, cert)
    return [f"cutset: {bad}"] if bad is not None else []


def cmd_selftest(args) -> int:
    if args.check_certificate:
        with open(args.check_certificate, "r", encoding="utf-8") as fh:
            cert = json.load(fh)
        if args.graph is None:
            raise InputError("--check-certificate needs --graph")
        g = _load_graph(args.graph)
        failures = _check_certificate(cert, g)
        for f in failures:
            print(f"FAIL {f}", file=sys.stderr)
        print(json.dumps({"schema": SCHEMA, "kind": "check", "ok": not failures}))
        return EXIT_OK if not failures else EXIT_NEGATIVE

    failures = []
    for name in cat.catalog_names():
        entry = cat.catalog_entry(name)
        got = membership(entry.graph, 3).member
        if got != entry.expected_member_ell3:
            failures.append(f"{name}: membership {got}")
        print(f"catalog {name}: ok")
    c7 = cat.catalog_graph("C7")
    result = three_color(c7)
    if not isinstance(result, Coloring) or verify_coloring(c7, result) is not None:
        failures.append("C7 coloring")
    pp = cat.catalog_graph("Pprime")
    result = three_color(pp)
    if not isinstance(result, Coloring) or verify_coloring(pp, result) is not None:
        failures.append("Pprime coloring")
    for ctx in seven_holes(pp):
        for j in enumerate_jumps(ctx, 8):
            if j.local and j.kind == "e" and j.length % 2 != 0:
                failures.append("parity bullet (e-jump)")
            if j.local and j.kind == "v" and j.length % 2 != 1:
                failures.append("parity bullet (v-jump)")
    mc = cat.catalog_graph("mcgee")
    hole = find_big_odd_hole(mc, 3)
    if hole is None or len(hole) != 9:
        failures.append("no 9-hole in the 24-vertex cage")
    for f in failures:
        print(f"FAIL {f}", file=sys.stderr)
    print("selftest:", "ok" if not failures else f"{len(failures)} failures")
    return EXIT_OK if not failures else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heptalib",
        description="Recognition, jump analysis, cutsets and exact 3-coloring "
        "for graphs of girth >= 7 without long odd holes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument(
                "input",
                help="edge-list/DIMACS file, '-' for stdin, or catalog:NAME",
            )
        p.add_argument("--plain", action="store_true", help="human-oriented output")
        p.add_argument("--json", dest="plain", action="store_false",
                       help="JSON output (default)")
        p.add_argument("--budget", type=int, default=None,
                       help="search step budget override")

    p = sub.add_parser("recognize", help="family membership with witness")
    add_common(p)
    p.add_argument("--ell", type=int, default=3)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("holes", help="enumerate induced cycles")
    add_common(p)
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_holes)

    p = sub.add_parser("jumps", help="jumps of every 7-hole")
    add_common(p)
    p.add_argument("--max-len", type=int, default=12)
    p.set_defaults(func=cmd_jumps)

    p = sub.add_parser("interiors", help="short-jump interior index per 7-hole")
    add_common(p)
    p.set_defaults(func=cmd_interiors)

    p = sub.add_parser("decompose", help="structural classification")
    add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("color", help="exact 3-coloring")
    add_common(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("chromatic", help="exact chromatic number (small n)")
    add_common(p)
    p.add_argument("--cap", type=int, default=24)
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("ear", help="find an ear of an induced subgraph")
    add_common(p)
    p.add_argument("--subset", required=True,
                   help="comma-separated 1-based vertex ids of H")
    p.set_defaults(func=cmd_ear)

    p = sub.add_parser("catalog", help="list or emit reference graphs")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("generate", help="seeded random member graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--ell", type=int, default=3)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("selftest", help="built-in battery / certificate check")
    p.add_argument("--check-certificate", default=None,
                   help="JSON output of another command to re-validate")
    p.add_argument("--graph", default=None,
                   help="the graph the certificate refers to")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action == "emit" and not args.name:
        print("catalog emit needs a name", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except HeptalibError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
