"""Command-line interface.

Subcommands: ``catalog`` (browse the group families), ``classify`` (run the
hypermap search), ``verify`` (check the built-in catalog of simple
hypermaps), ``levi`` (export a hypergraph's incidence graph) and
``check-triple`` (condition ledger for one user-supplied triple).

Exit codes: 0 success, 1 verification failure, 2 bad parameters,
3 enumeration cap exceeded, 4 parse error, 5 mathematical precondition
failure.
"""

from __future__ import annotations

import argparse
import re
import json
import sys

from .classify import classify, condition_ledger, report_json, verify_catalog
from .errors import (
    CapExceeded,
    GroupFileError,
    InvalidFamilyParams,
    NotGenerating,
    NotInvolution,
    ParseError,
)
from .families import (
    FAMILIES,
    FamilyParams,
    build_family,
    family_generators,
    legal_params,
)
from .gf import is_prime
from .group import DEFAULT_CAP, group_generate, intersect
from .group import product_intersection_size, subgroup_generate
from .hypergraph import hypergraph_from_dict, levi_dot, levi_graph
from .hypermap import InvolutionTriple, hypermap_build
from .perm import Permutation, perm_from_cycles
from .simplicity import edge_multiplicity_direct, faithful_on_vertices

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARAMS = 2
EXIT_CAP = 3
EXIT_PARSE = 4
EXIT_PRECONDITION = 5


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def parse_group_file(path: str) -> tuple[int, list[Permutation]]:
    """Read a group file: 'degree N' header, one generator per line in
    cycle notation, '#' comments."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise GroupFileError(0, f"cannot read {path}: {exc}")
    degree = None
    gens = []
    for line_no, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m:
                raise GroupFileError(line_no, f"expected 'degree N', got {line!r}")
            degree = int(m.group(1))
            if degree < 1:
                raise GroupFileError(line_no, "degree must be at least 1")
            continue
        try:
            gens.append(perm_from_cycles(line, degree))
        except ParseError as exc:
            raise GroupFileError(line_no, str(exc))
    if degree is None:
        raise GroupFileError(len(lines) + 1, "missing 'degree N' header")
    if not gens:
        raise GroupFileError(len(lines) + 1, "no generators given")
    return degree, gens


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- catalog -----------------------------------------------------------------


def cmd_catalog(args) -> int:
    if not is_prime(args.p):
        return _fail(EXIT_PARAMS, f"p = {args.p} is not prime")
    if args.p > args.max_p:
        return _fail(EXIT_PARAMS, f"p = {args.p} exceeds the maximum {args.max_p}")
    try:
        params = legal_params(args.p)
    except InvalidFamilyParams as exc:
        return _fail(EXIT_PARAMS, str(exc))
    if args.family:
        params = [fp for fp in params if fp.family == args.family]
        if not params:
            return _fail(
                EXIT_PARAMS, f"{args.family} has no legal parameters at p = {args.p}"
            )
    if args.n is not None:
        chosen = [fp for fp in params if fp.n == args.n]
        if not chosen:
            try:
                fam = args.family or "?"
                FamilyParams(fam, args.p, args.n)
            except InvalidFamilyParams as exc:
                return _fail(EXIT_PARAMS, str(exc))
            return _fail(EXIT_PARAMS, f"n = {args.n} is not legal here")
        params = chosen
    records = []
    for fp in params:
        gens = family_generators(fp)
        records.append(
            {
                "family": fp.family,
                "p": fp.p,
                "n": fp.n,
                "order": fp.order,
                "degree": fp.degree,
                "stabilizer_order": 2 * fp.n,
                "generators": [
                    {"name": name, "cycles": m.to_permutation().cycle_string()}
                    for name, m in gens
                ],
            }
        )
    _emit(report_json({"schema": 1, "kind": "catalog", "records": records}), args.json)
    return EXIT_OK


# -- classify ----------------------------------------------------------------


def cmd_classify(args) -> int:
    if (args.p is None) == (args.group is None):
        return _fail(EXIT_PARAMS, "exactly one of --p and --group is required")
    prune = not args.no_prune
    sections = []
    if args.p is not None:
        if not is_prime(args.p):
            return _fail(EXIT_PARAMS, f"p = {args.p} is not prime")
        omega = args.omega if args.omega else args.p * args.p
        params = legal_params(args.p)
        if args.family:
            params = [fp for fp in params if fp.family == args.family]
            if not params:
                return _fail(
                    EXIT_PARAMS, f"{args.family} has no legal parameters at p = {args.p}"
                )
        if args.n is not None:
            params = [fp for fp in params if fp.n == args.n]
            if not params:
                return _fail(EXIT_PARAMS, f"n = {args.n} is not legal here")
        try:
            for fp in params:
                fg = build_family(fp, cap=args.cap)
                report = classify(
                    fg.group,
                    omega,
                    prune=prune,
                    workers=args.workers,
                    descriptor={"family": fp.family, "p": fp.p, "n": fp.n},
                )
                sections.append(report.to_dict())
        except CapExceeded as exc:
            return _fail(EXIT_CAP, str(exc))
    else:
        if args.family or args.n is not None:
            return _fail(EXIT_PARAMS, "--family/--n only apply with --p")
        if args.omega is None:
            return _fail(EXIT_PARAMS, "--omega is required with --group")
        omega = args.omega
        try:
            degree, gens = parse_group_file(args.group)
        except GroupFileError as exc:
            return _fail(EXIT_PARSE, f"{args.group}: {exc}")
        try:
            G = group_generate(gens, cap=args.cap)
        except CapExceeded as exc:
            return _fail(EXIT_CAP, str(exc))
        report = classify(
            G,
            omega,
            prune=prune,
            workers=args.workers,
            descriptor={"file": args.group, "degree": degree},
        )
        sections.append(report.to_dict())
    text = report_json(
        {"schema": 1, "kind": "classify", "omega": omega, "groups": sections}
    )
    sys.stdout.write(text)
    if args.json:
        _emit(text, args.json)
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    try:
        primes = [int(tok) for tok in args.p_list.split(",") if tok.strip()]
    except ValueError:
        return _fail(EXIT_PARAMS, f"cannot parse prime list {args.p_list!r}")
    if not primes:
        return _fail(EXIT_PARAMS, "empty prime list")
    for p in primes:
        if not is_prime(p):
            return _fail(EXIT_PARAMS, f"p = {p} is not prime")
    results = []
    all_ok = True
    try:
        for p in primes:
            results.append(verify_catalog(p, cap=args.cap))
    except CapExceeded as exc:
        return _fail(EXIT_CAP, str(exc))
    lines = []
    for res in results:
        lines.append(f"== p = {res['p']} ==")
        for entry in res["entries"]:
            label = entry["label"]
            if entry["status"] == "not_applicable":
                lines.append(f"  {label:<4} {entry['family']:<3} n/a   {entry['reason']}")
            else:
                k, m, n = entry["type"]
                status = entry["status"].upper()
                lines.append(
                    f"  {label:<4} {entry['family']:<3} n={entry['n']:<3} {status:<5}"
                    f" type=({k},{m},{n}) multiplicity={entry['edge_multiplicity']}"
                )
        g7 = res["g7"]
        if g7["status"] == "not_applicable":
            lines.append(f"  G7   n/a   {g7['reason']}")
        else:
            lines.append(
                f"  G7   {g7['status'].upper():<5} simple hypermaps found: "
                f"{g7['representatives']}"
            )
        all_ok = all_ok and res["ok"]
    lines.append(f"overall: {'PASS' if all_ok else 'FAIL'}")
    print("\n".join(lines))
    if args.json:
        _emit(
            report_json(
                {"schema": 1, "kind": "verify", "ok": all_ok, "primes": results}
            ),
            args.json,
        )
    if not all_ok:
        first = _first_failure(results)
        return _fail(EXIT_VERIFY, f"verification failed: {first}")
    return EXIT_OK


def _first_failure(results) -> str:
    for res in results:
        for entry in res["entries"]:
            if entry["status"] == "fail":
                failed = [
                    key for key, val in entry["conditions"].items() if val is False
                ]
                return f"{entry['label']} (p={res['p']}, n={entry['n']}): {failed}"
        if res["g7"].get("status") == "fail":
            return f"G7 (p={res['p']}): unexpected simple hypermap"
    return "unknown"


# -- levi --------------------------------------------------------------------


def cmd_levi(args) -> int:
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(EXIT_PARSE, f"{args.input}: {exc}")
    if isinstance(data, dict) and "vertices" in data and "edges" in data:
        source = data
    elif isinstance(data, dict) and "groups" in data:
        m = re.fullmatch(r"(\d+):(\d+)", args.rep)
        if not m:
            return _fail(EXIT_PARAMS, f"--rep must look like '0:0', got {args.rep!r}")
        gi, ri = int(m.group(1)), int(m.group(2))
        try:
            source = data["groups"][gi]["representatives"][ri]["hypergraph"]
        except (IndexError, KeyError, TypeError):
            return _fail(EXIT_PARAMS, f"report has no representative {args.rep}")
    else:
        return _fail(EXIT_PARSE, f"{args.input}: neither a hypergraph nor a report")
    try:
        hg = hypergraph_from_dict(source)
    except (ValueError, TypeError) as exc:
        return _fail(EXIT_PARSE, f"{args.input}: {exc}")
    lg = levi_graph(hg)
    if args.format == "dot":
        _emit(levi_dot(lg), args.output)
    else:
        _emit(
            report_json(
                {
                    "schema": 1,
                    "kind": "levi",
                    "vertices": hg.num_vertices,
                    "edges": [list(e) for e in hg.edges],
                    "incidence": [[v, e] for v, e in sorted(lg.pairs, key=lambda q: (q[1], q[0]))],
                }
            ),
            args.output,
        )
    return EXIT_OK


# -- check-triple ------------------------------------------------------------


def cmd_check_triple(args) -> int:
    try:
        degree, gens = parse_group_file(args.group)
    except GroupFileError as exc:
        return _fail(EXIT_PARSE, f"{args.group}: {exc}")
    try:
        G = group_generate(gens, cap=args.cap)
    except CapExceeded as exc:
        return _fail(EXIT_CAP, str(exc))
    perms = {}
    for name, text in (("g0", args.g0), ("g1", args.g1), ("g2", args.g2)):
        try:
            perms[name] = perm_from_cycles(text, degree)
        except ParseError as exc:
            return _fail(EXIT_PARSE, f"--{name}: {exc}")
        if perms[name] not in G.index:
            return _fail(
                EXIT_PRECONDITION, f"--{name}: permutation is not in the group"
            )
    idx = {name: G.index[p] for name, p in perms.items()}
    orders = {name: G.order_of(i) for name, i in idx.items()}
    report: dict = {
        "schema": 1,
        "kind": "check_triple",
        "degree": degree,
        "order": G.order,
        "triple": {
            name: {"index": i, "cycles": G.elements[i].cycle_string()}
            for name, i in idx.items()
        },
        "orders": orders,
        "involutions": all(o == 2 for o in orders.values()),
    }
    nulls = (
        "generates", "type", "subgroup_orders", "vertex_count",
        "intersection_size", "flag_condition", "edge_multiplicity",
        "edge_multiplicity_direct", "simple", "proviso",
        "faithful_on_vertices", "num_edges", "num_faces", "num_flags",
        "euler", "orientable", "genus_orientable", "genus_nonorientable",
    )
    for key in nulls:
        report[key] = None
    if not report["involutions"]:
        sys.stdout.write(report_json(report))
        return _fail(EXIT_PRECONDITION, "triple entries must all have order 2")
    g0, g1, g2 = idx["g0"], idx["g1"], idx["g2"]
    H = subgroup_generate(G, [g1, g2])
    K = subgroup_generate(G, [g2, g0])
    F = subgroup_generate(G, [g0, g1])
    inter = intersect(H, K)
    k = G.order_of(G.mul(g1, g2))
    m = G.order_of(G.mul(g2, g0))
    n = G.order_of(G.mul(g0, g1))
    mult = product_intersection_size(G, H, K) // K.size
    report.update(
        {
            "generates": len(G.closure([g0, g1, g2], seed=H.members)) == G.order,
            "type": [k, m, n],
            "subgroup_orders": {"H": H.size, "K": K.size, "F": F.size},
            "vertex_count": G.order // H.size,
            "intersection_size": inter.size,
            "flag_condition": set(inter.members) == {0, g2},
            "edge_multiplicity": mult,
            "simple": mult == 1,
            "proviso": not (m == 2 and k < 3),
        }
    )
    if report["generates"]:
        hm = hypermap_build(G, InvolutionTriple(g0, g1, g2))
        report.update(
            {
                "edge_multiplicity_direct": edge_multiplicity_direct(hm),
                "faithful_on_vertices": faithful_on_vertices(hm),
                "num_edges": hm.num_edges,
                "num_faces": hm.num_faces,
                "num_flags": hm.num_flags,
                "euler": hm.euler,
                "orientable": hm.orientable,
                "genus_orientable": hm.genus_orientable,
                "genus_nonorientable": hm.genus_nonorientable,
                "conditions": condition_ledger(hm),
            }
        )
        sys.stdout.write(report_json(report))
        return EXIT_OK
    sys.stdout.write(report_json(report))
    return _fail(EXIT_PRECONDITION, "triple does not generate the group")


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypermaps",
        description="Enumerate and classify regular hypermaps whose "
        "underlying hypergraphs are simple.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cat = sub.add_parser("catalog", help="list the degree-p^2 group families")
    p_cat.add_argument("--p", type=int, required=True, help="prime p")
    p_cat.add_argument("--family", choices=FAMILIES, help="restrict to one family")
    p_cat.add_argument("--n", type=int, help="restrict to one n")
    p_cat.add_argument("--max-p", type=int, default=13, help="largest allowed p")
    p_cat.add_argument("--json", metavar="PATH", help="also write JSON to PATH")
    p_cat.set_defaults(func=cmd_catalog)

    p_cls = sub.add_parser("classify", help="classify simple regular hypermaps")
    p_cls.add_argument("--p", type=int, help="prime p (classify the whole catalog)")
    p_cls.add_argument("--group", metavar="FILE", help="group file to classify instead")
    p_cls.add_argument("--family", choices=FAMILIES, help="restrict to one family")
    p_cls.add_argument("--n", type=int, help="restrict to one n")
    p_cls.add_argument("--omega", type=int, help="hypervertex count (default p^2)")
    p_cls.add_argument("--json", metavar="PATH", help="also write JSON to PATH")
    p_cls.add_argument("--workers", type=int, default=1, help="parallel workers")
    p_cls.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap")
    p_cls.add_argument(
        "--no-prune",
        action="store_true",
        help="search all g2, not just involution-class representatives",
    )
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify", help="verify the built-in hypermap catalog")
    p_ver.add_argument("--p-list", required=True, help="comma-separated primes")
    p_ver.add_argument("--json", metavar="PATH", help="also write JSON to PATH")
    p_ver.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap")
    p_ver.set_defaults(func=cmd_verify)

    p_levi = sub.add_parser("levi", help="export a hypergraph's Levi graph")
    p_levi.add_argument("--input", required=True, help="hypergraph JSON or classify report")
    p_levi.add_argument("--format", choices=("dot", "json"), default="dot")
    p_levi.add_argument("--rep", default="0:0", help="GROUP:REP selector for reports")
    p_levi.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p_levi.set_defaults(func=cmd_levi)

    p_chk = sub.add_parser("check-triple", help="condition ledger for one triple")
    p_chk.add_argument("--group", required=True, metavar="FILE", help="group file")
    p_chk.add_argument("--g0", required=True, help="cycle notation for g0")
    p_chk.add_argument("--g1", required=True, help="cycle notation for g1")
    p_chk.add_argument("--g2", required=True, help="cycle notation for g2")
    p_chk.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap")
    p_chk.set_defaults(func=cmd_check_triple)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
