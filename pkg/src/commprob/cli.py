"""Command-line front end: group-file parsing, catalog access, analysis and
verification commands, report emission.

Group file format (bit-exact): UTF-8 text, ``#`` starts a comment, blank
lines are ignored; the first data line holds the degree n and every further
data line holds n space-separated 0-based integers, one generator in
one-line image notation per line.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .perm import DEFAULT_ORDER_CAP, FiniteGroup, GroupError, Permutation, generate_group
from .constructors import (
    ActionSpec,
    catalog_keys,
    catalog_orders,
    named,
    semidirect_product,
)
from .isoclinism import find_isoclinism
from .probability import DEFAULT_ORACLE_CAP, commuting_pairs_oracle, commuting_probability
from .structure import Subgroup, center, derived_subgroup, normal_subgroups
from .theorems import (
    Verdict,
    analyze,
    run_catalog_verification,
    summarize,
    verify_class_size_theorem,
    verify_klein_fixed_point,
    verify_odd_35_243,
    verify_supersolvable_1_3,
    verify_supersolvable_5_16,
)


class GroupFileError(GroupError):
    """Malformed group or action file; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_group_file(text: str) -> tuple[int, list[Permutation]]:
    """Parse degree and generator permutations, with line-numbered errors."""
    degree: int | None = None
    generators: list[Permutation] = []
    for lineno, parts in _data_lines(text):
        if degree is None:
            if len(parts) != 1:
                raise GroupFileError(lineno, "expected a single degree value")
            try:
                degree = int(parts[0])
            except ValueError:
                raise GroupFileError(lineno, f"invalid degree {parts[0]!r}") from None
            if degree < 1:
                raise GroupFileError(lineno, "degree must be a positive integer")
            continue
        if len(parts) != degree:
            raise GroupFileError(
                lineno, f"expected {degree} entries, found {len(parts)}"
            )
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise GroupFileError(lineno, "entries must be integers") from None
        try:
            generators.append(Permutation(values))
        except GroupError as exc:
            raise GroupFileError(lineno, str(exc)) from None
    if degree is None:
        raise GroupFileError(1, "empty group file")
    return degree, generators


def format_group_file(G: FiniteGroup) -> str:
    """Emit a group as a parseable generator file (canonical generators)."""
    lines = [str(G.degree)]
    for g in G.generating_indices():
        lines.append(" ".join(str(v) for v in G.elements[g].images))
    return "\n".join(lines) + "\n"


def _load_group(args) -> tuple[FiniteGroup, str]:
    name = getattr(args, "name", None)
    path = getattr(args, "path", None)
    if (name is None) == (path is None):
        raise GroupError("give exactly one of a catalog --name or a group file path")
    if name is not None:
        return named(name), name
    text = Path(path).read_text(encoding="utf-8")
    degree, gens = parse_group_file(text)
    return generate_group(degree, gens, max_order=args.max_order), path


def _select_normal(G: FiniteGroup, spec: str) -> Subgroup:
    if spec == "center":
        return center(G)
    if spec == "derived":
        return derived_subgroup(G)
    normals = normal_subgroups(G)
    if spec == "klein":
        matches = [
            n
            for n in normals
            if n.order == 4
            and all(G.elements[m].order() <= 2 for m in n.member_indices)
        ]
    else:
        try:
            order = int(spec)
        except ValueError:
            raise GroupError(
                f"--normal must be 'center', 'derived', 'klein' or an order, not {spec!r}"
            ) from None
        matches = [n for n in normals if n.order == order]
    if len(matches) != 1:
        raise GroupError(
            f"--normal {spec!r} matches {len(matches)} normal subgroups; "
            f"normal orders are {[n.order for n in normals]}"
        )
    return matches[0]


def _emit(obj: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        print(json.dumps(obj, indent=2), file=out)
    else:
        _emit_table(obj, out)


def _emit_table(obj: dict, out) -> None:
    for key, value in obj.items():
        if key == "verdicts":
            print("verdicts:", file=out)
            for v in value:
                state = (
                    "SKIP"
                    if not v["precondition_ok"]
                    else "VACUOUS"
                    if not v["applicable"]
                    else "HOLDS"
                    if v["holds"]
                    else "FAIL"
                )
                note = f"  ({v['note']})" if v["note"] else ""
                print(f"  {state:7} {v['statement']}{note}", file=out)
        else:
            print(f"{key}: {value}", file=out)


# -- subcommands ---------------------------------------------------------------


def _cmd_analyze(args) -> int:
    G, label = _load_group(args)
    report = analyze(G, name=label)
    _emit(report.to_dict(), args.format)
    return 0


def _single_verdict(args, G: FiniteGroup, label: str) -> Verdict:
    theorem = args.theorem
    if theorem == "5/16":
        return verify_supersolvable_5_16(G)
    if theorem == "1/3":
        return verify_supersolvable_1_3(G)
    if theorem == "odd":
        return verify_odd_35_243(G)
    if theorem == "class-size":
        if args.normal is None:
            raise GroupError("--theorem class-size needs --normal")
        return verify_class_size_theorem(G, _select_normal(G, args.normal), args.s)
    if theorem == "klein":
        if args.normal is None:
            raise GroupError("--theorem klein needs --normal")
        return verify_klein_fixed_point(G, _select_normal(G, args.normal))
    if theorem == "oracle":
        d = commuting_probability(G)
        oracle = commuting_pairs_oracle(G, max_order=args.oracle_cap)
        return Verdict(
            "d==commuting-pairs/|G|^2",
            True,
            d == oracle,
            note=f"d={d.numerator}/{d.denominator}",
        )
    raise GroupError(f"unknown theorem selector {theorem!r}")


def _cmd_verify(args) -> int:
    if not args.all and args.name is None and args.path is None:
        raise GroupError("verify needs --all, --name, or a group file path")
    if args.theorem != "all":
        G, label = _load_group(args)
        verdict = _single_verdict(args, G, label)
        payload = {"name": label, **verdict.to_dict()}
        _emit(payload, args.format)
        return 1 if verdict.is_failure() else 0
    if args.all:
        names = None
    elif args.name is not None:
        names = [args.name]
    else:
        G, label = _load_group(args)
        reports = [analyze(G, name=label)]
        return _emit_verify(reports, args.format)
    reports, _ = run_catalog_verification(names=names)
    return _emit_verify(reports, args.format)


def _emit_verify(reports, fmt: str) -> int:
    summary = summarize(reports)
    if fmt == "json":
        for report in reports:
            print(json.dumps(report.to_dict(), separators=(",", ":")))
        print(json.dumps({"summary": summary}, separators=(",", ":")))
    else:
        for report in reports:
            d = report.to_dict()
            print(f"== {d['name']} (order {d['order']}, d={d['d']})")
            for v in d["verdicts"]:
                if not v["holds"]:
                    print(f"   FAIL {v['statement']} {v['note']}")
        print(
            "summary: {groups} groups, {verdicts} verdicts, {applicable} applicable, "
            "{failures} failures".format(**summary)
        )
    return 1 if summary["failures"] else 0


def _cmd_isoclinic(args) -> int:
    if args.name is not None:
        G, la = named(args.name), args.name
    else:
        text = Path(args.path).read_text(encoding="utf-8")
        degree, gens = parse_group_file(text)
        G, la = generate_group(degree, gens, max_order=args.max_order), args.path
    if args.name2 is not None:
        H, lb = named(args.name2), args.name2
    else:
        if args.path2 is None:
            raise GroupError("isoclinic needs two groups (--name2 or a second path)")
        text = Path(args.path2).read_text(encoding="utf-8")
        degree, gens = parse_group_file(text)
        H, lb = generate_group(degree, gens, max_order=args.max_order), args.path2
    witness = find_isoclinism(G, H)
    payload: dict = {"first": la, "second": lb, "isoclinic": witness is not None}
    if witness is not None and args.witness:
        payload["witness"] = {
            "quotient_iso": list(witness.quotient_iso),
            "derived_iso": list(witness.derived_iso),
        }
    _emit(payload, args.format)
    return 0


def _cmd_catalog(args) -> int:
    if args.catalog_cmd != "list":
        raise GroupError("unknown catalog subcommand")
    orders = catalog_orders()
    if args.format == "json":
        print(json.dumps([{"name": k, "order": orders[k]} for k in catalog_keys()], indent=2))
    else:
        for k in catalog_keys():
            print(f"{orders[k]:5}  {k}")
    return 0


def _parse_action_file(text: str, n_order: int, count: int) -> list[tuple[int, ...]]:
    """Action file: first data line is |N|, then one image line of |N|
    element indices per acting generator."""
    declared: int | None = None
    rows: list[tuple[int, ...]] = []
    for lineno, parts in _data_lines(text):
        if declared is None:
            if len(parts) != 1:
                raise GroupFileError(lineno, "expected the size of N on the first line")
            declared = int(parts[0])
            if declared != n_order:
                raise GroupFileError(
                    lineno, f"action is over {declared} indices but |N| = {n_order}"
                )
            continue
        if len(parts) != n_order:
            raise GroupFileError(
                lineno, f"expected {n_order} entries, found {len(parts)}"
            )
        try:
            rows.append(tuple(int(p) for p in parts))
        except ValueError:
            raise GroupFileError(lineno, "entries must be integers") from None
    if declared is None:
        raise GroupFileError(1, "empty action file")
    if len(rows) != count:
        raise GroupFileError(
            1, f"expected {count} image lines (one per acting generator), found {len(rows)}"
        )
    return rows


def _cmd_construct(args) -> int:
    if args.construct_cmd != "semidirect":
        raise GroupError("unknown construct subcommand")
    N = named(args.n) if args.n in catalog_orders() else None
    if N is None:
        text = Path(args.n).read_text(encoding="utf-8")
        degree, gens = parse_group_file(text)
        N = generate_group(degree, gens, max_order=args.max_order)
    H = named(args.h) if args.h in catalog_orders() else None
    if H is None:
        text = Path(args.h).read_text(encoding="utf-8")
        degree, gens = parse_group_file(text)
        H = generate_group(degree, gens, max_order=args.max_order)
    if args.h_gens:
        h_gens = tuple(int(p) for p in args.h_gens.split(","))
    else:
        h_gens = H.generating_indices()
    if args.describe:
        print(f"# N: order {N.order}; element index -> images")
        for i, p in enumerate(N.elements):
            print(f"#   {i}: {' '.join(str(v) for v in p.images)}")
        print(f"# H: order {H.order}; acting generator indices: {list(h_gens)}")
        print("# action file: first line |N|, then one image line per acting generator")
        return 0
    if args.action is None:
        raise GroupError("construct semidirect needs --action (or --describe)")
    rows = _parse_action_file(
        Path(args.action).read_text(encoding="utf-8"), N.order, len(h_gens)
    )
    G = semidirect_product(
        N, H, ActionSpec(tuple(h_gens), tuple(rows)), max_order=args.max_order
    )
    output = format_group_file(G)
    if args.out:
        Path(args.out).write_text(output, encoding="utf-8")
        print(f"wrote group of order {G.order} to {args.out}")
    else:
        sys.stdout.write(output)
    return 0


# -- argument parsing ----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commprob",
        description="Exact commuting probabilities and structure of small finite groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP)
    common.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    common.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("analyze", parents=[common], help="full report for one group")
    p.add_argument("path", nargs="?", help="group file")
    p.add_argument("--name", help="catalog key")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="run theorem verifiers")
    p.add_argument("path", nargs="?", help="group file")
    p.add_argument("--name", help="catalog key")
    p.add_argument("--all", action="store_true", help="whole catalog")
    p.add_argument(
        "--theorem",
        choices=("all", "5/16", "1/3", "odd", "class-size", "klein", "oracle"),
        default="all",
    )
    p.add_argument("--s", type=int, default=4, help="threshold s for class-size")
    p.add_argument("--normal", help="center | derived | klein | <order>")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("isoclinic", parents=[common], help="decide isoclinism")
    p.add_argument("path", nargs="?", help="first group file")
    p.add_argument("path2", nargs="?", help="second group file")
    p.add_argument("--name", help="first catalog key")
    p.add_argument("--name2", help="second catalog key")
    p.add_argument("--witness", action="store_true", help="emit the witness maps")
    p.set_defaults(func=_cmd_isoclinic)

    p = sub.add_parser("catalog", parents=[common], help="catalog access")
    p.add_argument("catalog_cmd", choices=("list",))
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("construct", parents=[common], help="build product groups")
    p.add_argument("construct_cmd", choices=("semidirect",))
    p.add_argument("--n", required=True, help="normal factor: catalog key or file")
    p.add_argument("--h", required=True, help="acting factor: catalog key or file")
    p.add_argument("--action", help="action file")
    p.add_argument("--h-gens", help="comma-separated acting generator indices")
    p.add_argument("--out", help="write the product as a group file")
    p.add_argument(
        "--describe",
        action="store_true",
        help="print N's element indexing and H's acting generators, then exit",
    )
    p.set_defaults(func=_cmd_construct)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GroupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
