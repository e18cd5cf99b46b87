"""grouplab command line: describe, lattice, verify, catalog."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass

from .constructions import realize
from .core import default_element_budget
from .errors import BudgetExceeded, ParseError, TooLarge
from .harness import (
    ALL_CLAIMS,
    CLAIM_STATEMENTS,
    blocking_failures,
    check_expected,
    counterexample_scan,
    load_catalog,
    open_conjecture_counterexamples,
    run_claims,
)
from .lattice import DEFAULT_LATTICE_BUDGET, all_subgroups, lattice_json
from .properties import FLAG_NAMES, classify

EXIT_OK, EXIT_FAILS, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass(frozen=True)
class CliConfig:
    element_budget: int
    lattice_budget: int
    output_format: str
    parallelism: int
    catalog_path: str | None = None

    def __post_init__(self):
        if self.element_budget < 1 or self.lattice_budget < 1:
            raise ValueError("budgets must be positive")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([int(v) if isinstance(v, bool) else v for v in row])
    return buf.getvalue().rstrip("\n")


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_report(report, fmt: str) -> str:
    data = report.to_json()
    if fmt == "json":
        return _dumps(data)
    ps = data["prime_structure"]
    if fmt == "csv":
        header = ["group", "order", *FLAG_NAMES, "pg_order", "index_pg", "center_order"]
        row = [data["group_name"], data["order"], *(data["flags"][k] for k in FLAG_NAMES),
               ps["pg_order"], ps["index_pg"], data["center_order"]]
        return _csv(header, [row])
    fac = " * ".join(f"{p}^{a}" if a > 1 else p for p, a in data["factorization"].items()) or "1"
    lines = [
        f"group        {data['group_name']}",
        f"order        {data['order']} = {fac}",
        f"P[G]         order {ps['pg_order']}, index {ps['index_pg']}",
        f"center       order {data['center_order']}",
        "flags        " + " ".join(f"{k}={str(v).lower()}" for k, v in data["flags"].items()),
    ]
    if data["poec_witness"]:
        lines.append(f"non-commuting prime-order pair: {data['poec_witness']}")
    return "\n".join(lines)


def cmd_describe(expr: str, cfg: CliConfig) -> tuple[int, str]:
    G = realize(expr, cfg.element_budget)
    return EXIT_OK, render_report(classify(G, G.name), cfg.output_format)


def cmd_lattice(expr: str, cfg: CliConfig) -> tuple[int, str]:
    G = realize(expr, cfg.element_budget)
    data = lattice_json(all_subgroups(G, budget=cfg.lattice_budget), G.name)
    if cfg.output_format == "csv":
        rows = [[s["index"], s["order"], " ".join(map(str, s["generators"])), s["maximal"], s["in_s"]]
                for s in data["subgroups"]]
        return EXIT_OK, _csv(["index", "order", "generators", "maximal", "in_s"], rows)
    if cfg.output_format == "text":
        head = (f"{data['group']}: order {data['order']}, {data['subgroup_count']} subgroups, "
                f"{data['s_count']} intersecting every non-trivial subgroup")
        rows = [[s["index"], s["order"], s["generators"], "yes" if s["maximal"] else "",
                 "yes" if s["in_s"] else ""] for s in data["subgroups"]]
        return EXIT_OK, head + "\n" + _table(["#", "order", "generators", "maximal", "in S"], rows)
    return EXIT_OK, _dumps(data)


def cmd_verify(claims: list[str] | None, cfg: CliConfig, scan: bool = False, bound: int = 100) -> tuple[int, str]:
    catalog = load_catalog(cfg.catalog_path)
    start = time.perf_counter()
    results = run_claims(catalog, claims, cfg.parallelism, cfg.lattice_budget, cfg.element_budget)
    fails = blocking_failures(results)
    open_fails = open_conjecture_counterexamples(results)
    scan_results, survey = [], []
    if scan:
        scan_results, _, survey = counterexample_scan(bound, parallelism=cfg.parallelism,
                                                      element_budget=cfg.element_budget)
        open_fails += [r for r in scan_results if r.verdict == "fails"]
    elapsed = time.perf_counter() - start
    counts = {v: sum(r.verdict == v for r in results) for v in ("holds", "fails", "not_applicable")}
    code = EXIT_FAILS if fails else EXIT_OK

    if cfg.output_format == "json":
        out = {
            "catalog_size": len(catalog),
            "summary": counts,
            "results": [r.to_json() for r in results],
            "open_conjecture_counterexamples": [r.to_json() for r in open_fails],
        }
        if scan:
            out["scan"] = {"bound": bound, "survey": survey, "checked": len(scan_results)}
        return code, _dumps(out)
    if cfg.output_format == "csv":
        rows = [[r.claim_id, r.group, r.verdict, json.dumps(r.witness) if r.witness is not None else "", r.note]
                for r in results]
        return code, _csv(["claim", "group", "verdict", "witness", "note"], rows)

    rows = [[r.claim_id, r.group, r.verdict, json.dumps(r.witness) if r.verdict == "fails" else r.note]
            for r in results]
    parts = [_table(["claim", "group", "verdict", "detail"], rows)]
    per_claim = []
    for cid in ALL_CLAIMS:
        rs = [r for r in results if r.claim_id == cid]
        if rs:
            per_claim.append([cid, sum(r.verdict == "holds" for r in rs), sum(r.verdict == "fails" for r in rs),
                              sum(r.verdict == "not_applicable" for r in rs), CLAIM_STATEMENTS[cid]])
    parts.append(_table(["claim", "holds", "fails", "skipped", "statement"], per_claim))
    if scan:
        parts.append(_table(list(survey[0]), [list(s.values()) for s in survey]) if survey else "empty scan")
    if open_fails:
        parts.append("COUNTEREXAMPLES TO OPEN CONJECTURES:\n" + "\n".join(
            f"  {r.claim_id} {r.group} {json.dumps(r.witness)}" for r in open_fails))
    else:
        parts.append("open conjectures: no counterexample found")
    parts.append(f"{len(catalog)} groups, {counts['holds']} holds, {counts['fails']} fails, "
                 f"{counts['not_applicable']} skipped in {elapsed:.1f}s")
    return code, "\n\n".join(parts)


def cmd_catalog(action: str, cfg: CliConfig) -> tuple[int, str]:
    catalog = load_catalog(cfg.catalog_path)
    if action == "list":
        rows = [[e.name, e.spec, len(e.expected)] for e in catalog]
        if cfg.output_format == "json":
            return EXIT_OK, _dumps([{"name": e.name, "spec": e.spec, "expected": e.expected,
                                     "provenance": e.provenance} for e in catalog])
        if cfg.output_format == "csv":
            return EXIT_OK, _csv(["name", "spec", "expected_fields"], rows)
        return EXIT_OK, _table(["name", "spec", "expected fields"], rows)
    problems = []
    for e in catalog:
        G = realize(e.spec, cfg.element_budget)
        problems += check_expected(e, classify(G, e.name))
    if cfg.output_format == "json":
        return (EXIT_FAILS if problems else EXIT_OK), _dumps({"entries": len(catalog), "mismatches": problems})
    msg = "\n".join(problems) if problems else f"{len(catalog)} entries match their expected fields"
    return (EXIT_FAILS if problems else EXIT_OK), msg


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--element-budget", type=int, default=None,
                        help="max group order to enumerate (env GROUPLAB_BUDGET)")
    common.add_argument("--lattice-budget", type=int, default=DEFAULT_LATTICE_BUDGET)
    common.add_argument("--parallelism", type=int, default=1)
    common.add_argument("--catalog", default=None, help="catalog JSON-lines file")

    parser = argparse.ArgumentParser(prog="grouplab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("describe", parents=[common], help="classify one group")
    p.add_argument("expr")
    p = sub.add_parser("lattice", parents=[common], help="dump the subgroup lattice")
    p.add_argument("expr")
    p = sub.add_parser("verify", parents=[common], help="run the claim suite over the catalog")
    p.add_argument("--claims", default=None, help="comma-separated claim ids, e.g. C16,C17")
    p.add_argument("--scan", action="store_true", help="also sweep families for open-conjecture counterexamples")
    p.add_argument("--bound", type=int, default=100, help="largest order in the scan")
    p = sub.add_parser("catalog", parents=[common], help="list or validate the catalog")
    p.add_argument("action", choices=("list", "validate"))
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = CliConfig(
            element_budget=args.element_budget or default_element_budget(),
            lattice_budget=args.lattice_budget,
            output_format=args.format,
            parallelism=args.parallelism,
            catalog_path=args.catalog,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.command == "describe":
            code, out = cmd_describe(args.expr, cfg)
        elif args.command == "lattice":
            code, out = cmd_lattice(args.expr, cfg)
        elif args.command == "verify":
            claims = [c.strip() for c in args.claims.split(",")] if args.claims else None
            try:
                code, out = cmd_verify(claims, cfg, args.scan, args.bound)
            except (ValueError, OSError) as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_PARSE
        else:
            try:
                code, out = cmd_catalog(args.action, cfg)
            except (ValueError, OSError) as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_PARSE
    except ParseError as exc:
        print(f"error: {exc}\n{exc.pointer()}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetExceeded, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
