"""``partnorm`` command line.

Exit status: 0 on success, 1 when a ``reproduce`` comparison fails, 2 on any
input or computation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import PartnormError
from .expectation import build_rate_table, category_mass_fractional, cell_mass
from .indicators import VARIANTS, score_records
from .io import FORMATS, RunConfig, emit_report, emit_rows, parse_journals, parse_pubs, parse_ratings, parse_scores, parse_stats, round_half_up
from .model import validate_universe
from .partition import build_partition
from .reproduce import REPRODUCTIONS, reproduce
from .stats import correlate_scores

EXIT_OK, EXIT_FAILED, EXIT_ERROR = 0, 1, 2


def _global_options(parser, suppress: bool):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", dest="fmt", choices=FORMATS, default=default("text"), help="output format")
    parser.add_argument("--strict", action="store_true", default=default(False), help="fail on undefined expected rates instead of excluding publications")
    parser.add_argument("--digits", type=int, default=default(2), help="display rounding for text output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partnorm", description="Field-normalized citation rates, standard and partition-based.")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)

    p = sub.add_parser("partition", parents=[common], help="print the cells induced by category combinations")
    p.add_argument("--journals", required=True)

    p = sub.add_parser("expect", parents=[common], help="print expected citation rates")
    p.add_argument("--journals", required=True)
    p.add_argument("--stats", required=True)
    p.add_argument("--scope", choices=("cell", "category"), default="cell")
    p.add_argument("--year", type=int)

    p = sub.add_parser("score", parents=[common], help="score publication records")
    p.add_argument("--journals", required=True)
    p.add_argument("--stats", required=True)
    p.add_argument("--pubs", required=True)
    p.add_argument("--variant", choices=("nmcr", "mncr", "p-nmcr", "p-mncr", "all"), default="all")

    p = sub.add_parser("correlate", parents=[common], help="correlate scores with peer ratings")
    p.add_argument("--scores", required=True, help="csv as written by `score --format csv`")
    p.add_argument("--ratings", required=True)
    p.add_argument("--method", choices=("pearson", "spearman", "both"), default="both")

    p = sub.add_parser("reproduce", parents=[common], help="recompute a published example from embedded data")
    p.add_argument("example", choices=(*REPRODUCTIONS, "all"))
    return parser


def _universe(args):
    return validate_universe(parse_journals(args.journals), parse_stats(args.stats) if getattr(args, "stats", None) else ())


def cmd_partition(args, config: RunConfig) -> int:
    universe = _universe(args)
    partition = build_partition(universe)
    rows = [
        {"cell": str(key), "n_journals": len(members), "journals": members}
        for key, members in partition.sorted_cells()
    ]
    sys.stdout.write(emit_rows(rows, ("cell", "n_journals", "journals"), config.fmt, config.digits))
    return EXIT_OK


def cmd_expect(args, config: RunConfig) -> int:
    universe = _universe(args)
    partition = build_partition(universe)
    table = build_rate_table(universe, partition)
    rates = table.cell_rates if args.scope == "cell" else table.category_rates
    rows = []
    for (key, year), rate in sorted(rates.items(), key=lambda kv: (str(kv[0][0]), kv[0][1])):
        if args.year is not None and year != args.year:
            continue
        if args.scope == "cell":
            items, cites = cell_mass(key, year, universe, partition)
        else:
            items, cites = category_mass_fractional(key, year, universe)
        rows.append(
            {
                "scope": args.scope,
                "key": str(key),
                "year": year,
                "items": items,
                "citations": cites,
                "rate": None if rate is None else rate.value,
            }
        )
    sys.stdout.write(emit_rows(rows, ("scope", "key", "year", "items", "citations", "rate"), config.fmt, config.digits))
    return EXIT_OK


def cmd_score(args, config: RunConfig) -> int:
    universe = _universe(args)
    partition = build_partition(universe)
    records = parse_pubs(args.pubs)
    variants = list(VARIANTS) if args.variant == "all" else [args.variant.upper()]
    results = score_records(records, variants, universe, partition, strict=config.strict)
    sys.stdout.write(emit_report(results, config))
    return EXIT_OK


def correlation_table(cells, fmt: str, digits: int) -> str:
    if fmt != "text":
        rows = [
            {
                "method": c.result.method,
                "aspect": c.aspect,
                "variant": c.variant,
                "r": c.result.r,
                "p_one_tailed": c.result.p_one_tailed,
                "n": c.result.n,
            }
            for c in cells
        ]
        return emit_rows(rows, ("method", "aspect", "variant", "r", "p_one_tailed", "n"), fmt, digits)
    out = []
    variants = list(dict.fromkeys(c.variant for c in cells))
    for method in dict.fromkeys(c.result.method for c in cells):
        block = {}
        for c in cells:
            if c.result.method == method:
                block.setdefault(c.aspect, {"aspect": c.aspect})[c.variant] = (
                    f"r={round_half_up(c.result.r, digits)} p={round_half_up(c.result.p_one_tailed, digits)}"
                )
        out.append(emit_rows(list(block.values()), ("aspect", *variants), "text", digits, title=f"{method} (one-tailed p)"))
    return "\n".join(out)


def cmd_correlate(args, config: RunConfig) -> int:
    scores = parse_scores(args.scores)
    ratings = parse_ratings(args.ratings)
    methods = ("pearson", "spearman") if args.method == "both" else (args.method,)
    cells = correlate_scores(scores, ratings, methods)
    sys.stdout.write(correlation_table(cells, config.fmt, config.digits))
    return EXIT_OK


def cmd_reproduce(args, config: RunConfig) -> int:
    names = list(REPRODUCTIONS) if args.example == "all" else [args.example]
    reports = [reproduce(name) for name in names]
    if config.fmt == "json" and len(reports) > 1:
        doc = {r.name: json.loads(r.render("json", config.digits)) for r in reports}
        sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        sep = "\n" if config.fmt == "text" else ""
        sys.stdout.write(sep.join(emit_report(r, config) for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


COMMANDS = {
    "partition": cmd_partition,
    "expect": cmd_expect,
    "score": cmd_score,
    "correlate": cmd_correlate,
    "reproduce": cmd_reproduce,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(strict=args.strict, fmt=args.fmt, digits=args.digits)
    except ValueError as err:
        parser.error(str(err))
    try:
        return COMMANDS[args.command](args, config)
    except (PartnormError, OSError) as err:
        print(f"partnorm: error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
