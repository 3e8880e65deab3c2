"""Command-line surface.

Subcommands: bootstrap (self-generate weights 2..12 and check them against
the embedded reference list), extend (generate further weights with
statistics), verify (certify one sorou), enumerate (all rotation classes of
a type), report (CSV/LaTeX), phi (cyclotomic coefficients), plot (SVG unit
circle).  Results go to stdout; timing and progress go to stderr.  Exit
codes: 0 success, 1 verification failure, 2 usage error.

The default database path comes from the MINVAN_DB environment variable.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time
from dataclasses import dataclass

from minvan import enumeration, store, typegen
from minvan.cyclotomic import cyclotomic_poly
from minvan.minimality import is_minimal_vanishing, top_prime
from minvan.sorou import (
    Sorou,
    height,
    order,
    parity,
    parse_sorou,
    relative_order,
    render_sorou,
    weight,
)
from minvan.types import infer_type, parse_type, render_type, render_type_latex

# Reference classification for weights 2..12, checked after bootstrap.
BOOTSTRAP_FIXTURE: dict[int, frozenset[str]] = {
    2: frozenset({"(R2;1:0)"}),
    3: frozenset({"(R3;1:0)"}),
    4: frozenset(),
    5: frozenset({"(R5;1:0)"}),
    6: frozenset({"(R5;1:0;(R3;1:0))"}),
    7: frozenset({"(R7;1:0)", "(R5;1:0;(R3;1:0);(R3;1:0))"}),
    8: frozenset({"(R7;1:0;(R3;1:0))", "(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0))"}),
    9: frozenset(
        {"(R7;1:0;(R3;1:0);(R3;1:0))", "(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))"}
    ),
    10: frozenset({"(R7;1:0;(R5;1:0))", "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0))"}),
    11: frozenset(
        {
            "(R11;1:0)",
            "(R7;1:0;(R5;1:0;(R3;1:0)))",
            "(R7;1:0;(R5;1:0);(R3;1:0))",
            "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))",
        }
    ),
    12: frozenset(
        {
            "(R11;1:0;(R3;1:0))",
            "(R7;1:0;(R5;1:0;(R3;1:0);(R3;1:0)))",
            "(R7;1:0;(R5;1:0;(R3;1:0));(R3;1:0))",
            "(R7;1:0;(R5;1:0);(R3;1:0);(R3;1:0))",
            "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))",
        }
    ),
}


@dataclass(frozen=True)
class PlotSpec:
    sorou: Sorou
    out_path: str
    radius: float = 120.0
    stack_step: float = 1.0  # multiplicity k is drawn at radius k*step*radius


def _default_db_path() -> str:
    return os.environ.get("MINVAN_DB", "minvan.db")


def _load_db(path: str) -> store.TypeDatabase:
    if not os.path.exists(path):
        raise SystemExit(f"error: database {path} does not exist (run bootstrap first)")
    return store.load_db(path)


def _cache_path(db_path: str) -> str:
    return db_path + ".cache"


def _load_cache(db_path: str) -> enumeration.SorouCache:
    path = _cache_path(db_path)
    if os.path.exists(path):
        return enumeration.SorouCache(store.load_cache(path))
    return enumeration.SorouCache()


def _extend_to(db: store.TypeDatabase, db_path: str, target: int, cfg_kwargs: dict) -> None:
    cache = _load_cache(db_path)
    for w in range(db.max_complete_weight + 1, target + 1):
        start = time.monotonic()
        cfg = typegen.GenerationConfig(target_weight=w, **cfg_kwargs)
        new_types = typegen.generate_next_weight(db, cfg)
        records = [enumeration.type_statistics(m, cache) for m in new_types]
        db.commit_weight(w, records)
        store.save_db(db, db_path)
        store.save_cache(cache.as_dict(), _cache_path(db_path))
        print(f"weight {w}: {len(new_types)} types (cumulative {len(db.records)})")
        print(f"  weight {w} took {time.monotonic() - start:.2f}s", file=sys.stderr)


def cmd_bootstrap(args) -> int:
    db = store.TypeDatabase(collapse=True)
    _extend_to(db, args.db, 12, {})
    for w, expected in BOOTSTRAP_FIXTURE.items():
        got = frozenset(render_type(r.type) for r in db.records_for_weight(w))
        if got != expected:
            raise SystemExit(
                f"error: bootstrap mismatch at weight {w}: generation bug or "
                f"tampered fixture\n  got      {sorted(got)}\n  expected {sorted(expected)}"
            )
    print(f"bootstrap complete: {len(db.records)} records through weight 12")
    return 0


def cmd_extend(args) -> int:
    db = _load_db(args.db)
    if db.max_complete_weight >= args.to:
        print(f"database already complete through {db.max_complete_weight}")
        return 0
    cfg_kwargs = dict(
        threads=args.threads,
        enable_minvan_subtype_filter=not args.no_minvan_filter,
        enable_conjugate_collapse=not args.no_conjugate_collapse,
    )
    if db.collapse == args.no_conjugate_collapse:
        raise SystemExit("error: database collapse flag contradicts requested flags")
    _extend_to(db, args.db, args.to, cfg_kwargs)
    return 0


def cmd_verify(args) -> int:
    s = parse_sorou(args.sorou)
    verdict = is_minimal_vanishing(s)
    print(f"sorou: {render_sorou(s)}")
    print(f"vanishing: {verdict.vanishing}")
    if verdict.minimal:
        print("minimal: True")
    else:
        print(f"minimal: False ({verdict.failing_condition})")
    print(f"weight: {weight(s)}")
    print(f"height: {height(s)}")
    print(f"order: {order(s)}")
    print(f"relative order: {relative_order(s)}")
    try:
        print(f"top prime: {top_prime(s)}")
    except ValueError:
        pass
    try:
        a, b = parity(s)
        print(f"parity: ({a},{b})")
    except ValueError:
        pass
    if verdict.minimal:
        t = infer_type(s)
        print(f"type: {render_type(t)}")
        print(f"type (pretty): {render_type_latex(t)}")
    return 0 if verdict.minimal else 1


def cmd_enumerate(args) -> int:
    t = parse_type(args.type)
    if not t.is_minimal_claim:
        raise SystemExit("error: enumeration is defined for minimal types")
    cache = _load_cache(args.db)
    classes = enumeration.sorou_of_minvan_type(t.components[0], cache)
    store.save_cache(cache.as_dict(), _cache_path(args.db))
    for s in classes:
        print(render_sorou(s))
    print(f"{len(classes)} classes", file=sys.stderr)
    return 0


def cmd_report(args) -> int:
    db = _load_db(args.db)
    text = store.csv_report_text(db) if args.format == "csv" else store.latex_report_text(db)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_phi(args) -> int:
    poly = cyclotomic_poly(args.n)
    print(", ".join(str(c) for c in poly.coefficients))
    for degree, c in enumerate(poly.coefficients):
        if c not in (-1, 0, 1):
            print(f"coefficient {c} at x^{degree}")
    return 0


def render_svg(spec: PlotSpec) -> str:
    """Unit-circle diagram; a term of multiplicity k is stacked at radius
    k times the base radius, echoing the doubled-term figure convention."""
    r = spec.radius
    counts: dict[tuple[int, int], int] = {}
    for t in spec.sorou:
        counts[t] = counts.get(t, 0) + 1
    max_mult = max(counts.values())
    size = 2.2 * r * max_mult * spec.stack_step
    half = size / 2
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{-half:.1f} {-half:.1f} '
        f'{size:.1f} {size:.1f}">',
        f'<line x1="{-half:.1f}" y1="0" x2="{half:.1f}" y2="0" stroke="#999" stroke-width="1"/>',
        f'<line x1="0" y1="{-half:.1f}" x2="0" y2="{half:.1f}" stroke="#999" stroke-width="1"/>',
    ]
    for k in range(1, max_mult + 1):
        lines.append(
            f'<circle cx="0" cy="0" r="{k * spec.stack_step * r:.1f}" fill="none" '
            'stroke="#bbb" stroke-width="1" stroke-dasharray="4 3"/>'
        )
    for (o, p), mult in sorted(counts.items()):
        angle = 2 * math.pi * p / o
        for k in range(1, mult + 1):
            rad = k * spec.stack_step * r
            x, y = rad * math.cos(angle), -rad * math.sin(angle)
            lines.append(
                f'<line x1="0" y1="0" x2="{x:.2f}" y2="{y:.2f}" '
                'stroke="#146b14" stroke-width="2"/>'
            )
            lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="#146b14"/>')
    lines.append("</svg>")
    return "\n".join(lines)


def cmd_plot(args) -> int:
    s = parse_sorou(args.sorou)
    spec = PlotSpec(sorou=s, out_path=args.out)
    with open(args.out, "w") as fh:
        fh.write(render_svg(spec) + "\n")
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minvan",
        description="Classify minimal vanishing sums of roots of unity by weight.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bootstrap", help="create the weight 2..12 database from scratch")
    p.add_argument("--db", default=_default_db_path())
    p.set_defaults(func=cmd_bootstrap)

    p = sub.add_parser("extend", help="extend the classification to a higher weight")
    p.add_argument("--db", default=_default_db_path())
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--no-minvan-filter", action="store_true")
    p.add_argument("--no-conjugate-collapse", action="store_true")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("verify", help="certify one sorou and infer its type")
    p.add_argument("sorou")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="all rotation classes of a minimal type")
    p.add_argument("type")
    p.add_argument("--db", default=_default_db_path())
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("report", help="write the classification table")
    p.add_argument("--db", default=_default_db_path())
    p.add_argument("--format", choices=("csv", "latex"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("phi", help="coefficients of a cyclotomic polynomial")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("plot", help="SVG unit-circle diagram of a sorou")
    p.add_argument("sorou")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
