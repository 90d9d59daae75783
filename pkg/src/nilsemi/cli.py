"""Command-line entry point: ``nilsemi {list,realize,inspect,count,bruteforce,verify}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import harness
from .bruteforce import SearchConfig, enumerate_nilpotent
from .canon import CountMode, canonical_key, is_self_dual
from .errors import NilsemiError
from .families import classified_list, presentation_from_metadata
from .presentations import format_metadata, format_presentation, parse_metadata, realize
from .tables import analyze, format_table, is_commutative, parse_table

MODE_CHOICES = [m.value for m in CountMode]
SOURCES = ("formula", "table1", "families", "bruteforce")


class UsageError(Exception):
    pass


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def _range(text: str) -> range:
    """``"7"`` or ``"7-13"``."""
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A-B, got {text!r}") from None


def _kind(coclass: int, gen_size) -> str:
    if coclass == 1:
        if gen_size not in (None, 2):
            raise UsageError("coclass 1 semigroups are 2-generated")
        return "coclass1"
    if coclass == 2:
        return {None: "coclass2", 2: "gen2", 3: "gen3"}[gen_size]
    raise UsageError(f"counts exist for coclass 1 and 2, not {coclass}")


# ------------------------------------------------------------------ commands

def cmd_list(args, out) -> int:
    n, r = args.order, args.coclass
    minimum = {0: 1, 1: 4, 2: 6 if args.gen_size == 3 else 7}[r]
    if n < minimum:
        raise UsageError(f"order {n} is outside the classified range for coclass {r} (n >= {minimum})")
    if r == 2 and args.gen_size == 1:
        raise UsageError("coclass 2 semigroups have 2 or 3 generators")
    for p in classified_list(n, r, args.gen_size):
        out.write(f"{format_presentation(p)}\t{format_metadata(p)}\n")
    return 0


def cmd_realize(args, out) -> int:
    text = " ".join(args.tokens)
    if "\t" in text or text.lstrip().startswith("<"):
        # a whole `list` line: keep the metadata part
        text = text.split(">", 1)[-1]
    meta = parse_metadata(text)
    p = presentation_from_metadata(meta)
    out.write(format_table(realize(p)))
    return 0


def cmd_inspect(args, out) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    t = parse_table(text)
    info = analyze(t)
    lines = [f"order: {t.n}", f"nilpotent: {'yes' if info.is_nilpotent else 'no'}"]
    if info.is_nilpotent:
        lines += [
            f"class: {info.class_c}",
            f"coclass: {info.coclass_r}",
            "layer sizes: " + " ".join(str(s) for s in info.layer_sizes),
            "min generating set: " + " ".join(str(g) for g in info.min_gen_set),
            f"generators: {len(info.min_gen_set)}",
            f"commutative: {_bool(is_commutative(t))}",
            f"self-dual: {_bool(is_self_dual(t))}",
            f"key iso: {canonical_key(t, CountMode.ISO).hex()}",
            f"key anti-iso: {canonical_key(t, CountMode.ANTI_ISO).hex()}",
        ]
    else:
        lines.append(f"commutative: {_bool(is_commutative(t))}")
    out.write("\n".join(lines) + "\n")
    return 0


def _count_value(source: str, kind: str, mode: CountMode, n: int):
    if source == "formula":
        return harness.formula_or_none(kind, mode, n)
    if source == "table1":
        return harness.table1_or_none(kind, mode, n)
    if source == "families":
        if n < harness.LIST_MIN_ORDER[kind]:
            return None
        if kind == "coclass2":
            tables = [realize(p) for p in classified_list(n, 2)]
            return harness.count_tables(tables, mode)
        return harness.family_count(kind, mode, n)
    if n > 7:
        return None
    return len(harness.bruteforce_tables(kind, mode, n))


def cmd_count(args, out) -> int:
    kind = _kind(args.coclass, args.gen_size)
    mode = CountMode(args.mode)
    sources = args.source or ["formula", "table1", "families"]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["type", "mode", "order", "count", "source"])
    for n in args.order:
        for source in sources:
            value = _count_value(source, kind, mode, n)
            if value is not None:
                writer.writerow([harness.TYPE_NAMES[kind], mode.value, n, value, source])
    return 0


def cmd_bruteforce(args, out) -> int:
    cfg = SearchConfig(args.order, args.coclass, args.gen_size, args.commutative,
                       CountMode(args.mode))
    tables = enumerate_nilpotent(cfg, workers=args.workers)
    if args.tables:
        out.write("\n".join(format_table(t) for t in tables))
    else:
        out.write(f"{len(tables)}\n")
    return 0


def cmd_verify(args, out) -> int:
    if not 5 <= args.max_order <= 13:
        raise UsageError(f"--max-order must be in 5..13, got {args.max_order}")
    results = harness.run_verification(args.max_order, emit=lambda s: out.write(s + "\n"))
    failures = [r for r in results if not r.ok]
    if failures:
        first = failures[0]
        out.write(f"FAILED {len(failures)}/{len(results)} checks; first: "
                  f"check={first.check} order={first.order} family={first.family}\n")
        return 1
    out.write(f"OK {len(results)} checks passed\n")
    return 0


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilsemi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="print the classified presentations of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--coclass", type=int, choices=[0, 1, 2], required=True)
    p.add_argument("--gen-size", type=int, choices=[1, 2, 3])
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("realize", help="print the table of a family member")
    p.add_argument("tokens", nargs="+", help="metadata such as: family=H n=8 k=3")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("inspect", help="report the structure of a table file")
    p.add_argument("file")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("count", help="CSV counts from formulas, the reference table, families or search")
    p.add_argument("--coclass", type=int, choices=[1, 2], required=True)
    p.add_argument("--gen-size", type=int, choices=[2, 3])
    p.add_argument("--order", type=_range, required=True, help="N or A-B")
    p.add_argument("--mode", choices=MODE_CHOICES, default=CountMode.ANTI_ISO.value)
    p.add_argument("--source", choices=SOURCES, action="append")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bruteforce", help="exhaustive search (order <= 7)")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--coclass", type=int)
    p.add_argument("--gen-size", type=int)
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--mode", choices=MODE_CHOICES, default=CountMode.ANTI_ISO.value)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--tables", action="store_true", help="print the tables, not the count")
    p.set_defaults(func=cmd_bruteforce)

    p = sub.add_parser("verify", help="run the full verification harness")
    p.add_argument("--max-order", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args, out)
    except (UsageError, NilsemiError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
