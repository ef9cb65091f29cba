"""Command line surface: enumeration, counting, statistics, the bijection,
and the equidistribution verification harness.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.  The
json and csv formats are byte-stable for fixed inputs; progress chatter (only
under --verbose) goes to stderr so stdout stays clean.

Objects and patterns are written either spaced ("0 1 0 1 2 2") or, when every
entry is a single digit, compactly ("010122"); the empty object is "ε".
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Iterator

from .bijection import ascent_to_permutation, permutation_to_ascent
from .core import ValidationError, format_seq, parse_seq, validate_permutation
from .enumeration import (
    ASCENT_CAP,
    PERM_CAP,
    ascent_sequences_avoiding,
    joint_distribution,
    permutations_avoiding,
    verify_equidistribution,
)
from .patterns import PATTERN_021, PATTERN_132
from .stats import asc, rlm, special_maximum

_JSON_OPTS = {"sort_keys": True, "separators": (",", ":")}


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("plain", "json", "csv"),
        default=argparse.SUPPRESS, help="output format (default: plain)")
    common.add_argument(
        "--max-n-override", action="store_true", default=argparse.SUPPRESS,
        help="lift the enumeration length caps "
             f"({ASCENT_CAP} for ascent sequences, {PERM_CAP} for permutations)")
    common.add_argument(
        "--threads", type=int, metavar="K", default=argparse.SUPPRESS,
        help="accepted for interface stability; execution is single-threaded")
    common.add_argument(
        "--verbose", action="store_true", default=argparse.SUPPRESS,
        help="print per-step progress to stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="ascseq",
        description="Pattern-avoiding ascent sequences, 132-avoiding "
                    "permutations, their statistics, and the bijection "
                    "between the families.",
        parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list every object of one length")
    p.add_argument("kind", choices=("ascent", "perm"))
    p.add_argument("n", type=int)
    p.add_argument("--avoid", action="append", default=[], metavar="PATTERN",
                   help='forbidden pattern, e.g. "0 2 1" or "021"; repeatable')
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("count", parents=[common],
                       help="exact count of objects of one length")
    p.add_argument("kind", choices=("ascent", "perm"))
    p.add_argument("n", type=int)
    p.add_argument("--avoid", action="append", default=[], metavar="PATTERN")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("stats", parents=[common],
                       help="asc, rlm, and (for ascent sequences) the special maximum")
    p.add_argument("kind", choices=("ascent", "perm"))
    p.add_argument("object", nargs="?",
                   help="object text; omit to read one object per stdin line")
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("map", parents=[common],
                       help="apply the bijection or its inverse")
    p.add_argument("direction", choices=("forward", "inverse"),
                   help="forward: ascent sequence to permutation")
    p.add_argument("object", nargs="?",
                   help="object text; omit to read one object per stdin line")
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("distribution", parents=[common],
                       help="joint (asc, rlm) tables of both families and their difference")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_distribution)

    p = sub.add_parser("verify", parents=[common],
                       help="equidistribution and bijection check for n = 1..N")
    p.add_argument("n_max", type=int)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "plain")
    override = getattr(args, "max_n_override", False)
    threads = getattr(args, "threads", 1)
    verbose = getattr(args, "verbose", False)
    try:
        if threads < 1:
            raise ValidationError(f"--threads must be at least 1, got {threads}")
        return args.handler(args, fmt, override, verbose)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    except Exception as exc:  # contract: no input text may crash the CLI
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def _stream(kind: str, n: int, avoid: list[str], override: bool) -> Iterator[tuple[int, ...]]:
    patterns = [parse_seq(text) for text in avoid]
    if kind == "ascent":
        return ascent_sequences_avoiding(n, patterns,
                                         cap=None if override else ASCENT_CAP)
    return permutations_avoiding(n, patterns,
                                 cap=None if override else PERM_CAP)


def _input_texts(args) -> Iterable[str]:
    if args.object is not None:
        return [args.object]
    return (line.rstrip("\n") for line in sys.stdin)


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _cmd_enumerate(args, fmt, override, verbose) -> int:
    stream = _stream(args.kind, args.n, args.avoid, override)
    if fmt == "plain":
        for obj in stream:
            print(format_seq(obj))
    elif fmt == "json":
        print(json.dumps([list(obj) for obj in stream], **_JSON_OPTS))
    else:
        writer = _csv_writer()
        writer.writerow(["object"])
        for obj in stream:
            writer.writerow([format_seq(obj)])
    return 0


def _cmd_count(args, fmt, override, verbose) -> int:
    total = sum(1 for _ in _stream(args.kind, args.n, args.avoid, override))
    if fmt == "plain":
        print(total)
    elif fmt == "json":
        print(json.dumps(total))
    else:
        writer = _csv_writer()
        writer.writerow(["count"])
        writer.writerow([total])
    return 0


def _cmd_stats(args, fmt, override, verbose) -> int:
    single = args.object is not None
    rows = []
    for text in _input_texts(args):
        values = parse_seq(text)
        if args.kind == "ascent":
            info = special_maximum(values)  # also validates the sequence
            rows.append({
                "object": format_seq(values),
                "asc": asc(values),
                "rlm": rlm(values),
                "special_max": info.value,
                "run_start": info.run_start,
                "run_end": info.run_end,
                "repeated": info.repeated,
            })
        else:
            perm = validate_permutation(values)
            rows.append({
                "object": format_seq(perm),
                "asc": asc(perm),
                "rlm": rlm(perm),
            })

    if fmt == "plain":
        for row in rows:
            parts = [f"asc {row['asc']}", f"rlm {row['rlm']}"]
            if "special_max" in row:
                run = ("-" if row["run_start"] is None
                       else f"{row['run_start']}..{row['run_end']}")
                parts += [f"special-max {row['special_max']}", f"run {run}",
                          f"repeated {'yes' if row['repeated'] else 'no'}"]
            print(", ".join(parts))
    elif fmt == "json":
        if single:
            print(json.dumps(rows[0], **_JSON_OPTS))
        else:
            for row in rows:
                print(json.dumps(row, **_JSON_OPTS))
    else:
        writer = _csv_writer()
        if args.kind == "ascent":
            header = ["object", "asc", "rlm", "special_max",
                      "run_start", "run_end", "repeated"]
        else:
            header = ["object", "asc", "rlm"]
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if row[key] is None else row[key] for key in header])
    return 0


def _cmd_map(args, fmt, override, verbose) -> int:
    apply = ascent_to_permutation if args.direction == "forward" else permutation_to_ascent
    single = args.object is not None
    images = [apply(parse_seq(text)) for text in _input_texts(args)]
    if fmt == "plain":
        for image in images:
            print(format_seq(image))
    elif fmt == "json":
        if single:
            print(json.dumps(list(images[0])))
        else:
            for image in images:
                print(json.dumps(list(image)))
    else:
        writer = _csv_writer()
        writer.writerow(["object"])
        for image in images:
            writer.writerow([format_seq(image)])
    return 0


def _triples(table) -> list[list[int]]:
    return [[a, r, count] for (a, r), count in table.sorted_items()]


def _cmd_distribution(args, fmt, override, verbose) -> int:
    n = args.n
    table_a = joint_distribution(ascent_sequences_avoiding(
        n, (PATTERN_021,), cap=None if override else ASCENT_CAP))
    table_p = joint_distribution(permutations_avoiding(
        n, (PATTERN_132,), cap=None if override else PERM_CAP))
    diff = table_a.difference(table_p)
    verdict = "pass" if not diff else "fail"

    if fmt == "plain":
        print(f"n {n}")
        for family, table in (("A021", table_a), ("S132", table_p)):
            print(f"{family} total {table.total}")
            for (a, r), count in table.sorted_items():
                print(f"  asc {a} rlm {r} count {count}")
        if diff:
            print("difference:")
            for (a, r), delta in sorted(diff.items()):
                print(f"  asc {a} rlm {r} delta {delta}")
        else:
            print("difference none")
        print(f"verdict {verdict}")
    elif fmt == "json":
        payload = {
            "n": n,
            "families": {"A021": _triples(table_a), "S132": _triples(table_p)},
            "difference": [[a, r, delta] for (a, r), delta in sorted(diff.items())],
            "verdict": verdict,
        }
        print(json.dumps(payload, **_JSON_OPTS))
    else:
        writer = _csv_writer()
        writer.writerow(["n", "family", "asc", "rlm", "count"])
        for family, table in (("A021", table_a), ("S132", table_p)):
            for (a, r), count in table.sorted_items():
                writer.writerow([n, family, a, r, count])
    return 0


def _cmd_verify(args, fmt, override, verbose) -> int:
    if args.n_max < 1:
        raise ValidationError(f"verify needs n_max >= 1, got {args.n_max}")
    reports = []
    for n in range(1, args.n_max + 1):
        if verbose:
            print(f"checking n={n} ...", file=sys.stderr)
        report = verify_equidistribution(
            n,
            ascent_cap=None if override else ASCENT_CAP,
            perm_cap=None if override else PERM_CAP)
        reports.append(report)
        if not report.passed:
            break
    verdict = "pass" if all(r.passed for r in reports) else "fail"

    if fmt == "plain":
        for r in reports:
            if r.passed:
                print(f"n={r.n} pass ({r.ascent_table.total} per family)")
            else:
                print(f"n={r.n} FAIL: {r.failure}")
        print(f"verdict {verdict}")
    elif fmt == "json":
        payload = {
            "max_n": args.n_max,
            "results": [{"n": r.n, "passed": r.passed,
                         "total": r.ascent_table.total,
                         "catalan": r.catalan_value,
                         "failure": r.failure} for r in reports],
            "verdict": verdict,
        }
        print(json.dumps(payload, **_JSON_OPTS))
    else:
        writer = _csv_writer()
        writer.writerow(["n", "passed", "total", "catalan", "failure"])
        for r in reports:
            writer.writerow([r.n, r.passed, r.ascent_table.total,
                             r.catalan_value, r.failure or ""])
    return 0 if verdict == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
