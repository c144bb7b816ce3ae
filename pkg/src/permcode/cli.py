"""Command line front end.

Subcommands: count, encode, decode, verify, scan, candidates, render.
Exit codes: 0 success (and all checks passed for verify), 1 failed
verification, 2 invalid input, 3 exhausted budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from . import avoiders, codewords, lattice, render, wilf
from .errors import BudgetExceededError
from .perms import PatternSet, format_perm, parse_perm, pattern_set


def parse_patterns(text: str) -> PatternSet:
    """Pattern list: compact forms split on commas ("2431,4231"), or
    full comma forms split on pipes ("2,4,3,1|4,2,3,1")."""
    if "|" in text:
        return pattern_set(*text.split("|"))
    return pattern_set(*text.split(","))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_count(args) -> int:
    ps = parse_patterns(args.patterns)
    seq = avoiders.count_sequence(ps, args.n_max, budget=args.budget)
    if args.format == "json":
        payload = {
            "patterns": [format_perm(q) for q in seq.patterns],
            "counts": list(seq.counts),
        }
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "lines":
        for n, count in enumerate(seq.counts, start=1):
            print(f"{n} {count}")
    else:
        print("n,count")
        for n, count in enumerate(seq.counts, start=1):
            print(f"{n},{count}")
    return 0


def cmd_encode(args) -> int:
    p = parse_perm(args.perm)
    word = codewords.encode(p)
    print(codewords.format_word(word))
    return 0


def cmd_decode(args) -> int:
    word = codewords.parse_word(args.word)
    p = codewords.decode(word)
    print(format_perm(p))
    return 0


def _check(ok_all: list[bool], label: str, expected, actual) -> None:
    ok = expected == actual
    ok_all.append(ok)
    status = "ok" if ok else "FAIL"
    print(f"{status} {label}: expected={expected} actual={actual}")


def _verify_bijection(n_max: int, budget: int) -> list[bool]:
    results: list[bool] = []
    for n, level in enumerate(avoiders.iter_levels(codewords.FORBIDDEN_PATTERNS, n_max, budget),
                              start=1):
        words = codewords.enumerate_code_words(n - 1)
        encoded = set()
        clean = True
        for p in level:
            w = codewords.encode(p)
            encoded.add(w)
            if codewords.decode(w) != p:
                clean = False
        clean = clean and encoded == words
        clean = clean and all(codewords.encode(codewords.decode(w)) == w for w in words)
        _check(results, f"bijection n={n}", (len(words), True), (len(level), clean))
    return results


def _verify_counts(n_max: int) -> list[bool]:
    results: list[bool] = []
    for n in range(1, n_max + 1):
        expected = lattice.central_binomial(n)
        listed = len(codewords.enumerate_code_words(n))
        summed = lattice.word_count_from_paths(n)
        _check(results, f"counts n={n}", (expected, expected), (listed, summed))
    return results


def _verify_paths(n_max: int) -> list[bool]:
    results: list[bool] = []
    for n in range(1, n_max + 1):
        closed = [lattice.count_paths_closed(n - i, i, n) for i in range(1, n + 1)]
        brute = [lattice.count_paths_brute(n - i, n - 1, i) for i in range(1, n + 1)]
        _check(results, f"paths n={n}", closed, brute)
    return results


def _verify_identity(m_max: int, n_max: int) -> list[bool]:
    results: list[bool] = []
    for m in range(1, m_max + 1):
        sides = [lattice.binomial_identity(m, n) for n in range(1, n_max + 1)]
        bad = [n for n, (lhs, rhs) in enumerate(sides, start=1) if lhs != rhs]
        _check(results, f"identity m={m}", [], bad)
    return results


def cmd_verify(args) -> int:
    suites: dict[str, Callable[[], list[bool]]] = {
        "bijection": lambda: _verify_bijection(args.n_max or 8, args.budget),
        "counts": lambda: _verify_counts(args.n_max or 10),
        "paths": lambda: _verify_paths(args.n_max or 10),
        "identity": lambda: _verify_identity(args.m_max or 20, args.n_max or 20),
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    all_ok = True
    for name in names:
        results = suites[name]()
        ok = all(results)
        all_ok = all_ok and ok
        print(f"suite {name}: {'PASS' if ok else 'FAIL'} ({sum(results)}/{len(results)})")
    return 0 if all_ok else 1


def _report_json(result: wilf.ScanResult) -> str:
    payload = {
        "schema_version": wilf.CACHE_SCHEMA,
        "n_max": result.n_max,
        "total_subsets": result.total_subsets,
        "total_classes": result.total_classes,
        "reports": [
            {
                "canonical_key": r.canonical_key,
                "orbit_size": r.orbit_size,
                "counts": list(r.counts),
                "expected": list(r.expected),
                "verdict": r.verdict,
            }
            for r in result.reports
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"


def _report_csv(result: wilf.ScanResult) -> str:
    lines = ["canonical_key,orbit_size,n,count,expected,verdict"]
    for r in result.reports:
        for n, (count, expected) in enumerate(zip(r.counts, r.expected), start=1):
            lines.append(f"{r.canonical_key},{r.orbit_size},{n},{count},{expected},{r.verdict}")
    return "\n".join(lines) + "\n"


def _report_lines(result: wilf.ScanResult) -> str:
    lines = []
    for r in result.reports:
        counts = " ".join(str(c) for c in r.counts)
        lines.append(f"{r.canonical_key} orbit={r.orbit_size} verdict={r.verdict} counts={counts}")
    return "\n".join(lines) + "\n"


def cmd_scan(args) -> int:
    result = wilf.scan_for_sequence(args.n_max, budget=args.budget,
                                    cache_path=args.cache)
    renderers = {"json": _report_json, "csv": _report_csv, "lines": _report_lines}
    text = renderers[args.format](result)
    _emit(text, args.out)
    matches = sum(r.verdict == wilf.MATCHES for r in result.reports)
    summary = f"classes={result.total_classes} matches={matches}"
    print(summary) if args.out else print(summary, file=sys.stderr)
    return 0


def cmd_candidates(args) -> int:
    results = wilf.verify_candidates(args.n_max, budget=args.budget,
                                     cache_path=args.cache)
    if args.format == "json":
        payload = [
            {"patterns": [format_perm(q) for q in sorted(ps)], "verdict": verdict}
            for ps, verdict in results
        ]
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        print("patterns,verdict")
        for ps, verdict in results:
            text = "|".join(format_perm(q, compact=True) for q in sorted(ps))
            print(f"{text},{verdict}")
    else:
        for ps, verdict in results:
            text = "|".join(format_perm(q, compact=True) for q in sorted(ps))
            print(f"{text} {verdict}")
    return 0


def cmd_render(args) -> int:
    word = codewords.parse_word(args.word)
    codewords.validate_word(word)
    if all(x in (codewords.B, codewords.E) for x in word) and not args.allow_empty_path:
        raise ValueError("word is all markers; pass --allow-empty-path to render anyway")
    path, barrier = render.word_path(word)
    spec = render.RenderSpec(path=path, barrier=barrier, fmt=args.format, cell=args.cell_size)
    _emit(render.render(spec), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permcode",
        description="Exact toolkit for pattern-avoiding permutations, their "
                    "code words, and barrier-bounded lattice paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count avoiders of a pattern set")
    count.add_argument("--patterns", required=True, help='e.g. "2431,4231,1432,4132"')
    count.add_argument("--n-max", type=int, required=True)
    count.add_argument("--budget", type=int, default=avoiders.DEFAULT_BUDGET)
    count.add_argument("--format", choices=("csv", "json", "lines"), default="csv")
    count.set_defaults(func=cmd_count)

    enc = sub.add_parser("encode", help="permutation -> code word")
    enc.add_argument("--perm", required=True)
    enc.set_defaults(func=cmd_encode)

    dec = sub.add_parser("decode", help="code word -> permutation")
    dec.add_argument("--word", required=True)
    dec.set_defaults(func=cmd_decode)

    ver = sub.add_parser("verify", help="run an invariant suite")
    ver.add_argument("--suite", choices=("bijection", "counts", "paths", "identity", "all"),
                     default="all")
    ver.add_argument("--n-max", type=int, default=None)
    ver.add_argument("--m-max", type=int, default=None)
    ver.add_argument("--budget", type=int, default=avoiders.DEFAULT_BUDGET)
    ver.set_defaults(func=cmd_verify)

    scan = sub.add_parser("scan", help="scan all 1524 four-pattern classes")
    scan.add_argument("--n-max", type=int, default=9)
    scan.add_argument("--out", default=None, help="report file (default stdout)")
    scan.add_argument("--format", choices=("json", "csv", "lines"), default="json")
    scan.add_argument("--cache", default=wilf.default_cache_path())
    scan.add_argument("--budget", type=int, default=avoiders.DEFAULT_BUDGET)
    scan.set_defaults(func=cmd_scan)

    cand = sub.add_parser("candidates", help="check the twelve candidate classes")
    cand.add_argument("--n-max", type=int, default=10)
    cand.add_argument("--format", choices=("json", "csv", "lines"), default="lines")
    cand.add_argument("--cache", default=wilf.default_cache_path())
    cand.add_argument("--budget", type=int, default=avoiders.DEFAULT_BUDGET)
    cand.set_defaults(func=cmd_candidates)

    rend = sub.add_parser("render", help="draw the lattice path of a code word")
    rend.add_argument("--word", required=True)
    rend.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    rend.add_argument("--out", default=None)
    rend.add_argument("--cell-size", type=int, default=render.DEFAULT_CELL)
    rend.add_argument("--allow-empty-path", action="store_true")
    rend.set_defaults(func=cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); not our error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
