"""Symmetry-class scan over the four-pattern classes of length-4 patterns.

There are C(24,4) = 10626 ways to forbid four patterns of length four.
Reverse, complement and inverse leave avoider counts unchanged, so
counting runs once per symmetry class and each count sequence is
compared against a target prefix (by default the central binomial
numbers).  A "matches" verdict is always a statement about the computed
prefix, never a proof.
"""

from __future__ import annotations

import itertools
import json
import os
import tempfile
from dataclasses import dataclass
from typing import Callable

from .avoiders import DEFAULT_BUDGET, iter_levels
from .errors import BudgetExceededError
from .lattice import binom, central_binomial
from .perms import PatternSet, Perm, canonical_key, key_text, pattern_set, symmetry_orbit

LENGTH4_PATTERNS: tuple[Perm, ...] = tuple(sorted(itertools.permutations(range(1, 5))))

MATCHES = "matches-central-binomial-prefix"
BUDGET_EXCEEDED = "budget-exceeded"

CACHE_SCHEMA = 1

#: The twelve four-pattern classes whose counts agree with the central
#: binomial numbers as far as anyone has computed.
CANDIDATE_CLASSES: tuple[PatternSet, ...] = tuple(
    pattern_set(*texts)
    for texts in (
        ("2431", "4231", "1432", "4132"),
        ("3124", "4123", "3142", "4132"),
        ("1234", "1243", "1324", "1342"),
        ("1234", "1243", "1342", "1423"),
        ("1234", "1243", "1342", "2341"),
        ("1243", "1324", "1342", "1423"),
        ("1243", "1324", "1342", "1432"),
        ("1243", "2143", "2413", "2431"),
        ("1324", "1342", "1423", "1432"),
        ("1324", "1342", "1432", "4132"),
        ("1342", "1423", "1432", "2431"),
        ("1342", "2413", "2431", "3142"),
    )
)


def catalan(n: int) -> int:
    """C(2n, n) / (n + 1) exactly."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    return binom(2 * n, n) // (n + 1)


def expected_central_binomial(n: int) -> int:
    """Target count at length n: C(2(n-1), n-1)."""
    return central_binomial(n - 1)


@dataclass(frozen=True)
class ClassReport:
    canonical_key: str
    orbit_size: int
    counts: tuple[int, ...]
    expected: tuple[int, ...]
    verdict: str


@dataclass(frozen=True)
class ScanResult:
    n_max: int
    reports: tuple[ClassReport, ...]
    total_subsets: int
    total_classes: int


def enumerate_quadruple_classes() -> list[PatternSet]:
    """One canonical representative per symmetry class of 4-element
    subsets of the 24 length-4 patterns, sorted by canonical key."""
    reps: dict[tuple[Perm, ...], PatternSet] = {}
    for combo in itertools.combinations(LENGTH4_PATTERNS, 4):
        key = canonical_key(frozenset(combo))
        if key not in reps:
            reps[key] = frozenset(key)
    return [reps[key] for key in sorted(reps)]


def orbit_size(ps: PatternSet) -> int:
    return len(symmetry_orbit(ps))


def prefix_counts(ps: PatternSet, n_max: int, budget: int = DEFAULT_BUDGET) -> tuple[list[int], bool]:
    """Avoider counts up to n_max, stopping early on budget exhaustion.

    Returns (counts, exceeded); ``counts`` holds whatever levels were
    completed before the budget ran out.
    """
    counts: list[int] = []
    try:
        for level in iter_levels(ps, n_max, budget):
            counts.append(len(level))
    except BudgetExceededError:
        return counts, True
    return counts, False


def classify(counts: list[int], n_max: int, expected_fn: Callable[[int], int]) -> str:
    """Prefix verdict: divergence is definite, an unfinished match is not."""
    for n, count in enumerate(counts, start=1):
        if count != expected_fn(n):
            return f"diverges-at-n={n}"
    if len(counts) < n_max:
        return BUDGET_EXCEEDED
    return MATCHES


def load_cache(path: str) -> dict[str, list[int]]:
    """Cached count arrays keyed by canonical key text; {} when absent
    or written under a different schema."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (FileNotFoundError, json.JSONDecodeError):
        return {}
    if not isinstance(data, dict) or data.get("schema_version") != CACHE_SCHEMA:
        return {}
    counts = data.get("counts", {})
    return {str(k): [int(c) for c in v] for k, v in counts.items()}


def save_cache(path: str, counts_by_key: dict[str, list[int]]) -> None:
    payload = {
        "schema_version": CACHE_SCHEMA,
        "counts": {k: list(v) for k, v in sorted(counts_by_key.items())},
    }
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, separators=(",", ":"))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def default_cache_path() -> str:
    root = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(root, "permcode", "scan-cache.json")


def _counts_for(ps: PatternSet, n_max: int, budget: int,
                cache: dict[str, list[int]]) -> tuple[str, list[int]]:
    key = key_text(canonical_key(ps))
    cached = cache.get(key)
    if cached is not None and len(cached) >= n_max:
        return key, list(cached[:n_max])
    counts, _ = prefix_counts(ps, n_max, budget)
    if cached is None or len(counts) > len(cached):
        cache[key] = list(counts)
    return key, counts


def scan_for_sequence(n_max: int,
                      expected_fn: Callable[[int], int] | None = None,
                      budget: int = DEFAULT_BUDGET,
                      cache_path: str | None = None) -> ScanResult:
    """Count every symmetry class up to n_max and classify each against
    the target prefix.  Budget exhaustion is recorded per class, never
    fatal.  Reports come out in canonical-key order, byte-stable."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    expected_fn = expected_fn or expected_central_binomial
    cache = load_cache(cache_path) if cache_path else {}
    reports = []
    total_subsets = 0
    for ps in enumerate_quadruple_classes():
        key, counts = _counts_for(ps, n_max, budget, cache)
        size = orbit_size(ps)
        total_subsets += size
        reports.append(ClassReport(
            canonical_key=key,
            orbit_size=size,
            counts=tuple(counts),
            expected=tuple(expected_fn(n) for n in range(1, len(counts) + 1)),
            verdict=classify(counts, n_max, expected_fn),
        ))
    if cache_path:
        save_cache(cache_path, cache)
    return ScanResult(
        n_max=n_max,
        reports=tuple(reports),
        total_subsets=total_subsets,
        total_classes=len(reports),
    )


def verify_candidates(n_max: int,
                      budget: int = DEFAULT_BUDGET,
                      cache_path: str | None = None) -> list[tuple[PatternSet, str]]:
    """Prefix verdict for each of the twelve candidate classes, in the
    order they are listed in CANDIDATE_CLASSES."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    cache = load_cache(cache_path) if cache_path else {}
    results = []
    for ps in CANDIDATE_CLASSES:
        _, counts = _counts_for(ps, n_max, budget, cache)
        results.append((ps, classify(counts, n_max, expected_central_binomial)))
    if cache_path:
        save_cache(cache_path, cache)
    return results
