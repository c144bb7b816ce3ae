"""Permutations in one-line notation, classical pattern containment, and
the symmetries generated by reverse, complement and inverse.

A permutation of length n is a tuple holding each value 1..n exactly
once.  Positions and values are 1-based everywhere in the public
vocabulary (witness positions, insertion slots, pivot positions);
0-based indices appear only inside function bodies.

All functions here are pure and safe to call concurrently.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Sequence

Perm = tuple[int, ...]
PatternSet = frozenset[Perm]


def is_permutation(values: Sequence[int]) -> bool:
    """Check that ``values`` is a rearrangement of 1..n.

    >>> is_permutation((2, 4, 1, 3))
    True
    >>> is_permutation((1, 1, 2))
    False
    >>> is_permutation(())
    True
    """
    n = len(values)
    seen = [False] * (n + 1)
    for v in values:
        if not isinstance(v, int) or not 1 <= v <= n or seen[v]:
            return False
        seen[v] = True
    return True


def perm(values: Iterable[int]) -> Perm:
    """Freeze ``values`` into a permutation tuple, validating it."""
    p = tuple(values)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse comma-separated one-line notation, or the compact digit form.

    The compact form ("2413") is only unambiguous while every value is a
    single digit, so it is accepted on input only for n <= 9.

    >>> parse_perm("2,4,1,3")
    (2, 4, 1, 3)
    >>> parse_perm("2413")
    (2, 4, 1, 3)
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        try:
            values = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"bad permutation text: {text!r}") from None
    elif text.isdigit():
        values = [int(ch) for ch in text]
    else:
        raise ValueError(f"bad permutation text: {text!r}")
    return perm(values)


def format_perm(p: Perm, compact: bool = False) -> str:
    """Comma-separated text form; ``compact`` gives the digit form (n <= 9)."""
    if compact:
        if any(v > 9 for v in p):
            raise ValueError("compact form only exists for n <= 9")
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def iter_occurrences(p: Perm, pattern: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield the 0-based index tuple of every occurrence of ``pattern`` in ``p``.

    An occurrence is a strictly increasing choice of positions whose
    values are order-isomorphic to the pattern.  The search walks pattern
    slots left to right and prunes any partial choice that already breaks
    a pairwise order relation.
    """
    n, k = len(p), len(pattern)
    if k == 0:
        yield ()
        return
    if k > n:
        return
    chosen: list[int] = []

    def rec(slot: int, start: int) -> Iterator[tuple[int, ...]]:
        for j in range(start, n - (k - slot) + 1):
            vj = p[j]
            if all((vj > p[c]) == (pattern[slot] > pattern[t]) for t, c in enumerate(chosen)):
                chosen.append(j)
                if slot + 1 == k:
                    yield tuple(chosen)
                else:
                    yield from rec(slot + 1, j + 1)
                chosen.pop()

    yield from rec(0, 0)


def find_occurrence(p: Perm, pattern: Sequence[int]) -> tuple[int, ...] | None:
    """First occurrence of ``pattern`` in ``p`` as 1-based positions, or None.

    >>> find_occurrence((2, 4, 1, 3, 5), (1, 2, 3))
    (1, 2, 5)
    """
    for occ in iter_occurrences(p, pattern):
        return tuple(i + 1 for i in occ)
    return None


def contains_pattern(p: Perm, pattern: Sequence[int]) -> bool:
    """Whether some subsequence of ``p`` is order-isomorphic to ``pattern``.

    >>> contains_pattern((2, 4, 1, 3, 5), (1, 2, 3))
    True
    >>> contains_pattern((2, 4, 1, 3, 5), (3, 2, 1))
    False
    """
    return next(iter_occurrences(p, pattern), None) is not None


def avoids_all(p: Perm, patterns: Iterable[Sequence[int]]) -> bool:
    """Whether ``p`` contains none of the given patterns."""
    return all(not contains_pattern(p, q) for q in patterns)


def reverse(p: Perm) -> Perm:
    """Read right to left.  Involution."""
    return p[::-1]


def complement(p: Perm) -> Perm:
    """Map each value v to n - v + 1.  Involution; commutes with reverse."""
    n = len(p)
    return tuple(n - v + 1 for v in p)


def inverse(p: Perm) -> Perm:
    """Positional transpose: value p(i) goes to position i.  Involution."""
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


# The group generated by reverse, complement and inverse has order 8
# (the dihedral symmetries of the permutation matrix).  These composites
# enumerate it exactly once each.
SYMMETRIES: dict[str, Callable[[Perm], Perm]] = {
    "identity": lambda p: p,
    "reverse": reverse,
    "complement": complement,
    "reverse-complement": lambda p: reverse(complement(p)),
    "inverse": inverse,
    "reverse-inverse": lambda p: reverse(inverse(p)),
    "complement-inverse": lambda p: complement(inverse(p)),
    "reverse-complement-inverse": lambda p: reverse(complement(inverse(p))),
}


def pattern_set(*patterns: str | Sequence[int]) -> PatternSet:
    """Build a pattern set from text forms or value sequences.

    >>> sorted(pattern_set("21", (1, 2, 3)))
    [(1, 2, 3), (2, 1)]
    """
    parsed = frozenset(parse_perm(q) if isinstance(q, str) else perm(q) for q in patterns)
    if not parsed:
        raise ValueError("pattern set must be non-empty")
    if any(len(q) == 0 for q in parsed):
        raise ValueError("patterns must have length >= 1")
    return parsed


def apply_to_set(ps: PatternSet, sym: Callable[[Perm], Perm]) -> PatternSet:
    """Apply one symmetry to every pattern of the set."""
    return frozenset(sym(q) for q in ps)


def symmetry_orbit(ps: PatternSet) -> set[PatternSet]:
    """Orbit of the set under all 8 symmetries; its size divides 8."""
    return {apply_to_set(ps, sym) for sym in SYMMETRIES.values()}


def canonical_key(ps: PatternSet) -> tuple[Perm, ...]:
    """Lexicographically least sorted image of the set over the 8 symmetries.

    Two pattern sets have equal avoider counts at every length whenever
    their keys agree, which is what makes the key a class label.
    """
    return min(tuple(sorted(apply_to_set(ps, sym))) for sym in SYMMETRIES.values())


def key_text(key: Sequence[Perm]) -> str:
    """Stable text form of a canonical key, usable as a cache key."""
    if all(v <= 9 for q in key for v in q):
        return "|".join(format_perm(q, compact=True) for q in key)
    return "|".join(format_perm(q) for q in key)
