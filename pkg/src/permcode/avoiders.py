"""Exhaustive generation and counting of pattern-avoiding permutations.

Deleting the maximum of an avoider leaves an avoider, so every avoider
of length n arises from exactly one avoider of length n-1 by inserting
the value n somewhere.  The search therefore walks a tree level by
level, keeping only the current frontier.

Children are found without re-checking whole permutations: any newly
created occurrence must use the inserted value, and since that value is
the strict maximum it must play the pattern's maximal letter.  For each
pattern, every occurrence of the pattern-minus-its-maximum in the parent
forbids a contiguous interval of insertion slots, and the allowed slots
are whatever no interval covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceededError
from .perms import PatternSet, Perm, avoids_all, iter_occurrences

DEFAULT_BUDGET = 10_000_000

# A "split" is a pattern with its maximum removed, plus the 0-based slot
# the maximum occupied.  Distinct patterns give distinct (sub, slot)
# pairs, so grouping by sub loses nothing and shares occurrence scans.
_Splits = list[tuple[Perm, list[int]]]


@dataclass(frozen=True)
class AvoiderSequence:
    """Exact avoider counts for one pattern set, for n = 1 .. n_max.

    ``counts[i]`` is the number of avoiders of length i + 1.
    """

    patterns: tuple[Perm, ...]
    counts: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.counts)

    def count(self, n: int) -> int:
        return self.counts[n - 1]


def _pattern_splits(ps: PatternSet) -> _Splits:
    groups: dict[Perm, list[int]] = {}
    for q in sorted(ps):
        k = len(q)
        max_slot = q.index(k)
        sub = tuple(v for v in q if v != k)
        groups.setdefault(sub, []).append(max_slot)
    return sorted(groups.items())


def _allowed_slots(p: Perm, splits: _Splits) -> list[int]:
    """0-based insertion slots for a new maximum that keep ``p`` clean.

    Assumes ``p`` itself avoids the patterns behind ``splits``.
    """
    n = len(p)
    diff = [0] * (n + 2)
    for sub, max_slots in splits:
        if not sub:
            return []  # a length-1 pattern forbids everything
        k1 = len(sub)
        for occ in iter_occurrences(p, sub):
            for mq in max_slots:
                lo = occ[mq - 1] + 1 if mq > 0 else 0
                hi = occ[mq] if mq < k1 else n
                diff[lo] += 1
                diff[hi + 1] -= 1
    slots = []
    acc = 0
    for t in range(n + 1):
        acc += diff[t]
        if acc == 0:
            slots.append(t)
    return slots


def allowed_insertions(p: Perm, ps: PatternSet) -> list[int]:
    """1-based positions where the value len(p)+1 may land without
    creating an occurrence of any pattern in ``ps``.

    ``p`` must already avoid ``ps``; position s means the new value
    becomes the s-th entry of the child.
    """
    return [t + 1 for t in _allowed_slots(p, _pattern_splits(ps))]


def insert_max(p: Perm, position: int) -> Perm:
    """Insert the value len(p)+1 at the given 1-based position."""
    t = position - 1
    return p[:t] + (len(p) + 1,) + p[t:]


def extensions(p: Perm, ps: PatternSet) -> list[Perm]:
    """All one-longer avoiders obtainable from ``p``."""
    return [insert_max(p, s) for s in allowed_insertions(p, ps)]


def iter_levels(ps: PatternSet, n_max: int, budget: int = DEFAULT_BUDGET) -> Iterator[list[Perm]]:
    """Yield the sorted avoider list for each length 1, 2, ..., n_max.

    Only one frontier is alive at a time.  ``budget`` caps the total
    number of permutations generated across all levels; exceeding it
    raises BudgetExceededError, which signals that the class is too
    large for the requested length.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    splits = _pattern_splits(ps)
    level: list[Perm] = [(1,)] if avoids_all((1,), ps) else []
    spent = len(level)
    if spent > budget:
        raise BudgetExceededError(f"node budget {budget} exceeded at length 1")
    yield level
    for n in range(2, n_max + 1):
        nxt = []
        for p in level:
            for t in _allowed_slots(p, splits):
                nxt.append(p[:t] + (n,) + p[t:])
        spent += len(nxt)
        if spent > budget:
            raise BudgetExceededError(
                f"node budget {budget} exceeded at length {n} "
                f"({spent} permutations generated)"
            )
        nxt.sort()
        yield nxt
        level = nxt


def generate_avoiders(ps: PatternSet, n: int, budget: int = DEFAULT_BUDGET) -> set[Perm]:
    """Exactly the permutations of length n avoiding every pattern in ``ps``."""
    level: list[Perm] = []
    for level in iter_levels(ps, n, budget):
        pass
    return set(level)


def count_sequence(ps: PatternSet, n_max: int, budget: int = DEFAULT_BUDGET) -> AvoiderSequence:
    """Avoider counts for n = 1 .. n_max, computed level by level."""
    counts = [len(level) for level in iter_levels(ps, n_max, budget)]
    return AvoiderSequence(patterns=tuple(sorted(ps)), counts=tuple(counts))
