"""North/East lattice paths below a diagonal barrier, and the exact
counting behind the code words.

The integer tail of a code word maps to a path: lower every entry by 2,
draw the j-th East step at that height, fill the gaps with North steps.
Tails whose marker block has length i correspond exactly to the paths
from (0,0) to (len(tail), len(tail)+i-1) that never touch the line
y = x + i.  The reflection principle counts those paths in closed form,
and summing over marker blocks yields the central binomial coefficients.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import BudgetExceededError, InvalidPathError, InvalidTailError

NORTH = "N"
EAST = "E"

Point = tuple[int, int]

DEFAULT_STEP_LIMIT = 30


def binom(n: int, k: int) -> int:
    """C(n, k), defined as 0 outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class LatticePath:
    """A sequence of unit North/East steps from a start point.

    Paths built from code word tails start at the origin; reflected
    paths start at the mirror image of the origin, (-i, i).
    """

    steps: str
    start: Point = (0, 0)

    def __post_init__(self):
        bad = set(self.steps) - {NORTH, EAST}
        if bad:
            raise InvalidPathError(f"steps must be over N/E, got {sorted(bad)}")

    def points(self) -> list[Point]:
        """Every lattice point the path visits, start and end included."""
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            if s == EAST:
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return pts

    @property
    def end(self) -> Point:
        x, y = self.start
        east = self.steps.count(EAST)
        return (x + east, y + len(self.steps) - east)


def first_touch(path: LatticePath, barrier: int) -> int | None:
    """Index (into path.points()) of the first point on y = x + barrier."""
    for idx, (x, y) in enumerate(path.points()):
        if y == x + barrier:
            return idx
    return None


def tail_to_path(tail: Sequence[int], i: int) -> LatticePath:
    """Path of a non-decreasing tail whose marker block has length i.

    Entry j (1-based) must satisfy 2 <= tail[j] <= j + i; the j-th East
    step lands at height tail[j] - 2 and North steps fill the gaps up to
    the final height len(tail) + i - 1.
    """
    if i < 1:
        raise InvalidTailError(f"marker block length must be >= 1, got {i}")
    prev = 2
    for j, t in enumerate(tail, start=1):
        if not isinstance(t, int) or not 2 <= t <= j + i:
            raise InvalidTailError(f"tail entry {t!r} at position {j} outside 2..{j + i}")
        if t < prev:
            raise InvalidTailError(f"tail decreases at position {j}: {prev} then {t}")
        prev = t
    steps: list[str] = []
    height = 0
    for t in tail:
        target = t - 2
        steps.append(NORTH * (target - height))
        steps.append(EAST)
        height = target
    steps.append(NORTH * (len(tail) + i - 1 - height))
    return LatticePath("".join(steps))


def path_to_tail(path: LatticePath, i: int) -> tuple[int, ...]:
    """Inverse of tail_to_path; round-trips exactly.

    The path must start at the origin, end at (a, a + i - 1), and never
    touch y = x + i.
    """
    if i < 1:
        raise InvalidPathError(f"marker block length must be >= 1, got {i}")
    if path.start != (0, 0):
        raise InvalidPathError(f"tail paths start at the origin, got {path.start}")
    a, top = path.end
    if top != a + i - 1:
        raise InvalidPathError(f"endpoint {path.end} is not of the form (a, a + {i} - 1)")
    if first_touch(path, i) is not None:
        raise InvalidPathError(f"path touches the barrier y = x + {i}")
    tail = []
    height = 0
    for s in path.steps:
        if s == EAST:
            tail.append(height + 2)
        else:
            height += 1
    return tuple(tail)


def path_to_json(path: LatticePath, barrier: int) -> dict:
    """JSON object form of an origin-started path and its barrier."""
    if path.start != (0, 0):
        raise InvalidPathError(f"JSON form is for origin-started paths, got start {path.start}")
    east, north = path.end
    return {"east": east, "north": north, "barrier": barrier, "steps": path.steps}


def path_from_json(data: dict) -> tuple[LatticePath, int]:
    """Inverse of path_to_json; checks the endpoint against the steps."""
    path = LatticePath(str(data["steps"]))
    if path.end != (int(data["east"]), int(data["north"])):
        raise InvalidPathError(
            f"steps end at {path.end}, not ({data['east']}, {data['north']})"
        )
    return path, int(data["barrier"])


def iter_paths(start: Point, end: Point) -> Iterator[LatticePath]:
    """Every North/East path between two points (none when unreachable)."""
    dx = end[0] - start[0]
    dy = end[1] - start[1]
    if dx < 0 or dy < 0:
        return
    total = dx + dy
    for east_slots in itertools.combinations(range(total), dx):
        steps = [NORTH] * total
        for t in east_slots:
            steps[t] = EAST
        yield LatticePath("".join(steps), start)


def count_paths_brute(a: int, north: int, barrier: int,
                      step_limit: int = DEFAULT_STEP_LIMIT) -> int:
    """Count paths (0,0) -> (a, north) never touching y = x + barrier,
    by exhaustive depth-first enumeration of step sequences.

    Deliberately naive: this is the oracle the closed form is checked
    against.  Refuses paths longer than ``step_limit`` steps.
    """
    if a < 0 or north < 0:
        raise ValueError("endpoint coordinates must be non-negative")
    if barrier < 1:
        raise ValueError(f"barrier must be >= 1, got {barrier}")
    if a + north > step_limit:
        raise BudgetExceededError(f"{a + north} steps exceed the limit of {step_limit}")

    def rec(x: int, y: int) -> int:
        if y == x + barrier:
            return 0
        if x == a and y == north:
            return 1
        total = 0
        if x < a:
            total += rec(x + 1, y)
        if y < north:
            total += rec(x, y + 1)
        return total

    return rec(0, 0)


def count_paths_closed(a: int, i: int, n: int) -> int:
    """Closed-form count of the family (0,0) -> (a, n-1) below y = x + i,
    where a = n - i.

    Computed three equivalent ways (difference of binomials from the
    reflection principle, and two scaled single-binomial forms) which
    are asserted equal to catch off-by-one drift.
    """
    if i < 1 or i > n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    if a != n - i:
        raise ValueError(f"family requires a = n - i, got a={a}, n-i={n - i}")
    difference = binom(2 * n - i - 1, n - 1) - binom(2 * n - i - 1, n)
    scaled = binom(2 * n - i - 1, n - 1) * i
    scaled_alt = binom(2 * n - i - 1, n - i) * i
    assert scaled == scaled_alt and scaled % n == 0 and difference == scaled // n
    return difference


def reflect_bad_path(path: LatticePath, i: int) -> LatticePath:
    """Swap North and East on the prefix up to the first touch of
    y = x + i; the start moves to its mirror image across the line.

    An involution between the barrier-touching paths from one start and
    those from its reflection; the suffix after the touch is untouched,
    so the endpoint never moves.
    """
    touch = first_touch(path, i)
    if touch is None:
        raise InvalidPathError(f"path never touches y = x + {i}")
    x0, y0 = path.start
    flipped = "".join(EAST if s == NORTH else NORTH for s in path.steps[:touch])
    return LatticePath(flipped + path.steps[touch:], (y0 - i, x0 + i))


def word_count_from_paths(n: int) -> int:
    """Number of code words of length n, via the path decomposition:
    sum over marker block lengths i of 2^i times the tail-path count."""
    if n < 1:
        raise ValueError(f"word length must be >= 1, got {n}")
    return sum((2 ** i) * count_paths_closed(n - i, i, n) for i in range(1, n + 1))


def central_binomial(n: int) -> int:
    """C(2n, n) exactly."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    return math.comb(2 * n, n)


def binomial_identity(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the summation identity behind the word count:

        sum_{j=0}^{n-1} 2^(m-j) * C(m+j-1, j) * (m-j)
            == n * 2^(m-n+1) * C(m+n-1, n).

    Returned as exact rationals; both sides are integers whenever
    n <= m, and at m = n the right side is n * C(2n, n).
    """
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    lhs = sum((Fraction(2) ** (m - j)) * binom(m + j - 1, j) * (m - j) for j in range(n))
    rhs = n * (Fraction(2) ** (m - n + 1)) * binom(m + n - 1, n)
    return Fraction(lhs), rhs
