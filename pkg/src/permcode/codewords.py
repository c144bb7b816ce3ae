"""Code words for the permutations avoiding 2431, 4231, 1432 and 4132.

Every such permutation of length n is encoded by a word of length n - 1
over the alphabet {B, E} u {2, 3, ...}.  Letter i records where the
value i + 1 sits inside the permutation restricted to 1..i+1: B and E
mark a front or back insertion, an integer names the landing position.

A letter sequence is a code word when three conditions hold:

  C1  the i-th letter is B, E, or an integer j with 2 <= j <= i;
  C2  an integer letter is never followed by a marker;
  C3  consecutive integer letters never decrease.

So a code word is a block of markers followed by a non-decreasing,
position-bounded integer tail.  Encoding and decoding are mutually
inverse bijections between the avoiders of length n and the code words
of length n - 1.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import ForbiddenPatternError, InvalidWordError
from .perms import PatternSet, Perm, find_occurrence, format_perm, pattern_set

B = "B"
E = "E"
Letter = int | str
Word = tuple[Letter, ...]

#: The four patterns an encodable permutation must avoid.
FORBIDDEN_PATTERNS: PatternSet = pattern_set("2431", "4231", "1432", "4132")


def _is_marker(x: object) -> bool:
    return x == B or x == E


def _is_int_letter(x: object) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def word_violation(w: Sequence[Letter]) -> tuple[str, int] | None:
    """First violated condition as (name, 1-based position), or None."""
    for i, x in enumerate(w, start=1):
        if _is_marker(x):
            continue
        if not _is_int_letter(x) or not 2 <= x <= i:
            return ("C1", i)
    for i, (a, b) in enumerate(zip(w, w[1:]), start=1):
        if _is_int_letter(a) and _is_marker(b):
            return ("C2", i + 1)
        if _is_int_letter(a) and _is_int_letter(b) and b < a:
            return ("C3", i + 1)
    return None


def is_code_word(w: Sequence[Letter]) -> bool:
    """Whether C1-C3 all hold.

    >>> is_code_word(("B", "E", 2, 3, 3, 5, 6, 8))
    True
    >>> is_code_word(("B", 2, "E"))
    False
    """
    return word_violation(w) is None


def validate_word(w: Sequence[Letter]) -> Word:
    """Return ``w`` as a Word, raising InvalidWordError if C1-C3 fail."""
    violation = word_violation(w)
    if violation is not None:
        raise InvalidWordError(*violation)
    return tuple(w)


def parse_word(text: str) -> Word:
    """Parse "B,E,2,3" or, when every integer letter is a digit, "BE23"."""
    text = text.strip()
    if not text:
        return ()
    letters: list[Letter] = []
    tokens = [tok.strip() for tok in text.split(",")] if "," in text else list(text)
    for tok in tokens:
        if tok in (B, E):
            letters.append(tok)
        elif tok.isdigit():
            letters.append(int(tok))
        else:
            raise ValueError(f"bad code word token: {tok!r}")
    return tuple(letters)


def format_word(w: Sequence[Letter], compact: bool = False) -> str:
    """Comma-separated text form; ``compact`` drops the commas (letters <= 9)."""
    if compact:
        if any(_is_int_letter(x) and x > 9 for x in w):
            raise ValueError("compact form only exists while every letter is <= 9")
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def word_to_json(w: Sequence[Letter]) -> list[Letter]:
    """JSON array form: markers as strings, integer letters as numbers."""
    return list(w)


def word_from_json(items: Iterable[Letter]) -> Word:
    return tuple(x if _is_marker(x) else int(x) for x in items)


def restrict(p: Perm, m: int) -> Perm:
    """``p`` with every value greater than m removed.

    >>> restrict((2, 4, 5, 1, 7, 8, 3, 9, 6), 4)
    (2, 4, 1, 3)
    """
    return tuple(v for v in p if v <= m)


def pivot_position(p: Perm) -> int:
    """1-based position of the rightmost entry with a smaller entry both
    somewhere before and somewhere after it; 0 if there is none.

    This is the rightmost entry able to play the 3 of a 132 or 231
    pattern.  A new maximum may only be inserted strictly to its right,
    which is what drives both encoding and decoding.

    >>> pivot_position((2, 4, 1, 3))
    2
    >>> pivot_position((1, 2, 3, 4))
    0
    """
    n = len(p)
    if n < 3:
        return 0
    prefix_min = list(itertools.accumulate(p, min))
    suffix_min = p[n - 1]
    for i in range(n - 2, 0, -1):
        if p[i] > prefix_min[i - 1] and p[i] > suffix_min:
            return i + 1
        suffix_min = min(suffix_min, p[i])
    return 0


def encode(p: Perm) -> Word:
    """The code word of an avoider: letter i describes the restriction
    of ``p`` to 1..i+1.

    Raises ForbiddenPatternError when ``p`` contains one of the four
    forbidden patterns (the encoding is only injective on avoiders).

    >>> encode((2, 4, 5, 1, 7, 8, 3, 9, 6))
    ('B', 'E', 2, 3, 3, 5, 6, 8)
    """
    for q in sorted(FORBIDDEN_PATTERNS):
        occ = find_occurrence(p, q)
        if occ is not None:
            raise ForbiddenPatternError(pattern=q, positions=occ)
    letters: list[Letter] = []
    for m in range(2, len(p) + 1):
        r = restrict(p, m)
        piv = pivot_position(r)
        if piv:
            letters.append(piv)
        elif r[0] == m:
            letters.append(B)
        else:
            # pivot 0 forces the maximum to sit at an end
            assert r[-1] == m
            letters.append(E)
    return tuple(letters)


def decode(w: Sequence[Letter]) -> Perm:
    """The unique avoider with encode(decode(w)) == w.

    Starting from the single-element permutation, each letter places the
    next value: B at the front, E at the back, an integer at the named
    position.  A letter repeating the current pivot means the value goes
    to the back instead (landing on the pivot itself would create a
    forbidden pattern, and the back is the one placement that keeps the
    pivot where the letter says it is).

    >>> decode(("B", "E", 2, 3, 3, 5, 6, 8))
    (2, 4, 5, 1, 7, 8, 3, 9, 6)
    >>> decode(())
    (1,)
    """
    violation = word_violation(w)
    if violation is not None:
        raise InvalidWordError(*violation)
    values = [1]
    pivot = 0
    for i, x in enumerate(w, start=1):
        v = i + 1
        if x == B:
            values.insert(0, v)
        elif x == E or x == pivot:
            values.append(v)
        else:
            # C1 and C3 guarantee x > pivot here
            values.insert(x - 1, v)
            pivot = x
    return tuple(values)


def enumerate_code_words(n: int) -> set[Word]:
    """All code words of length n, built directly from C1-C3.

    >>> sorted(format_word(w, compact=True) for w in enumerate_code_words(2))
    ['B2', 'BB', 'BE', 'E2', 'EB', 'EE']
    """
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")
    if n == 0:
        return {()}
    words: set[Word] = set()
    for i in range(1, n + 1):
        tails = _tails(n - i, i)
        for markers in itertools.product((B, E), repeat=i):
            for tail in tails:
                words.add(markers + tail)
    return words


def _tails(length: int, block: int) -> list[Word]:
    """Non-decreasing integer tails t_1..t_length with 2 <= t_j <= j + block."""
    tails: list[Word] = [()]
    for j in range(1, length + 1):
        tails = [t + (v,) for t in tails for v in range(t[-1] if t else 2, j + block + 1)]
    return tails


def describe_non_avoider(p: Perm) -> str | None:
    """Diagnostic for CLI use: which forbidden pattern ``p`` contains, or None."""
    for q in sorted(FORBIDDEN_PATTERNS):
        occ = find_occurrence(p, q)
        if occ is not None:
            text = format_perm(q, compact=True)
            where = ",".join(str(i) for i in occ)
            return f"forbidden pattern {text} at positions {where}"
    return None
