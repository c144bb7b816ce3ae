import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from permcode.avoiders import (
    AvoiderSequence,
    allowed_insertions,
    count_sequence,
    extensions,
    generate_avoiders,
    insert_max,
    iter_levels,
)
from permcode.errors import BudgetExceededError
from permcode.perms import avoids_all, pattern_set, symmetry_orbit

MAIN_CLASS = pattern_set("2431", "4231", "1432", "4132")
CATALAN_STYLE_CLASS = pattern_set("1324", "1342", "1432", "4132")


def standardize(values):
    ranks = sorted(values)
    return tuple(ranks.index(v) + 1 for v in values)


def naive_contains(p, pattern):
    return any(standardize(sub) == pattern for sub in combinations(p, len(pattern)))


def brute_avoiders(ps, n):
    """Oracle: filter all n! permutations."""
    return {
        tuple(p)
        for p in permutations(range(1, n + 1))
        if not any(naive_contains(tuple(p), q) for q in ps)
    }


def sample_pattern_sets():
    rng = random.Random(20240817)
    length4 = sorted(permutations(range(1, 5)))
    sets = [
        MAIN_CLASS,
        CATALAN_STYLE_CLASS,
        pattern_set("123"),
        pattern_set("21"),
        pattern_set("12"),
        pattern_set("132", "4321"),
        pattern_set("321", "123"),
    ]
    for _ in range(12):
        sets.append(frozenset(rng.sample(length4, 4)))
    return sets


class TestGeneration:
    def test_small_main_class(self):
        assert generate_avoiders(MAIN_CLASS, 2) == {(1, 2), (2, 1)}
        level4 = generate_avoiders(MAIN_CLASS, 4)
        assert len(level4) == 20
        assert level4 == brute_avoiders(MAIN_CLASS, 4)

    def test_insertions_into_2413(self):
        children = set(extensions((2, 4, 1, 3), MAIN_CLASS))
        assert children == {(2, 4, 5, 1, 3), (2, 4, 1, 5, 3), (2, 4, 1, 3, 5)}
        assert allowed_insertions((2, 4, 1, 3), MAIN_CLASS) == [3, 4, 5]

    def test_insert_max_positions(self):
        assert insert_max((2, 1), 1) == (3, 2, 1)
        assert insert_max((2, 1), 3) == (2, 1, 3)

    @pytest.mark.parametrize("ps", sample_pattern_sets())
    def test_matches_brute_filter(self, ps):
        for n in range(1, 7):
            assert generate_avoiders(ps, n) == brute_avoiders(ps, n)

    def test_generated_permutations_avoid(self):
        for p in generate_avoiders(MAIN_CLASS, 6):
            assert avoids_all(p, MAIN_CLASS)

    def test_length1_pattern_kills_everything(self):
        ps = pattern_set("1")
        assert generate_avoiders(ps, 1) == set()
        assert count_sequence(ps, 3).counts == (0, 0, 0)


class TestAllowedInsertions:
    @pytest.mark.parametrize("ps", sample_pattern_sets())
    def test_against_naive_child_check(self, ps):
        for n in range(1, 6):
            for p in generate_avoiders(ps, n):
                allowed = set(allowed_insertions(p, ps))
                for s in range(1, n + 2):
                    child = insert_max(p, s)
                    naive_ok = not any(naive_contains(child, q) for q in ps)
                    assert (s in allowed) == naive_ok, (p, sorted(ps), s)

    @given(st.permutations(tuple(range(1, 5))).map(tuple))
    @settings(max_examples=24, deadline=None)
    def test_random_single_patterns(self, q):
        ps = frozenset({q})
        for n in range(1, 6):
            for p in generate_avoiders(ps, n):
                allowed = set(allowed_insertions(p, ps))
                for s in range(1, n + 2):
                    child = insert_max(p, s)
                    assert (s in allowed) == (not naive_contains(child, q))


class TestCounting:
    def test_main_class_counts(self):
        seq = count_sequence(MAIN_CLASS, 5)
        assert seq.counts == (1, 2, 6, 20, 70)
        assert seq.n_max == 5
        assert seq.count(4) == 20

    def test_catalan_style_class_counts(self):
        assert count_sequence(CATALAN_STYLE_CLASS, 5).counts == (1, 2, 6, 20, 70)

    def test_single_length(self):
        for ps in (MAIN_CLASS, pattern_set("123")):
            assert count_sequence(ps, 1).counts == (1,)

    def test_counts_match_generation(self):
        levels = list(iter_levels(MAIN_CLASS, 6))
        assert [len(lv) for lv in levels] == list(count_sequence(MAIN_CLASS, 6).counts)
        assert set(levels[-1]) == generate_avoiders(MAIN_CLASS, 6)

    def test_counts_invariant_on_orbit(self):
        rng = random.Random(99)
        length4 = sorted(permutations(range(1, 5)))
        for _ in range(6):
            ps = frozenset(rng.sample(length4, 4))
            reference = count_sequence(ps, 5).counts
            for member in symmetry_orbit(ps):
                assert count_sequence(member, 5).counts == reference

    def test_levels_are_sorted_and_deterministic(self):
        first = [tuple(lv) for lv in iter_levels(MAIN_CLASS, 6)]
        second = [tuple(lv) for lv in iter_levels(MAIN_CLASS, 6)]
        assert first == second
        for level in first:
            assert list(level) == sorted(level)

    def test_sequence_dataclass_is_frozen(self):
        seq = AvoiderSequence(patterns=((2, 1),), counts=(1, 1))
        with pytest.raises(AttributeError):
            seq.counts = (2,)


class TestBudget:
    def test_budget_error(self):
        with pytest.raises(BudgetExceededError):
            count_sequence(MAIN_CLASS, 8, budget=10)

    def test_budget_allows_exact_fit(self):
        # 1 + 2 + 6 = 9 nodes through n = 3
        seq = count_sequence(MAIN_CLASS, 3, budget=9)
        assert seq.counts == (1, 2, 6)

    def test_invalid_n_max(self):
        with pytest.raises(ValueError):
            count_sequence(MAIN_CLASS, 0)
