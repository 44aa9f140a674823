"""
=============================================================================
TEST 7: Brute-Force Oracle - Simulation
=============================================================================
Tests avoider generation (order, prefix restriction, limits) and
inversion-refined brute-force counts.

Run:  python -m pytest tests/test_oracle.py -v
=============================================================================
"""
import itertools
import os
import sys
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.tools.exceptions import OracleLimitError, PermutationError
from src.tools.oracle import (
    brute_avoiders,
    brute_count,
    brute_count_by_inversions,
    brute_sequence,
    iter_avoiders,
)
from src.tools.patterns import avoids_all, parse_pattern_set


class TestAvoiders:

    def test_prefix_restricted(self):
        avoiders = brute_avoiders(parse_pattern_set("1-2-3"), 5, prefix_word=(5, 3))
        assert avoiders == [(5, 3, 1, 4, 2), (5, 3, 2, 1, 4), (5, 3, 2, 4, 1), (5, 3, 4, 1, 2), (5, 3, 4, 2, 1)]
        print("  ✅ 5 avoiders start with 53")

    def test_bell_count(self):
        assert brute_count(parse_pattern_set("23-1"), 4) == 15

    def test_lexicographic_order(self):
        avoiders = list(iter_avoiders(parse_pattern_set("1-2"), 3))
        assert avoiders == [(3, 2, 1)]
        avoiders = list(iter_avoiders(parse_pattern_set("321"), 4))
        assert avoiders == sorted(avoiders)

    def test_agrees_with_filtering(self):
        patterns = parse_pattern_set("2-41-3, 3-14-2")
        expected = [p for p in itertools.permutations(range(1, 7)) if avoids_all(p, patterns)]
        assert brute_avoiders(patterns, 6) == expected

    def test_zero_length(self):
        assert brute_avoiders(parse_pattern_set("12"), 0) == [()]

    def test_sequence(self):
        assert brute_sequence(parse_pattern_set("12-3"), 6) == [1, 2, 5, 15, 52, 203]


class TestLimits:

    def test_store_limit(self):
        with pytest.raises(OracleLimitError):
            brute_avoiders(parse_pattern_set("1-2"), 9)

    def test_default_limit(self):
        with pytest.raises(OracleLimitError) as exc:
            brute_count(parse_pattern_set("1-2"), 11)
        assert exc.value.context["limit"] == 10
        print(f"  ✅ {exc.value.message}")

    def test_custom_limit(self):
        with pytest.raises(OracleLimitError):
            brute_count(parse_pattern_set("1-2"), 5, limit=4)

    def test_negative_n(self):
        with pytest.raises(OracleLimitError):
            brute_count(parse_pattern_set("1-2"), -1)

    @pytest.mark.parametrize("prefix", [(1, 1), (0,), (6,)])
    def test_bad_prefix(self, prefix):
        with pytest.raises(PermutationError):
            brute_count(parse_pattern_set("1-2"), 5, prefix_word=prefix)


class TestInversionCounts:

    def test_1_32_row(self):
        assert brute_count_by_inversions(parse_pattern_set("1-32"), 4).to_list() == [1, 1, 2, 4, 3, 3, 1]

    def test_total(self):
        assert brute_count_by_inversions(parse_pattern_set("1-32"), 5).at_one() == 52

    def test_prefix_restricted(self):
        poly = brute_count_by_inversions(parse_pattern_set("1-2-3"), 5, prefix_word=(5, 3))
        assert poly.at_one() == 5
