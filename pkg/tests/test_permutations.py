"""
=============================================================================
TEST 1: Permutations - Simulation
=============================================================================
Tests reduction, deletion maps, children of a prefix, inversions and the
reverse/complement symmetries, with property checks over random
permutations.

Run:  python -m pytest tests/test_permutations.py -v
=============================================================================
"""
import os
import sys
import pytest
from hypothesis import given, strategies as st

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.tools.exceptions import PermutationError
from src.tools.permutations import (
    children,
    complement_perm,
    delete,
    format_word,
    inversions,
    is_permutation,
    order_isomorphic,
    reduce_word,
    reverse_perm,
)

perms = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(tuple)


class TestReduceWord:

    def test_distinct_letters(self):
        assert reduce_word((25, 3, 9)) == (3, 1, 2)
        print("  ✅ 25,3,9 → 312")

    def test_repeated_letters_stay_equal(self):
        assert reduce_word((8, 3, 9, 1, 8, 3)) == (3, 2, 4, 1, 3, 2)
        print("  ✅ repeats reduce to a word")

    def test_empty(self):
        assert reduce_word(()) == ()

    @given(perms)
    def test_permutations_are_fixed(self, perm):
        assert reduce_word(perm) == perm


class TestIsPermutation:

    @pytest.mark.parametrize("word,expected", [
        ((), True),
        ((1,), True),
        ((2, 3, 1), True),
        ((1, 3), False),
        ((1, 1), False),
    ])
    def test_cases(self, word, expected):
        assert is_permutation(word) is expected

    def test_order_isomorphic(self):
        assert order_isomorphic((5, 9, 2), (2, 3, 1))
        assert not order_isomorphic((5, 9, 2), (1, 2, 3))
        assert not order_isomorphic((1, 2), (1, 2, 3))
        print("  ✅ order isomorphism")


class TestDelete:

    def test_word_deletion_renumbers(self):
        assert delete((6, 3, 4, 8), {1, 3}) == (3, 6)
        print("  ✅ d_{1,3}(6348) = 36")

    def test_permutation_deletion(self):
        assert delete((1, 3, 2), {2}) == (1, 2)
        assert delete((2, 1), {1}) == (1,)
        assert delete((1,), {1}) == ()

    def test_empty_set_is_identity(self):
        assert delete((3, 1, 2), set()) == (3, 1, 2)

    def test_out_of_range_raises(self):
        with pytest.raises(PermutationError) as exc:
            delete((1, 2), {3})
        assert exc.value.context["positions"] == [3]
        print(f"  ✅ {exc.value.message}")

    def test_zero_index_raises(self):
        with pytest.raises(PermutationError):
            delete((1, 2), {0})

    @given(perms, st.data())
    def test_deletion_keeps_a_permutation(self, perm, data):
        positions = data.draw(st.sets(st.integers(min_value=1, max_value=len(perm))))
        result = delete(perm, positions)
        assert len(result) == len(perm) - len(positions)
        assert is_permutation(result)


class TestChildren:

    def test_children_of_one(self):
        assert children((1,)) == [(2, 1), (1, 2)]
        print("  ✅ children(1) = [21, 12]")

    def test_children_of_empty(self):
        assert children(()) == [(1,)]

    @given(perms)
    def test_children_reduce_back(self, perm):
        kids = children(perm)
        assert len(kids) == len(perm) + 1
        assert len(set(kids)) == len(kids)
        for child in kids:
            assert is_permutation(child)
            assert reduce_word(child[:-1]) == perm


class TestSymmetries:

    def test_inversions(self):
        assert inversions((3, 1, 2)) == 2
        assert inversions((4, 3, 2, 1)) == 6
        assert inversions(()) == 0

    @given(perms)
    def test_reverse_and_complement_are_involutions(self, perm):
        assert reverse_perm(reverse_perm(perm)) == perm
        assert complement_perm(complement_perm(perm)) == perm

    @given(perms)
    def test_reverse_reflects_inversions(self, perm):
        n = len(perm)
        assert inversions(reverse_perm(perm)) == n * (n - 1) // 2 - inversions(perm)

    def test_format_word(self):
        assert format_word(()) == "ε"
        assert format_word((3, 1, 2)) == "312"
        assert format_word((10, 1)) == "10,1"
