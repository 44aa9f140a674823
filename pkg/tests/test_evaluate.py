"""
=============================================================================
TEST 6: Scheme Evaluation - Simulation
=============================================================================
Tests the counting recurrence (spacing-keyed and word-keyed), the
inversion-refined q-counts, and the published sequences the schemes must
reproduce.

Run:  python -m pytest tests/test_evaluate.py -v
      python -m pytest tests/test_evaluate.py -v --slow
=============================================================================
"""
import itertools
import os
import sys
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.graph import discover, discover_with_symmetry
from src.tools.evaluate import (
    QPolynomial,
    SchemeEvaluator,
    count,
    count_by_inversions,
    inversion_increment,
    merge_spacing,
    sequence,
)
from src.tools.exceptions import SchemeError
from src.tools.oracle import brute_count_by_inversions, brute_sequence
from src.tools.patterns import VincularPattern, parse_pattern_set
from src.tools.scheme import DiscoveryParams, Scheme, scheme_from_triples

BELL = [1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]

KNOWN_SEQUENCES = {
    "123-4": [1, 2, 6, 23, 108, 598, 3815, 27532, 221708],
    "132-4": [1, 2, 6, 23, 107, 585, 3671, 25986, 204738, 1776327],
    "124-3": [1, 2, 6, 23, 107, 584, 3660, 25910, 204564, 1782520],
    "1-24-3": [1, 2, 6, 23, 104, 532, 3004, 18426, 121393, 851810],
    "12-3-4": [1, 2, 6, 23, 105, 550, 3228, 20878, 146994, 1116000],
    "1-23-4": [1, 2, 6, 23, 105, 549, 3207, 20577, 143239, 1071704],
    "143-2": [1, 2, 6, 23, 107, 582, 3622, 25369, 197523, 1692535],
    "12-34": [1, 2, 6, 23, 107, 585, 3669, 25932, 203768, 1761109],
    "214-3": [1, 2, 6, 23, 107, 583, 3637, 25548, 199506, 1714383],
}

INVERSION_ROWS_1_32 = {
    4: [1, 1, 2, 4, 3, 3, 1],
    5: [1, 1, 2, 4, 7, 8, 9, 9, 6, 4, 1],
}
INVERSION_LIMITS_1_32 = [1, 1, 2, 4, 7, 13, 22, 38, 63, 105]


@pytest.fixture(scope="module")
def bell_scheme():
    return discover(parse_pattern_set("23-1"))


@pytest.fixture(scope="module")
def scheme_1_32():
    outcome, _ = discover_with_symmetry(parse_pattern_set("1-32"))
    assert isinstance(outcome, Scheme)
    return outcome


class TestQPolynomial:

    def test_trailing_zeros_dropped(self):
        assert QPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
        assert QPolynomial().degree == -1

    def test_arithmetic(self):
        poly = QPolynomial((1, 1)) + QPolynomial.monomial(3)
        assert poly.to_list() == [1, 1, 0, 1]
        assert poly.shift(2).to_list() == [0, 0, 1, 1, 0, 1]
        assert poly.at_one() == 3
        assert poly.coefficient(7) == 0

    def test_reflected(self):
        assert QPolynomial((1, 2)).reflected(3).to_list() == [0, 0, 2, 1]

    def test_str(self):
        assert str(QPolynomial((1, 0, 2))) == "1 + 2q^2"
        assert str(QPolynomial()) == "0"


class TestHelpers:

    def test_merge_spacing(self):
        assert merge_spacing((2, 1, 3), (1, 2), {1}) == (3, 3)
        assert merge_spacing((2, 1, 3), (2, 1), {1}) == (2, 4)
        assert merge_spacing((1, 1, 1, 1), (1, 3, 2), {1, 2}) == (2, 2)

    def test_inversion_increment(self):
        assert inversion_increment((3, 1), 4, {1}) == 2
        print("  ✅ inv increment of deleting 3 from 31.. in S_4 is 2")

    def test_increment_agrees_with_permutations(self):
        word, n, positions = (4, 1, 3), 6, {1, 3}
        for rest in itertools.permutations(sorted(set(range(1, n + 1)) - set(word))):
            perm = word + rest
            kept = [x for i, x in enumerate(perm, start=1) if i not in positions]
            shrunk = tuple(sorted(kept).index(x) + 1 for x in kept)
            inv = lambda w: sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
            assert inv(perm) - inv(shrunk) == inversion_increment(word, n, positions)


class TestCounting:

    def test_bell_numbers(self, bell_scheme):
        assert SchemeEvaluator(bell_scheme).sequence(10).values == BELL
        print(f"  ✅ 23-1: {BELL}")

    def test_module_functions(self, bell_scheme):
        assert count(bell_scheme, 5) == 52
        assert sequence(bell_scheme, 3)[3] == 5
        assert count_by_inversions(bell_scheme, 3).at_one() == 5

    def test_empty_permutation(self, bell_scheme):
        assert SchemeEvaluator(bell_scheme).count(0) == 1

    def test_word_mode_agrees(self, bell_scheme):
        spacing = SchemeEvaluator(bell_scheme)
        word = SchemeEvaluator(bell_scheme, state_key="word")
        for n in range(1, 8):
            assert spacing.count(n) == word.count(n)
            assert spacing.count_by_inversions(n) == word.count_by_inversions(n)

    @pytest.mark.parametrize("text", ["1-32", "23-1", "1-23-4", "123", "1-2-3"])
    def test_spacing_state_is_sufficient(self, text):
        outcome, _ = discover_with_symmetry(parse_pattern_set(text))
        assert isinstance(outcome, Scheme)
        spacing = SchemeEvaluator(outcome)
        word = SchemeEvaluator(outcome, state_key="word")
        for n in range(1, 9):
            assert spacing.count(n) == word.count(n), (text, n)
        print(f"  ✅ {text}: spacing and word states agree up to n=8")

    def test_decreasing_only(self):
        scheme = discover(parse_pattern_set("1-2"))
        assert SchemeEvaluator(scheme).sequence(6).values == [1] * 6

    def test_sequence_result(self, bell_scheme):
        result = SchemeEvaluator(bell_scheme).sequence(4)
        assert result.n_max == 4
        assert result.to_dict() == {"patterns": ["23-1"], "values": [1, 2, 5, 15]}
        with pytest.raises(IndexError):
            result[5]

    def test_invalid_scheme_rejected(self):
        broken = scheme_from_triples(parse_pattern_set("23-1"), 2, [((), [], []), ((1,), [], [])])
        with pytest.raises(SchemeError):
            SchemeEvaluator(broken)

    def test_unknown_state_key(self, bell_scheme):
        with pytest.raises(SchemeError):
            SchemeEvaluator(bell_scheme, state_key="vector")

    def test_negative_n(self, bell_scheme):
        with pytest.raises(SchemeError):
            SchemeEvaluator(bell_scheme).count(-1)

    def test_every_length_3_pattern_matches_oracle(self):
        checked = 0
        for sigma in itertools.permutations(range(1, 4)):
            for size in range(3):
                for adjacencies in itertools.combinations((1, 2), size):
                    pattern = VincularPattern(sigma, frozenset(adjacencies))
                    outcome, _ = discover_with_symmetry([pattern])
                    assert isinstance(outcome, Scheme), str(pattern)
                    assert SchemeEvaluator(outcome).sequence(7).values == brute_sequence([pattern], 7), str(pattern)
                    checked += 1
        assert checked == 24
        print("  ✅ all 24 patterns of length 3 agree with brute force up to n=7")


class TestInversions:

    @pytest.mark.parametrize("n", [4, 5])
    def test_table_rows_for_1_32(self, scheme_1_32, n):
        assert SchemeEvaluator(scheme_1_32).count_by_inversions(n).to_list() == INVERSION_ROWS_1_32[n]

    def test_oracle_agreement(self, scheme_1_32):
        evaluator = SchemeEvaluator(scheme_1_32)
        for n in range(1, 7):
            assert evaluator.count_by_inversions(n) == brute_count_by_inversions(parse_pattern_set("1-32"), n)

    def test_coefficients_stabilise(self, scheme_1_32):
        evaluator = SchemeEvaluator(scheme_1_32)
        row = evaluator.count_by_inversions(7)
        assert [row.coefficient(k) for k in range(7)] == INVERSION_LIMITS_1_32[:7]
        for k in range(5):
            assert evaluator.count_by_inversions(k + 1).coefficient(k) == row.coefficient(k)
        print(f"  ✅ limits {INVERSION_LIMITS_1_32[:7]}")

    def test_reverse_variant_is_reflected(self):
        patterns = parse_pattern_set("2-3-1")
        outcome, variant = discover_with_symmetry(patterns, DiscoveryParams(3, 2))
        assert variant == "reverse"
        assert outcome.variant == "reverse"
        evaluator = SchemeEvaluator(outcome)
        for n in range(1, 7):
            assert evaluator.count_by_inversions(n) == brute_count_by_inversions(patterns, n)

    def test_triangle(self, scheme_1_32):
        rows = SchemeEvaluator(scheme_1_32).triangle(3)
        assert [sum(r) for r in rows] == [1, 2, 5]

    @pytest.mark.slow
    @pytest.mark.parametrize("text", ["1-32", "2-3-1", "124-3", "1-23-4"])
    def test_oracle_agreement_up_to_eight(self, text):
        patterns = parse_pattern_set(text)
        outcome, _ = discover_with_symmetry(patterns)
        assert isinstance(outcome, Scheme)
        evaluator = SchemeEvaluator(outcome)
        for n in range(1, 9):
            assert evaluator.count_by_inversions(n) == brute_count_by_inversions(patterns, n), (text, n)

    @pytest.mark.slow
    def test_stagnation_up_to_ten(self, scheme_1_32):
        evaluator = SchemeEvaluator(scheme_1_32)
        for k in range(7):
            settled = evaluator.count_by_inversions(k + 1).coefficient(k)
            for n in range(k + 1, 11):
                assert evaluator.count_by_inversions(n).coefficient(k) == settled, (n, k)

    @pytest.mark.slow
    def test_limits_up_to_nine(self, scheme_1_32):
        row = SchemeEvaluator(scheme_1_32).count_by_inversions(10)
        assert [row.coefficient(k) for k in range(10)] == INVERSION_LIMITS_1_32


class TestPublishedSequences:

    @pytest.mark.slow
    @pytest.mark.parametrize("text", sorted(KNOWN_SEQUENCES))
    def test_published_sequences(self, text):
        outcome, _ = discover_with_symmetry(parse_pattern_set(text))
        assert isinstance(outcome, Scheme)
        expected = KNOWN_SEQUENCES[text]
        assert SchemeEvaluator(outcome).sequence(len(expected)).values == expected
        print(f"  ✅ {text}: {expected}")

    @pytest.mark.slow
    @pytest.mark.parametrize("text", ["132-4", "124-3"])
    def test_oracle_for_remaining_rows(self, text):
        outcome, _ = discover_with_symmetry(parse_pattern_set(text))
        assert isinstance(outcome, Scheme)
        assert SchemeEvaluator(outcome).sequence(8).values == brute_sequence(outcome.patterns, 8)

    @pytest.mark.slow
    def test_five_letter_classical(self):
        outcome = discover(parse_pattern_set("1-2-3-4-5"), DiscoveryParams(7, 1))
        assert isinstance(outcome, Scheme)
        assert SchemeEvaluator(outcome).sequence(8).values == brute_sequence(outcome.patterns, 8)
