"""
Scheme evaluation: avoidance counts and their inversion refinement.

A scheme is read as a recurrence over states (prefix pattern, spacing
vector). A state whose spacing meets a gap criterion counts 0; a state whose
prefix has an rd set moves to the shortened prefix with the spacing
components around each deleted letter merged; any other state sums over the
ways of placing the next letter into one of its non-empty gaps. A state with
no free letters counts 1 exactly when its prefix avoids the patterns.

Features:
- Memoised integer counts and whole sequences
- q-refinement by inversion number (QPolynomial)
- Word-keyed states as a fallback that never relies on spacing sufficiency
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .exceptions import SchemeError
from .gap_vectors import spacing_vector
from .patterns import avoids_all
from .permutations import Perm, delete, inversions, reduce_word
from .scheme import Scheme, SchemeTriple, validate

STATE_KEYS = ("spacing", "word")


@dataclass(frozen=True)
class QPolynomial:
    """Polynomial in q with non-negative integer coefficients.

    Attributes:
        coefficients: Entry k is the coefficient of q^k; trailing zeros are dropped
    """
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coefficients = list(int(c) for c in self.coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPolynomial":
        return cls((0,) * exponent + (coefficient,))

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        size = max(len(self.coefficients), len(other.coefficients))
        return QPolynomial(tuple(
            self.coefficient(k) + other.coefficient(k) for k in range(size)
        ))

    def shift(self, exponent: int) -> "QPolynomial":
        """Multiply by q^exponent."""
        if not self.coefficients or exponent == 0:
            return self
        return QPolynomial((0,) * exponent + self.coefficients)

    def coefficient(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def at_one(self) -> int:
        return sum(self.coefficients)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def reflected(self, top: int) -> "QPolynomial":
        """Coefficient k moves to top - k (inversions of reversed permutations)."""
        return QPolynomial(tuple(self.coefficient(top - k) for k in range(top + 1)))

    def to_list(self) -> List[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        terms = [f"{c}q^{k}" if k else str(c) for k, c in enumerate(self.coefficients) if c]
        return " + ".join(terms) if terms else "0"


@dataclass
class SequenceResult:
    """Counts s_1 .. s_{n_max} of one pattern set."""
    patterns: List[str]
    values: List[int] = field(default_factory=list)

    @property
    def n_max(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if n < 1 or n > len(self.values):
            raise IndexError(f"n={n} outside 1..{len(self.values)}")
        return self.values[n - 1]

    def to_dict(self) -> dict:
        return {"patterns": self.patterns, "values": list(self.values)}


Value = Union[int, QPolynomial]


def merge_spacing(spacing: Sequence[int], prefix: Sequence[int],
                  positions: Iterable[int]) -> Tuple[int, ...]:
    """Spacing vector after deleting prefix positions R.

    The letter of value-rank r separates components r and r+1; deleting it
    joins them. Ranks are processed from highest to lowest.
    """
    merged = list(spacing)
    for rank in sorted((prefix[r - 1] for r in positions), reverse=True):
        merged[rank - 1:rank + 1] = [merged[rank - 1] + merged[rank]]
    return tuple(merged)


def inversion_increment(word: Sequence[int], n: int, positions: Iterable[int]) -> int:
    """inv(pi) - inv(d_R(pi)) for every pi in S_n starting with ``word``.

    Counts inversions inside the prefix that involve a deleted position, plus,
    for each deleted letter w_r, the letters below it that are not in the
    prefix (they all come later).

    Example:
        >>> inversion_increment((3, 1), 4, {1})
        2
    """
    chosen = set(positions)
    k = len(word)
    inside = sum(
        1
        for i in range(k)
        for j in range(i + 1, k)
        if (i + 1 in chosen or j + 1 in chosen) and word[i] > word[j]
    )
    outside = sum((word[r - 1] - 1) - sum(1 for x in word if x < word[r - 1]) for r in chosen)
    return inside + outside


def _spacing_increment(prefix: Sequence[int], spacing: Sequence[int], positions: Sequence[int]) -> int:
    chosen = set(positions)
    k = len(prefix)
    inside = sum(
        1
        for i in range(k)
        for j in range(i + 1, k)
        if (i + 1 in chosen or j + 1 in chosen) and prefix[i] > prefix[j]
    )
    outside = sum(sum(spacing[:prefix[r - 1]]) for r in chosen)
    return inside + outside


class SchemeEvaluator:
    """Evaluates one scheme; the memo tables live as long as the evaluator.

    Args:
        scheme: A scheme that passes ``validate``
        state_key: "spacing" (states keyed by prefix and spacing vector) or
            "word" (states keyed by the actual prefix word)

    Raises:
        SchemeError: If the scheme is invalid or the state key unknown

    Example:
        >>> SchemeEvaluator(scheme).sequence(6).values
        [1, 2, 5, 15, 52, 203]
    """

    def __init__(self, scheme: Scheme, state_key: str = "spacing"):
        if state_key not in STATE_KEYS:
            raise SchemeError(f"Unknown state key '{state_key}', expected one of {STATE_KEYS}")
        report = validate(scheme)
        if not report:
            raise SchemeError("Cannot evaluate an invalid scheme: " + "; ".join(report.violations))
        self.scheme = scheme
        self.state_key = state_key
        self._patterns = tuple(scheme.patterns)
        self._counts: Dict[tuple, int] = {}
        self._polys: Dict[tuple, QPolynomial] = {}

    def _triple(self, prefix: Perm) -> SchemeTriple:
        return self.scheme[prefix]

    def _leaf(self, prefix: Perm, weighted: bool) -> Value:
        if not avoids_all(prefix, self._patterns):
            return QPolynomial() if weighted else 0
        return QPolynomial.monomial(inversions(prefix)) if weighted else 1

    def _by_spacing(self, prefix: Perm, spacing: Tuple[int, ...], weighted: bool) -> Value:
        memo = self._polys if weighted else self._counts
        key = (prefix, spacing)
        if key in memo:
            return memo[key]
        triple = self._triple(prefix)
        zero: Value = QPolynomial() if weighted else 0
        if triple.gap_basis.is_satisfied_by(spacing):
            result = zero
        elif not any(spacing):
            result = self._leaf(prefix, weighted)
        elif triple.rd_set:
            target = delete(prefix, triple.rd_set)
            result = self._by_spacing(target, merge_spacing(spacing, prefix, triple.rd_set), weighted)
            if weighted:
                result = result.shift(_spacing_increment(prefix, spacing, triple.rd_set))
        else:
            result = zero
            for gap, size in enumerate(spacing):
                if size == 0:
                    continue
                # the new letter takes value gap+1 among the grown prefix
                child = tuple(x + 1 if x > gap else x for x in prefix) + (gap + 1,)
                for below in range(size):
                    split = spacing[:gap] + (below, size - 1 - below) + spacing[gap + 1:]
                    result = result + self._by_spacing(child, split, weighted)
        memo[key] = result
        return result

    def _by_word(self, n: int, word: Tuple[int, ...], weighted: bool) -> Value:
        memo = self._polys if weighted else self._counts
        key = (n, word)
        if key in memo:
            return memo[key]
        prefix = reduce_word(word)
        triple = self._triple(prefix)
        zero: Value = QPolynomial() if weighted else 0
        if triple.gap_basis.is_satisfied_by(spacing_vector(n, word)):
            result = zero
        elif len(word) == n:
            result = self._leaf(prefix, weighted)
        elif triple.rd_set:
            result = self._by_word(n - len(triple.rd_set), delete(word, triple.rd_set), weighted)
            if weighted:
                result = result.shift(inversion_increment(word, n, triple.rd_set))
        else:
            result = zero
            used = set(word)
            for letter in range(1, n + 1):
                if letter not in used:
                    result = result + self._by_word(n, word + (letter,), weighted)
        memo[key] = result
        return result

    def _evaluate(self, n: int, weighted: bool) -> Value:
        if n < 0:
            raise SchemeError(f"n must be non-negative, got {n}")
        if self.state_key == "word":
            return self._by_word(n, (), weighted)
        return self._by_spacing((), (n,), weighted)

    def count(self, n: int) -> int:
        """s_n for the scheme's patterns."""
        return self._evaluate(n, weighted=False)

    def count_by_inversions(self, n: int) -> QPolynomial:
        """Avoiders of length n counted by inversion number.

        For a scheme found on the reversed pattern set the coefficients are
        reflected, so the result always refers to the requested patterns.
        """
        poly = self._evaluate(n, weighted=True)
        if self.scheme.variant == "reverse":
            poly = poly.reflected(math.comb(n, 2))
        return poly

    def sequence(self, n_max: int) -> SequenceResult:
        if n_max < 0:
            raise SchemeError(f"n_max must be non-negative, got {n_max}")
        values = [self.count(n) for n in range(1, n_max + 1)]
        return SequenceResult([str(p) for p in self.scheme.patterns], values)

    def triangle(self, n_max: int) -> List[List[int]]:
        """Rows n = 1..n_max of inversion coefficients."""
        return [self.count_by_inversions(n).to_list() for n in range(1, n_max + 1)]


def count(scheme: Scheme, n: int) -> int:
    return SchemeEvaluator(scheme).count(n)


def sequence(scheme: Scheme, n_max: int) -> SequenceResult:
    return SchemeEvaluator(scheme).sequence(n_max)


def count_by_inversions(scheme: Scheme, n: int) -> QPolynomial:
    return SchemeEvaluator(scheme).count_by_inversions(n)
