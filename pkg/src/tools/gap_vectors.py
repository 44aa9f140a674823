"""
Spacing vectors, gap-vector criteria and minimal gap bases.

For a prefix word w of length k drawn from 1..n, the spacing vector lists
the k+1 vertical gaps around the sorted prefix letters. A gap vector v for a
prefix pattern p certifies that no avoider begins with a word reducing to p
whose spacing is at least v componentwise; the minimal such vectors form the
gap basis.

Features:
- Spacing vectors with sentinels 0 and n+1
- The set A(p, v) of smallest witnesses for a candidate vector
- Head-in-prefix gap test
- Basis search by increasing norm with domination pruning
"""

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Sequence, Tuple

from .exceptions import PermutationError
from .patterns import VincularPattern, contains_any, find_copy
from .permutations import Perm

GapVector = Tuple[int, ...]


def spacing_vector(n: int, word: Sequence[int]) -> GapVector:
    """Compute the spacing vector g(n, w).

    Args:
        n: Ambient size
        word: Distinct letters from 1..n

    Returns:
        Component i is c_i - c_{i-1} - 1 for the sorted letters c with
        c_0 = 0 and c_{k+1} = n + 1; the components sum to n - k

    Raises:
        PermutationError: If a letter repeats or exceeds n

    Example:
        >>> spacing_vector(5, (5, 3))
        (2, 1, 0)
    """
    if len(set(word)) != len(word):
        raise PermutationError("Spacing vector needs distinct letters", word=word)
    if any(letter < 1 or letter > n for letter in word):
        raise PermutationError(f"Letters must lie in 1..{n}", word=word)
    cuts = [0] + sorted(word) + [n + 1]
    return tuple(cuts[i] - cuts[i - 1] - 1 for i in range(1, len(cuts)))


def dominates(upper: Sequence[int], lower: Sequence[int]) -> bool:
    """Componentwise upper >= lower."""
    return all(a >= b for a, b in zip(upper, lower))


def _basis_order(vector: GapVector):
    return (sum(vector), tuple(-x for x in vector))


def minimal_antichain(vectors: Iterable[Sequence[int]]) -> Tuple[GapVector, ...]:
    """Keep only the vectors that dominate no other vector of the collection."""
    unique = {tuple(v) for v in vectors}
    minimal = [v for v in unique if not any(u != v and dominates(v, u) for u in unique)]
    return tuple(sorted(minimal, key=_basis_order))


@dataclass(frozen=True)
class GapBasis:
    """A finite set of gap vectors of one common length.

    Attributes:
        vectors: The basis vectors, each of length |prefix| + 1
        max_norm: The norm bound M the basis was searched under
    """
    vectors: Tuple[GapVector, ...] = field(default_factory=tuple)
    max_norm: int = 0

    def __post_init__(self):
        vectors = tuple(tuple(int(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vectors)
        if len({len(v) for v in vectors}) > 1:
            raise PermutationError("Gap basis vectors must share one length")
        if any(x < 0 for v in vectors for x in v):
            raise PermutationError("Gap vector components must be non-negative")

    @property
    def has_zero(self) -> bool:
        return any(not any(v) for v in self.vectors)

    @property
    def length(self):
        return len(self.vectors[0]) if self.vectors else None

    def is_satisfied_by(self, spacing: Sequence[int]) -> bool:
        """True iff ``spacing`` dominates some basis vector."""
        return any(dominates(spacing, v) for v in self.vectors)

    def is_antichain(self) -> bool:
        return len(minimal_antichain(self.vectors)) == len(set(self.vectors))

    def reversed(self) -> "GapBasis":
        return GapBasis(tuple(tuple(reversed(v)) for v in self.vectors), self.max_norm)

    def minimized(self) -> "GapBasis":
        return GapBasis(minimal_antichain(self.vectors), self.max_norm)

    def to_list(self) -> List[List[int]]:
        return [list(v) for v in self.vectors]

    def __len__(self) -> int:
        return len(self.vectors)


def satisfies_criterion(n: int, word: Sequence[int], basis: GapBasis) -> bool:
    """True iff the spacing of ``word`` in 1..n dominates some basis vector.

    Raises:
        PermutationError: If the basis length is not |word| + 1
    """
    if basis.vectors and basis.length != len(word) + 1:
        raise PermutationError(
            f"Gap basis of length {basis.length} does not fit a word of length {len(word)}",
            word=word,
        )
    return basis.is_satisfied_by(spacing_vector(n, word))


def _iter_A(prefix: Sequence[int], vector: Sequence[int]) -> Iterator[Perm]:
    if len(vector) != len(prefix) + 1:
        raise PermutationError(f"Vector {list(vector)} does not fit prefix of length {len(prefix)}")
    cuts = [0]
    for gap in vector[:-1]:
        cuts.append(cuts[-1] + gap + 1)
    head = tuple(cuts[letter] for letter in prefix)
    n = len(prefix) + sum(vector)
    rest = sorted(set(range(1, n + 1)) - set(head))
    for tail in itertools.permutations(rest):
        yield head + tail


def build_A(prefix: Sequence[int], vector: Sequence[int]) -> List[Perm]:
    """All permutations of length |p| + |v| with prefix pattern p and spacing v.

    Example:
        >>> build_A((1, 2), (2, 0, 0))
        [(3, 4, 1, 2), (3, 4, 2, 1)]
    """
    return list(_iter_A(prefix, vector))


def is_gap_vector(prefix: Sequence[int], vector: Sequence[int],
                  patterns: Iterable[VincularPattern],
                  basis_so_far: Iterable[Sequence[int]] = ()) -> bool:
    """Head-in-prefix gap test.

    ``vector`` passes when every member of A(p, v) has a copy of some pattern
    whose head lies inside the first |p| letters. Vectors dominating an
    already accepted vector pass without testing.
    """
    if any(dominates(vector, accepted) for accepted in basis_so_far):
        return True
    patterns = tuple(patterns)
    k = len(prefix)
    for perm in _iter_A(prefix, vector):
        if not any(find_copy(perm, p, head_within=k) is not None for p in patterns):
            return False
    return True


def compositions(total: int, parts: int) -> List[GapVector]:
    """Vectors of ``parts`` non-negative entries summing to ``total``, lexicographically descending."""
    if parts == 1:
        return [(total,)]
    result = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            result.append((first,) + rest)
    return result


def gap_basis(prefix: Sequence[int], patterns: Iterable[VincularPattern],
              max_norm: int) -> GapBasis:
    """Minimal gap vectors of norm at most ``max_norm``.

    A prefix that already contains a pattern gets the zero vector alone.

    Example:
        >>> gap_basis((1, 2), parse_pattern_set("23-1"), 2).vectors
        ((1, 0, 0),)
    """
    if max_norm < 0:
        raise PermutationError(f"max_norm must be non-negative, got {max_norm}")
    patterns = tuple(patterns)
    k = len(prefix)
    if contains_any(prefix, patterns):
        return GapBasis(((0,) * (k + 1),), max_norm)
    accepted: List[GapVector] = []
    for norm in range(max_norm + 1):
        for vector in compositions(norm, k + 1):
            if any(dominates(vector, u) for u in accepted):
                continue
            if is_gap_vector(prefix, vector, patterns):
                accepted.append(vector)
    return GapBasis(tuple(accepted), max_norm)
