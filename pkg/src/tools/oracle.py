"""
Brute-force avoidance oracle.

Avoiders are generated in lexicographic order by a depth-first search over
letter values. Only copies ending at the newest letter need checking at each
step, since the shorter word already avoided every pattern.
"""

from typing import Iterable, Iterator, List, Optional, Sequence

from .evaluate import QPolynomial
from .exceptions import OracleLimitError, PermutationError
from .patterns import VincularPattern, find_copy
from .permutations import Perm

DEFAULT_ORACLE_LIMIT = 10
STORE_LIMIT = 8


def _check_limit(n: int, limit: Optional[int]) -> None:
    limit = DEFAULT_ORACLE_LIMIT if limit is None else limit
    if n < 0:
        raise OracleLimitError(f"n must be non-negative, got {n}", n=n, limit=limit)
    if n > limit:
        raise OracleLimitError(f"n={n} exceeds the oracle limit {limit}", n=n, limit=limit)


def _walk(patterns: Sequence[VincularPattern], n: int,
          prefix_word: Sequence[int]) -> Iterator[tuple]:
    """Yield (permutation, inversions) for every avoider extending ``prefix_word``."""
    word: List[int] = []
    used = [False] * (n + 2)
    forced = tuple(prefix_word)

    def ends_copy() -> bool:
        position = len(word)
        return any(find_copy(word, p, end_at=position) is not None for p in patterns)

    def step(inv: int) -> Iterator[tuple]:
        depth = len(word)
        if depth == n:
            yield tuple(word), inv
            return
        choices = (forced[depth],) if depth < len(forced) else range(1, n + 1)
        for value in choices:
            if used[value]:
                continue
            added = sum(1 for x in word if x > value)
            word.append(value)
            used[value] = True
            if not ends_copy():
                yield from step(inv + added)
            used[value] = False
            word.pop()

    yield from step(0)


def _check_prefix(n: int, prefix_word: Sequence[int]) -> None:
    if len(set(prefix_word)) != len(prefix_word) or any(x < 1 or x > n for x in prefix_word):
        raise PermutationError(f"Prefix word must hold distinct letters from 1..{n}", word=prefix_word)


def iter_avoiders(patterns: Iterable[VincularPattern], n: int,
                  prefix_word: Sequence[int] = (), limit: Optional[int] = None) -> Iterator[Perm]:
    """Stream the avoiders of length n in lexicographic order.

    Args:
        patterns: The forbidden patterns
        n: Permutation length
        prefix_word: Optional required first letters
        limit: Largest accepted n (defaults to DEFAULT_ORACLE_LIMIT)

    Raises:
        OracleLimitError: If n is negative or above the limit
    """
    _check_limit(n, limit)
    _check_prefix(n, prefix_word)
    for perm, _ in _walk(tuple(patterns), n, prefix_word):
        yield perm


def brute_avoiders(patterns: Iterable[VincularPattern], n: int,
                   prefix_word: Sequence[int] = (), limit: Optional[int] = None) -> List[Perm]:
    """Avoiders of length n as a list (at most length STORE_LIMIT).

    Example:
        >>> brute_avoiders(parse_pattern_set("1-2-3"), 5, prefix_word=(5, 3))
        [(5, 3, 1, 4, 2), (5, 3, 2, 1, 4), (5, 3, 2, 4, 1), (5, 3, 4, 1, 2), (5, 3, 4, 2, 1)]
    """
    _check_limit(n, limit)
    if n > STORE_LIMIT:
        raise OracleLimitError(f"Avoider lists are kept only up to n={STORE_LIMIT}; use brute_count",
                               n=n, limit=STORE_LIMIT)
    return list(iter_avoiders(patterns, n, prefix_word, limit))


def brute_count(patterns: Iterable[VincularPattern], n: int,
                prefix_word: Sequence[int] = (), limit: Optional[int] = None) -> int:
    """|S_n(B)|, optionally restricted to a prefix word."""
    return sum(1 for _ in iter_avoiders(patterns, n, prefix_word, limit))


def brute_count_by_inversions(patterns: Iterable[VincularPattern], n: int,
                              prefix_word: Sequence[int] = (),
                              limit: Optional[int] = None) -> QPolynomial:
    """Avoiders of length n counted by inversion number."""
    _check_limit(n, limit)
    _check_prefix(n, prefix_word)
    counts: List[int] = [0] * (n * (n - 1) // 2 + 1)
    for _, inv in _walk(tuple(patterns), n, prefix_word):
        counts[inv] += 1
    return QPolynomial(tuple(counts))


def brute_sequence(patterns: Iterable[VincularPattern], n_max: int,
                   limit: Optional[int] = None) -> List[int]:
    """Counts for n = 1..n_max."""
    patterns = tuple(patterns)
    return [brute_count(patterns, n, limit=limit) for n in range(1, n_max + 1)]
