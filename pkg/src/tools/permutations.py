"""
Permutations and words.

Positions and letters are 1-indexed throughout: a permutation of length n is
a tuple holding each of 1..n once, and position i is ``perm[i - 1]``.

Features:
- Reduction of arbitrary words (repeated letters allowed)
- Deletion maps on permutations and distinct-letter words
- Children of a prefix pattern
- Inversion number, reverse and complement
"""

from typing import Iterable, List, Sequence, Tuple

from .exceptions import PermutationError

Perm = Tuple[int, ...]

EMPTY: Perm = ()


def reduce_word(word: Sequence[int]) -> Tuple[int, ...]:
    """Relabel a word so that its i-th smallest letter becomes i.

    Equal letters map to equal letters, so a word with repeats reduces to a
    word rather than a permutation.

    Example:
        >>> reduce_word((8, 3, 9, 1, 8, 3))
        (3, 2, 4, 1, 3, 2)
    """
    ranks = {letter: rank for rank, letter in enumerate(sorted(set(word)), start=1)}
    return tuple(ranks[letter] for letter in word)


def is_permutation(word: Sequence[int]) -> bool:
    """Return True when ``word`` holds each of 1..len(word) exactly once."""
    return sorted(word) == list(range(1, len(word) + 1))


def order_isomorphic(first: Sequence[int], second: Sequence[int]) -> bool:
    """Return True when two words have the same relative order."""
    return len(first) == len(second) and reduce_word(first) == reduce_word(second)


def _check_positions(word: Sequence[int], positions: Iterable[int]) -> List[int]:
    chosen = sorted(set(positions))
    if any(r < 1 or r > len(word) for r in chosen):
        raise PermutationError("Deletion index out of range", word=word, positions=chosen)
    return chosen


def delete(word: Sequence[int], positions: Iterable[int]) -> Tuple[int, ...]:
    """Apply the deletion map d_R.

    Removes the letters at the given 1-indexed positions and lowers every
    surviving letter by the number of removed letters below it. On a
    permutation this is "remove, then reduce"; on a distinct-letter word the
    ambient size drops by |R|.

    Args:
        word: Permutation or distinct-letter word
        positions: The index set R

    Returns:
        The renumbered word

    Raises:
        PermutationError: If an index lies outside 1..len(word)

    Example:
        >>> delete((6, 3, 4, 8), {1, 3})
        (3, 6)
    """
    chosen = _check_positions(word, positions)
    removed = [word[r - 1] for r in chosen]
    kept = [letter for i, letter in enumerate(word, start=1) if i not in chosen]
    return tuple(letter - sum(1 for gone in removed if gone < letter) for letter in kept)


def children(prefix: Sequence[int]) -> List[Perm]:
    """All permutations of length |p|+1 whose first |p| letters reduce to p.

    Children are listed by the value of the appended last letter, smallest
    first.

    Example:
        >>> children((1,))
        [(2, 1), (1, 2)]
    """
    k = len(prefix)
    result = []
    for last in range(1, k + 2):
        lifted = tuple(x + 1 if x >= last else x for x in prefix)
        result.append(lifted + (last,))
    return result


def inversions(word: Sequence[int]) -> int:
    """Number of pairs i < j with word[i] > word[j]."""
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


def reverse_perm(word: Sequence[int]) -> Tuple[int, ...]:
    return tuple(reversed(word))


def complement_perm(word: Sequence[int]) -> Tuple[int, ...]:
    n = len(word)
    return tuple(n + 1 - x for x in word)


def format_word(word: Sequence[int]) -> str:
    """Render a word compactly ("312"), or comma separated when letters exceed 9."""
    if not word:
        return "ε"
    if max(word) <= 9:
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)
