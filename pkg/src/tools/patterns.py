"""
Vincular patterns: parsing, formatting, symmetries and containment.

A vincular pattern is a permutation sigma together with an adjacency set
X ⊆ {1..k-1}; a copy in a host word must place letters x and x+1 of the copy
at neighbouring host positions for every x in X. Pattern strings write the
pattern as dash-separated blocks, so "124-3" is (1243, {1, 2}).

Features:
- String grammar with strict validation
- Reverse and complement on patterns and pattern sets
- Backtracking containment that also serves scenario words (NULL = 0)
- Head-in-prefix and ends-at-position restricted searches
- Implication between patterns, for spotting redundant sets
"""

import itertools
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .exceptions import PatternError
from .permutations import is_permutation, reduce_word

MAX_PATTERN_LENGTH = 9

# Scenario words use 0 for the null symbol; it never takes part in a copy.
NULL = 0


@dataclass(frozen=True)
class VincularPattern:
    """A permutation with an adjacency set, the object being avoided.

    Attributes:
        sigma: The underlying permutation (1-indexed letters)
        adjacencies: Positions x whose copy letters x and x+1 must be adjacent
    """

    sigma: Tuple[int, ...]
    adjacencies: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "adjacencies", frozenset(self.adjacencies))
        k = len(self.sigma)
        if k < 1 or k > MAX_PATTERN_LENGTH:
            raise PatternError(f"Pattern length must be between 1 and {MAX_PATTERN_LENGTH}, got {k}")
        if not is_permutation(self.sigma):
            raise PatternError(f"Pattern letters {list(self.sigma)} do not form 1..{k}")
        if any(x < 1 or x > k - 1 for x in self.adjacencies):
            raise PatternError(f"Adjacencies {sorted(self.adjacencies)} must lie in 1..{k - 1}")

    @property
    def length(self) -> int:
        return len(self.sigma)

    @property
    def is_classical(self) -> bool:
        return not self.adjacencies

    @property
    def is_consecutive(self) -> bool:
        return self.adjacencies == frozenset(range(1, self.length))

    @property
    def head_length(self) -> int:
        """Number of letters in the head: max(X) + 1, or 1 for classical patterns."""
        return max(self.adjacencies, default=0) + 1

    def head(self) -> "VincularPattern":
        """The initial segment through the last adjacency, reduced.

        Example:
            >>> str(parse_pattern("2-41-6-5-3").head())
            '2-31'
        """
        return VincularPattern(reduce_word(self.sigma[:self.head_length]), self.adjacencies)

    def blocks(self) -> List[Tuple[int, ...]]:
        result = [[self.sigma[0]]]
        for x in range(1, self.length):
            if x in self.adjacencies:
                result[-1].append(self.sigma[x])
            else:
                result.append([self.sigma[x]])
        return [tuple(block) for block in result]

    def block_type(self) -> Tuple[int, ...]:
        """Block lengths, taken up to reversal (the larger reading wins).

        Example:
            >>> parse_pattern("1-23").block_type()
            (2, 1)
        """
        lengths = tuple(len(block) for block in self.blocks())
        return max(lengths, tuple(reversed(lengths)))

    def reverse(self) -> "VincularPattern":
        k = self.length
        return VincularPattern(tuple(reversed(self.sigma)), frozenset(k - x for x in self.adjacencies))

    def complement(self) -> "VincularPattern":
        k = self.length
        return VincularPattern(tuple(k + 1 - s for s in self.sigma), self.adjacencies)

    def to_dict(self) -> dict:
        return {"sigma": list(self.sigma), "adjacencies": sorted(self.adjacencies), "text": str(self)}

    def __str__(self) -> str:
        return format_pattern(self)


PatternSet = Tuple[VincularPattern, ...]


def format_pattern(pattern: VincularPattern) -> str:
    """Render a pattern in the dash grammar, e.g. "1-24-3"."""
    return "-".join("".join(str(letter) for letter in block) for block in pattern.blocks())


def parse_pattern(text: str) -> VincularPattern:
    """Parse a single pattern string.

    Args:
        text: A pattern such as "124-3"; ASCII whitespace is ignored

    Returns:
        The parsed VincularPattern

    Raises:
        PatternError: On empty blocks, non-digit characters, repeated letters,
            letters not forming 1..k, or more than 9 letters

    Example:
        >>> parse_pattern("12-34").adjacencies
        frozenset({1, 3})
    """
    cleaned = "".join(text.split())
    if not cleaned:
        raise PatternError("Empty pattern", pattern_text=text)
    letters: List[int] = []
    adjacencies = set()
    for block in cleaned.split("-"):
        if not block:
            raise PatternError(f"Empty block in pattern '{cleaned}'", pattern_text=text)
        for offset, char in enumerate(block):
            if char not in "123456789":
                raise PatternError(f"Unexpected character '{char}' in pattern '{cleaned}'", pattern_text=text)
            letters.append(int(char))
            if offset < len(block) - 1:
                adjacencies.add(len(letters))
    if len(letters) > MAX_PATTERN_LENGTH:
        raise PatternError(f"Pattern '{cleaned}' is longer than {MAX_PATTERN_LENGTH}", pattern_text=text)
    if len(set(letters)) != len(letters):
        raise PatternError(f"Repeated letter in pattern '{cleaned}'", pattern_text=text)
    if not is_permutation(letters):
        raise PatternError(f"Letters of '{cleaned}' do not form 1..{len(letters)}", pattern_text=text)
    return VincularPattern(tuple(letters), frozenset(adjacencies))


def make_pattern_set(patterns: Iterable[VincularPattern]) -> PatternSet:
    """Deduplicate and order patterns by their string form."""
    unique = {str(p): p for p in patterns}
    return tuple(unique[key] for key in sorted(unique))


def parse_pattern_set(text: str) -> PatternSet:
    """Parse a comma-separated pattern set such as "23-1, 3-21".

    Raises:
        PatternError: If the set is empty or any member is malformed
    """
    if not text or not text.strip():
        raise PatternError("Empty pattern set", pattern_text=text)
    return make_pattern_set(parse_pattern(piece) for piece in text.split(","))


def format_pattern_set(patterns: Iterable[VincularPattern]) -> str:
    return ", ".join(str(p) for p in make_pattern_set(patterns))


def reverse_set(patterns: Iterable[VincularPattern]) -> PatternSet:
    return make_pattern_set(p.reverse() for p in patterns)


def complement_set(patterns: Iterable[VincularPattern]) -> PatternSet:
    return make_pattern_set(p.complement() for p in patterns)


def find_copy(symbols: Sequence[int], pattern: VincularPattern,
              head_within: Optional[int] = None,
              end_at: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """Search a word for a copy of a vincular pattern.

    Symbols equal to NULL are skipped and never match; an adjacency is
    satisfied only by neighbouring symbol indices, so a NULL between two
    letters breaks it.

    Args:
        symbols: The host word (0 marks a null symbol)
        pattern: The pattern to look for
        head_within: When set, the head letters must sit in the first
            ``head_within`` positions
        end_at: When set, the last copy letter must sit at this 1-indexed position

    Returns:
        1-indexed positions of the first copy found, or None
    """
    sigma = pattern.sigma
    k = len(sigma)
    adjacencies = pattern.adjacencies
    head_len = pattern.head_length
    n = len(symbols)
    last = end_at - 1 if end_at is not None else None
    chosen: List[int] = []

    def fits(j: int, value: int) -> bool:
        for m in range(j):
            if (symbols[chosen[m]] < value) != (sigma[m] < sigma[j]):
                return False
        return True

    def extend(j: int, start: int) -> bool:
        if j == k:
            return True
        if j > 0 and j in adjacencies:
            candidates: Iterable[int] = (chosen[-1] + 1,)
        else:
            candidates = range(start, n)
        for i in candidates:
            if i >= n or n - i < k - j:
                break
            if head_within is not None and j < head_len and i >= head_within:
                break
            if last is not None:
                if i > last:
                    break
                if j == k - 1 and i != last:
                    continue
            value = symbols[i]
            if value == NULL or not fits(j, value):
                continue
            chosen.append(i)
            if extend(j + 1, i + 1):
                return True
            chosen.pop()
        return False

    if extend(0, 0):
        return tuple(i + 1 for i in chosen)
    return None


def contains(word: Sequence[int], pattern: VincularPattern) -> bool:
    """True iff ``word`` holds a copy of ``pattern``.

    Example:
        >>> contains((1, 6, 2, 5, 3, 4), parse_pattern("1-2-43"))
        True
    """
    return find_copy(word, pattern) is not None


def avoids_all(word: Sequence[int], patterns: Iterable[VincularPattern]) -> bool:
    return not any(contains(word, p) for p in patterns)


def contains_any(word: Sequence[int], patterns: Iterable[VincularPattern]) -> bool:
    return any(contains(word, p) for p in patterns)


def contains_with_head_in_prefix(word: Sequence[int], k: int, pattern: VincularPattern) -> bool:
    """True iff some copy of ``pattern`` has its head inside the first k letters."""
    return find_copy(word, pattern, head_within=k) is not None


def pattern_word(pattern: VincularPattern) -> Tuple[int, ...]:
    """The letters of ``pattern`` with a NULL wherever a dash sits.

    Example:
        >>> pattern_word(parse_pattern("12-3"))
        (1, 2, 0, 3)
    """
    word: List[int] = []
    for j, letter in enumerate(pattern.sigma):
        if j > 0 and j not in pattern.adjacencies:
            word.append(NULL)
        word.append(letter)
    return tuple(word)


def implies(host: VincularPattern, pattern: VincularPattern) -> bool:
    """True iff every copy of ``host`` already holds a copy of ``pattern``.

    Decided on the shortest host instance: a copy of ``pattern`` must fit
    inside ``host`` without crossing any of its dashes.
    """
    return find_copy(pattern_word(host), pattern) is not None


def is_redundant_set(patterns: Iterable[VincularPattern]) -> bool:
    """True iff one member of the set implies another."""
    members = make_pattern_set(patterns)
    return any(implies(a, b) for a, b in itertools.permutations(members, 2))
