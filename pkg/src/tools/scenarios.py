"""
Containment scenarios and reversibly deletable index sets.

A containment scenario for a prefix pattern p is a short word that starts
with a copy of p and then finishes a forbidden copy using as few extra
letters as possible. The null symbol (stored as 0, shown as ◊) marks a spot
where arbitrary letters may sit, so it breaks adjacencies and never takes
part in a copy itself.

An index set R of prefix positions is reversibly deletable when removing
those letters maps the avoiders with a given prefix word bijectively onto the
avoiders with the shortened prefix word. Two scenario tests decide it:

1. deleting R from every scenario of p must leave a forbidden copy;
2. every way of re-inserting R into a scenario of d_R(p) whose prefix does
   not meet a gap criterion of p must already contain a forbidden copy.

Features:
- ScenarioWord value type with ◊ rendering
- Scenario construction from partial matches, filtered and minimal
- Deletion, containment and preimage construction on scenario words
- ScenarioSession caching bases and scenarios for one discovery run
"""

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .exceptions import PermutationError
from .gap_vectors import GapBasis, gap_basis, spacing_vector
from .patterns import NULL, VincularPattern, find_copy
from .permutations import Perm, delete, is_permutation, reduce_word

NULL_GLYPH = "◊"


@dataclass(frozen=True)
class ScenarioWord:
    """A word over letters and the null symbol.

    Attributes:
        symbols: Letters 1..n, with 0 standing for the null symbol
        prefix_len: Number of leading symbols forming the prefix (never null)
    """
    symbols: Tuple[int, ...]
    prefix_len: int

    def __post_init__(self):
        symbols = tuple(int(s) for s in self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if self.prefix_len < 0 or self.prefix_len > len(symbols):
            raise PermutationError(f"Prefix length {self.prefix_len} out of range", word=symbols)
        if NULL in symbols[:self.prefix_len]:
            raise PermutationError("Prefix symbols must not be null", word=symbols)
        if not is_permutation(self.letters):
            raise PermutationError("Scenario letters must form 1..n", word=symbols)

    @property
    def letters(self) -> Tuple[int, ...]:
        return tuple(s for s in self.symbols if s != NULL)

    @property
    def ambient(self) -> int:
        return len(self.letters)

    @property
    def prefix(self) -> Tuple[int, ...]:
        return self.symbols[:self.prefix_len]

    @classmethod
    def from_text(cls, text: str, prefix_len: int) -> "ScenarioWord":
        """Build a word from its compact rendering, e.g. ``from_text("134◊2", 2)``."""
        symbols = []
        for char in text.strip():
            if char in (NULL_GLYPH, "0"):
                symbols.append(NULL)
            elif char.isdigit():
                symbols.append(int(char))
            else:
                raise PermutationError(f"Unexpected character '{char}' in scenario word")
        return cls(tuple(symbols), prefix_len)

    def to_list(self) -> List[int]:
        return list(self.symbols)

    def __str__(self) -> str:
        wide = self.ambient > 9
        parts = [NULL_GLYPH if s == NULL else str(s) for s in self.symbols]
        return ",".join(parts) if wide else "".join(parts)


def _normalize(symbols: Sequence[int]) -> Tuple[int, ...]:
    letters = reduce_word([s for s in symbols if s != NULL])
    it = iter(letters)
    return tuple(NULL if s == NULL else next(it) for s in symbols)


def _rank_keys(keys: Sequence[Optional[tuple]]) -> Tuple[int, ...]:
    order = sorted(k for k in keys if k is not None)
    rank = {key: i for i, key in enumerate(order, start=1)}
    return tuple(NULL if k is None else rank[k] for k in keys)


def partial_matches(prefix: Sequence[int], pattern: VincularPattern) -> List[Tuple[int, ...]]:
    """Index sets of p that realise an initial segment of the pattern.

    Returns every 1-indexed tuple i_1 < ... < i_t (1 <= t <= min(|p|, |sigma|))
    respecting the adjacencies x < t and order-isomorphic to sigma_1..sigma_t,
    ordered by size then lexicographically.

    Example:
        >>> partial_matches((2, 1), parse_pattern("23-1"))
        [(1,), (2,)]
    """
    sigma = pattern.sigma
    result = []
    for t in range(1, min(len(prefix), len(sigma)) + 1):
        target = reduce_word(sigma[:t])
        for match in itertools.combinations(range(1, len(prefix) + 1), t):
            if any(match[x] != match[x - 1] + 1 for x in pattern.adjacencies if x < t):
                continue
            if reduce_word([prefix[i - 1] for i in match]) == target:
                result.append(match)
    return result


def _words_for_match(prefix: Sequence[int], pattern: VincularPattern,
                     match: Tuple[int, ...]) -> Iterator[ScenarioWord]:
    sigma = pattern.sigma
    adjacencies = pattern.adjacencies
    k, t, length = len(prefix), len(match), len(sigma)
    if t >= length:
        # the whole copy sits in the prefix; the bare prefix is the only scenario
        yield ScenarioWord(tuple(prefix), k)
        return
    # an adjacency out of the last matched letter can only be honoured at the prefix end
    if t in adjacencies and match[-1] != k:
        return

    matched = list(zip((prefix[i - 1] for i in match), sigma[:t]))
    pending = list(range(t, length))
    slot_ranges = []
    for j in pending:
        lo = max((value for value, s in matched if s < sigma[j]), default=0)
        hi = min((value for value, s in matched if s > sigma[j]), default=k + 1)
        slot_ranges.append(range(lo, hi))

    layout: List[Optional[int]] = list(range(-k, 0))
    if t not in adjacencies:
        layout.append(None)
    for index, j in enumerate(pending):
        layout.append(index)
        if j + 1 < length and (j + 1) not in adjacencies:
            layout.append(None)

    for slots in itertools.product(*slot_ranges):
        consistent = all(
            (slots[a] < slots[b]) == (sigma[pending[a]] < sigma[pending[b]])
            for a in range(len(pending))
            for b in range(a + 1, len(pending))
            if slots[a] != slots[b]
        )
        if not consistent:
            continue
        keys: List[Optional[tuple]] = []
        for cell in layout:
            if cell is None:
                keys.append(None)
            elif cell < 0:
                keys.append((prefix[cell + k], 0, 0))
            else:
                keys.append((slots[cell], 1, sigma[pending[cell]]))
        yield ScenarioWord(_rank_keys(keys), k)


def _collapse(symbols: Sequence[int], prefix_len: int) -> Tuple[int, ...]:
    out: List[int] = []
    for s in symbols:
        if s == NULL and out and out[-1] == NULL:
            continue
        out.append(s)
    while len(out) > prefix_len and out[-1] == NULL:
        out.pop()
    return _normalize(out)


def _is_minimal(word: ScenarioWord, pool: FrozenSet[ScenarioWord]) -> bool:
    tail = [i for i in range(word.prefix_len, len(word.symbols)) if word.symbols[i] != NULL]
    for size in range(1, len(tail) + 1):
        for dropped in itertools.combinations(tail, size):
            symbols = list(word.symbols)
            for i in dropped:
                symbols[i] = NULL
            smaller = ScenarioWord(_collapse(symbols, word.prefix_len), word.prefix_len)
            if smaller != word and smaller in pool:
                return False
    return True


def scenarios(prefix: Sequence[int], patterns: Iterable[VincularPattern],
              basis: GapBasis) -> FrozenSet[ScenarioWord]:
    """All minimal containment scenarios of a prefix pattern.

    Each partial match is completed to a full copy by appending the missing
    pattern letters in every value interleaving, with a null after each
    appended letter that precedes a dash (and after the prefix when a dash
    separates it from the first appended letter). A match covering the whole
    pattern gives the bare prefix word. Words whose prefix meets a
    gap criterion of ``basis`` are dropped, and so are words for which nulling
    out some appended letters gives another scenario.

    Example:
        >>> sorted(str(w) for w in scenarios((1, 2), parse_pattern_set("23-1"),
        ...                                  GapBasis(((1, 0, 0),), 2)))
        ['134◊2']
    """
    prefix = tuple(prefix)
    found = set()
    for pattern in patterns:
        for match in partial_matches(prefix, pattern):
            for word in _words_for_match(prefix, pattern, match):
                if not basis.is_satisfied_by(spacing_vector(word.ambient, word.prefix)):
                    found.add(word)
    pool = frozenset(found)
    return frozenset(word for word in pool if _is_minimal(word, pool))


def scenario_delete(word: ScenarioWord, positions: Iterable[int]) -> ScenarioWord:
    """Apply d_R to a scenario word; nulls stay where they are.

    Raises:
        PermutationError: If R reaches beyond the prefix

    Example:
        >>> str(scenario_delete(ScenarioWord.from_text("13246◊5", 3), {2}))
        '1235◊4'
    """
    chosen = sorted(set(positions))
    if any(r < 1 or r > word.prefix_len for r in chosen):
        raise PermutationError("Deletion set must lie inside the prefix", word=word.symbols, positions=chosen)
    removed = [word.symbols[r - 1] for r in chosen]
    symbols = []
    for i, s in enumerate(word.symbols, start=1):
        if i in chosen:
            continue
        symbols.append(s if s == NULL else s - sum(1 for gone in removed if gone < s))
    return ScenarioWord(tuple(symbols), word.prefix_len - len(chosen))


def scenario_contains(word: ScenarioWord, patterns: Iterable[VincularPattern]) -> bool:
    """True iff the letters of ``word`` hold a copy of some pattern."""
    return any(find_copy(word.symbols, p) is not None for p in patterns)


def preimages(word: ScenarioWord, prefix: Sequence[int],
              positions: Iterable[int]) -> FrozenSet[ScenarioWord]:
    """Every scenario word that d_R maps onto ``word`` and whose prefix reduces to p.

    Deleted letters are re-inserted at their prefix positions with every
    relative value that keeps the prefix order-isomorphic to p.

    Raises:
        PermutationError: If |p| differs from prefix_len + |R|
    """
    prefix = tuple(prefix)
    chosen = sorted(set(positions))
    k = len(prefix)
    if any(r < 1 or r > k for r in chosen) or word.prefix_len != k - len(chosen):
        raise PermutationError(
            f"Cannot rebuild a prefix of length {k} from prefix length {word.prefix_len}",
            word=word.symbols, positions=chosen,
        )
    if not chosen:
        return frozenset({word}) if reduce_word(word.prefix) == prefix else frozenset()

    kept_positions = [i for i in range(1, k + 1) if i not in chosen]
    kept = list(zip(kept_positions, word.prefix))
    slot_ranges = []
    for r in chosen:
        lo = max((value for pos, value in kept if prefix[pos - 1] < prefix[r - 1]), default=0)
        hi = min((value for pos, value in kept if prefix[pos - 1] > prefix[r - 1]), default=word.ambient + 1)
        slot_ranges.append(range(lo, hi))

    result = set()
    for slots in itertools.product(*slot_ranges):
        inserted = dict(zip(chosen, slots))
        keys: List[Optional[tuple]] = []
        kept_values = iter(word.prefix)
        for i in range(1, k + 1):
            if i in inserted:
                keys.append((inserted[i], 1, prefix[i - 1]))
            else:
                keys.append((next(kept_values), 0, 0))
        for s in word.symbols[word.prefix_len:]:
            keys.append(None if s == NULL else (s, 0, 0))
        symbols = _rank_keys(keys)
        if reduce_word(symbols[:k]) == prefix:
            result.add(ScenarioWord(symbols, k))
    return frozenset(result)


class ScenarioSession:
    """Gap bases, scenario sets and rd searches for one pattern set.

    Results are cached per prefix (and per basis for scenarios), so one
    session should serve a single discovery run.

    Example:
        >>> session = ScenarioSession(parse_pattern_set("23-1"), max_gap_norm=2)
        >>> session.find_rd_set((1, 2))
        (1,)
    """

    def __init__(self, patterns: Iterable[VincularPattern], max_gap_norm: int):
        self.patterns = tuple(patterns)
        self.max_gap_norm = max_gap_norm
        self._bases: Dict[Perm, GapBasis] = {}
        self._scenarios: Dict[Tuple[Perm, GapBasis], FrozenSet[ScenarioWord]] = {}

    def gap_basis(self, prefix: Sequence[int]) -> GapBasis:
        prefix = tuple(prefix)
        if prefix not in self._bases:
            self._bases[prefix] = gap_basis(prefix, self.patterns, self.max_gap_norm)
        return self._bases[prefix]

    def scenarios(self, prefix: Sequence[int], basis: Optional[GapBasis] = None) -> FrozenSet[ScenarioWord]:
        prefix = tuple(prefix)
        basis = self.gap_basis(prefix) if basis is None else basis
        key = (prefix, basis)
        if key not in self._scenarios:
            self._scenarios[key] = scenarios(prefix, self.patterns, basis)
        return self._scenarios[key]

    def passes_deletion_test(self, positions: Sequence[int], prefix: Sequence[int],
                             basis: GapBasis) -> bool:
        """First test: every scenario keeps a forbidden copy after deleting R."""
        return all(
            scenario_contains(scenario_delete(word, positions), self.patterns)
            for word in self.scenarios(prefix, basis)
        )

    def passes_insertion_test(self, positions: Sequence[int], prefix: Sequence[int],
                              basis: GapBasis) -> bool:
        """Second test: re-inserting R into scenarios of d_R(p) never creates a new avoider.

        The scenarios of d_R(p) are taken without its gap basis: a word that
        certainly contains a pattern after deletion still needs every
        preimage checked against p.
        """
        shorter = delete(prefix, positions)
        for word in self.scenarios(shorter, GapBasis((), self.max_gap_norm)):
            for candidate in preimages(word, prefix, positions):
                if basis.is_satisfied_by(spacing_vector(candidate.ambient, candidate.prefix)):
                    continue
                if not scenario_contains(candidate, self.patterns):
                    return False
        return True

    def is_reversibly_deletable(self, positions: Iterable[int], prefix: Sequence[int],
                                basis: Optional[GapBasis] = None) -> bool:
        prefix = tuple(prefix)
        positions = tuple(sorted(set(positions)))
        basis = self.gap_basis(prefix) if basis is None else basis
        if not positions:
            raise PermutationError("Reversibly deletable sets are non-empty", word=prefix)
        return (self.passes_deletion_test(positions, prefix, basis)
                and self.passes_insertion_test(positions, prefix, basis))

    def find_rd_set(self, prefix: Sequence[int],
                    basis: Optional[GapBasis] = None) -> Optional[Tuple[int, ...]]:
        """Largest reversibly deletable set, ties broken lexicographically."""
        prefix = tuple(prefix)
        basis = self.gap_basis(prefix) if basis is None else basis
        for size in range(len(prefix), 0, -1):
            for positions in itertools.combinations(range(1, len(prefix) + 1), size):
                if self.is_reversibly_deletable(positions, prefix, basis):
                    return positions
        return None


def is_reversibly_deletable(positions: Iterable[int], prefix: Sequence[int],
                            patterns: Iterable[VincularPattern], basis: GapBasis) -> bool:
    """Decide reversible deletability of R for p; bases of d_R(p) use basis.max_norm."""
    session = ScenarioSession(patterns, basis.max_norm)
    return session.is_reversibly_deletable(positions, prefix, basis)


def find_rd_set(prefix: Sequence[int], patterns: Iterable[VincularPattern],
                basis: GapBasis) -> Optional[Tuple[int, ...]]:
    """Maximum-size reversibly deletable set of p, or None."""
    session = ScenarioSession(patterns, basis.max_norm)
    return session.find_rd_set(prefix, basis)
