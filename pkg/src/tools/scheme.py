"""
Enumeration schemes: triples, validation, transforms and documents.

A scheme is a finite set of triples (prefix, gap basis, rd set) that reads
as a counting recurrence: a prefix whose rd set is empty and whose basis
lacks the zero vector must have all of its children in the scheme, and a
prefix with a non-empty rd set must have its shortened prefix d_R(p) in the
scheme. The discovery loop that builds schemes lives in ``src.graph``.

Features:
- SchemeTriple / Scheme / NoScheme / DiscoveryParams value types
- Structural validation reporting every violation
- Complement transform (p^c, R, G reversed)
- Constructive schemes for consecutive and single-tail patterns
- JSON documents with canonical ordering
"""

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from .exceptions import PatternError, PermutationError, SchemeError
from .gap_vectors import GapBasis
from .patterns import (
    PatternSet,
    VincularPattern,
    complement_set,
    contains,
    make_pattern_set,
    parse_pattern,
)
from .permutations import EMPTY, Perm, children, complement_perm, delete, is_permutation, order_isomorphic

VARIANTS = ("original", "reverse")


@dataclass(frozen=True)
class DiscoveryParams:
    """Search bounds: prefixes up to ``max_depth`` letters, basis norms up to ``max_gap_norm``."""
    max_depth: int = 5
    max_gap_norm: int = 2

    def __post_init__(self):
        if self.max_depth < 1:
            raise SchemeError(f"max_depth must be at least 1, got {self.max_depth}")
        if self.max_gap_norm < 0:
            raise SchemeError(f"max_gap_norm must be non-negative, got {self.max_gap_norm}")

    def to_dict(self) -> dict:
        return {"max_depth": self.max_depth, "max_gap_norm": self.max_gap_norm}


@dataclass(frozen=True)
class SchemeTriple:
    """One (prefix, gap basis, reversibly deletable set) entry.

    Attributes:
        prefix: The prefix pattern (empty tuple for ε)
        gap_basis: Gap vectors of length |prefix| + 1
        rd_set: Sorted 1-indexed prefix positions, possibly empty
    """
    prefix: Perm
    gap_basis: GapBasis = field(default_factory=GapBasis)
    rd_set: Tuple[int, ...] = ()

    def __post_init__(self):
        prefix = tuple(self.prefix)
        rd_set = tuple(sorted(set(self.rd_set)))
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "rd_set", rd_set)
        if not is_permutation(prefix):
            raise SchemeError(f"Prefix {list(prefix)} is not a permutation", prefix=prefix)
        if any(r < 1 or r > len(prefix) for r in rd_set):
            raise SchemeError(f"rd set {list(rd_set)} reaches outside the prefix", prefix=prefix)
        if self.gap_basis.vectors and self.gap_basis.length != len(prefix) + 1:
            raise SchemeError(
                f"Gap vectors of length {self.gap_basis.length} do not fit prefix of length {len(prefix)}",
                prefix=prefix,
            )

    @property
    def is_dead(self) -> bool:
        """True when the zero vector is a gap vector: no avoider has this prefix."""
        return self.gap_basis.has_zero

    def to_dict(self) -> dict:
        return {"prefix": list(self.prefix), "gap_basis": self.gap_basis.to_list(), "rd": list(self.rd_set)}


def _prefix_order(prefix: Perm):
    return (len(prefix), prefix)


@dataclass
class Scheme:
    """A finite enumeration scheme for a pattern set.

    Attributes:
        patterns: The pattern set the triples describe
        max_gap_norm: The norm bound M the bases were searched under
        triples: Map from prefix to its triple
        variant: "reverse" when the triples were found for the reversed set
            of the patterns actually requested; counts agree either way
    """
    patterns: PatternSet
    max_gap_norm: int
    triples: Dict[Perm, SchemeTriple] = field(default_factory=dict)
    variant: str = "original"

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise SchemeError(f"Unknown scheme variant '{self.variant}'")

    @property
    def depth(self) -> int:
        return max((len(p) for p in self.triples), default=0)

    def __getitem__(self, prefix: Sequence[int]) -> SchemeTriple:
        try:
            return self.triples[tuple(prefix)]
        except KeyError:
            raise SchemeError("Scheme has no triple for this prefix", prefix=prefix) from None

    def __contains__(self, prefix: Sequence[int]) -> bool:
        return tuple(prefix) in self.triples

    def __len__(self) -> int:
        return len(self.triples)

    def sorted_triples(self) -> List[SchemeTriple]:
        return [self.triples[p] for p in sorted(self.triples, key=_prefix_order)]

    def to_dict(self) -> dict:
        document = {
            "patterns": [str(p) for p in self.patterns],
            "max_gap_norm": self.max_gap_norm,
            "triples": [t.to_dict() for t in self.sorted_triples()],
        }
        if self.variant != "original":
            document["variant"] = self.variant
        return document


@dataclass
class NoScheme:
    """Discovery failure: prefixes at the depth limit that neither die nor shrink."""
    patterns: PatternSet
    params: DiscoveryParams
    blocking: List[Perm] = field(default_factory=list)
    explored: int = 0

    def to_dict(self) -> dict:
        return {
            "patterns": [str(p) for p in self.patterns],
            "params": self.params.to_dict(),
            "blocking": [list(p) for p in self.blocking],
            "explored": self.explored,
        }


@dataclass
class ValidationReport:
    """Outcome of ``validate``; truthy when the scheme is well formed."""
    valid: bool
    violations: List[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict:
        return {"valid": self.valid, "violations": list(self.violations)}


def _word(prefix: Sequence[int]) -> str:
    return "".join(str(x) for x in prefix) if prefix else "ε"


def validate(scheme: Scheme) -> ValidationReport:
    """Check the closure criteria of a scheme.

    Reports a missing or non-trivial ε triple, missing children of prefixes
    that must expand, and missing d_R(p) targets of prefixes that shrink.

    Example:
        >>> validate(scheme).violations
        ['prefix 1 must expand but child 21 is missing']
    """
    violations = []
    root = scheme.triples.get(EMPTY)
    if root is None:
        violations.append("the ε triple is missing")
    elif root.gap_basis.vectors or root.rd_set:
        violations.append("the ε triple must have an empty basis and an empty rd set")
    for prefix in sorted(scheme.triples, key=_prefix_order):
        triple = scheme.triples[prefix]
        if triple.prefix != prefix:
            violations.append(f"triple stored under {_word(prefix)} describes {_word(triple.prefix)}")
        if triple.is_dead:
            continue
        if triple.rd_set:
            target = delete(prefix, triple.rd_set)
            if target not in scheme.triples:
                violations.append(
                    f"prefix {_word(prefix)} deletes {list(triple.rd_set)} but {_word(target)} is missing"
                )
        else:
            for child in children(prefix):
                if child not in scheme.triples:
                    violations.append(f"prefix {_word(prefix)} must expand but child {_word(child)} is missing")
    return ValidationReport(valid=not violations, violations=violations)


def complement_scheme(scheme: Scheme) -> Scheme:
    """Scheme for the complemented pattern set: prefixes complemented, vectors reversed."""
    triples = {}
    for prefix, triple in scheme.triples.items():
        image = complement_perm(prefix)
        triples[image] = SchemeTriple(image, triple.gap_basis.reversed(), triple.rd_set)
    return Scheme(complement_set(scheme.patterns), scheme.max_gap_norm, triples, scheme.variant)


def minimize_scheme(scheme: Scheme) -> Scheme:
    """Replace every basis by its minimal antichain."""
    triples = {
        prefix: SchemeTriple(prefix, triple.gap_basis.minimized(), triple.rd_set)
        for prefix, triple in scheme.triples.items()
    }
    return Scheme(scheme.patterns, scheme.max_gap_norm, triples, scheme.variant)


# ============================================================================
# CONSTRUCTIVE SCHEMES
# ============================================================================

def _is_consecutive_or_tail(pattern: VincularPattern) -> bool:
    k = pattern.length
    return pattern.adjacencies in (frozenset(range(1, k)), frozenset(range(1, k - 1)))


def _lemma(prefix: Perm, pattern: VincularPattern) -> Tuple[List[Tuple[int, ...]], bool]:
    """Per-pattern (gap vectors, grants {1}) for a constructive scheme."""
    k = len(prefix)
    sigma = pattern.sigma
    t = pattern.length
    zero = (0,) * (k + 1)
    if contains(prefix, pattern):
        return [zero], True
    if pattern.is_consecutive:
        m = min(t, k)
        return [], not order_isomorphic(prefix[:m], sigma[:m])
    block = t - 1
    if k < block:
        return [], not order_isomorphic(prefix, sigma[:k])
    if not order_isomorphic(prefix[:block], sigma[:block]):
        return [], True
    last = sigma[-1]
    if last == 1:
        gap = 1
    else:
        a = sigma.index(last - 1)
        gap = prefix[a] + 1
    vector = tuple(1 if i == gap else 0 for i in range(1, k + 2))
    return [vector], True


def guaranteed_scheme(patterns: Iterable[VincularPattern], minimize: bool = False) -> Scheme:
    """Constructive scheme for sets of consecutive and single-tail patterns.

    Every pattern must be consecutive, (sigma, [t-1]), or have its only dash
    before the last letter, (sigma, [t-2]). Triples come from per-pattern
    rules: the zero vector when the prefix contains a pattern; {1} deletable
    when no copy can start at position 1; for a tail pattern whose block
    matches the prefix start, the unit vector on the gap just above the
    letter playing sigma_t - 1. Bases are unioned and {1} is kept only when
    every pattern grants it.

    Args:
        patterns: The pattern set
        minimize: Reduce each union basis to its minimal antichain

    Returns:
        A scheme of depth at most the longest pattern length

    Raises:
        PatternError: If some pattern has another dash layout
    """
    patterns = make_pattern_set(patterns)
    if not patterns:
        raise PatternError("guaranteed_scheme needs at least one pattern")
    for pattern in patterns:
        if not _is_consecutive_or_tail(pattern):
            raise PatternError(
                f"Pattern {pattern} is neither consecutive nor a single tail", pattern_text=str(pattern)
            )
    max_norm = 1
    triples: Dict[Perm, SchemeTriple] = {EMPTY: SchemeTriple(EMPTY, GapBasis((), max_norm), ())}
    queue = deque([(1,)])
    while queue:
        prefix = queue.popleft()
        if prefix in triples:
            continue
        vectors: List[Tuple[int, ...]] = []
        grants = True
        for pattern in patterns:
            found, granted = _lemma(prefix, pattern)
            vectors.extend(v for v in found if v not in vectors)
            grants = grants and granted
        basis = GapBasis(tuple(vectors), max_norm)
        rd_set = (1,) if grants and not basis.has_zero else ()
        triples[prefix] = SchemeTriple(prefix, basis, rd_set)
        if basis.has_zero:
            continue
        if rd_set:
            queue.append(delete(prefix, rd_set))
        else:
            queue.extend(children(prefix))
    scheme = Scheme(patterns, max_norm, triples)
    return minimize_scheme(scheme) if minimize else scheme


# ============================================================================
# DOCUMENTS
# ============================================================================

def serialize(scheme: Scheme) -> str:
    """Render a scheme as a canonical JSON document."""
    return json.dumps(scheme.to_dict(), indent=2, sort_keys=True)


def _int_list(value, what: str, text: str) -> List[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise SchemeError(f"{what} must be a list of integers", document=text)
    return value


def deserialize(text: str) -> Scheme:
    """Load a scheme document.

    Raises:
        SchemeError: On malformed JSON, missing keys or a triple that breaks
            its invariants (for example a gap vector of the wrong length)
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemeError(f"Scheme document is not valid JSON: {e.msg}", document=text) from e
    if not isinstance(document, dict):
        raise SchemeError("Scheme document must be a JSON object", document=text)
    for key in ("patterns", "max_gap_norm", "triples"):
        if key not in document:
            raise SchemeError(f"Scheme document is missing '{key}'", document=text)
    try:
        patterns = make_pattern_set(parse_pattern(p) for p in document["patterns"])
    except (PatternError, TypeError, AttributeError) as e:
        raise SchemeError(f"Scheme document has invalid patterns: {e}", document=text) from e
    max_norm = document["max_gap_norm"]
    if not isinstance(max_norm, int) or max_norm < 0:
        raise SchemeError("max_gap_norm must be a non-negative integer", document=text)
    if not isinstance(document["triples"], list):
        raise SchemeError("triples must be a list", document=text)
    triples: Dict[Perm, SchemeTriple] = {}
    for entry in document["triples"]:
        if not isinstance(entry, dict) or not {"prefix", "gap_basis", "rd"} <= set(entry):
            raise SchemeError("Each triple needs 'prefix', 'gap_basis' and 'rd'", document=text)
        prefix = tuple(_int_list(entry["prefix"], "prefix", text))
        if not isinstance(entry["gap_basis"], list):
            raise SchemeError("gap_basis must be a list of vectors", document=text)
        vectors = tuple(tuple(_int_list(v, "gap vector", text)) for v in entry["gap_basis"])
        if prefix in triples:
            raise SchemeError("Duplicate triple", prefix=prefix)
        try:
            basis = GapBasis(vectors, max_norm)
        except PermutationError as e:
            raise SchemeError(f"Invalid gap basis: {e.message}", prefix=prefix) from e
        triples[prefix] = SchemeTriple(prefix, basis, tuple(_int_list(entry["rd"], "rd", text)))
    variant = document.get("variant", "original")
    return Scheme(patterns, max_norm, triples, variant)


def scheme_from_triples(patterns: Iterable[VincularPattern], max_gap_norm: int,
                        entries: Iterable[Tuple[Sequence[int], Iterable[Sequence[int]], Sequence[int]]]) -> Scheme:
    """Build a scheme from (prefix, vectors, rd) tuples, as written by hand."""
    triples = {}
    for prefix, vectors, rd_set in entries:
        prefix = tuple(prefix)
        triples[prefix] = SchemeTriple(prefix, GapBasis(tuple(tuple(v) for v in vectors), max_gap_norm), tuple(rd_set))
    return Scheme(make_pattern_set(patterns), max_gap_norm, triples)
