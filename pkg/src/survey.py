"""
Symmetry-class surveys and empirical Wilf classification.

A survey enumerates every pattern (or pattern set) of a given shape, groups
the candidates into orbits under reverse and complement, and runs discovery
once per orbit on its lexicographically least member. Classification
computes count sequences from schemes and partitions the inputs by them.
"""

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from .graph import discover_with_symmetry
from .tools.evaluate import SchemeEvaluator
from .tools.exceptions import PatternError, SurveyBudgetError
from .tools.patterns import (
    MAX_PATTERN_LENGTH,
    PatternSet,
    VincularPattern,
    complement_set,
    format_pattern_set,
    is_redundant_set,
    make_pattern_set,
    reverse_set,
)
from .tools.scheme import DiscoveryParams, Scheme

DEFAULT_SURVEY_BUDGET = 300


def all_patterns(length: int) -> List[VincularPattern]:
    """Every vincular pattern of the given length (k! * 2^(k-1) of them)."""
    if length < 1 or length > MAX_PATTERN_LENGTH:
        raise PatternError(f"Pattern length must be between 1 and {MAX_PATTERN_LENGTH}, got {length}")
    gaps = range(1, length)
    patterns = []
    for sigma in itertools.permutations(range(1, length + 1)):
        for size in range(length):
            for adjacencies in itertools.combinations(gaps, size):
                patterns.append(VincularPattern(sigma, frozenset(adjacencies)))
    return sorted(patterns, key=str)


def set_key(patterns: Iterable[VincularPattern]) -> str:
    return format_pattern_set(patterns)


def symmetry_orbit(patterns: Iterable[VincularPattern]) -> List[PatternSet]:
    """Images of a set under {id, r, c, rc}, without repeats, ordered by key."""
    base = make_pattern_set(patterns)
    images = {set_key(s): s for s in (
        base,
        reverse_set(base),
        complement_set(base),
        complement_set(reverse_set(base)),
    )}
    return [images[key] for key in sorted(images)]


def symmetry_classes(candidates: Iterable[PatternSet]) -> List[Tuple[PatternSet, int]]:
    """Group candidates into orbits.

    Returns:
        (representative, orbit size among the candidates) per class, ordered
        by representative key; the representative is the least member
    """
    seen: Dict[str, PatternSet] = {}
    sizes: Counter = Counter()
    for candidate in candidates:
        representative = symmetry_orbit(candidate)[0]
        key = set_key(representative)
        seen.setdefault(key, representative)
        sizes[key] += 1
    return [(seen[key], sizes[key]) for key in sorted(seen)]


def candidate_sets(set_type: Sequence[int]) -> List[PatternSet]:
    """All sets of distinct patterns whose lengths form the multiset ``set_type``.

    Sets where one member implies another are left out; they avoid the
    same permutations as a smaller set.

    Example:
        >>> len(candidate_sets((2, 2)))
        4
    """
    if not set_type:
        raise PatternError("Set type needs at least one length")
    by_length = Counter(set_type)
    groups = [
        list(itertools.combinations(all_patterns(length), multiplicity))
        for length, multiplicity in sorted(by_length.items())
    ]
    sets = (make_pattern_set(itertools.chain.from_iterable(choice)) for choice in itertools.product(*groups))
    return [s for s in sets if not is_redundant_set(s)]


def count_candidates(set_type: Sequence[int]) -> int:
    """Number of sets of the type before redundant ones are dropped; the survey budget uses it."""
    total = 1
    for length, multiplicity in Counter(set_type).items():
        total *= math.comb(math.factorial(length) * 2 ** (length - 1), multiplicity)
    return total


def _descriptor(values: Sequence[int], brackets: str) -> str:
    return brackets[0] + ",".join(str(v) for v in values) + brackets[1]


@dataclass
class SurveyClass:
    """Outcome of discovery for one symmetry class."""
    representative: str
    descriptor: str
    orbit_size: int
    success: bool
    depth: Optional[int] = None
    variant: Optional[str] = None
    blocking: int = 0

    def to_dict(self) -> dict:
        return {
            "representative": self.representative,
            "descriptor": self.descriptor,
            "orbit_size": self.orbit_size,
            "success": self.success,
            "depth": self.depth,
            "variant": self.variant,
            "blocking": self.blocking,
        }


@dataclass
class SurveyReport:
    """Per-class discovery outcomes of one survey run."""
    params: DiscoveryParams
    classes: List[SurveyClass] = field(default_factory=list)

    @property
    def classes_total(self) -> int:
        return len(self.classes)

    @property
    def classes_successful(self) -> int:
        return sum(1 for c in self.classes if c.success)

    def to_frame(self) -> pd.DataFrame:
        columns = ["representative", "descriptor", "orbit_size", "success", "depth", "variant", "blocking"]
        return pd.DataFrame([c.to_dict() for c in self.classes], columns=columns)

    def summary(self) -> pd.DataFrame:
        """Classes and successes per descriptor with the success percentage."""
        frame = self.to_frame()
        grouped = frame.groupby("descriptor", sort=True).agg(
            classes=("representative", "count"),
            successful=("success", "sum"),
        )
        grouped["successful"] = grouped["successful"].astype(int)
        grouped["percent"] = (100.0 * grouped["successful"] / grouped["classes"]).round(1)
        return grouped.reset_index()

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "classes_total": self.classes_total,
            "classes_successful": self.classes_successful,
            "classes": [c.to_dict() for c in self.classes],
        }


def _run_class(job: Tuple[PatternSet, int, str, DiscoveryParams]) -> SurveyClass:
    representative, orbit_size, descriptor, params = job
    outcome, variant = discover_with_symmetry(representative, params, try_reverse=True)
    key = set_key(representative)
    if isinstance(outcome, Scheme):
        return SurveyClass(key, descriptor, orbit_size, True, outcome.depth, variant)
    return SurveyClass(key, descriptor, orbit_size, False, blocking=len(outcome.blocking))


def run_survey(length: Optional[int] = None,
               set_type: Optional[Sequence[int]] = None,
               params: Optional[DiscoveryParams] = None,
               block_type: Optional[Sequence[int]] = None,
               allow_slow: bool = False,
               budget: int = DEFAULT_SURVEY_BUDGET,
               workers: int = 1) -> SurveyReport:
    """Survey single patterns of one length or pattern sets of one set type.

    Args:
        length: Survey every single pattern of this length
        set_type: Survey every set whose pattern lengths form this multiset
        params: Discovery bounds (defaults to depth 5, gap norm 2)
        block_type: With ``length``, keep only patterns of this block type
        allow_slow: Permit more candidates than ``budget``
        budget: Largest candidate count allowed without ``allow_slow``
        workers: Worker processes; one class per task

    Raises:
        PatternError: If neither or both of length and set_type are given
        SurveyBudgetError: If the candidate count exceeds the budget

    Example:
        >>> run_survey(length=3).classes_successful
        7
    """
    if (length is None) == (set_type is None):
        raise PatternError("Give exactly one of length or set_type")
    params = params or DiscoveryParams()
    if length is not None:
        requested = math.factorial(length) * 2 ** (length - 1)
    else:
        requested = count_candidates(set_type)
    if requested > budget and not allow_slow:
        raise SurveyBudgetError(
            f"Survey would examine {requested} candidates, above the budget of {budget}",
            budget=budget,
            requested=requested,
        )

    if length is not None:
        patterns = all_patterns(length)
        if block_type is not None:
            wanted = max(tuple(block_type), tuple(reversed(block_type)))
            patterns = [p for p in patterns if p.block_type() == wanted]
        candidates = [(p,) for p in patterns]
    else:
        candidates = candidate_sets(set_type)

    jobs = []
    for representative, orbit_size in symmetry_classes(candidates):
        if set_type is None:
            descriptor = _descriptor(representative[0].block_type(), "()")
        else:
            descriptor = _descriptor(sorted(set_type), "{}")
        jobs.append((representative, orbit_size, descriptor, params))

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            classes = list(pool.map(_run_class, jobs))
    else:
        classes = [_run_class(job) for job in jobs]
    return SurveyReport(params, classes)


# ============================================================================
# WILF CLASSIFICATION
# ============================================================================

@dataclass
class WilfClassReport:
    """Inputs partitioned by equal count sequences up to ``n_max``.

    Attributes:
        n_max: Largest n compared
        groups: Pattern-set keys per group, in order of first appearance
        sequences: The shared sequence of each group
        witnesses: For groups i < j, the first n where their counts differ
        unclassifiable: Inputs without a scheme within the bounds
    """
    n_max: int
    groups: List[List[str]] = field(default_factory=list)
    sequences: List[List[int]] = field(default_factory=list)
    witnesses: Dict[Tuple[int, int], int] = field(default_factory=dict)
    unclassifiable: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "groups": [list(g) for g in self.groups],
            "sequences": [list(s) for s in self.sequences],
            "witnesses": [{"groups": [i, j], "n": n} for (i, j), n in sorted(self.witnesses.items())],
            "unclassifiable": list(self.unclassifiable),
        }


def _first_difference(left: Sequence[int], right: Sequence[int]) -> int:
    return next(n for n, (a, b) in enumerate(zip(left, right), start=1) if a != b)


def classify(pattern_sets: Iterable[Iterable[VincularPattern]], n_max: int,
             params: Optional[DiscoveryParams] = None) -> WilfClassReport:
    """Group pattern sets by their avoidance counts for n = 1..n_max.

    Example:
        >>> report = classify([parse_pattern_set("123-4"), parse_pattern_set("132-4")], 6)
        >>> report.witnesses[(0, 1)]
        5
    """
    params = params or DiscoveryParams()
    report = WilfClassReport(n_max)
    for patterns in pattern_sets:
        patterns = make_pattern_set(patterns)
        key = set_key(patterns)
        outcome, _ = discover_with_symmetry(patterns, params, try_reverse=True)
        if not isinstance(outcome, Scheme):
            report.unclassifiable.append(key)
            continue
        values = SchemeEvaluator(outcome).sequence(n_max).values
        if values in report.sequences:
            report.groups[report.sequences.index(values)].append(key)
        else:
            report.sequences.append(values)
            report.groups.append([key])
    for i, j in itertools.combinations(range(len(report.groups)), 2):
        report.witnesses[(i, j)] = _first_difference(report.sequences[i], report.sequences[j])
    return report
