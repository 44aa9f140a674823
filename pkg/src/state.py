from typing import Dict, List, TypedDict

from .tools.patterns import PatternSet
from .tools.permutations import Perm
from .tools.scenarios import ScenarioSession
from .tools.scheme import DiscoveryParams, SchemeTriple


class DiscoveryState(TypedDict):
    patterns: PatternSet                 # The pattern set being searched
    params: DiscoveryParams              # Depth and gap-norm bounds
    session: ScenarioSession             # Per-run cache of bases and scenarios
    triples: Dict[Perm, SchemeTriple]    # Scheme built so far, keyed by prefix
    frontier: List[Perm]                 # Prefixes waiting for a triple
    blocking: List[Perm]                 # Depth-limit prefixes that neither die nor shrink
    level: int                           # Completed frontier rounds
