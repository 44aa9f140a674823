"""
Discovery workflow nodes.

Each node receives the current DiscoveryState and returns the keys it
updates, the way LangGraph nodes do.
"""

from typing import Dict, List

from .state import DiscoveryState
from .tools.gap_vectors import GapBasis
from .tools.permutations import EMPTY, Perm, children, delete
from .tools.scheme import SchemeTriple


def _order(prefix: Perm):
    return (len(prefix), prefix)


def survey_frontier(state: DiscoveryState) -> dict:
    """Give every frontier prefix its gap basis and rd set."""
    session = state["session"]
    triples: Dict[Perm, SchemeTriple] = dict(state["triples"])
    for prefix in state["frontier"]:
        basis = session.gap_basis(prefix)
        rd_set = () if basis.has_zero else (session.find_rd_set(prefix, basis) or ())
        triples[prefix] = SchemeTriple(prefix, basis, rd_set)
    return {"triples": triples, "level": state["level"] + 1}


def expand(state: DiscoveryState) -> dict:
    """Queue children and deletion targets; record prefixes stuck at the depth limit."""
    triples = state["triples"]
    max_depth = state["params"].max_depth
    blocking: List[Perm] = list(state["blocking"])
    upcoming = set()
    for prefix in state["frontier"]:
        triple = triples[prefix]
        if triple.is_dead:
            continue
        if triple.rd_set:
            target = delete(prefix, triple.rd_set)
            if target not in triples:
                upcoming.add(target)
        elif len(prefix) >= max_depth:
            blocking.append(prefix)
        else:
            upcoming.update(child for child in children(prefix) if child not in triples)
    return {"frontier": sorted(upcoming, key=_order), "blocking": sorted(blocking, key=_order)}


def initial_state(patterns, params, session) -> DiscoveryState:
    """Start from the ε triple with the single prefix "1" on the frontier."""
    return {
        "patterns": patterns,
        "params": params,
        "session": session,
        "triples": {EMPTY: SchemeTriple(EMPTY, GapBasis((), params.max_gap_norm))},
        "frontier": [(1,)],
        "blocking": [],
        "level": 0,
    }
