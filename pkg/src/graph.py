import math
from typing import Iterable, Optional, Tuple, Union

from langgraph.graph import StateGraph, END

from .nodes import expand, initial_state, survey_frontier
from .state import DiscoveryState
from .tools.exceptions import PatternError
from .tools.patterns import VincularPattern, make_pattern_set, reverse_set
from .tools.scenarios import ScenarioSession
from .tools.scheme import DiscoveryParams, NoScheme, Scheme

Outcome = Union[Scheme, NoScheme]


def router(state: dict) -> str:
    """Stop once no prefix is waiting for a triple."""
    if not state.get("frontier"):
        return "end"
    return "survey_frontier"


# Init Graph Definition
workflow = StateGraph(DiscoveryState)

workflow.add_node("survey_frontier", survey_frontier)
workflow.add_node("expand", expand)

workflow.set_entry_point("survey_frontier")
workflow.add_edge("survey_frontier", "expand")
workflow.add_conditional_edges(
    "expand",
    router,
    {
        "end": END,
        "survey_frontier": "survey_frontier",
    }
)

app = workflow.compile()


def _recursion_limit(max_depth: int) -> int:
    # every round handles at least one new prefix, two graph steps each
    return 2 * sum(math.factorial(j) for j in range(1, max_depth + 1)) + 8


def discover(patterns: Iterable[VincularPattern],
             params: Optional[DiscoveryParams] = None) -> Outcome:
    """Search for an enumeration scheme by breadth-first prefix expansion.

    Args:
        patterns: The pattern set B
        params: Depth and gap-norm bounds (defaults: 5 and 2)

    Returns:
        Scheme when every reachable prefix dies or shrinks within the depth
        bound, otherwise NoScheme listing every blocking prefix

    Example:
        >>> scheme = discover(parse_pattern_set("23-1"))
        >>> scheme[(1, 2)].rd_set
        (1,)
    """
    params = params or DiscoveryParams()
    patterns = make_pattern_set(patterns)
    if not patterns:
        raise PatternError("discover needs at least one pattern")
    session = ScenarioSession(patterns, params.max_gap_norm)
    final = app.invoke(
        initial_state(patterns, params, session),
        config={"recursion_limit": _recursion_limit(params.max_depth)},
    )
    if final["blocking"]:
        return NoScheme(patterns, params, list(final["blocking"]), len(final["triples"]))
    return Scheme(patterns, params.max_gap_norm, dict(final["triples"]))


def discover_with_symmetry(patterns: Iterable[VincularPattern],
                           params: Optional[DiscoveryParams] = None,
                           try_reverse: bool = True) -> Tuple[Outcome, str]:
    """Try B first, then its reverse; reversal keeps the avoider counts.

    Returns:
        (outcome, variant) where variant is "original" or "reverse". A
        reverse scheme keeps the reversed patterns and is tagged so that
        inversion counts are reflected back to B.
    """
    patterns = make_pattern_set(patterns)
    outcome = discover(patterns, params)
    if isinstance(outcome, Scheme) or not try_reverse:
        return outcome, "original"
    reversed_patterns = reverse_set(patterns)
    if reversed_patterns == patterns:
        return outcome, "original"
    flipped = discover(reversed_patterns, params)
    if isinstance(flipped, Scheme):
        flipped.variant = "reverse"
        return flipped, "reverse"
    return outcome, "original"
