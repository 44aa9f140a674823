"""
Vincular Schemes - Core Module

This package contains:
- graph: LangGraph discovery workflow (survey_frontier -> expand loop)
- survey: Symmetry-class surveys and Wilf classification
- tools: Patterns, gap vectors, scenarios, schemes, evaluation and the oracle
"""

from .graph import app, discover, discover_with_symmetry
from .tools import SchemeEvaluator, guaranteed_scheme, parse_pattern_set

__all__ = [
    "app",
    "discover",
    "discover_with_symmetry",
    "SchemeEvaluator",
    "guaranteed_scheme",
    "parse_pattern_set",
]
