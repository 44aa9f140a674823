"""
Custom exceptions for the vincular scheme tools.

This module defines all custom exceptions used by the tools layer.
All exceptions inherit from VincularError for easy catching.
"""

from typing import Any, Dict, Optional, Sequence


class VincularError(Exception):
    """Base exception for all tool-related errors.

    All custom exceptions in the tools layer inherit from this class.
    This allows the CLI to catch all tool errors with a single except clause.

    Attributes:
        message: Human-readable error description
        context: Additional context information (patterns, prefixes, limits, etc.)
    """

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        """Initialize the VincularError.

        Args:
            message: Error description
            context: Optional dict with additional error context
        """
        self.message = message
        self.context = context or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for logging.

        Returns:
            Dictionary with error details suitable for JSON serialization
        """
        return {
            "error_type": self.__class__.__name__,
            "message": self.message,
            "context": self.context,
        }


class PatternError(VincularError):
    """Raised when a pattern string or pattern value is invalid.

    This exception is raised when:
    - A pattern string breaks the grammar (empty block, stray characters)
    - Letters repeat or do not form 1..k
    - A pattern is longer than 9 letters
    - A pattern set does not have the shape an operation requires

    Example:
        >>> parse_pattern("1--2")
        PatternError: Empty block in pattern '1--2'
    """

    def __init__(self, message: str, pattern_text: Optional[str] = None):
        """Initialize PatternError.

        Args:
            message: Error description
            pattern_text: The offending pattern string
        """
        context = {"pattern_text": pattern_text} if pattern_text is not None else {}
        super().__init__(message, context)


class PermutationError(VincularError):
    """Raised when a word, permutation or index set is malformed.

    Example:
        >>> delete((2, 1), [3])
        PermutationError: Deletion index out of range
    """

    def __init__(self, message: str, word: Optional[Sequence[int]] = None,
                 positions: Optional[Sequence[int]] = None):
        """Initialize PermutationError.

        Args:
            message: Error description
            word: The word being operated on
            positions: The index set that triggered the error
        """
        context: Dict[str, Any] = {}
        if word is not None:
            context["word"] = list(word)
        if positions is not None:
            context["positions"] = sorted(positions)
        super().__init__(message, context)


class OracleLimitError(VincularError):
    """Raised when brute-force enumeration is requested above the limit.

    Example:
        >>> brute_count(patterns, 14)
        OracleLimitError: n=14 exceeds the oracle limit 10
    """

    def __init__(self, message: str, n: Optional[int] = None,
                 limit: Optional[int] = None):
        context: Dict[str, Any] = {}
        if n is not None:
            context["n"] = n
        if limit is not None:
            context["limit"] = limit
        super().__init__(message, context)


class SchemeError(VincularError):
    """Raised when a scheme cannot be used or loaded.

    This exception is raised when:
    - A scheme fails validation before evaluation
    - Evaluation reaches a prefix with no triple
    - A scheme document is malformed or breaks a triple invariant
    - Discovery parameters are out of range

    Example:
        >>> deserialize('{"patterns": []}')
        SchemeError: Scheme document is missing 'triples'
    """

    def __init__(self, message: str, prefix: Optional[Sequence[int]] = None,
                 document: Optional[str] = None):
        """Initialize SchemeError.

        Args:
            message: Error description
            prefix: The prefix whose triple is at fault
            document: Excerpt of the offending document
        """
        context: Dict[str, Any] = {}
        if prefix is not None:
            context["prefix"] = list(prefix)
        if document is not None:
            context["document"] = document[:200] + "..." if len(document) > 200 else document
        super().__init__(message, context)


class SurveyBudgetError(VincularError):
    """Raised when a survey would exceed its configured budget.

    Example:
        >>> run_survey(set_type=(4, 4))
        SurveyBudgetError: 18336 candidate sets exceed the budget of 300
    """

    def __init__(self, message: str, budget: Optional[int] = None,
                 requested: Optional[int] = None):
        context: Dict[str, Any] = {}
        if budget is not None:
            context["budget"] = budget
        if requested is not None:
            context["requested"] = requested
        super().__init__(message, context)


class ConfigError(VincularError):
    """Raised when an environment setting cannot be parsed."""

    def __init__(self, message: str, variable: Optional[str] = None):
        context = {"variable": variable} if variable else {}
        super().__init__(message, context)


class FileOpError(VincularError):
    """Raised when file operations fail.

    This exception is raised when:
    - File not found
    - Permission denied
    - I/O errors during read/write

    Example:
        >>> load_scheme("missing.json")
        FileOpError: File not found: missing.json
    """

    def __init__(self, message: str, filepath: Optional[str] = None,
                 original_error: Optional[Exception] = None):
        """Initialize FileOpError.

        Args:
            message: Error description
            filepath: The file that caused the error
            original_error: The underlying exception that was caught
        """
        context: Dict[str, Any] = {}
        if filepath:
            context["filepath"] = filepath
        if original_error:
            context["original_error"] = str(original_error)
            context["error_type"] = type(original_error).__name__
        super().__init__(message, context)
