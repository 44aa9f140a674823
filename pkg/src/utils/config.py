"""
Environment-driven settings.

Values are read from the process environment (optionally seeded from a
``.env`` file through python-dotenv) every time ``load_settings`` runs, so
tests and the CLI can override them without re-importing modules.
"""

import os
from dataclasses import dataclass, asdict

from dotenv import load_dotenv

from src.tools.exceptions import ConfigError

DEFAULT_LOG_FILE = os.path.join("logs", "run_data.json")


@dataclass(frozen=True)
class Settings:
    """Runtime settings shared by the CLI and the library defaults.

    Attributes:
        oracle_limit: Largest n the brute-force oracle accepts
        max_depth: Default discovery depth d
        max_gap_norm: Default gap-vector norm bound M
        classify_n: Default n_max for Wilf classification
        survey_budget: Candidate pattern sets a survey may run without --slow
        log_file: JSON file that receives run log entries
    """
    oracle_limit: int = 10
    max_depth: int = 5
    max_gap_norm: int = 2
    classify_n: int = 15
    survey_budget: int = 300
    log_file: str = DEFAULT_LOG_FILE

    def to_dict(self) -> dict:
        return asdict(self)


def _int_setting(variable: str, default: int) -> int:
    raw = os.getenv(variable)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigError(f"{variable} must be an integer, got '{raw}'", variable=variable) from e
    if value < 0:
        raise ConfigError(f"{variable} must be non-negative, got {value}", variable=variable)
    return value


def load_settings(use_dotenv: bool = True) -> Settings:
    """Build a Settings object from the environment.

    Args:
        use_dotenv: Load ``.env`` from the working directory first

    Returns:
        Settings with defaults for every unset variable

    Raises:
        ConfigError: If a numeric variable is malformed
    """
    if use_dotenv:
        load_dotenv()
    return Settings(
        oracle_limit=_int_setting("VINCULAR_ORACLE_LIMIT", Settings.oracle_limit),
        max_depth=_int_setting("VINCULAR_MAX_DEPTH", Settings.max_depth),
        max_gap_norm=_int_setting("VINCULAR_MAX_GAP_NORM", Settings.max_gap_norm),
        classify_n=_int_setting("VINCULAR_CLASSIFY_N", Settings.classify_n),
        survey_budget=_int_setting("VINCULAR_SURVEY_BUDGET", Settings.survey_budget),
        log_file=os.getenv("VINCULAR_LOG_FILE") or DEFAULT_LOG_FILE,
    )
