import json
import os
import uuid
from datetime import datetime
from enum import Enum
from typing import Optional

from src.utils.config import DEFAULT_LOG_FILE

# Default location of the run log
LOG_FILE = DEFAULT_LOG_FILE


class ActionType(str, Enum):
    """
    Kinds of runs recorded in the log, one per CLI command.
    """
    DISCOVERY = "DISCOVERY"        # Scheme search
    ENUMERATION = "ENUMERATION"    # Sequence or q-triangle from a scheme
    ORACLE_CHECK = "ORACLE_CHECK"  # Scheme counts against brute force
    SURVEY = "SURVEY"              # Symmetry-class success survey
    CLASSIFY = "CLASSIFY"          # Empirical Wilf classification


REQUIRED_DETAILS = ["patterns", "outcome"]


def log_run(component: str, action: ActionType, details: dict, status: str,
            log_file: Optional[str] = None):
    """
    Append one run entry to the JSON log.

    Args:
        component (str): Who produced the entry (e.g. "cli.discover").
        action (ActionType): The kind of run (use the ActionType enum or its value).
        details (dict): Run details. MUST contain 'patterns' and 'outcome'.
        status (str): "SUCCESS" or "FAILURE".
        log_file (str): Target file; defaults to LOG_FILE.

    Raises:
        ValueError: If the action is unknown or required detail keys are missing.
    """

    # --- 1. ACTION VALIDATION ---
    # Accept either the Enum member or its string value
    valid_actions = [a.value for a in ActionType]
    if isinstance(action, ActionType):
        action_str = action.value
    elif action in valid_actions:
        action_str = action
    else:
        raise ValueError(f"Invalid action: '{action}'. Use the ActionType enum (e.g. ActionType.DISCOVERY).")

    # --- 2. DETAILS VALIDATION ---
    missing_keys = [key for key in REQUIRED_DETAILS if key not in details]
    if missing_keys:
        raise ValueError(
            f"Logging error ({component}): details are missing {missing_keys}."
        )

    # --- 3. ENTRY ---
    target = log_file or LOG_FILE
    directory = os.path.dirname(target)
    if directory:
        os.makedirs(directory, exist_ok=True)

    entry = {
        "id": str(uuid.uuid4()),
        "timestamp": datetime.now().isoformat(),
        "component": component,
        "action": action_str,
        "details": details,
        "status": status
    }

    # --- 4. READ & WRITE ---
    data = []
    if os.path.exists(target):
        try:
            with open(target, 'r', encoding='utf-8') as f:
                content = f.read().strip()
                if content:
                    data = json.loads(content)
        except json.JSONDecodeError:
            # A corrupted log is replaced by a fresh list
            print(f"⚠️ Warning: log file {target} was corrupted. Starting a new list.")
            data = []

    data.append(entry)

    with open(target, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=4, ensure_ascii=False)
