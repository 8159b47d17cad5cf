# floer-ring/utils/config_utils.py

import json
import os
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import yaml
from dotenv import load_dotenv
from jsonschema import SchemaError, ValidationError, validate

from utils.logging_utils import log_message

MAX_GENUS_ENV = "FLOER_MAX_GENUS"

# Budgets evaluated purely from binomial formulas; a genus cap leaves them alone.
CLOSED_FORM_BUDGETS = ("identity_genus", "s_identity_genus", "table_genus")
# membership_r indexes the ideal J_r, so it is capped like a genus.
GENUS_LIKE_BUDGETS = ("membership_r",)


@dataclass(frozen=True)
class Budgets:
    """Genus and index limits for the verification suites."""

    max_genus: int = 6
    cross_path_genus: int = 5
    membership_r: int = 6
    proportionality_genus: int = 5
    structure_genus: int = 9
    minus_shape_genus: int = 8
    plus_shape_genus: int = 7
    classical_genus: int = 8
    nesting_genus: int = 7
    specialization_k: int = 14
    identity_genus: int = 10
    s_identity_genus: int = 12
    table_genus: int = 8
    invariant_genus: int = 8
    samples: int = 6

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"Budget '{item.name}' must be a positive integer, got {value!r}")

    def capped(self, limit: Optional[int]) -> "Budgets":
        """Caps every Gröbner-backed genus budget at `limit`."""
        if limit is None:
            return self
        if limit < 1:
            raise ValueError(f"Genus cap must be >= 1, got {limit}")
        changes = {item.name: min(getattr(self, item.name), limit) for item in fields(self)
                   if (item.name.endswith("_genus") or item.name in GENUS_LIKE_BUDGETS)
                   and item.name not in CLOSED_FORM_BUDGETS}
        return replace(self, **changes)


@dataclass
class RunConfig:
    """Resolved invocation, echoed verbatim into every result envelope."""

    command: str
    genus_range: Optional[Tuple[int, int]] = None
    genus: Optional[int] = None
    family: Optional[str] = None
    which: Optional[str] = None
    output_format: str = "text"
    budgets: Budgets = field(default_factory=Budgets)
    seed: int = 0
    jobs: int = 1
    out: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        payload = asdict(self)
        if self.genus_range is not None:
            payload["genus_range"] = list(self.genus_range)
        return payload


CONFIG_FILE_SCHEMA = {
    "type": "object",
    "properties": {
        "seed": {"type": "integer", "minimum": 0},
        "jobs": {"type": "integer", "minimum": 1},
        "budgets": {
            "type": "object",
            "properties": {item.name: {"type": "integer", "minimum": 1} for item in fields(Budgets)},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}


def load_environment():
    """Reads a .env file (if any) into the process environment."""
    load_dotenv()


def get_max_genus_override() -> Optional[int]:
    """
    Reads FLOER_MAX_GENUS from the environment.

    Returns:
        Optional[int]: The cap, or None when unset.

    Raises:
        ValueError: If the variable is set to something other than a positive integer.
    """
    raw = os.getenv(MAX_GENUS_ENV)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_GENUS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{MAX_GENUS_ENV} must be >= 1, got {value}")
    log_message('info', f"Config_Utils: {MAX_GENUS_ENV}={value} caps the genus budgets.")
    return value


def load_run_config_file(path: str) -> Dict[str, Any]:
    """
    Loads and validates a YAML or JSON override file.

    Args:
        path (str): Location of the file; the suffix selects the parser.

    Returns:
        dict: The validated overrides (keys: seed, jobs, budgets).

    Raises:
        ValueError: On an unreadable, unparsable or schema-invalid file.
    """
    file_type = Path(path).suffix.lower().lstrip('.')
    log_message('info', f"Config_Utils: Loading run configuration from {path} ({file_type}).")
    try:
        content = Path(path).read_text(encoding='utf-8')
        if file_type in ('yaml', 'yml'):
            data = yaml.safe_load(content)
        elif file_type == 'json':
            data = json.loads(content)
        else:
            raise ValueError(f"Unsupported config file type: {file_type}. Only YAML/YML and JSON are supported.")
        if data is None:
            data = {}
        validate(instance=data, schema=CONFIG_FILE_SCHEMA)
    except (ValidationError, SchemaError) as e:
        log_message('error', f"Config_Utils: {path} failed validation: {e.message}")
        raise ValueError(f"Invalid config file {path}: {e.message}") from e
    except (OSError, yaml.YAMLError, json.JSONDecodeError) as e:
        log_message('error', f"Config_Utils: Error reading {path}: {e}", exc_info=True)
        raise ValueError(f"Could not read config file {path}: {e}") from e
    return data


def resolve_budgets(overrides: Optional[Dict[str, Any]] = None, cli_max_genus: Optional[int] = None) -> Budgets:
    """Defaults, then file overrides, then the genus cap (CLI flag before environment)."""
    budgets = Budgets(**((overrides or {}).get("budgets") or {}))
    limit = cli_max_genus if cli_max_genus is not None else get_max_genus_override()
    return budgets.capped(limit)
