"""
Harness configuration
Defaults, then config/harness.yaml (or $POSET_METRICS_CONFIG), then the
environment. Command-line flags override the loaded settings.
"""
import logging
import os
from pathlib import Path
from typing import Any, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from .core.errors import InvalidParameterError
from .enumeration import ENUMERATION_CAP

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "config" / "harness.yaml"

_ENV_FIELDS = {
    "POSET_METRICS_JOBS": "jobs",
    "POSET_METRICS_MAX_WITNESSES": "max_witnesses",
    "POSET_METRICS_MAX_N": "default_max_n",
    "LOG_LEVEL": "log_level",
}


class HarnessSettings(BaseModel):
    """Settings shared by the CLI and the MCP server"""
    enumeration_cap: int = Field(default=ENUMERATION_CAP, ge=1, le=ENUMERATION_CAP)
    jobs: int = Field(default=1, ge=1, le=256)
    max_witnesses: Optional[int] = Field(default=10, ge=1)
    default_max_n: int = Field(default=6, ge=1, le=ENUMERATION_CAP)
    log_level: str = "WARNING"


def _read_yaml(path: Path) -> dict[str, Any]:
    if not path.is_file():
        return {}
    with path.open(encoding="utf-8") as handle:
        data = yaml.safe_load(handle) or {}
    if not isinstance(data, dict):
        raise InvalidParameterError(f"{path} must hold a mapping")
    return data.get("harness", data)


def load_settings(path: Optional[Path] = None) -> HarnessSettings:
    """
    Load HarnessSettings from YAML and the environment

    Args:
        path: YAML file to read instead of the default location

    Returns:
        Validated settings
    """
    load_dotenv()
    if path is None:
        path = Path(os.getenv("POSET_METRICS_CONFIG", DEFAULT_CONFIG_PATH))
    values = _read_yaml(path)
    for variable, field_name in _ENV_FIELDS.items():
        raw = os.getenv(variable)
        if raw is None or raw == "":
            continue
        values[field_name] = raw
    if str(values.get("max_witnesses", "")).lower() in ("none", "all"):
        values["max_witnesses"] = None

    try:
        settings = HarnessSettings(**values)
    except ValidationError as e:
        raise InvalidParameterError(f"invalid harness settings: {e}") from None
    logger.debug(f"Loaded settings from {path}: {settings}")
    return settings
