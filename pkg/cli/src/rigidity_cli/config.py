"""System files and option resolution for the zdrigid CLI.

Priority order for every tunable value:
1. Command-line flags
2. The ``options`` block of the system file(s), later files overriding earlier ones
3. Environment variables (ZDRIGID_MIXING_BOUND, ...) and a .env file
4. Built-in defaults
"""

import logging
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from rigidity_cli.models import ResolvedOptions, SpecError, SystemSpec
from zd_rigidity.config import EngineSettings, get_settings

logger = logging.getLogger(__name__)


def load_system_spec(path: str | Path) -> SystemSpec:
    """Load a YAML system file.

    Args:
        path: Path to a file with keys name, d, k, relations and options

    Returns:
        Validated system specification

    Raises:
        SpecError: If the file is missing, is not YAML or does not validate

    Example:
        >>> spec = load_system_spec("docs/systems/ledrappier.yaml")  # doctest: +SKIP
        >>> spec.relations
        ['1 + u1 + u2']
    """
    system_path = Path(path)
    if not system_path.exists():
        raise SpecError(f"System file not found: {system_path}")
    try:
        with open(system_path) as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise SpecError(f"System file is not valid YAML: {system_path}", {"error": str(e)}) from e
    if not isinstance(data, dict):
        raise SpecError(f"System file must hold a mapping: {system_path}")
    try:
        return SystemSpec(**data)
    except ValidationError as e:
        raise SpecError(
            f"Invalid system file {system_path}",
            {"errors": "; ".join(err["msg"] for err in e.errors())},
        ) from e


def resolve_settings(
    specs: Sequence[SystemSpec] = (),
    flags: Mapping[str, Any] | None = None,
    base: EngineSettings | None = None,
) -> EngineSettings:
    """Merge system-file options and command-line flags over the environment settings.

    Args:
        specs: System files in command-line order
        flags: Flag values; None means the flag was not given
        base: Settings to start from; the process settings when omitted

    Returns:
        EngineSettings with every source applied
    """
    update: dict[str, Any] = {}
    for spec in specs:
        update.update(spec.options.model_dump(exclude_none=True))
    for key, value in (flags or {}).items():
        if value is not None:
            update[key] = value
    settings = (base or get_settings()).model_copy(update=update)
    # model_copy skips validation
    merged = EngineSettings.model_validate(settings.model_dump())
    logger.debug("Resolved settings: %s", merged.model_dump())
    return merged


def resolved_options(settings: EngineSettings) -> ResolvedOptions:
    """The echo of every resolution and bound carried by a report."""
    return ResolvedOptions(**settings.model_dump(include=set(ResolvedOptions.model_fields)))


__all__ = ["load_system_spec", "resolve_settings", "resolved_options"]
