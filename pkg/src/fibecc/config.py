"""Configuration loading and normalization for ``[tool.fibecc]`` settings."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .curve import DEFAULT_ENUMERATION_LIMIT
from .keyspace import ROUNDING_MODES, TABLE_FORMATS
from .scheme import DEFAULT_DIMENSION, MAX_DIMENSION

try:
    import tomllib  # py311+  # type: ignore
except ImportError:  # pragma: no cover
    import tomli as tomllib  # type: ignore[import-not-found,no-redef]

TOMLDecodeError = getattr(tomllib, "TOMLDecodeError", ValueError)


@dataclass(frozen=True)
class FibeccConfig:
    """Validated defaults for fibecc commands."""

    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT
    dimension: int = DEFAULT_DIMENSION
    significant_digits: int = 5
    table_format: str = "text"  # "text" | "csv"
    rounding: str = "published"  # "published" | "nearest" | "down"


def _parse_int(
    value: Any,
    default: int,
    *,
    min_value: int | None = None,
    max_value: int | None = None,
) -> int:
    """Parse an integer and enforce optional inclusive min and max bounds."""
    if isinstance(value, bool):
        return default
    if isinstance(value, float):
        # 5.9 digits is not 5 digits.
        return default

    try:
        parsed = int(value)
    except (TypeError, ValueError):
        return default

    if min_value is not None and parsed < min_value:
        return default
    if max_value is not None and parsed > max_value:
        return default
    return parsed


def _parse_choice(value: Any, default: str, *, allowed: tuple[str, ...]) -> str:
    """Normalize and validate a string selection against ``allowed`` choices."""
    if isinstance(value, str):
        normalized = value.strip().lower()
        if normalized in allowed:
            return normalized
    return default


def load_config(project_root: Path) -> FibeccConfig:
    """Load ``[tool.fibecc]`` from ``pyproject.toml`` and return a validated config."""
    pyproject = project_root / "pyproject.toml"
    if not pyproject.exists():
        return FibeccConfig()

    data: dict[str, Any]
    try:
        with pyproject.open("rb") as f:
            data = tomllib.load(f)
    except TOMLDecodeError:
        return FibeccConfig()

    tool = data.get("tool", {})
    section = tool.get("fibecc", {}) if isinstance(tool, dict) else {}
    if not isinstance(section, dict):
        return FibeccConfig()

    base = FibeccConfig()
    return FibeccConfig(
        enumeration_limit=_parse_int(
            section.get("enumeration_limit"), base.enumeration_limit, min_value=3
        ),
        dimension=_parse_int(
            section.get("dimension"),
            base.dimension,
            min_value=2,
            max_value=MAX_DIMENSION,
        ),
        significant_digits=_parse_int(
            section.get("significant_digits"),
            base.significant_digits,
            min_value=1,
            max_value=30,
        ),
        table_format=_parse_choice(
            section.get("table_format"), base.table_format, allowed=TABLE_FORMATS
        ),
        rounding=_parse_choice(
            section.get("rounding"), base.rounding, allowed=ROUNDING_MODES
        ),
    )
