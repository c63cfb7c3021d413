"""Builders for the JSON reports printed by the ``knotgraph`` command."""

from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from typing import Any

#: Top-level report fields, in emission order.
REPORT_FIELDS: tuple[str, ...] = (
    "command",
    "inputs",
    "results",
    "provenance",
    "verdict",
)


def format_rational(value: Fraction) -> str:
    """Render an exact rational as ``"p/q"`` (or ``"p"`` when integral).

    Examples
    --------
    >>> format_rational(Fraction(9, 4))
    '9/4'
    >>> format_rational(Fraction(3))
    '3'
    """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_jsonable(value: Any) -> Any:
    """Convert a result value into plain JSON types.

    Rationals become ``"p/q"`` strings, integers stay numbers, objects with an
    ``as_dict`` method are expanded and anything else falls back to ``str``.
    Dictionary key order is preserved.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Enum):
        return to_jsonable(value.value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    as_dict = getattr(value, "as_dict", None)
    if callable(as_dict):
        return to_jsonable(as_dict())
    return str(value)


def create_report(
    command: str,
    inputs: dict[str, Any] | None = None,
    results: dict[str, Any] | None = None,
    provenance: list[Any] | None = None,
    verdict: str = "ok",
) -> dict[str, Any]:
    """Create a report dictionary with the fields in their documented order.

    Parameters
    ----------
    command : str
        Subcommand name.
    inputs : dict[str, Any] | None
        Normalized inputs (knots pretty-printed, flags resolved).
    results : dict[str, Any] | None
        Computed values.
    provenance : list[Any] | None
        Certificates and citations backing the results.
    verdict : str
        One of the schema verdicts: ``"ok"``, ``"verified"``, ``"not-thin"``,
        ``"uncertified"``, ``"failed"`` or ``"error"``.

    Returns
    -------
    dict[str, Any]
        JSON-ready report.
    """
    report: dict[str, Any] = {
        "command": command,
        "inputs": to_jsonable(inputs or {}),
        "results": to_jsonable(results or {}),
        "provenance": to_jsonable(provenance or []),
        "verdict": verdict,
    }
    return report


def create_error_payload(code: int, message: str, data: Any = None) -> dict[str, Any]:
    """Create the ``{"code", "message", "data"}`` payload of an error.

    Parameters
    ----------
    code : int
        Error code.
    message : str
        Error message.
    data : Any
        Additional error data, omitted when None.

    Returns
    -------
    dict[str, Any]
        Error payload.
    """
    payload: dict[str, Any] = {
        "code": int(code),
        "message": message,
    }

    if data is not None:
        payload["data"] = to_jsonable(data)

    return payload


def create_error_report(command: str, error: dict[str, Any]) -> dict[str, Any]:
    """Wrap an error payload into a report with ``verdict = "error"``."""
    return create_report(command, results={"error": error}, verdict="error")


def dumps_report(report: dict[str, Any]) -> str:
    """Serialize a report deterministically (no key sorting, fixed indent)."""
    return json.dumps(report, indent=2, ensure_ascii=False)
