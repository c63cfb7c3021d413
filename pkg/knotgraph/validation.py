"""Validation of ``--json`` reports against the published schema."""

from __future__ import annotations

import json
import logging
from functools import lru_cache
from importlib import resources
from typing import Any

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from knotgraph.exceptions import InvalidReportError

logger = logging.getLogger("knotgraph")

SCHEMA_RESOURCE = "report.schema.json"


@lru_cache(maxsize=1)
def report_schema() -> dict[str, Any]:
    """Load ``knotgraph/schemas/report.schema.json``."""
    resource = resources.files("knotgraph.schemas").joinpath(SCHEMA_RESOURCE)
    text = resource.read_text("utf-8")
    return json.loads(text)


@lru_cache(maxsize=1)
def _validator() -> Draft202012Validator:
    schema = report_schema()
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


def validate_report(report: Any) -> dict[str, Any]:
    """Check a report against the schema.

    The most relevant violation, as ranked by
    :func:`jsonschema.exceptions.best_match`, is reported.

    Parameters
    ----------
    report : Any
        Decoded report, normally the output of
        :func:`knotgraph.utils.create_report`.

    Returns
    -------
    dict[str, Any]
        The report, unchanged.

    Raises
    ------
    InvalidReportError
        With the JSON path and message of the first violation.

    Examples
    --------
    >>> validate_report({"command": "brieskorn"})
    Traceback (most recent call last):
    ...
    knotgraph.exceptions.InvalidReportError: ...
    """
    first = best_match(_validator().iter_errors(report))
    if first is not None:
        path = "$" + "".join(f"[{part!r}]" for part in first.absolute_path)
        logger.debug("Report failed validation at %s: %s", path, first.message)
        raise InvalidReportError(path, first.message)
    return report


def is_error_report(report: dict[str, Any]) -> bool:
    """Whether ``report`` carries an error payload."""
    return report.get("verdict") == "error" and "error" in report.get("results", {})
