"""Input size limits, checked before any expensive computation starts.

Limits are configured through :class:`knotgraph.config.GraphLimits` (settings
mapping or ``KNOTGRAPH_*`` environment variables).

Examples
--------
Raise the four-point scan ceiling for one process::

    export KNOTGRAPH_MAX_SCAN_VERTICES=1024

Or use the config API directly::

    from knotgraph.config import GraphLimits

    limits = GraphLimits.from_settings({"MAX_WITNESS_K": 64})
    print(limits.max_witness_k)
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from knotgraph.config import get_config
from knotgraph.exceptions import LimitExceededError

if TYPE_CHECKING:
    from knotgraph.metricgraph import MetricGraph


def check_graph_limits(graph: MetricGraph) -> None:
    """Reject graphs too large for the quadruple scan.

    Raises
    ------
    LimitExceededError
        If the graph has more than ``max_scan_vertices`` vertices.
    """
    limit = get_config().limits.max_scan_vertices
    if len(graph) > limit:
        raise LimitExceededError("scan_vertices", limit)


def check_witness_k(k: int) -> None:
    limit = get_config().limits.max_witness_k
    if k > limit:
        raise LimitExceededError("witness_k", limit)


def check_quotient_size(size: int) -> None:
    limit = get_config().limits.max_quotient_size
    if size > limit:
        raise LimitExceededError("quotient_size", limit)


def check_schedule_k(k: int) -> None:
    limit = get_config().limits.max_schedule_k
    if k > limit:
        raise LimitExceededError("schedule_k", limit)
