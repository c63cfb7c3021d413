"""Knot graphs: certified distance bounds and hyperbolicity certificates.

Public API
----------
Homology:
    - FiniteAbelianGroup, min_generators, mod_p_dimension
    - BrieskornWeights, homology: H_1 of Brieskorn manifolds (Orlik)

Knots:
    - FormalKnot, torus, named, parse_knot
    - branched_cover_homology, tau, s_half

Distances:
    - MoveKind, DistanceBound, distance_bound, propagate
    - quasi_isometry_constants

Graphs and certificates:
    - MetricGraph, delta_four_point, triangle_thinness
    - build_witness, certify, schedule_k_for_delta
    - quotient_model, quotient_two_invariant_model, check_compatibility

Exceptions:
    - KnotGraphError: Base exception, see :mod:`knotgraph.exceptions`
    - ErrorCode, ExitCode

Configuration:
    Configure limits and defaults via ``KNOTGRAPH_*`` environment variables::

        KNOTGRAPH_COVER_DEGREES=2,3,5,9
        KNOTGRAPH_WORKERS=4
        KNOTGRAPH_MAX_SCAN_VERTICES=1024

    Or access them programmatically::

        from knotgraph.config import get_config
        config = get_config()
        print(config.limits.max_scan_vertices)
"""

from knotgraph.abelian import FiniteAbelianGroup, min_generators, mod_p_dimension
from knotgraph.bounds import (
    DistanceBound,
    distance_bound,
    propagate,
    quasi_isometry_constants,
)
from knotgraph.brieskorn import BrieskornWeights, homology
from knotgraph.catalog import MoveKind
from knotgraph.exceptions import ErrorCode, ExitCode, KnotGraphError
from knotgraph.knots import (
    FormalKnot,
    branched_cover_homology,
    named,
    s_half,
    tau,
    torus,
)
from knotgraph.metricgraph import MetricGraph, delta_four_point, triangle_thinness
from knotgraph.parser import parse_knot
from knotgraph.quotient import (
    check_compatibility,
    quotient_model,
    quotient_two_invariant_model,
)
from knotgraph.witness import build_witness, certify, schedule_k_for_delta

__all__ = [
    "BrieskornWeights",
    "DistanceBound",
    "ErrorCode",
    "ExitCode",
    "FiniteAbelianGroup",
    "FormalKnot",
    "KnotGraphError",
    "MetricGraph",
    "MoveKind",
    "branched_cover_homology",
    "build_witness",
    "certify",
    "check_compatibility",
    "delta_four_point",
    "distance_bound",
    "homology",
    "min_generators",
    "mod_p_dimension",
    "named",
    "parse_knot",
    "propagate",
    "quasi_isometry_constants",
    "quotient_model",
    "quotient_two_invariant_model",
    "s_half",
    "schedule_k_for_delta",
    "tau",
    "torus",
    "triangle_thinness",
]
