"""Witness triangles for non-hyperbolicity and their certificates.

Each family is a geodesic triangle ``(l1, l2, l3)`` in a knot graph whose
corners are ``U``, ``K1`` and ``K2``, with a distinguished vertex ``M`` on
``l3``. Every step of every side is a catalog move, and every side's length
is matched against an invariant lower bound. A lower bound on
``d(M, l1 + l2)`` then shows the triangle is not delta-thin for any smaller
delta; growing ``k`` defeats every delta.

Families
--------
``h2``
    ``l1 = U .. #^2k T(2,9)``, ``l2`` appends ``2k`` copies of ``T(2,15)``,
    ``l3`` alternates the two summands; ``M = #^k T(2,9) # #^k T(2,15)``.
``hn``
    The same with every summand replaced by a block of ``n-1`` copies.
``cc``
    Concordance classes: ``l1`` appends ``k`` copies of ``Wh``, ``l2``
    appends ``k`` copies of ``K11``, ``l3`` does it in the other order;
    ``M = #^k K11``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from knotgraph import logs
from knotgraph.atlas import WHITEHEAD_D
from knotgraph.bounds import (
    DistanceBound,
    ak_lower_d2_at,
    concordance_lower,
    distance_bound,
    hnt_lower,
    path_rules,
)
from knotgraph.catalog import CROSSING_CHANGE, MoveKind, adjacent
from knotgraph.config import get_config
from knotgraph.exceptions import InvalidArgumentError, TriangleNotClosedError
from knotgraph.knots import (
    UNKNOT,
    FormalKnot,
    multiply,
    named,
    reverse_mirror,
    torus,
)
from knotgraph.limits import check_schedule_k, check_witness_k
from knotgraph.metricgraph import MetricGraph

logger = logging.getLogger("knotgraph")

SIDE_NAMES = ("l1", "l2", "l3")
K11_VARIANTS = ("trefoil", "mirror-trefoil")


class Family(str, Enum):
    H2 = "h2"
    HN = "hn"
    CONCORDANCE = "cc"


class Verdict(str, Enum):
    NOT_THIN = "not-thin"
    UNCERTIFIED = "uncertified"


Side = tuple[FormalKnot, ...]


@dataclass(frozen=True)
class TriangleWitness:
    """A closed triangle of knot paths with a distinguished vertex on ``l3``.

    Raises
    ------
    TriangleNotClosedError
        If ``l1`` and ``l3`` do not start together, ``l2`` does not run from
        the end of ``l1`` to the end of ``l3``, or the midpoint is not on
        ``l3``.
    """

    family: Family
    k: int
    n: int
    sides: tuple[Side, Side, Side]
    midpoint: FormalKnot
    k11: str = ""

    def __post_init__(self) -> None:
        l1, l2, l3 = self.sides
        if not (l1 and l2 and l3):
            raise TriangleNotClosedError("a side is empty")
        if l1[0] != l3[0] or l1[-1] != l2[0] or l2[-1] != l3[-1]:
            raise TriangleNotClosedError("the sides do not meet at three corners")
        if self.midpoint not in l3:
            raise TriangleNotClosedError("the midpoint is not a vertex of l3")

    @property
    def kind(self) -> MoveKind:
        if self.family is Family.CONCORDANCE:
            return CROSSING_CHANGE
        return MoveKind.hn(self.n)

    @property
    def corners(self) -> tuple[FormalKnot, FormalKnot, FormalKnot]:
        return self.sides[0][0], self.sides[1][0], self.sides[2][-1]

    def vertices(self) -> list[FormalKnot]:
        """Distinct vertices in side order."""
        return list(dict.fromkeys(v for side in self.sides for v in side))

    def as_dict(self) -> dict[str, object]:
        return {
            "family": self.family,
            "k": self.k,
            "n": self.n,
            "k11": self.k11 or None,
            "corners": [str(c) for c in self.corners],
            "midpoint": str(self.midpoint),
            "lengths": [len(side) - 1 for side in self.sides],
        }


def _check_k(k: int) -> None:
    if k < 1:
        raise InvalidArgumentError("k", f"k must be at least 1, got {k}")
    check_witness_k(k)


def _torus_witness(family: Family, k: int, n: int) -> TriangleWitness:
    _check_k(k)
    t9 = multiply(torus(2, 9), n - 1)
    t15 = multiply(torus(2, 15), n - 1)
    m = 2 * k
    l1 = tuple(multiply(t9, i) for i in range(m + 1))
    l2 = tuple(multiply(t9, m) + multiply(t15, i) for i in range(m + 1))
    l3 = tuple(
        multiply(t9, v // 2) + multiply(t15, (v + 1) // 2) for v in range(2 * m + 1)
    )
    return TriangleWitness(family, k, n, (l1, l2, l3), l3[m])


def build_h2_witness(k: int) -> TriangleWitness:
    """H(2) triangle with sides of lengths ``2k``, ``2k`` and ``4k``.

    Examples
    --------
    >>> [str(v) for v in build_h2_witness(1).sides[0]]
    ['U', 'T(2,9)', '2*T(2,9)']
    """
    return _torus_witness(Family.H2, k, 2)


def build_hn_witness(n: int, k: int) -> TriangleWitness:
    """H(n) triangle built from blocks of ``n-1`` copies of each summand."""
    if n < 3:
        raise InvalidArgumentError("n", f"the H(n) family needs n >= 3, got {n}")
    return _torus_witness(Family.HN, k, n)


def k11_knot(variant: str) -> FormalKnot:
    if variant not in K11_VARIANTS:
        raise InvalidArgumentError("k11", f"'{variant}' is not one of {K11_VARIANTS}")
    return torus(2, 3) if variant == "trefoil" else torus(-2, 3)


def build_concordance_witness(k: int, k11: str | None = None) -> TriangleWitness:
    """Concordance triangle with sides of lengths ``k``, ``k`` and ``2k``.

    Parameters
    ----------
    k : int
        Triangle parameter, at least 1.
    k11 : str | None
        ``"trefoil"`` (T(2,3)) or ``"mirror-trefoil"``; defaults to the
        configured variant. ``K01`` is always ``Wh`` (tau = 0, s' = 1).
    """
    _check_k(k)
    variant = get_config().k11_variant if k11 is None else k11
    k01, k11_summand = named(WHITEHEAD_D), k11_knot(variant)
    l1 = tuple(multiply(k01, j) for j in range(k + 1))
    l2 = tuple(multiply(k01, k) + multiply(k11_summand, j) for j in range(k + 1))
    l3 = tuple(multiply(k11_summand, j) for j in range(k + 1)) + tuple(
        multiply(k11_summand, k) + multiply(k01, j) for j in range(1, k + 1)
    )
    return TriangleWitness(
        Family.CONCORDANCE, k, 0, (l1, l2, l3), multiply(k11_summand, k), variant
    )


def build_witness(
    family: Family | str, k: int, n: int = 3, k11: str | None = None
) -> TriangleWitness:
    family = Family(family)
    if family is Family.H2:
        return build_h2_witness(k)
    if family is Family.HN:
        return build_hn_witness(n, k)
    return build_concordance_witness(k, k11)


def corrupt_witness(w: TriangleWitness, side: int) -> TriangleWitness:
    """Insert a back-and-forth detour after the first vertex of ``side`` (0-based)."""
    if side not in (0, 1, 2):
        raise InvalidArgumentError("side", f"side index {side} is not 0, 1 or 2")
    path = w.sides[side]
    if len(path) < 2:
        raise InvalidArgumentError("side", "cannot detour along a single vertex")
    detoured = (path[0], path[1], path[0], *path[1:])
    sides = list(w.sides)
    sides[side] = detoured
    return TriangleWitness(w.family, w.k, w.n, tuple(sides), w.midpoint, w.k11)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeCertificate:
    """One side: catalog path length against the best invariant lower bound."""

    side: str
    start: FormalKnot
    end: FormalKnot
    length: int
    bound: DistanceBound
    rules: tuple[str, ...]

    @property
    def geodesic(self) -> bool:
        return self.bound.lower_integer == self.length

    @property
    def status(self) -> str:
        if self.geodesic:
            return "geodesic"
        lower = self.bound.lower_integer
        return f"within [{lower}, {self.length}], geodesic not certified"

    def as_dict(self) -> dict[str, object]:
        return {
            "side": self.side,
            "start": str(self.start),
            "end": str(self.end),
            "length": self.length,
            "lower_bound": self.bound.lower,
            "geodesic": self.geodesic,
            "status": self.status,
            "bound_provenance": [str(c) for c in self.bound.provenance],
            "catalog_rules": sorted(set(self.rules)),
        }


@dataclass(frozen=True)
class TriangleCertificate:
    """Machine-checkable evidence that a witness triangle is not thin.

    ``separation`` uses the designated obstruction of each side and is the
    value the verdict rests on; ``separation_best`` takes every obstruction
    at every vertex and is reported alongside.
    """

    witness: TriangleWitness
    edges: tuple[EdgeCertificate, EdgeCertificate, EdgeCertificate]
    separation: Fraction
    side_separations: tuple[Fraction, Fraction]
    separation_best: Fraction
    knot_graph_lift: bool
    provenance: tuple[str, ...]

    @property
    def all_geodesic(self) -> bool:
        return all(edge.geodesic for edge in self.edges)

    @property
    def verdict(self) -> Verdict:
        return Verdict.NOT_THIN if self.all_geodesic else Verdict.UNCERTIFIED

    def as_dict(self) -> dict[str, object]:
        return {
            "witness": self.witness,
            "edges": list(self.edges),
            "separation_lower": self.separation,
            "separation_integer": math.ceil(self.separation),
            "side_separations": dict(zip(SIDE_NAMES, self.side_separations)),
            "separation_best": self.separation_best,
            "knot_graph_lift": self.knot_graph_lift,
            "not_thin_below": self.separation if self.all_geodesic else None,
            "verdict": self.verdict,
        }


Obstruction = Callable[[FormalKnot, FormalKnot], Fraction]


def designated_obstructions(
    w: TriangleWitness,
) -> tuple[tuple[str, Obstruction], tuple[str, Obstruction]]:
    """The lower bound used on ``l1`` and on ``l2`` for ``d(M, vertex)``."""
    if w.family is Family.H2:
        return (
            ("ak: p=5", lambda a, b: Fraction(ak_lower_d2_at(a, b, 5))),
            ("hnt: m=9, n=2", lambda a, b: hnt_lower(a, b, 2, 9)),
        )
    if w.family is Family.HN:
        n = w.n
        return (
            (f"hnt: m=5, n={n}", lambda a, b: hnt_lower(a, b, n, 5)),
            (f"hnt: m=9, n={n}", lambda a, b: hnt_lower(a, b, n, 9)),
        )
    tau_s = ("tau-s", lambda a, b: Fraction(concordance_lower(a, b)))
    return tau_s, tau_s


def side_separations(w: TriangleWitness) -> tuple[Fraction, Fraction]:
    """Minimum designated lower bound on ``d(M, v)`` over ``l1`` and over ``l2``."""
    obstructions = designated_obstructions(w)
    return tuple(
        min(bound(w.midpoint, v) for v in side)
        for (_, bound), side in zip(obstructions, w.sides[:2])
    )


def separation(w: TriangleWitness) -> Fraction:
    return min(side_separations(w))


def _certify_side(w: TriangleWitness, index: int) -> EdgeCertificate:
    side = w.sides[index]
    rules = tuple(path_rules(side, w.kind))
    bound = distance_bound(side[0], side[-1], w.kind).tighten(upper=len(rules))
    certificate = EdgeCertificate(
        SIDE_NAMES[index], side[0], side[-1], len(rules), bound, rules
    )
    if not certificate.geodesic:
        logger.warning(logs.EDGE_UNCERTIFIED, index + 1, w.family.value, w.k)
    return certificate


def certify(w: TriangleWitness) -> TriangleCertificate:
    """Certify every side and bound the distance from ``M`` to ``l1 + l2``.

    Raises
    ------
    NoCatalogMoveError
        If a step of a side is not a catalog move.

    Examples
    --------
    >>> cert = certify(build_h2_witness(4))
    >>> cert.separation, cert.verdict.value
    (Fraction(3, 1), 'not-thin')
    """
    check_witness_k(w.k)
    edges = tuple(_certify_side(w, i) for i in range(3))
    per_side = side_separations(w)
    designated = separation(w)
    best = min(
        max(distance_bound(w.midpoint, v, w.kind).lower, obstruction(w.midpoint, v))
        for (_, obstruction), side in zip(designated_obstructions(w), w.sides[:2])
        for v in side
    )
    names = [name for name, _ in designated_obstructions(w)]
    provenance = (
        f"l1: d(M, v) >= {names[0]}",
        f"l2: d(M, v) >= {names[1]}",
        "sides: catalog path length against the best lower bound",
    )
    if w.family is Family.CONCORDANCE:
        provenance += ("lift: crossing-change distance dominates concordance distance",)
    return TriangleCertificate(
        witness=w,
        edges=edges,
        separation=designated,
        side_separations=per_side,
        separation_best=best,
        knot_graph_lift=w.family is Family.CONCORDANCE,
        provenance=provenance,
    )


def schedule_k_for_delta(
    family: Family | str, delta: Fraction | int, n: int = 3, k11: str | None = None
) -> int:
    """Least ``k`` whose certified separation exceeds ``delta``.

    Separation is nondecreasing in ``k`` for every family, so the search
    doubles ``k`` until it passes and then bisects.

    Examples
    --------
    >>> schedule_k_for_delta("h2", 5)
    7
    """
    delta = Fraction(delta)
    if delta < 0:
        raise InvalidArgumentError("delta", f"delta must be >= 0, got {delta}")

    def passes(k: int) -> bool:
        check_schedule_k(k)
        return separation(build_witness(family, k, n=n, k11=k11)) > delta

    low, high = 0, 1
    while not passes(high):
        low, high = high, 2 * high
    while high - low > 1:
        middle = (low + high) // 2
        if passes(middle):
            high = middle
        else:
            low = middle
    return high


def concordance_translate(
    knot: FormalKnot, source: FormalKnot, target: FormalKnot
) -> FormalKnot:
    """The homogeneity map ``L -> L # -K-bar # K'`` sending ``[K]`` to ``[K']``.

    Examples
    --------
    >>> str(concordance_translate(UNKNOT, UNKNOT, torus(2, 9)))
    'T(2,9)'
    """
    return knot + reverse_mirror(source) + target


def witness_graph(w: TriangleWitness) -> MetricGraph:
    """Triangle vertices with every catalog-certified edge among them."""
    vertices = w.vertices()
    edges = [(a, b) for a, b in combinations(vertices, 2) if adjacent(a, b, w.kind)]
    return MetricGraph.from_edges(edges, vertices=vertices)
