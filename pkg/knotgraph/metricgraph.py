"""Finite unit-edge graphs as geodesic metric spaces.

Every metric quantity is measured at vertices. Distances come from one
breadth-first search per source (``networkx.all_pairs_shortest_path_length``)
and are cached as a symmetric integer ``numpy`` matrix.

Two hyperbolicity constants are available and never converted into each
other: :func:`delta_four_point` for a whole graph and
:func:`triangle_thinness` for one explicitly given geodesic triangle.

Examples
--------
>>> g = MetricGraph.cycle_graph(4)
>>> delta_four_point(g)
Fraction(1, 1)
>>> MetricGraph.path_graph(0, 3).distance(0, 3)
3
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Hashable, Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

import networkx as nx
import numpy as np

from knotgraph import logs
from knotgraph.config import get_config
from knotgraph.exceptions import (
    DisconnectedGraphError,
    InvalidArgumentError,
    NotGeodesicError,
    TriangleNotClosedError,
)
from knotgraph.limits import check_graph_limits

logger = logging.getLogger("knotgraph")

Vertex = Hashable
VertexPath = Sequence[Vertex]

#: Largest vertex set :func:`embeds_in_real_line` enumerates orderings of.
MAX_EMBEDDING_POINTS = 9


class MetricGraph:
    """An immutable simple graph with its shortest-path metric.

    Parameters
    ----------
    graph : nx.Graph
        Source graph; copied and frozen. Self-loops are dropped.

    Notes
    -----
    Vertex order is the insertion order of ``graph`` and fixes the row order
    of :meth:`apsp`.
    """

    def __init__(self, graph: nx.Graph):
        graph = nx.Graph(graph)
        graph.remove_edges_from(list(nx.selfloop_edges(graph)))
        self._graph = nx.freeze(graph)
        self._vertices: tuple[Vertex, ...] = tuple(graph.nodes)
        self._index = {v: i for i, v in enumerate(self._vertices)}
        self._distances: np.ndarray | None = None

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[Vertex, Vertex]], vertices: Iterable[Vertex] = ()
    ) -> MetricGraph:
        graph = nx.Graph()
        graph.add_nodes_from(vertices)
        graph.add_edges_from(edges)
        return cls(graph)

    @classmethod
    def path_graph(cls, lo: int, hi: int) -> MetricGraph:
        """Integers ``lo..hi`` with edges ``{i, i+1}``."""
        if hi < lo:
            raise InvalidArgumentError("hi", f"{hi} is below {lo}")
        return cls.from_edges(
            ((i, i + 1) for i in range(lo, hi)), vertices=range(lo, hi + 1)
        )

    @classmethod
    def cycle_graph(cls, n: int) -> MetricGraph:
        if n < 3:
            raise InvalidArgumentError("n", f"a cycle needs 3 vertices, got {n}")
        return cls(nx.cycle_graph(n))

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    @property
    def graph(self) -> nx.Graph:
        return self._graph

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def edges(self) -> list[tuple[Vertex, Vertex]]:
        return list(self._graph.edges)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._index

    def __repr__(self) -> str:
        edges = self._graph.number_of_edges()
        return f"MetricGraph(vertices={len(self)}, edges={edges})"

    def index(self, vertex: Vertex) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise InvalidArgumentError(
                "vertex", f"{vertex!r} is not in the graph"
            ) from None

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return self._graph.has_edge(u, v)

    def neighbors(self, vertex: Vertex) -> list[Vertex]:
        self.index(vertex)
        return list(self._graph.neighbors(vertex))

    def subgraph(self, vertices: Iterable[Vertex]) -> MetricGraph:
        """Induced subgraph, keeping this graph's vertex order."""
        keep = set(vertices)
        return MetricGraph(self._graph.subgraph(v for v in self._vertices if v in keep))

    def is_connected(self) -> bool:
        return len(self) == 0 or nx.is_connected(self._graph)

    # ------------------------------------------------------------------
    # Metric
    # ------------------------------------------------------------------

    def apsp(self) -> np.ndarray:
        """All-pairs distance matrix, rows in :attr:`vertices` order.

        Raises
        ------
        DisconnectedGraphError
            If the graph has more than one component.
        """
        if self._distances is None:
            if not self.is_connected():
                components = nx.number_connected_components(self._graph)
                raise DisconnectedGraphError(components)
            n = len(self)
            distances = np.zeros((n, n), dtype=np.int64)
            for source, lengths in nx.all_pairs_shortest_path_length(self._graph):
                row = self._index[source]
                for target, length in lengths.items():
                    distances[row, self._index[target]] = length
            distances.setflags(write=False)
            self._distances = distances
        return self._distances

    def distance(self, u: Vertex, v: Vertex) -> int:
        return int(self.apsp()[self.index(u), self.index(v)])

    def distance_to_set(self, u: Vertex, targets: Iterable[Vertex]) -> int:
        columns = [self.index(v) for v in targets]
        if not columns:
            raise InvalidArgumentError("targets", "distance to an empty set")
        return int(self.apsp()[self.index(u), columns].min())

    def diameter(self) -> int:
        distances = self.apsp()
        return int(distances.max()) if distances.size else 0


# ---------------------------------------------------------------------------
# Four-point hyperbolicity
# ---------------------------------------------------------------------------


def _doubled_delta_rows(distances: np.ndarray, rows: Sequence[int]) -> int:
    """Twice the four-point delta over quadruples whose first point is in ``rows``."""
    n = distances.shape[0]
    best = 0
    for x in rows:
        dx = distances[x]
        for y in range(x + 1, n):
            dy = distances[y]
            s1 = distances + distances[x, y]
            s2 = dx[:, None] + dy[None, :]
            s3 = dy[:, None] + dx[None, :]
            high = np.maximum(np.maximum(s1, s2), s3)
            low = np.minimum(np.minimum(s1, s2), s3)
            middle = s1 + s2 + s3 - high - low
            best = max(best, int((high - middle).max()))
    return best


def delta_four_point(graph: MetricGraph, workers: int | None = None) -> Fraction:
    """Four-point hyperbolicity constant of ``graph``.

    The maximum over vertex quadruples of half the gap between the largest
    and second largest of ``d(x,y)+d(z,w)``, ``d(x,z)+d(y,w)`` and
    ``d(x,w)+d(y,z)``.

    Parameters
    ----------
    graph : MetricGraph
        A connected graph.
    workers : int | None
        Threads scanning disjoint blocks of first points (default: the
        configured worker count). The result does not depend on it.

    Returns
    -------
    Fraction
        An exact multiple of 1/2.

    Raises
    ------
    DisconnectedGraphError
        If ``graph`` is disconnected.
    LimitExceededError
        If ``graph`` is larger than the configured scan ceiling.
    """
    check_graph_limits(graph)
    distances = graph.apsp()
    n = len(graph)
    if n < 4:
        return Fraction(0)
    workers = max(1, get_config().workers if workers is None else workers)
    logger.debug(logs.SCAN_START, n, workers)
    blocks = [range(start, n, workers) for start in range(workers)]
    if workers == 1:
        doubled = _doubled_delta_rows(distances, blocks[0])
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            scans = pool.map(partial(_doubled_delta_rows, distances), blocks)
            doubled = max(scans)
    return Fraction(doubled, 2)


def delta_four_point_naive(graph: MetricGraph) -> Fraction:
    """Reference quadruple loop for :func:`delta_four_point`."""
    distances = graph.apsp()
    best = 0
    for x, y, z, w in itertools.combinations(range(len(graph)), 4):
        sums = sorted(
            (
                distances[x, y] + distances[z, w],
                distances[x, z] + distances[y, w],
                distances[x, w] + distances[y, z],
            )
        )
        best = max(best, int(sums[2] - sums[1]))
    return Fraction(best, 2)


# ---------------------------------------------------------------------------
# Triangles
# ---------------------------------------------------------------------------


def _check_path(graph: MetricGraph, side: int, path: VertexPath) -> None:
    for u, v in zip(path, path[1:]):
        if not graph.has_edge(u, v):
            raise TriangleNotClosedError(
                f"side {side}: {u!r} and {v!r} are not adjacent"
            )
    length = len(path) - 1
    distance = graph.distance(path[0], path[-1])
    if length != distance:
        raise NotGeodesicError(side, length, distance)


def _check_closed(sides: Sequence[VertexPath]) -> None:
    ends = [{side[0], side[-1]} for side in sides]
    corners = [ends[0] & ends[2], ends[0] & ends[1], ends[1] & ends[2]]
    if any(not corner for corner in corners):
        raise TriangleNotClosedError("the three sides do not share their endpoints")


def triangle_thinness(graph: MetricGraph, sides: Sequence[VertexPath]) -> Fraction:
    """Least vertex-scale delta for which the triangle is delta-thin.

    Parameters
    ----------
    graph : MetricGraph
        Ambient connected graph.
    sides : Sequence[VertexPath]
        Three vertex paths, each joining two corners of the triangle (either
        orientation).

    Returns
    -------
    Fraction
        ``max`` over vertices ``x`` of each side of ``d(x, other two sides)``.

    Raises
    ------
    TriangleNotClosedError
        If the sides are not paths of ``graph`` or do not close up.
    NotGeodesicError
        If a side is longer than the distance of its endpoints.
    """
    if len(sides) != 3:
        raise TriangleNotClosedError(f"expected 3 sides, got {len(sides)}")
    for number, side in enumerate(sides, start=1):
        if not side:
            raise TriangleNotClosedError(f"side {number} is empty")
    _check_closed(sides)
    for number, side in enumerate(sides, start=1):
        _check_path(graph, number, side)
    thinness = 0
    for i, side in enumerate(sides):
        others = [v for j, other in enumerate(sides) if j != i for v in other]
        for vertex in side:
            thinness = max(thinness, graph.distance_to_set(vertex, others))
    return Fraction(thinness)


# ---------------------------------------------------------------------------
# Links, quasi-isometries, embeddings
# ---------------------------------------------------------------------------


def link_of_vertex(graph: MetricGraph, vertex: Vertex) -> MetricGraph:
    """Induced subgraph on the unit sphere ``{w : d(vertex, w) = 1}``."""
    return graph.subgraph(graph.neighbors(vertex))


def link_diameter(graph: MetricGraph, vertex: Vertex) -> int | None:
    """Diameter of the link in its own metric, None when disconnected or empty."""
    link = link_of_vertex(graph, vertex)
    if len(link) == 0 or not link.is_connected():
        return None
    return link.diameter()


@dataclass(frozen=True)
class QuasiIsometryCheck:
    """Outcome of :func:`verify_quasi_isometry`.

    ``violation`` is the first offending pair ``(x, x')`` for the distance
    inequalities, or ``(y,)`` for a target farther than C from the image.
    """

    holds: bool
    violation: tuple[Vertex, ...] | None = None
    clause: str | None = None

    def as_dict(self) -> dict[str, object]:
        return {
            "holds": self.holds,
            "violation": (
                None if self.violation is None else [str(v) for v in self.violation]
            ),
            "clause": self.clause,
        }


def verify_quasi_isometry(
    x: MetricGraph,
    y: MetricGraph,
    f: Mapping[Vertex, Vertex],
    a: Fraction | int,
    b: Fraction | int,
    c: Fraction | int,
) -> QuasiIsometryCheck:
    """Check ``d_x/a - b <= d_y(f, f) <= a d_x + b`` and C-density of ``f(x)``.

    All comparisons are exact: the rational constants are cleared into
    integer inequalities before they meet the distance matrices.

    Examples
    --------
    >>> p9, p5 = MetricGraph.path_graph(0, 8), MetricGraph.path_graph(0, 4)
    >>> verify_quasi_isometry(p9, p5, {i: i // 2 for i in range(9)}, 2, 1, 1).holds
    True
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a < 1 or b < 0 or c < 0:
        raise InvalidArgumentError("a, b, C", "need a >= 1, b >= 0 and C >= 0")
    missing = [v for v in x.vertices if v not in f]
    if missing:
        raise InvalidArgumentError("map", f"no image for {missing[0]!r}")
    image = np.array([y.index(f[v]) for v in x.vertices], dtype=np.int64)

    dx = x.apsp()
    dy = y.apsp()[np.ix_(image, image)]
    an, ad, bn, bd = a.numerator, a.denominator, b.numerator, b.denominator
    # dx/a - b <= dy   <=>  dx*ad*bd <= an*(dy*bd + bn)
    lower_ok = dx * ad * bd <= an * (dy * bd + bn)
    # dy <= a*dx + b   <=>  dy*ad*bd <= an*dx*bd + bn*ad
    upper_ok = dy * ad * bd <= an * dx * bd + bn * ad
    for clause, ok in (("lower", lower_ok), ("upper", upper_ok)):
        bad = np.argwhere(~ok)
        if bad.size:
            i, j = (int(t) for t in bad[0])
            return QuasiIsometryCheck(False, (x.vertices[i], x.vertices[j]), clause)

    if len(y) and not image.size:
        return QuasiIsometryCheck(False, (y.vertices[0],), "density")
    if len(y):
        reach = y.apsp()[:, np.unique(image)].min(axis=1)
        far = np.flatnonzero(reach * c.denominator > c.numerator)
        if far.size:
            return QuasiIsometryCheck(False, (y.vertices[int(far[0])],), "density")
    return QuasiIsometryCheck(True)


def embeds_in_real_line(graph: MetricGraph, vertices: Sequence[Vertex]) -> bool:
    """Whether ``vertices`` with the graph metric embed isometrically in R.

    An isometric embedding orders the points, so it suffices to place the
    points of each ordering at their running distances and compare.
    """
    points = list(dict.fromkeys(vertices))
    if len(points) > MAX_EMBEDDING_POINTS:
        raise InvalidArgumentError(
            "vertices", f"at most {MAX_EMBEDDING_POINTS} points, got {len(points)}"
        )
    if len(points) <= 2:
        return True
    rows = [graph.index(v) for v in points]
    distances = graph.apsp()[np.ix_(rows, rows)]
    for ordering in itertools.permutations(range(len(points))):
        if ordering[0] > ordering[-1]:
            continue
        positions = np.cumsum(
            [0] + [int(distances[u, v]) for u, v in zip(ordering, ordering[1:])]
        )
        placed = np.abs(positions[:, None] - positions[None, :])
        if np.array_equal(placed, distances[np.ix_(ordering, ordering)]):
            return True
    return False
