"""Quotient knot graphs by integer-valued invariants.

Identifying knots with the same value of an invariant compatible with a
move (it changes by at most 1 per move) gives a graph on the values. When
every value is realized by a family of witnesses with consecutive members
one move apart, the quotient is a path and the invariant is an isometry onto
the integers.

Models
------
========  ========  ==================================  ==============
tag       move      witness ``K_n``                     classes
========  ========  ==================================  ==============
g4        cc        T(2,2n+1)                           0..N
u         cc        T(2,2n+1)                           0..N
gamma4    H(2)      T(2n+2,2n+1)                        0..N
tau       cc        T(2,2n+1), its mirror for n < 0     -N..N
shalf     cc        T(2,2n+1), its mirror for n < 0     -N..N
========  ========  ==================================  ==============
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from knotgraph.atlas import STEVEDORE
from knotgraph.bounds import BoundCertificate, DistanceBound
from knotgraph.catalog import (
    CROSSING_CHANGE,
    H2,
    MoveCatalogEntry,
    MoveKind,
    adjacent,
    catalog_sample,
)
from knotgraph.exceptions import (
    InvalidArgumentError,
    NonComputableInvariantError,
    WitnessVerificationError,
)
from knotgraph.knots import (
    FormalKnot,
    InvariantInterval,
    g4_interval,
    gamma4_interval,
    multiply,
    named,
    s_half,
    tau,
    torus,
    u_interval,
)
from knotgraph.limits import check_quotient_size
from knotgraph.metricgraph import MetricGraph, link_of_vertex

logger = logging.getLogger("knotgraph")

Invariant = Callable[[FormalKnot], "int | InvariantInterval"]

INVARIANTS: dict[str, Invariant] = {
    "g4": g4_interval,
    "u": u_interval,
    "gamma4": gamma4_interval,
    "tau": tau,
    "shalf": s_half,
}

MODEL_MOVES: dict[str, MoveKind] = {
    "g4": CROSSING_CHANGE,
    "u": CROSSING_CHANGE,
    "gamma4": H2,
    "tau": CROSSING_CHANGE,
    "shalf": CROSSING_CHANGE,
}

SIGNED_MODELS = frozenset({"tau", "shalf"})


def exact_value(invariant: str, knot: FormalKnot) -> int:
    """The invariant of ``knot`` when it is pinned down exactly.

    Raises
    ------
    NonComputableInvariantError
        If only a non-degenerate interval is certified.
    """
    if invariant not in INVARIANTS:
        raise InvalidArgumentError("invariant", f"unknown invariant '{invariant}'")
    value = INVARIANTS[invariant](knot)
    if isinstance(value, int):
        return value
    if not value.exact:
        raise NonComputableInvariantError(
            invariant, str(knot), value.lower, value.upper
        )
    return value.lower


def model_witness(invariant: str, n: int) -> FormalKnot:
    """The witness ``K_n`` of class ``n`` in the single-invariant model."""
    if invariant == "gamma4":
        return torus(2 * n + 2, 2 * n + 1)
    knot = torus(2, 2 * abs(n) + 1)
    return knot if n >= 0 else torus(-2, 2 * abs(n) + 1)


@dataclass(frozen=True)
class QuotientModel:
    """Path graph of invariant values with one verified witness per class."""

    invariant: str
    move: MoveKind
    graph: MetricGraph
    witnesses: tuple[tuple[int, FormalKnot], ...]

    def witness(self, n: int) -> FormalKnot:
        return dict(self.witnesses)[n]

    def link_of_zero(self) -> MetricGraph:
        return link_of_vertex(self.graph, 0)

    def as_dict(self) -> dict[str, object]:
        link = self.link_of_zero()
        return {
            "invariant": self.invariant,
            "move": str(self.move),
            "classes": [n for n, _ in self.witnesses],
            "witnesses": {str(n): str(knot) for n, knot in self.witnesses},
            "diameter": self.graph.diameter(),
            "link_of_zero": {
                "vertices": list(link.vertices),
                "connected": len(link) > 0 and link.is_connected(),
            },
        }


def _check_size(size: int, minimum: int = 1) -> None:
    if size < minimum:
        raise InvalidArgumentError("size", f"N must be at least {minimum}, got {size}")
    check_quotient_size(size)


def quotient_model(invariant: str, size: int) -> QuotientModel:
    """Build and verify the quotient model of ``invariant`` up to ``size``.

    Raises
    ------
    WitnessVerificationError
        If a witness has the wrong invariant value or two consecutive
        witnesses are not one catalog move apart.

    Examples
    --------
    >>> model = quotient_model("tau", 3)
    >>> sorted(model.link_of_zero().vertices)
    [-1, 1]
    """
    if invariant not in MODEL_MOVES:
        raise InvalidArgumentError("model", f"unknown quotient model '{invariant}'")
    _check_size(size)
    move = MODEL_MOVES[invariant]
    lo = -size if invariant in SIGNED_MODELS else 0
    classes = range(lo, size + 1)
    witnesses = tuple((n, model_witness(invariant, n)) for n in classes)

    for n, knot in witnesses:
        value = exact_value(invariant, knot)
        if value != n:
            raise WitnessVerificationError(
                f"{invariant}({knot}) = {value}, expected {n}"
            )
    for (n, a), (_, b) in zip(witnesses, witnesses[1:]):
        if adjacent(a, b, move) is None:
            raise WitnessVerificationError(
                f"witnesses of classes {n} and {n + 1} are not one {move} apart"
            )
    return QuotientModel(invariant, move, MetricGraph.path_graph(lo, size), witnesses)


# ---------------------------------------------------------------------------
# Two invariants
# ---------------------------------------------------------------------------


Point = tuple[int, int]


@dataclass(frozen=True)
class TwoInvariantModel:
    """Lattice points ``(m, n)``, ``0 <= m <= n <= N``, for the pair (g4, u).

    ``K_{m,n} = #^(n-m) 6_1 # #^m T(2,3)`` has ``g4 = m`` and ``u = n``.
    """

    size: int
    witnesses: tuple[tuple[Point, FormalKnot], ...]
    bounds: tuple[tuple[Point, Point, DistanceBound], ...]

    @property
    def points(self) -> list[Point]:
        return [point for point, _ in self.witnesses]

    def bound(self, a: Point, b: Point) -> DistanceBound:
        for p, q, bound in self.bounds:
            if {p, q} == {a, b}:
                return bound
        raise InvalidArgumentError("pair", f"{a} and {b} are not distinct model points")

    def as_dict(self) -> dict[str, object]:
        return {
            "size": self.size,
            "witnesses": {f"{m},{n}": str(knot) for (m, n), knot in self.witnesses},
            "intervals": [
                {
                    "from": list(p),
                    "to": list(q),
                    "lower": bound.lower_integer,
                    "upper": bound.upper,
                }
                for p, q, bound in self.bounds
            ],
        }


def two_invariant_witness(m: int, n: int) -> FormalKnot:
    return multiply(named(STEVEDORE), n - m) + multiply(torus(2, 3), m)


def quotient_two_invariant_model(size: int) -> TwoInvariantModel:
    """Certified ``[l_inf, l_1]`` distance intervals on the (g4, u) lattice.

    The lower end holds because g4 and u each change by at most 1 under a
    crossing change; the upper end is a lattice path of class moves.

    Examples
    --------
    >>> model = quotient_two_invariant_model(2)
    >>> b = model.bound((0, 0), (1, 2))
    >>> (b.lower_integer, b.upper)
    (2, 3)
    """
    _check_size(size)
    witnesses = []
    for n in range(size + 1):
        for m in range(n + 1):
            knot = two_invariant_witness(m, n)
            g4, u = exact_value("g4", knot), exact_value("u", knot)
            if (g4, u) != (m, n):
                raise WitnessVerificationError(
                    f"{knot} has (g4, u) = ({g4}, {u}), expected ({m}, {n})"
                )
            witnesses.append(((m, n), knot))

    bounds = []
    for (p, _), (q, _) in combinations(witnesses, 2):
        dm, dn = abs(p[0] - q[0]), abs(p[1] - q[1])
        bound = DistanceBound(
            Fraction(max(dm, dn)),
            dm + dn,
            (
                BoundCertificate.make("compatible-invariants", g4=dm, u=dn),
                BoundCertificate.make("lattice-path", steps=dm + dn),
            ),
        )
        bounds.append((p, q, bound))
    return TwoInvariantModel(size, tuple(witnesses), tuple(bounds))


# ---------------------------------------------------------------------------
# A non-compatible invariant
# ---------------------------------------------------------------------------


def noncompatible_model(size: int) -> MetricGraph:
    """Classes ``0..N`` with ``d(n, 0) = 1`` and ``d(n, m) = 1`` when ``|n-m| = 4``.

    Any two classes are within 2, and the metric is not a subspace of the
    real line (see :func:`knotgraph.metricgraph.embeds_in_real_line`).
    """
    _check_size(size, minimum=5)
    edges = [(0, n) for n in range(1, size + 1)]
    edges += [(n, n + 4) for n in range(1, size - 3)]
    return MetricGraph.from_edges(edges, vertices=range(size + 1))


@dataclass(frozen=True)
class CompatibilityCheck:
    """Whether an invariant changes by at most 1 across sampled catalog moves."""

    invariant: str
    move: MoveKind
    compatible: bool
    checked: int
    violation: MoveCatalogEntry | None = None
    delta: int = 0

    def as_dict(self) -> dict[str, object]:
        return {
            "invariant": self.invariant,
            "move": str(self.move),
            "compatible": self.compatible,
            "checked": self.checked,
            "violation": self.violation,
            "delta": self.delta,
        }


def check_compatibility(
    invariant: str,
    move: MoveKind,
    entries: list[MoveCatalogEntry] | None = None,
) -> CompatibilityCheck:
    """Check ``|I(source) - I(target)| <= 1`` on catalog entries.

    Parameters
    ----------
    invariant : str
        One of ``g4``, ``u``, ``gamma4``, ``tau``, ``shalf``.
    move : MoveKind
        Move whose catalog is sampled.
    entries : list[MoveCatalogEntry] | None
        Entries to check; defaults to :func:`knotgraph.catalog.catalog_sample`.

    Raises
    ------
    NonComputableInvariantError
        If the invariant of a sampled knot is not known exactly.
    """
    entries = catalog_sample(move) if entries is None else entries
    for entry in entries:
        source = exact_value(invariant, entry.source)
        delta = abs(source - exact_value(invariant, entry.target))
        if delta > 1:
            return CompatibilityCheck(
                invariant, move, False, len(entries), entry, delta
            )
    return CompatibilityCheck(invariant, move, True, len(entries))
