"""Catalog of certified single moves between formal knots.

Each rule relates two *residual* knots: the parts left after cancelling the
largest common connected summand of the two sides, since
``d(C # A, C # B) <= d(A, B)``. Decorations must agree in chirality (both
sides mirrored or neither); orientation reversal is ignored.

Rules
-----
crossing changes
    ``unknotting-number-one``: a summand with u = 1 (T(2,3), 6_1, Wh) -> U.
    ``torus-twist``: T(2,q) <-> T(2,q-2).
H(n)-moves (every H(m)-rule is an H(n)-rule for n >= m)
    ``hn-torus-sum``: #^j T(2,k) -> U for odd k and 1 <= j <= n-1.
    ``band-torus-staircase``: T(2n+2,2n+1) <-> T(2n,2n-1), T(4,3) -> U.
    ``band-torus-skip``: T(2n+1,2) -> T(2n-3,2), T(5,2) -> U.
"""

from __future__ import annotations

import logging
import re
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, replace

from knotgraph import logs
from knotgraph.atlas import get_atlas
from knotgraph.exceptions import InvalidArgumentError
from knotgraph.knots import (
    UNKNOT,
    FormalKnot,
    GeneratorKnot,
    NamedKnot,
    TorusKnot,
    generator,
    mirror,
    multiply,
    torus,
)

logger = logging.getLogger("knotgraph")

Residual = Counter  # Counter[GeneratorKnot]
Sample = tuple[FormalKnot, FormalKnot]


@dataclass(frozen=True)
class MoveKind:
    """Either a crossing change or an H(n)-move (``n >= 2``)."""

    family: str
    n: int = 0

    @classmethod
    def crossing(cls) -> MoveKind:
        return cls("crossing")

    @classmethod
    def hn(cls, n: int) -> MoveKind:
        if n < 2:
            raise InvalidArgumentError("n", f"H(n) needs n >= 2, got {n}")
        return cls("hn", n)

    @classmethod
    def parse(cls, text: str) -> MoveKind:
        """Parse ``cc``, ``h2`` or ``hn:<n>``."""
        text = text.strip().lower()
        if text == "cc":
            return cls.crossing()
        match = re.fullmatch(r"h(\d+)|hn:(\d+)", text)
        if match is None:
            raise InvalidArgumentError("graph", f"'{text}' is not cc, h2 or hn:<n>")
        return cls.hn(int(match.group(1) or match.group(2)))

    @property
    def is_crossing(self) -> bool:
        return self.family == "crossing"

    def __str__(self) -> str:
        return "crossing change" if self.is_crossing else f"H({self.n})"


CROSSING_CHANGE = MoveKind.crossing()
H2 = MoveKind.hn(2)


@dataclass(frozen=True)
class MoveCatalogEntry:
    """A concrete certified move ``source -> target``."""

    kind: MoveKind
    source: FormalKnot
    target: FormalKnot
    rule: str
    citation: str

    def as_dict(self) -> dict[str, str]:
        return {
            "kind": str(self.kind),
            "source": str(self.source),
            "target": str(self.target),
            "rule": self.rule,
            "citation": self.citation,
        }


def _single(residual: Residual) -> tuple[GeneratorKnot, int] | None:
    if len(residual) != 1:
        return None
    ((g, n),) = residual.items()
    return g, n


def _torus_single(residual: Residual) -> TorusKnot | None:
    single = _single(residual)
    if single is None or single[1] != 1 or not isinstance(single[0], TorusKnot):
        return None
    return single[0]


def _unreversed(residual: Residual) -> FormalKnot:
    return FormalKnot(
        tuple((replace(g, reversed=False), n) for g, n in residual.items())
    )


def _expected_torus(a: TorusKnot, p: int, q: int) -> FormalKnot:
    """T(p, q) (or U) in the chirality of ``a``."""
    expected = torus(p, q)
    return mirror(expected) if a.mirrored else expected


class CatalogRule:
    """A family of certified moves, matched on residual pairs.

    Subclasses implement :meth:`match` (one direction; :func:`adjacent`
    tries both) and :meth:`samples`.
    """

    name: str = ""
    citation: str = ""
    crossing: bool = False
    min_n: int = 2

    def applies_to(self, kind: MoveKind) -> bool:
        if kind.is_crossing:
            return self.crossing
        return not self.crossing and kind.n >= self.min_n

    def match(self, source: Residual, target: Residual, kind: MoveKind) -> bool:
        raise NotImplementedError

    def samples(self, kind: MoveKind, limit: int) -> Iterator[Sample]:
        raise NotImplementedError

    def entries(self, kind: MoveKind, limit: int = 4) -> list[MoveCatalogEntry]:
        """Up to ``limit`` concrete entries of this rule for ``kind``."""
        if not self.applies_to(kind):
            return []
        result = []
        for source, target in self.samples(kind, limit):
            result.append(
                MoveCatalogEntry(kind, source, target, self.name, self.citation)
            )
            if len(result) == limit:
                break
        return result


class UnknottingNumberOneRule(CatalogRule):
    name = "unknotting-number-one"
    citation = "a single crossing change unknots a knot with u = 1"
    crossing = True

    def match(
        self, source: Residual, target: Residual, kind: MoveKind  # noqa: ARG002
    ) -> bool:
        single = _single(source)
        if target or single is None or single[1] != 1:
            return False
        g = single[0]
        if isinstance(g, TorusKnot):
            return (g.p, g.q) == (2, 3)
        return get_atlas().entry(g.name).u_upper == 1

    def samples(self, kind: MoveKind, limit: int) -> Iterator[Sample]:  # noqa: ARG002
        yield torus(2, 3), UNKNOT
        yield torus(-2, 3), UNKNOT
        for name in get_atlas().names():
            if get_atlas().entry(name).u_upper == 1:
                yield generator(NamedKnot(name)), UNKNOT


class TorusTwistRule(CatalogRule):
    name = "torus-twist"
    citation = "a crossing change in the twist region turns T(2,q) into T(2,q-2)"
    crossing = True

    def match(
        self, source: Residual, target: Residual, kind: MoveKind  # noqa: ARG002
    ) -> bool:
        a = _torus_single(source)
        b = _torus_single(target)
        return (
            a is not None
            and b is not None
            and a.p == b.p == 2
            and b.q == a.q - 2
            and a.mirrored == b.mirrored
        )

    def samples(self, kind: MoveKind, limit: int) -> Iterator[Sample]:  # noqa: ARG002
        for i in range(limit):
            q = 5 + 2 * i
            yield torus(2, q), torus(2, q - 2)


class HnTorusSumRule(CatalogRule):
    name = "hn-torus-sum"
    citation = "#^(n-1) T(2,k) is unknotted by a single H(n)-move"

    def match(self, source: Residual, target: Residual, kind: MoveKind) -> bool:
        single = _single(source)
        if target or single is None:
            return False
        g, count = single
        return isinstance(g, TorusKnot) and g.p == 2 and 1 <= count <= kind.n - 1

    def samples(self, kind: MoveKind, limit: int) -> Iterator[Sample]:
        for i in range(limit):
            yield multiply(torus(2, 3 + 2 * i), kind.n - 1), UNKNOT


class BandStaircaseRule(CatalogRule):
    name = "band-torus-staircase"
    citation = "a noncoherent band move turns T(2n+2,2n+1) into T(2n,2n-1)"

    def match(
        self, source: Residual, target: Residual, kind: MoveKind  # noqa: ARG002
    ) -> bool:
        a = _torus_single(source)
        if a is None or a.q != a.p + 1 or a.p % 2 == 0:
            return False
        return _unreversed(target) == _expected_torus(a, a.p - 2, a.q - 2)

    def samples(self, kind: MoveKind, limit: int) -> Iterator[Sample]:  # noqa: ARG002
        for n in range(1, limit + 1):
            yield torus(2 * n + 2, 2 * n + 1), torus(2 * n, 2 * n - 1)


class BandSkipRule(CatalogRule):
    name = "band-torus-skip"
    citation = "a noncoherent band move turns T(2n+1,2) into T(2n-3,2)"

    def match(
        self, source: Residual, target: Residual, kind: MoveKind  # noqa: ARG002
    ) -> bool:
        a = _torus_single(source)
        if a is None or a.p != 2 or a.q < 5:
            return False
        return _unreversed(target) == _expected_torus(a, 2, a.q - 4)

    def samples(self, kind: MoveKind, limit: int) -> Iterator[Sample]:  # noqa: ARG002
        for n in range(2, limit + 2):
            yield torus(2 * n + 1, 2), torus(2 * n - 3, 2)


#: All rules, in matching order.
RULES: tuple[CatalogRule, ...] = (
    UnknottingNumberOneRule(),
    TorusTwistRule(),
    HnTorusSumRule(),
    BandStaircaseRule(),
    BandSkipRule(),
)


def rules_for(kind: MoveKind) -> list[CatalogRule]:
    return [rule for rule in RULES if rule.applies_to(kind)]


def get_rule(name: str) -> CatalogRule:
    for rule in RULES:
        if rule.name == name:
            return rule
    raise InvalidArgumentError("rule", f"unknown catalog rule '{name}'")


def residuals(a: FormalKnot, b: FormalKnot) -> tuple[Residual, Residual]:
    """Cancel the largest common connected summand of ``a`` and ``b``."""
    ca, cb = a.counter(), b.counter()
    common = ca & cb
    return ca - common, cb - common


def adjacent(a: FormalKnot, b: FormalKnot, kind: MoveKind) -> CatalogRule | None:
    """The catalog rule certifying ``d(a, b) <= 1`` for ``kind``, if any.

    Examples
    --------
    >>> adjacent(UNKNOT, torus(2, 9), H2).name
    'hn-torus-sum'
    >>> adjacent(torus(2, 7), torus(2, 3), H2).name
    'band-torus-skip'
    >>> adjacent(UNKNOT, torus(2, 9), CROSSING_CHANGE) is None
    True
    """
    if a == b:
        return None
    ra, rb = residuals(a, b)
    for rule in rules_for(kind):
        if rule.match(ra, rb, kind) or rule.match(rb, ra, kind):
            logger.debug(logs.CATALOG_MATCH, a, b, rule.name, kind)
            return rule
    logger.debug(logs.CATALOG_NO_MATCH, kind, a, b)
    return None


def catalog_sample(
    kind: MoveKind, rule_names: list[str] | None = None, limit: int = 4
) -> list[MoveCatalogEntry]:
    """Concrete entries of the rules that apply to ``kind``.

    Parameters
    ----------
    kind : MoveKind
        Move type.
    rule_names : list[str] | None
        Restrict to these rules (default: all applicable rules).
    limit : int
        Entries per rule.
    """
    selected = rules_for(kind)
    if rule_names is not None:
        selected = [rule for rule in selected if rule.name in rule_names]
    return [entry for rule in selected for entry in rule.entries(kind, limit)]
