"""Certified bounds on H(n)-Gordian and crossing-change distances.

Lower bounds come from branched-cover homology (``e_m`` and ``e_m^p``) and
from the concordance invariants tau and s'. Upper bounds come from catalog
paths. Lower bounds stay exact rationals until a certificate compares them
with a path length.

Rule sets for :func:`propagate`
-------------------------------
For knots K != K' and n >= 2:

(i)   d_n >= d_{n+1}, since an H(n)-move is realized by an H(n+1)-move;
(ii)  d_n <= u implies that d_N <= 1 for a single larger index N;
(iii) d_n (n >= 3) is bounded below by a multiple of d_2.

``"literal"`` uses ``N = (n-1)u`` and ``(n-1) d_n >= (2/3) d_2 + 1``.
``"sound"`` (the default) counts bands instead: an H(n)-move is n-1 bands and
k gathered bands form one H(k+1)-move, so ``N = (n-1)u + 1`` and
``(n-1) d_n >= (2/3) d_2``. The literal forms contradict the catalog at
n = 3 (``#^2 T(2,k)`` has d_3 = 1 and d_2 = 2) and can raise
:class:`~knotgraph.exceptions.BoundConflictError` on valid inputs.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction

from knotgraph import logs
from knotgraph.atlas import get_atlas
from knotgraph.catalog import MoveKind, adjacent, residuals
from knotgraph.config import get_config
from knotgraph.exceptions import (
    BoundConflictError,
    InvalidArgumentError,
    NoCatalogMoveError,
)
from knotgraph.knots import (
    FormalKnot,
    GeneratorKnot,
    TorusKnot,
    e,
    e_mod_p,
    s_half,
    supports_cover,
    tau,
)
from knotgraph.utils import format_rational

logger = logging.getLogger("knotgraph")

RULE_SETS = ("sound", "literal")


@dataclass(frozen=True)
class BoundCertificate:
    """One step of a bound's provenance, e.g. ``hnt: m=9, n=2``."""

    rule: str
    params: tuple[tuple[str, object], ...] = ()

    @classmethod
    def make(cls, rule: str, /, **params: object) -> BoundCertificate:
        return cls(rule, tuple(params.items()))

    def __str__(self) -> str:
        if not self.params:
            return self.rule
        rendered = ", ".join(
            f"{key}={format_rational(value) if isinstance(value, Fraction) else value}"
            for key, value in self.params
        )
        return f"{self.rule}: {rendered}"


@dataclass(frozen=True)
class DistanceBound:
    """``lower <= d <= upper`` with its provenance.

    Raises
    ------
    BoundConflictError
        If the ceiling of ``lower`` exceeds a known ``upper``.
    """

    lower: Fraction = Fraction(0)
    upper: int | None = None
    provenance: tuple[BoundCertificate, ...] = ()
    index: int | str = "?"

    def __post_init__(self) -> None:
        object.__setattr__(self, "lower", Fraction(self.lower))
        if self.lower < 0:
            raise InvalidArgumentError("lower", "distance lower bounds are >= 0")
        if self.upper is not None and self.lower_integer > self.upper:
            raise BoundConflictError(
                self.index, format_rational(self.lower), self.upper
            )

    @property
    def lower_integer(self) -> int:
        return math.ceil(self.lower)

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower_integer == self.upper

    def tighten(
        self,
        *,
        lower: Fraction | int | None = None,
        upper: int | None = None,
        certificate: BoundCertificate | None = None,
    ) -> DistanceBound:
        """Return the bound improved by ``lower``/``upper`` where they are better."""
        new_lower = self.lower if lower is None else max(self.lower, Fraction(lower))
        new_upper = self.upper
        if upper is not None and (new_upper is None or upper < new_upper):
            new_upper = upper
        if new_lower == self.lower and new_upper == self.upper:
            return self
        provenance = self.provenance + ((certificate,) if certificate else ())
        return replace(self, lower=new_lower, upper=new_upper, provenance=provenance)

    def as_dict(self) -> dict[str, object]:
        return {
            "lower_rational": self.lower,
            "lower_integer": self.lower_integer,
            "upper": self.upper,
            "exact": self.exact,
            "provenance": [str(c) for c in self.provenance],
        }


# ---------------------------------------------------------------------------
# Lower bounds
# ---------------------------------------------------------------------------


def hnt_lower(k1: FormalKnot, k2: FormalKnot, n: int, m: int) -> Fraction:
    """``|e_m(k1) - e_m(k2)| / ((n-1)(m-1)) <= d_n(k1, k2)``.

    Examples
    --------
    >>> from knotgraph.knots import UNKNOT, torus
    >>> hnt_lower(UNKNOT, 6 * torus(2, 9), n=2, m=2)
    Fraction(6, 1)
    """
    if n < 2 or m < 2:
        raise InvalidArgumentError("n, m", f"need n >= 2 and m >= 2, got n={n}, m={m}")
    return Fraction(abs(e(k1, m) - e(k2, m)), (n - 1) * (m - 1))


def best_hnt_lower(
    k1: FormalKnot, k2: FormalKnot, n: int, degrees: Iterable[int] | None = None
) -> tuple[Fraction, int | None]:
    """Largest :func:`hnt_lower` over ``degrees`` where both covers are known.

    Returns
    -------
    tuple[Fraction, int | None]
        The bound and the maximizing degree (None when no degree applies).
    """
    degrees = get_config().cover_degrees if degrees is None else degrees
    best, best_m = Fraction(0), None
    for m in degrees:
        if not (supports_cover(k1, m) and supports_cover(k2, m)):
            continue
        value = hnt_lower(k1, k2, n, m)
        if best_m is None or value > best:
            best, best_m = value, m
    return best, best_m


def ak_lower_d2(k1: FormalKnot, k2: FormalKnot) -> int:
    """``max(|e_2^3 diff|, |e_2^5 diff|) <= d_2(k1, k2)``."""
    return max(ak_lower_d2_at(k1, k2, 3), ak_lower_d2_at(k1, k2, 5))


def ak_lower_d2_at(k1: FormalKnot, k2: FormalKnot, p: int) -> int:
    """The single-prime part of :func:`ak_lower_d2` (p in {3, 5})."""
    if p not in (3, 5):
        raise InvalidArgumentError("p", "the e_2^p bound on d_2 holds for p = 3, 5")
    return abs(e_mod_p(k1, 2, p) - e_mod_p(k2, 2, p))


def concordance_lower(k1: FormalKnot, k2: FormalKnot) -> int:
    """``max(|tau diff|, |s' diff|)``, a lower bound for concordance distance."""
    return max(abs(tau(k1) - tau(k2)), abs(s_half(k1) - s_half(k2)))


# ---------------------------------------------------------------------------
# Upper bounds
# ---------------------------------------------------------------------------


def path_rules(path: Sequence[FormalKnot], kind: MoveKind) -> list[str]:
    """Catalog rule of every step of ``path`` (repeated vertices are skipped).

    Raises
    ------
    NoCatalogMoveError
        At the first step no rule certifies.
    """
    names = []
    for step, (a, b) in enumerate(zip(path, path[1:])):
        if a == b:
            continue
        rule = adjacent(a, b, kind)
        if rule is None:
            raise NoCatalogMoveError(step, str(a), str(b), str(kind))
        names.append(rule.name)
    return names


def upper_from_path(path: Sequence[FormalKnot], kind: MoveKind) -> int:
    """Number of catalog-certified steps of ``path``, an upper bound on distance.

    Examples
    --------
    >>> from knotgraph.catalog import H2
    >>> from knotgraph.knots import UNKNOT, torus
    >>> upper_from_path([UNKNOT, torus(2, 9)], H2)
    1
    >>> upper_from_path([UNKNOT], H2)
    0
    """
    return len(path_rules(path, kind))


def _generator_unknotting_steps(
    g: GeneratorKnot, count: int, kind: MoveKind
) -> int | None:
    """Length of a catalog path unknotting ``#^count g``, if the catalog has one."""
    if isinstance(g, TorusKnot):
        if kind.is_crossing:
            return count * (g.q - 1) // 2 if g.p == 2 else None
        if g.p == 2:
            return math.ceil(count / (kind.n - 1))
        if g.q == g.p + 1 and g.p % 2 == 1:
            return count * (g.p - 1) // 2
        return None
    if kind.is_crossing and get_atlas().entry(g.name).u_upper == 1:
        return count
    return None


def residual_path_upper(k1: FormalKnot, k2: FormalKnot, kind: MoveKind) -> int | None:
    """Upper bound through the unknot after cancelling common summands."""
    total = 0
    for residual in residuals(k1, k2):
        for g, count in residual.items():
            steps = _generator_unknotting_steps(g, count, kind)
            if steps is None:
                return None
            total += steps
    return total


# ---------------------------------------------------------------------------
# Propagation
# ---------------------------------------------------------------------------


class BoundTable(dict):
    """Bounds on ``d_n`` for one knot pair, keyed by ``n >= 2``."""

    def propagate(self, rules: str | None = None) -> BoundTable:
        return propagate(self, rules=rules)

    def as_dict(self) -> dict[str, object]:
        return {f"d_{n}": self[n] for n in sorted(self)}


def _propagation_round(table: dict[int, DistanceBound], rules: str) -> int:
    changed = 0

    def update(n: int, bound: DistanceBound) -> None:
        nonlocal changed
        if table.get(n) != bound:
            table[n] = bound
            changed += 1

    keys = sorted(table)
    # (i) lower bounds flow down, upper bounds flow up
    for i, a in enumerate(keys):
        for b in keys[i + 1 :]:
            if table[b].lower > table[a].lower:
                update(
                    a,
                    table[a].tighten(
                        lower=table[b].lower,
                        certificate=BoundCertificate.make("hnt-i", source=f"d_{b}"),
                    ),
                )
            if table[a].upper is not None:
                update(
                    b,
                    table[b].tighten(
                        upper=table[a].upper,
                        certificate=BoundCertificate.make("hnt-i", source=f"d_{a}"),
                    ),
                )

    # (iii) only for distinct knots, i.e. once d_2 is known to be positive
    if 2 in table and table[2].lower > 0:
        d2 = table[2].lower_integer
        for n in keys:
            if n < 3:
                continue
            value = Fraction(2, 3) * d2
            if rules == "literal":
                value += 1
            value /= n - 1
            update(
                n,
                table[n].tighten(
                    lower=value,
                    certificate=BoundCertificate.make(
                        "hnt-iii", rules=rules, d2_lower=d2
                    ),
                ),
            )

    # (ii) gathered bands form a single larger move
    for n in keys:
        u = table[n].upper
        if u is None or u < 1:
            continue
        target = (n - 1) * u + (0 if rules == "literal" else 1)
        if target <= n:
            continue
        if target not in table:
            logger.debug(logs.PROPAGATE_NEW_INDEX, target, n, u)
        current = table.get(target, DistanceBound(index=target))
        update(
            target,
            current.tighten(
                upper=1,
                certificate=BoundCertificate.make(
                    "hnt-ii", rules=rules, source=f"d_{n}", upper=u
                ),
            ),
        )
    return changed


def propagate(
    bounds: Mapping[int, DistanceBound], rules: str | None = None
) -> BoundTable:
    """Close a per-n bound table under the H(n) comparison rules.

    Parameters
    ----------
    bounds : Mapping[int, DistanceBound]
        Bounds on d_n keyed by n >= 2.
    rules : str | None
        ``"sound"`` or ``"literal"``; defaults to the configured rule set,
        itself ``"sound"`` unless overridden.

    Notes
    -----
    ``"literal"`` moves a d_2 upper bound u to d_n at index ``(n-1)u`` and
    uses ``(n-1)d_n >= (2/3)d_2 + 1``. ``"sound"`` uses index ``(n-1)u + 1``
    and ``(n-1)d_n >= (2/3)d_2``. The literal forms contradict the catalog
    at n = 3 (``#^2 T(2,k)`` has d_3 = 1 and d_2 = 2). From d_2 >= 9,
    ``"literal"`` gives d_4 >= 3 while the default ``"sound"`` gives d_4 >= 2;
    pass ``rules="literal"`` (or ``--rules literal``) for the literal numbers.

    Returns
    -------
    BoundTable
        The fixed point; a second application changes nothing.

    Raises
    ------
    BoundConflictError
        If some lower bound ends up above an upper bound.

    Examples
    --------
    >>> table = propagate({2: DistanceBound(9), 4: DistanceBound()}, rules="literal")
    >>> table[4].lower_integer
    3
    >>> propagate({2: DistanceBound(9), 4: DistanceBound()})[4].lower_integer
    2
    """
    rules = get_config().hnt_rules if rules is None else rules
    if rules not in RULE_SETS:
        raise InvalidArgumentError("rules", f"'{rules}' is not one of {RULE_SETS}")
    for n in bounds:
        if n < 2:
            raise InvalidArgumentError("n", f"bound table index {n} is below 2")
    table = {n: replace(bound, index=n) for n, bound in bounds.items()}
    round_number = 0
    while True:
        round_number += 1
        changed = _propagation_round(table, rules)
        logger.debug(logs.PROPAGATE_ROUND, round_number, changed)
        if not changed:
            return BoundTable(sorted(table.items()))


# ---------------------------------------------------------------------------
# Combined bounds
# ---------------------------------------------------------------------------


def _d2_lower(k1: FormalKnot, k2: FormalKnot, degrees: Iterable[int]) -> DistanceBound:
    bound = DistanceBound(index=2)
    value, m = best_hnt_lower(k1, k2, 2, degrees)
    if m is not None:
        bound = bound.tighten(
            lower=value, certificate=BoundCertificate.make("hnt", m=m, n=2)
        )
    if supports_cover(k1, 2) and supports_cover(k2, 2):
        for p in (3, 5):
            bound = bound.tighten(
                lower=ak_lower_d2_at(k1, k2, p),
                certificate=BoundCertificate.make("ak", p=p),
            )
    return bound


def _path_upper(
    bound: DistanceBound, k1: FormalKnot, k2: FormalKnot, kind: MoveKind
) -> DistanceBound:
    if adjacent(k1, k2, kind) is not None:
        rule = adjacent(k1, k2, kind)
        bound = bound.tighten(
            upper=1, certificate=BoundCertificate.make("catalog", rule=rule.name)
        )
    through_unknot = residual_path_upper(k1, k2, kind)
    if through_unknot is not None:
        bound = bound.tighten(
            upper=through_unknot, certificate=BoundCertificate("catalog-unknotting")
        )
    return bound


def distance_bound(
    k1: FormalKnot,
    k2: FormalKnot,
    kind: MoveKind,
    degrees: Iterable[int] | None = None,
    rules: str | None = None,
) -> DistanceBound:
    """Best certified bound on the distance of ``k1`` and ``k2`` for ``kind``.

    Crossing changes use tau and s'. H(n)-moves use the ``e_m`` bound over the
    configured cover degrees, the ``e_2^p`` bounds at n = 2, and for n >= 3
    the propagated d_2 bound.
    """
    degrees = tuple(get_config().cover_degrees if degrees is None else degrees)
    if k1 == k2:
        return DistanceBound(0, 0, (BoundCertificate("identical"),))

    if kind.is_crossing:
        bound = DistanceBound(
            concordance_lower(k1, k2),
            provenance=(BoundCertificate.make("tau-s"),),
            index="cc",
        )
        return _path_upper(bound, k1, k2, kind)

    d2 = _path_upper(_d2_lower(k1, k2, degrees), k1, k2, MoveKind.hn(2))
    if kind.n == 2:
        return d2
    dn = DistanceBound(index=kind.n)
    value, m = best_hnt_lower(k1, k2, kind.n, degrees)
    if m is not None:
        dn = dn.tighten(
            lower=value, certificate=BoundCertificate.make("hnt", m=m, n=kind.n)
        )
    dn = _path_upper(dn, k1, k2, kind)
    return propagate({2: d2, kind.n: dn}, rules=rules)[kind.n]


@dataclass(frozen=True)
class QuasiIsometryConstants:
    """Constants with ``d_2/a - b <= d_n <= a d_2 + b`` and C-dense image."""

    n: int
    a: Fraction
    b: Fraction
    C: Fraction
    derivation: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "C": self.C,
            "derivation": list(self.derivation),
        }


def quasi_isometry_constants(n: int) -> QuasiIsometryConstants:
    """Constants making the identity map of knots a quasi-isometry d_2 -> d_n.

    Examples
    --------
    >>> quasi_isometry_constants(4).a
    Fraction(9, 2)
    """
    if n < 3:
        raise InvalidArgumentError(
            "n", f"quasi-isometry constants need n >= 3, got {n}"
        )
    a = Fraction(3 * (n - 1), 2)
    return QuasiIsometryConstants(
        n=n,
        a=a,
        b=Fraction(0),
        C=Fraction(0),
        derivation=(
            f"upper: d_{n} <= d_2 by (i), applied {n - 2} time(s); d_2 <= a d_2",
            f"lower: (n-1) d_{n} >= (2/3) d_2 by (iii) for distinct knots, "
            f"so d_{n} >= d_2 / {format_rational(a)}",
            "both sides vanish on equal knots, so b = 0",
            "the identity is onto, so C = 0",
        ),
    )
