"""Formal knots: connected sums of atlas generators and their invariants.

A :class:`FormalKnot` is a multiset of decorated generators (torus knots and
named atlas knots, possibly mirrored and/or reversed). The empty multiset is
the unknot ``U``.

Examples
--------
>>> from knotgraph.knots import torus, tau, e
>>> k = 2 * torus(2, 9) + torus(2, 15)
>>> str(k)
'2*T(2,9) + T(2,15)'
>>> tau(k)
15
>>> e(k, 2)
3
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Union

from knotgraph import logs
from knotgraph.abelian import (
    FiniteAbelianGroup,
    direct_sum,
    min_generators,
    mod_p_dimension,
    trivial,
)
from knotgraph.atlas import get_atlas, is_torus_pair, torus_gamma4, torus_genus
from knotgraph.brieskorn import cover_weights, homology
from knotgraph.exceptions import (
    InvalidArgumentError,
    InvalidTorusKnotError,
    UnsupportedCoverError,
)

logger = logging.getLogger("knotgraph")


@dataclass(frozen=True)
class TorusKnot:
    """The torus knot T(p, q), stored with ``2 <= p < q`` coprime."""

    p: int
    q: int
    mirrored: bool = False
    reversed: bool = False

    def __post_init__(self) -> None:
        if not is_torus_pair(self.p, self.q):
            raise InvalidTorusKnotError(self.p, self.q)
        if self.p > self.q:
            p, q = self.q, self.p
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)

    @property
    def base_name(self) -> str:
        return f"T({self.p},{self.q})"


@dataclass(frozen=True)
class NamedKnot:
    """A named generator looked up in the atlas (``6_1``, ``Wh``...)."""

    name: str
    mirrored: bool = False
    reversed: bool = False

    def __post_init__(self) -> None:
        get_atlas().entry(self.name)

    @property
    def base_name(self) -> str:
        return self.name


GeneratorKnot = Union[TorusKnot, NamedKnot]


def _generator_key(g: GeneratorKnot) -> tuple:
    if isinstance(g, TorusKnot):
        return (0, g.p, g.q, "", g.mirrored, g.reversed)
    return (1, 0, 0, g.name, g.mirrored, g.reversed)


def pretty_generator(g: GeneratorKnot) -> str:
    """Surface syntax of a generator, e.g. ``m(r(T(2,3)))``."""
    text = g.base_name
    if g.reversed:
        text = f"r({text})"
    if g.mirrored:
        text = f"m({text})"
    return text


def undecorated(g: GeneratorKnot) -> GeneratorKnot:
    return replace(g, mirrored=False, reversed=False)


@dataclass(frozen=True)
class FormalKnot:
    """A connected sum ``#_i n_i K_i`` of atlas generators.

    ``terms`` is kept sorted with merged, positive multiplicities, so equality
    of two formal knots is multiset equality.
    """

    terms: tuple[tuple[GeneratorKnot, int], ...] = ()

    def __post_init__(self) -> None:
        counts: Counter[GeneratorKnot] = Counter()
        for generator, count in self.terms:
            if count < 0:
                raise InvalidArgumentError("multiplicity", f"{count} is negative")
            counts[generator] += count
        normalized = tuple(
            sorted(
                ((g, n) for g, n in counts.items() if n > 0),
                key=lambda item: _generator_key(item[0]),
            )
        )
        object.__setattr__(self, "terms", normalized)

    @classmethod
    def of(cls, *generators: GeneratorKnot) -> FormalKnot:
        return cls(tuple((g, 1) for g in generators))

    @classmethod
    def from_counter(cls, counts: Counter[GeneratorKnot] | dict) -> FormalKnot:
        return cls(tuple(counts.items()))

    @property
    def is_unknot(self) -> bool:
        return not self.terms

    def counter(self) -> Counter[GeneratorKnot]:
        return Counter(dict(self.terms))

    def count(self, generator: GeneratorKnot) -> int:
        return dict(self.terms).get(generator, 0)

    def size(self) -> int:
        """Number of prime summands, with multiplicity."""
        return sum(n for _, n in self.terms)

    def __add__(self, other: FormalKnot) -> FormalKnot:
        return connected_sum(self, other)

    def __mul__(self, n: int) -> FormalKnot:
        return multiply(self, n)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return pretty(self)


UNKNOT = FormalKnot()


def generator(g: GeneratorKnot) -> FormalKnot:
    return FormalKnot(((g, 1),))


def torus(p: int, q: int) -> FormalKnot:
    """T(p, q) as a formal knot.

    A negative parameter gives the mirror, and ``|p| = 1`` or ``|q| = 1``
    gives the unknot.

    Examples
    --------
    >>> str(torus(7, 2))
    'T(2,7)'
    >>> str(torus(-3, 2))
    'm(T(2,3))'
    >>> torus(1, 5).is_unknot
    True
    """
    if p == 0 or q == 0:
        raise InvalidTorusKnotError(p, q)
    if abs(p) == 1 or abs(q) == 1:
        return UNKNOT
    if math.gcd(p, q) != 1:
        raise InvalidTorusKnotError(p, q)
    return generator(TorusKnot(abs(p), abs(q), mirrored=(p < 0) != (q < 0)))


def named(name: str) -> FormalKnot:
    return generator(NamedKnot(name))


def connected_sum(a: FormalKnot, b: FormalKnot) -> FormalKnot:
    """Multiset union; the unknot is the identity."""
    return FormalKnot(a.terms + b.terms)


def multiply(k: FormalKnot, n: int) -> FormalKnot:
    """``#^n k`` (``n = 0`` gives the unknot)."""
    if n < 0:
        raise InvalidArgumentError("count", f"{n} is negative")
    return FormalKnot(tuple((g, c * n) for g, c in k.terms))


def mirror(k: FormalKnot) -> FormalKnot:
    return FormalKnot(
        tuple((replace(g, mirrored=not g.mirrored), n) for g, n in k.terms)
    )


def reverse(k: FormalKnot) -> FormalKnot:
    return FormalKnot(
        tuple((replace(g, reversed=not g.reversed), n) for g, n in k.terms)
    )


def reverse_mirror(k: FormalKnot) -> FormalKnot:
    """``-K-bar``: toggle both decorations on every generator."""
    return reverse(mirror(k))


def pretty(k: FormalKnot) -> str:
    """Render in the expression grammar, e.g. ``2*T(2,9) + m(T(2,3))``."""
    if k.is_unknot:
        return "U"
    return " + ".join(
        pretty_generator(g) if n == 1 else f"{n}*{pretty_generator(g)}"
        for g, n in k.terms
    )


# ---------------------------------------------------------------------------
# Exact invariants
# ---------------------------------------------------------------------------


def _signed(g: GeneratorKnot, value: int) -> int:
    return -value if g.mirrored else value


def _generator_tau(g: GeneratorKnot) -> int:
    if isinstance(g, TorusKnot):
        return _signed(g, torus_genus(g.p, g.q))
    return _signed(g, get_atlas().entry(g.name).tau)


def _generator_s_half(g: GeneratorKnot) -> int:
    if isinstance(g, TorusKnot):
        return _signed(g, torus_genus(g.p, g.q))
    return _signed(g, get_atlas().entry(g.name).s_half)


def tau(k: FormalKnot) -> int:
    """Ozsvath-Szabo tau, additive under connected sum, odd under mirroring."""
    return sum(n * _generator_tau(g) for g, n in k.terms)


def s_half(k: FormalKnot) -> int:
    """Half the Rasmussen invariant, additive, odd under mirroring."""
    return sum(n * _generator_s_half(g) for g, n in k.terms)


# ---------------------------------------------------------------------------
# Branched covers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=2048)
def _generator_cover(g: GeneratorKnot, m: int) -> FiniteAbelianGroup:
    if isinstance(g, TorusKnot):
        weights = cover_weights(g.p, g.q, m)
        logger.debug(logs.COVER_CACHE_MISS, m, g.base_name, weights)
        return homology(weights)
    covers = get_atlas().entry(g.name).covers
    if m not in covers:
        raise UnsupportedCoverError(g.name, m)
    return covers[m]


def _repeat(group: FiniteAbelianGroup, n: int) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(group.free_rank * n, group.torsion * n)


def supports_cover(k: FormalKnot, m: int) -> bool:
    """Whether every summand of ``k`` has known m-fold cover homology."""
    try:
        branched_cover_homology(k, m)
    except UnsupportedCoverError:
        return False
    return True


def branched_cover_homology(k: FormalKnot, m: int) -> FiniteAbelianGroup:
    """H_1 of the m-fold cyclic branched cover of ``k``.

    Torus summands go through Sigma_m(T(p, q)) = Sigma(p, q, m); named
    summands use the atlas; decorations do not change the group.

    Raises
    ------
    UnsupportedCoverError
        If a named summand has no tabulated m-fold cover.
    """
    if m < 2:
        raise InvalidArgumentError("m", f"cover degree {m} must be at least 2")
    result = trivial()
    for g, n in k.terms:
        result = direct_sum(result, _repeat(_generator_cover(undecorated(g), m), n))
    return result


def e(k: FormalKnot, m: int) -> int:
    """Minimal number of generators of H_1(Sigma_m(k); Z)."""
    return min_generators(branched_cover_homology(k, m))


def e_mod_p(k: FormalKnot, m: int, p: int) -> int:
    """Minimal number of generators of H_1(Sigma_m(k); Z_p)."""
    return mod_p_dimension(branched_cover_homology(k, m), p)


def clear_cover_cache() -> None:
    """Forget cached cover groups (needed after swapping the atlas)."""
    _generator_cover.cache_clear()


# ---------------------------------------------------------------------------
# Certified intervals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantInterval:
    """Certified ``lower <= value <= upper`` for an invariant."""

    lower: int
    upper: int

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise InvalidArgumentError(
                "interval", f"lower {self.lower} exceeds upper {self.upper}"
            )

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def as_dict(self) -> dict[str, object]:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact}


def _generator_u_upper(g: GeneratorKnot) -> int:
    if isinstance(g, TorusKnot):
        return torus_genus(g.p, g.q)
    return get_atlas().entry(g.name).u_upper


def _generator_g4_upper(g: GeneratorKnot) -> int:
    if isinstance(g, TorusKnot):
        return torus_genus(g.p, g.q)
    return get_atlas().entry(g.name).g4_upper


def _generator_gamma4(g: GeneratorKnot) -> tuple[int, int]:
    if isinstance(g, TorusKnot):
        return torus_gamma4(g.p, g.q)
    return get_atlas().entry(g.name).gamma4


def u_upper(k: FormalKnot) -> int:
    """Subadditive upper bound on the unknotting number."""
    return sum(n * _generator_u_upper(g) for g, n in k.terms)


def g4_interval(k: FormalKnot) -> InvariantInterval:
    """Smooth 4-genus: ``max(|tau|, |s'|) <= g4 <= min(sum g4, u)``."""
    lower = max(abs(tau(k)), abs(s_half(k)))
    upper = min(sum(n * _generator_g4_upper(g) for g, n in k.terms), u_upper(k))
    return InvariantInterval(lower, upper)


def u_interval(k: FormalKnot) -> InvariantInterval:
    """Unknotting number: ``max(g4 lower, e_2) <= u <= sum u``.

    The Wendt bound ``e_2 <= u`` applies when every summand has a known
    double branched cover.
    """
    lower = g4_interval(k).lower
    if supports_cover(k, 2):
        lower = max(lower, e(k, 2))
    return InvariantInterval(lower, u_upper(k))


def gamma4_interval(k: FormalKnot) -> InvariantInterval:
    """Nonorientable 4-genus.

    Exact atlas value for a single generator; otherwise
    ``min(sum gamma4, 2 g4 + 1)`` above and 1 below unless ``k`` may be slice.
    """
    if k.is_unknot:
        return InvariantInterval(0, 0)
    if k.size() == 1:
        return InvariantInterval(*_generator_gamma4(k.terms[0][0]))
    g4 = g4_interval(k)
    if g4.upper == 0:
        return InvariantInterval(0, 0)
    upper = min(sum(n * _generator_gamma4(g)[1] for g, n in k.terms), 2 * g4.upper + 1)
    lower = 1 if g4.lower > 0 else 0
    return InvariantInterval(lower, upper)


def invariant_summary(
    k: FormalKnot, degrees: Iterable[int] = (2,)
) -> dict[str, object]:
    """Every invariant of ``k`` the library can certify, for reports."""
    covers: dict[str, object] = {}
    for m in degrees:
        if supports_cover(k, m):
            group = branched_cover_homology(k, m)
            covers[str(m)] = {"group": str(group), "e": min_generators(group)}
    return {
        "knot": pretty(k),
        "tau": tau(k),
        "s_half": s_half(k),
        "g4": g4_interval(k),
        "u": u_interval(k),
        "gamma4": gamma4_interval(k),
        "covers": covers,
    }
