"""Finitely generated abelian groups as direct sums of cyclic groups.

Groups are kept in primary (prime-power) canonical form, so that the minimal
number of generators and the dimension over a prime field are single-pass
counts.

Examples
--------
>>> from knotgraph.abelian import FiniteAbelianGroup, cyclic
>>> g = cyclic(6) + cyclic(4)
>>> g.torsion
(2, 3, 4)
>>> str(g)
'Z_2 + Z_3 + Z_4'
>>> min_generators(g)
2
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, reduce

from sympy import factorint, isprime

from knotgraph.exceptions import InvalidArgumentError, NotPrimeError


@lru_cache(maxsize=4096)
def _prime_power_split(order: int) -> tuple[int, ...]:
    return tuple(int(p) ** int(e) for p, e in factorint(order).items())


@lru_cache(maxsize=4096)
def _base_prime(prime_power: int) -> int:
    (p,) = factorint(prime_power)
    return int(p)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A group ``Z^free_rank + Z_{t_1} + ... + Z_{t_s}``.

    Parameters
    ----------
    free_rank : int
        Rank of the free part.
    torsion : tuple[int, ...]
        Orders of the cyclic torsion summands, each at least 2. Composite
        orders are split into prime powers on construction, so ``Z_15`` is
        stored as ``(3, 5)``.

    Notes
    -----
    Equality is equality of the canonical forms.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise InvalidArgumentError("free_rank", "must be non-negative")
        for order in self.torsion:
            if order < 2:
                raise InvalidArgumentError(
                    "torsion", f"cyclic summand of order {order} (must be >= 2)"
                )
        canonical: list[int] = []
        for order in self.torsion:
            canonical.extend(_prime_power_split(order))
        object.__setattr__(self, "torsion", tuple(sorted(canonical)))

    def __add__(self, other: FiniteAbelianGroup) -> FiniteAbelianGroup:
        return direct_sum(self, other)

    def __str__(self) -> str:
        parts: list[str] = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        for order, count in sorted(Counter(self.torsion).items()):
            parts.append(f"Z_{order}" if count == 1 else f"(Z_{order})^{count}")
        return " + ".join(parts) if parts else "0"

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Group order, or None when the free rank is positive."""
        if self.free_rank:
            return None
        return reduce(lambda a, b: a * b, self.torsion, 1)

    def invariant_factors(self) -> tuple[int, ...]:
        """Torsion as invariant factors ``d_1 | d_2 | ... | d_s``.

        Examples
        --------
        >>> FiniteAbelianGroup(0, (2, 4, 3)).invariant_factors()
        (2, 12)
        """
        by_prime: dict[int, list[int]] = {}
        for prime_power in self.torsion:
            by_prime.setdefault(_base_prime(prime_power), []).append(prime_power)
        length = max((len(powers) for powers in by_prime.values()), default=0)
        factors = [1] * length
        for powers in by_prime.values():
            for i, prime_power in enumerate(sorted(powers, reverse=True)):
                factors[length - 1 - i] *= prime_power
        return tuple(factors)

    def as_dict(self) -> dict[str, object]:
        return {
            "group": str(self),
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
        }


def trivial() -> FiniteAbelianGroup:
    """The trivial group."""
    return FiniteAbelianGroup()


def cyclic(n: int) -> FiniteAbelianGroup:
    """The cyclic group of order ``n`` (``n = 0`` gives ``Z``, ``n = 1`` trivial)."""
    return from_invariants(0, [n])


def from_invariants(
    free_rank: int, orders: list[int] | tuple[int, ...]
) -> FiniteAbelianGroup:
    """Build a group from a list of cyclic orders as produced by a diagonal form.

    Orders ``0`` count as free summands, orders ``1`` are dropped and signs
    are ignored, which is how Smith normal form diagonals read.
    """
    extra_free = sum(1 for d in orders if d == 0)
    torsion = tuple(abs(d) for d in orders if abs(d) > 1)
    return FiniteAbelianGroup(free_rank + extra_free, torsion)


_SUMMAND = re.compile(r"^Z(?:_?(\d+))?(?:\^(\d+))?$")


def parse_group(text: str) -> FiniteAbelianGroup:
    """Parse ``0``, or ``+``-joined summands ``Z``, ``Z^r``, ``Z9``, ``Z_9^r``.

    Examples
    --------
    >>> str(parse_group("Z9"))
    'Z_9'
    >>> str(parse_group("Z^2+Z2^3"))
    'Z^2 + (Z_2)^3'
    """
    text = text.strip().replace(" ", "")
    if text in {"0", "1", ""}:
        return trivial()
    free_rank = 0
    torsion: list[int] = []
    for summand in text.split("+"):
        match = _SUMMAND.match(summand)
        if match is None:
            raise InvalidArgumentError("group", f"cannot parse summand '{summand}'")
        order = int(match.group(1)) if match.group(1) else 0
        count = int(match.group(2)) if match.group(2) else 1
        if order == 0:
            free_rank += count
        elif order > 1:
            torsion.extend([order] * count)
    return FiniteAbelianGroup(free_rank, tuple(torsion))


def direct_sum(a: FiniteAbelianGroup, b: FiniteAbelianGroup) -> FiniteAbelianGroup:
    """Direct sum: free ranks add and torsion multisets are joined."""
    return FiniteAbelianGroup(a.free_rank + b.free_rank, a.torsion + b.torsion)


def min_generators(g: FiniteAbelianGroup) -> int:
    """Minimal size of a generating set of ``g``.

    Equals the free rank plus the largest number of torsion summands that
    share a prime.

    Examples
    --------
    >>> min_generators(FiniteAbelianGroup(0, (9,) * 3 + (15,) * 3))
    6
    """
    counts = Counter(_base_prime(prime_power) for prime_power in g.torsion)
    return g.free_rank + max(counts.values(), default=0)


def mod_p_dimension(g: FiniteAbelianGroup, p: int) -> int:
    """Dimension of ``g`` tensored with the field of ``p`` elements.

    Parameters
    ----------
    g : FiniteAbelianGroup
        The group.
    p : int
        A prime.

    Raises
    ------
    NotPrimeError
        If ``p`` is not prime.
    """
    if not isprime(p):
        raise NotPrimeError(p)
    return g.free_rank + sum(1 for prime_power in g.torsion if prime_power % p == 0)
