"""First homology of Brieskorn manifolds via Orlik's algorithm.

The m-fold cyclic branched cover of S^3 along the torus knot T(p, q) is the
Brieskorn manifold Sigma(p, q, m), so this module is the homology engine for
branched covers of torus knots (see :mod:`knotgraph.knots`).

For a subset I of {1, 2, 3}::

    kappa(I)  = sum_{J <= I} (-1)^(|I|-|J|) prod(w_J) / lcm(w_J)
    kappa'(I) = kappa(I) if |I| is even else 0
    c(I)      = gcd(w_k : k not in I) / prod_{J < I} c(J),   c({}) = 1
    r         = max_I kappa(I)
    d_j       = prod_{I : kappa'(I) >= j} c(I),   j = 1..r

and H_1 = Z^kappa({1,2,3}) + Z_{d_1} + ... + Z_{d_r}.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from knotgraph import logs
from knotgraph.abelian import FiniteAbelianGroup, from_invariants
from knotgraph.exceptions import (
    InvalidArgumentError,
    InvalidWeightsError,
    NonIntegralError,
)

logger = logging.getLogger("knotgraph")

IndexSubset = tuple[int, ...]

FULL_SET: IndexSubset = (1, 2, 3)

#: Every subset of {1, 2, 3}, by size then lexicographically.
ALL_SUBSETS: tuple[IndexSubset, ...] = tuple(
    subset for size in range(4) for subset in combinations(FULL_SET, size)
)


@dataclass(frozen=True)
class BrieskornWeights:
    """Exponents of ``z1^w1 + z2^w2 + z3^w3 = 0``, each greater than 1."""

    w1: int
    w2: int
    w3: int

    def __post_init__(self) -> None:
        if min(self.as_tuple()) <= 1:
            raise InvalidWeightsError(self.as_tuple())

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.w1, self.w2, self.w3)

    def weight(self, index: int) -> int:
        return self.as_tuple()[index - 1]

    def __str__(self) -> str:
        return f"({self.w1},{self.w2},{self.w3})"


def index_subset(indices: Iterable[int]) -> IndexSubset:
    """Normalize ``indices`` to a sorted subset of {1, 2, 3}."""
    subset = tuple(sorted(set(indices)))
    if not set(subset) <= set(FULL_SET):
        raise InvalidArgumentError("I", f"{subset} is not a subset of {{1, 2, 3}}")
    return subset


def _proper_subsets(subset: IndexSubset) -> Iterable[IndexSubset]:
    for size in range(len(subset)):
        yield from combinations(subset, size)


def kappa(w: BrieskornWeights, indices: Iterable[int]) -> int:
    """Orlik's kappa(I).

    Examples
    --------
    >>> kappa(BrieskornWeights(2, 9, 9), {2, 3})
    8
    >>> kappa(BrieskornWeights(2, 9, 9), ())
    1
    """
    subset = index_subset(indices)
    total = 0
    for size in range(len(subset) + 1):
        sign = -1 if (len(subset) - size) % 2 else 1
        for sub in combinations(subset, size):
            weights = [w.weight(i) for i in sub]
            # prod(w_J) / lcm(w_J) is 1 for the empty set
            total += sign * (math.prod(weights) // math.lcm(*weights) if weights else 1)
    return total


def kappa_prime(w: BrieskornWeights, indices: Iterable[int]) -> int:
    """kappa(I) on even-size subsets, 0 on odd-size ones."""
    subset = index_subset(indices)
    return kappa(w, subset) if len(subset) % 2 == 0 else 0


def c_value(w: BrieskornWeights, indices: Iterable[int]) -> int:
    """Orlik's c(I), computed inductively over proper subsets.

    Raises
    ------
    InvalidArgumentError
        For I = {1, 2, 3}, where the gcd of the empty set would be needed.
    NonIntegralError
        If the inductive quotient does not divide evenly.

    Examples
    --------
    >>> c_value(BrieskornWeights(2, 9, 9), {2, 3})
    2
    >>> c_value(BrieskornWeights(2, 9, 9), {1})
    9
    """
    subset = index_subset(indices)
    if subset == FULL_SET:
        raise InvalidArgumentError("I", "c({1,2,3}) involves the gcd of no weights")
    return _c_value(w.as_tuple(), subset)


@lru_cache(maxsize=4096)
def _c_value(weights: tuple[int, int, int], subset: IndexSubset) -> int:
    if not subset:
        return 1
    complement = [weights[i - 1] for i in FULL_SET if i not in subset]
    numerator = math.gcd(*complement)
    denominator = math.prod(_c_value(weights, sub) for sub in _proper_subsets(subset))
    if numerator % denominator:
        raise NonIntegralError(weights, subset)
    return numerator // denominator


@dataclass(frozen=True)
class OrlikTable:
    """Every intermediate quantity of one run of Orlik's algorithm."""

    weights: BrieskornWeights
    kappa: dict[IndexSubset, int]
    kappa_prime: dict[IndexSubset, int]
    c: dict[IndexSubset, int]
    r: int
    d: tuple[int, ...]
    free_rank: int

    def as_dict(self) -> dict[str, object]:
        def label(subset: IndexSubset) -> str:
            return "{" + ",".join(str(i) for i in subset) + "}"

        return {
            "weights": list(self.weights.as_tuple()),
            "kappa": {label(s): v for s, v in self.kappa.items()},
            "kappa_prime": {label(s): v for s, v in self.kappa_prime.items()},
            "c": {label(s): v for s, v in self.c.items()},
            "r": self.r,
            "d": list(self.d),
            "free_rank": self.free_rank,
        }


def orlik_table(w: BrieskornWeights) -> OrlikTable:
    """Run Orlik's algorithm and keep the intermediate values.

    Only the c(I) with kappa'(I) > 0 enter the d_j and only those are
    evaluated.
    """
    kappas = {subset: kappa(w, subset) for subset in ALL_SUBSETS}
    kappa_primes = {
        subset: (value if len(subset) % 2 == 0 else 0)
        for subset, value in kappas.items()
    }
    c_values = {
        subset: c_value(w, subset)
        for subset, value in kappa_primes.items()
        if value > 0
    }
    r = max(kappas.values())
    max_kappa_prime = max(kappa_primes.values())
    if r > max_kappa_prime:
        logger.warning(
            logs.ORLIK_RANK_ANOMALY, w, r, max_kappa_prime, max_kappa_prime
        )
    d = tuple(
        math.prod(
            c_values[subset] for subset, value in kappa_primes.items() if value >= j
        )
        for j in range(1, r + 1)
    )
    logger.debug(logs.ORLIK_TABLE, w, kappas, kappa_primes)
    return OrlikTable(
        weights=w,
        kappa=kappas,
        kappa_prime=kappa_primes,
        c=c_values,
        r=r,
        d=d,
        free_rank=kappas[FULL_SET],
    )


@lru_cache(maxsize=1024)
def homology(w: BrieskornWeights) -> FiniteAbelianGroup:
    """First integral homology of Sigma(w1, w2, w3).

    Examples
    --------
    >>> str(homology(BrieskornWeights(2, 15, 9)))
    '(Z_2)^2'
    >>> str(homology(BrieskornWeights(2, 9, 2)))
    'Z_9'
    >>> homology(BrieskornWeights(2, 9, 5)).is_trivial
    True
    """
    table = orlik_table(w)
    # d_j = 1 summands are trivial and dropped by from_invariants
    return from_invariants(table.free_rank, [d for d in table.d if d != 1])


def cover_weights(p: int, q: int, m: int) -> BrieskornWeights:
    """Weights of the m-fold cyclic branched cover of T(p, q)."""
    return BrieskornWeights(abs(p), abs(q), m)
