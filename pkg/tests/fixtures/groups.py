"""Brute-force group computations on explicit element sets.

Only meant for finite groups of order at most :data:`MAX_ORDER`.
"""

from __future__ import annotations

import itertools
import math

from sympy import primefactors

MAX_ORDER = 512

Element = tuple[int, ...]


def _elements(torsion: tuple[int, ...]) -> list[Element]:
    order = math.prod(torsion)
    assert order <= MAX_ORDER, f"order {order} is too large to enumerate"
    return list(itertools.product(*(range(t) for t in torsion)))


def _add(torsion: tuple[int, ...], a: Element, b: Element) -> Element:
    return tuple((x + y) % t for x, y, t in zip(a, b, torsion))


def _extend(
    torsion: tuple[int, ...], subgroup: frozenset[Element], g: Element
) -> frozenset[Element]:
    """Closure of ``subgroup`` and ``g`` under addition."""
    grown, coset = set(subgroup), subgroup
    while True:
        coset = frozenset(_add(torsion, h, g) for h in coset)
        if coset <= grown:
            return frozenset(grown)
        grown |= coset


def _generated_within(
    torsion: tuple[int, ...],
    elements: list[Element],
    subgroup: frozenset[Element],
    budget: int,
) -> bool:
    """Whether ``budget`` more elements can extend ``subgroup`` to the group."""
    if len(subgroup) == len(elements):
        return True
    if budget == 0:
        return False
    children = {
        _extend(torsion, subgroup, g) for g in elements if g not in subgroup
    }
    for child in sorted(children, key=len, reverse=True):
        if _generated_within(torsion, elements, child, budget - 1):
            return True
    return False


def brute_force_min_generators(torsion: tuple[int, ...]) -> int:
    """Least number of elements generating ``Z_t1 + ... + Z_ts``.

    Element tuples are tried in increasing size, identified by the subgroup
    they generate. Sizes below ``max_p log_p |G / pG|`` are skipped, since a
    generating set of G maps onto one of the F_p-space G / pG.
    """
    elements = _elements(torsion)
    if len(elements) == 1:
        return 0
    zero = frozenset({tuple(0 for _ in torsion)})
    start = max(
        brute_force_mod_p_dimension(torsion, p)
        for p in primefactors(len(elements))
    )
    for count in range(start, len(torsion) + 1):
        if _generated_within(torsion, elements, zero, count):
            return count
    raise AssertionError(f"{torsion} is not generated by {len(torsion)} elements")


def brute_force_mod_p_dimension(torsion: tuple[int, ...], p: int) -> int:
    """``log_p |G / pG|`` by listing ``pG``."""
    elements = _elements(torsion)
    multiples = {tuple((p * x) % t for x, t in zip(g, torsion)) for g in elements}
    quotient = len(elements) // len(multiples)
    dimension = 0
    while quotient > 1:
        assert quotient % p == 0
        quotient //= p
        dimension += 1
    return dimension


# Every group here has order at most MAX_ORDER.
ORDER_GRID: list[tuple[int, ...]] = [
    (2, 2, 2, 2),
    (6, 4),
    (9, 3),
    (2, 2, 3, 3),
    (5, 5),
    (8, 2, 5),
    (27,),
    (512,),
    (16, 32),
    (8, 8, 8),
    (2, 4, 8, 8),
    (4, 4, 4, 4),
    (2,) * 9,
    (3, 9, 9),
    (3, 3, 3, 3, 3),
    (7, 7, 7),
    (6, 6, 6),
    (2, 2, 2, 3, 3, 3),
    (9, 9, 5),
    (12, 12, 3),
    (25, 5, 4),
    (4, 5, 5, 5),
    (10, 10, 5),
    (11, 11, 4),
]
