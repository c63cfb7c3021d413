"""Generator atlas: invariant values of the knots formal sums are built from.

Torus-knot values are closed formulas; named knots are table rows. The table
is immutable once loaded and can be extended from a text file::

    # name tau s_half u_upper g4_upper [cover:m=<degree>:<group>]...
    6_1  0  0  1  0  cover:m=2:Z9

``<group>`` is ``0`` or ``+``-joined summands ``Z``, ``Z^r``, ``Z<n>``,
``Z<n>^r`` (see :func:`knotgraph.abelian.parse_group`).
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType

from knotgraph import logs
from knotgraph.abelian import FiniteAbelianGroup, cyclic, parse_group
from knotgraph.exceptions import GraphFormatError, UnknownKnotError

logger = logging.getLogger("knotgraph")

STEVEDORE = "6_1"
WHITEHEAD_D = "Wh"


@dataclass(frozen=True)
class AtlasEntry:
    """Invariants of a named (non-torus) generator in its positive chirality.

    ``tau`` and ``s_half`` change sign under mirroring; the unknotting
    number, genus bounds and cover homology do not.
    """

    name: str
    tau: int
    s_half: int
    u_upper: int
    g4_upper: int
    gamma4: tuple[int, int]
    covers: Mapping[int, FiniteAbelianGroup] = field(default_factory=dict)
    citation: str = ""

    def as_dict(self) -> dict[str, object]:
        return {
            "name": self.name,
            "tau": self.tau,
            "s_half": self.s_half,
            "u_upper": self.u_upper,
            "g4_upper": self.g4_upper,
            "gamma4": list(self.gamma4),
            "covers": {str(m): str(g) for m, g in sorted(self.covers.items())},
            "citation": self.citation,
        }


_BUILTIN_ENTRIES: tuple[AtlasEntry, ...] = (
    AtlasEntry(
        # Slice (ribbon), u = 1, double branched cover L(9,7)
        name=STEVEDORE,
        tau=0,
        s_half=0,
        u_upper=1,
        g4_upper=0,
        gamma4=(0, 0),
        covers={2: cyclic(9)},
        citation="Stevedore knot 6_1: ribbon, unknotting number 1, Sigma_2 = L(9,7)",
    ),
    AtlasEntry(
        # Positive-clasped untwisted double of the trefoil
        name=WHITEHEAD_D,
        tau=0,
        s_half=1,
        u_upper=1,
        g4_upper=1,
        gamma4=(1, 3),
        citation="D+(T(2,3),2): tau = 0 (Hedden), s = 2, unknotting number 1",
    ),
)


class KnotAtlas:
    """Immutable name -> :class:`AtlasEntry` table."""

    def __init__(self, entries: Iterable[AtlasEntry] = ()) -> None:
        self._entries: Mapping[str, AtlasEntry] = MappingProxyType(
            {entry.name: entry for entry in entries}
        )

    def __contains__(self, name: object) -> bool:
        return name in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def entry(self, name: str) -> AtlasEntry:
        """Look up ``name``.

        Raises
        ------
        UnknownKnotError
            If the atlas has no such generator.
        """
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownKnotError(name) from None

    def names(self) -> list[str]:
        return sorted(self._entries)

    def extend(self, entries: Iterable[AtlasEntry]) -> KnotAtlas:
        """Return a new atlas with ``entries`` added (later entries win)."""
        return KnotAtlas([*self._entries.values(), *entries])


def default_atlas() -> KnotAtlas:
    """Atlas with the built-in named generators."""
    return KnotAtlas(_BUILTIN_ENTRIES)


def parse_atlas_line(line: str, lineno: int = 0) -> AtlasEntry | None:
    """Parse one extension-file record; blank and ``#`` lines give None."""
    stripped = line.split("#", 1)[0].strip()
    if not stripped:
        return None
    fields = stripped.split()
    if len(fields) < 5:
        raise GraphFormatError(lineno, line.rstrip("\n"))
    name = fields[0]
    try:
        tau, s_half, u_upper, g4_upper = (int(value) for value in fields[1:5])
    except ValueError:
        raise GraphFormatError(lineno, line.rstrip("\n")) from None

    covers: dict[int, FiniteAbelianGroup] = {}
    for token in fields[5:]:
        kind, _, rest = token.partition(":")
        degree, _, group = rest.partition(":")
        if kind != "cover" or not degree.startswith("m=") or not degree[2:].isdigit():
            raise GraphFormatError(lineno, line.rstrip("\n"))
        covers[int(degree[2:])] = parse_group(group)

    slice_known = g4_upper == 0
    gamma4 = (0, 0) if slice_known else (int(bool(tau or s_half)), 2 * g4_upper + 1)
    return AtlasEntry(
        name=name,
        tau=tau,
        s_half=s_half,
        u_upper=u_upper,
        g4_upper=g4_upper,
        gamma4=gamma4,
        covers=covers,
        citation=f"atlas file line {lineno}",
    )


def load_atlas_file(path: str | Path, base: KnotAtlas | None = None) -> KnotAtlas:
    """Extend ``base`` (default: the built-in atlas) with a file's records.

    Raises
    ------
    GraphFormatError
        On a malformed record, with its line number.
    """
    entries: list[AtlasEntry] = []
    with Path(path).open(encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            entry = parse_atlas_line(line, lineno)
            if entry is not None:
                entries.append(entry)
    logger.info(logs.ATLAS_LOADED, len(entries), path)
    return (base or default_atlas()).extend(entries)


# ---------------------------------------------------------------------------
# Torus knot formulas (positive T(p, q), 2 <= p < q coprime)
# ---------------------------------------------------------------------------


def torus_genus(p: int, q: int) -> int:
    """(p-1)(q-1)/2: the 4-genus, tau, s/2 and unknotting number of T(p, q)."""
    return (p - 1) * (q - 1) // 2


def torus_gamma4(p: int, q: int) -> tuple[int, int]:
    """Nonorientable 4-genus interval of T(p, q).

    Exact for T(2, q) (a Moebius band, non-slice) and for T(2n+1, 2n+2)
    (value n, Batson); otherwise ``[1, 2 g4 + 1]``.
    """
    p, q = sorted((p, q))
    if p == 2:
        return (1, 1)
    if q == p + 1 and p % 2 == 1:
        n = (p - 1) // 2
        return (n, n)
    return (1, 2 * torus_genus(p, q) + 1)


def is_torus_pair(p: int, q: int) -> bool:
    return min(p, q) >= 2 and math.gcd(p, q) == 1


# Global atlas instance
_atlas: KnotAtlas | None = None


def get_atlas() -> KnotAtlas:
    """Get the global atlas (built-in entries unless replaced)."""
    global _atlas  # noqa: PLW0603
    if _atlas is None:
        _atlas = default_atlas()
    return _atlas


def set_atlas(atlas: KnotAtlas) -> None:
    """Install ``atlas`` as the global atlas."""
    global _atlas  # noqa: PLW0603
    _atlas = atlas


def reset_atlas() -> None:
    """Drop the global atlas; the next :func:`get_atlas` rebuilds the default."""
    global _atlas  # noqa: PLW0603
    _atlas = None
