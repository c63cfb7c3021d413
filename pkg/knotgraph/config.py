"""Configuration management for knot-graphs.

This module provides configuration classes read from a settings mapping or,
by default, from ``KNOTGRAPH_*`` environment variables, allowing runtime
configuration of limits, cover-degree search sets and worker counts.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from knotgraph import logs

logger = logging.getLogger("knotgraph")

ENV_PREFIX = "KNOTGRAPH_"

#: Cover degrees searched by the e_m obstructions unless configured otherwise.
DEFAULT_COVER_DEGREES: tuple[int, ...] = (2, 3, 5, 9)


def _env_settings() -> dict[str, str]:
    """Collect ``KNOTGRAPH_*`` environment variables without their prefix."""
    return {
        key[len(ENV_PREFIX) :]: value
        for key, value in os.environ.items()
        if key.startswith(ENV_PREFIX)
    }


def _as_int(value: Any) -> int:
    return int(value) if isinstance(value, str) else value


def _as_degrees(value: Any) -> tuple[int, ...]:
    if isinstance(value, str):
        value = [part for part in value.replace(" ", "").split(",") if part]
    return tuple(int(v) for v in value)


@dataclass
class GraphLimits:
    """Ceilings on input sizes, checked before expensive work starts.

    Attributes
    ----------
    max_scan_vertices : int
        Largest graph accepted by the four-point scan (default: 512).
    max_witness_k : int
        Largest triangle parameter k accepted by ``certify`` (default: 4096).
    max_quotient_size : int
        Largest N accepted by the quotient models (default: 4096).
    max_schedule_k : int
        Search ceiling of ``schedule_k_for_delta`` (default: 100000).

    Examples
    --------
    Allow bigger graphs in a batch job::

        limits = GraphLimits(max_scan_vertices=2048)
    """

    max_scan_vertices: int = 512
    max_witness_k: int = 4096
    max_quotient_size: int = 4096
    max_schedule_k: int = 100_000

    @classmethod
    def from_settings(cls, settings: Mapping[str, Any] | None = None) -> GraphLimits:
        """Load limits from a settings mapping.

        Parameters
        ----------
        settings : Mapping[str, Any] | None
            Upper-case keys such as ``MAX_SCAN_VERTICES``. Environment
            variables (``KNOTGRAPH_MAX_SCAN_VERTICES``...) are read when None.

        Returns
        -------
        GraphLimits
            Limits instance with values from settings or defaults.
        """
        config = _env_settings() if settings is None else settings
        return cls(
            max_scan_vertices=_as_int(
                config.get("MAX_SCAN_VERTICES", cls.max_scan_vertices)
            ),
            max_witness_k=_as_int(config.get("MAX_WITNESS_K", cls.max_witness_k)),
            max_quotient_size=_as_int(
                config.get("MAX_QUOTIENT_SIZE", cls.max_quotient_size)
            ),
            max_schedule_k=_as_int(config.get("MAX_SCHEDULE_K", cls.max_schedule_k)),
        )


@dataclass
class KnotGraphConfig:
    """Main configuration for knot-graphs.

    Attributes
    ----------
    limits : GraphLimits
        Size limits for graphs, witnesses and quotient models.
    cover_degrees : tuple[int, ...]
        Degrees m searched by the ``e_m`` obstructions.
    workers : int
        Worker threads used by the four-point scan.
    k11_variant : str
        Default K11 summand of the concordance triangle, ``"trefoil"`` or
        ``"mirror-trefoil"``.
    hnt_rules : str
        Bound propagation rule set, ``"sound"`` or ``"literal"``
        (see :func:`knotgraph.bounds.propagate`).
    atlas_path : str | None
        Optional atlas extension file loaded on top of the built-in table.
    log_level : str
        Level of the ``knotgraph`` logger.

    Examples
    --------
    Get configuration from the environment::

        config = KnotGraphConfig.from_settings()
        if config.workers > 1:
            ...
    """

    limits: GraphLimits = field(default_factory=GraphLimits)
    cover_degrees: tuple[int, ...] = DEFAULT_COVER_DEGREES
    workers: int = 1
    k11_variant: str = "trefoil"
    hnt_rules: str = "sound"
    atlas_path: str | None = None
    log_level: str = "WARNING"

    @classmethod
    def from_settings(
        cls, settings: Mapping[str, Any] | None = None
    ) -> KnotGraphConfig:
        """Load complete configuration from a settings mapping.

        Parameters
        ----------
        settings : Mapping[str, Any] | None
            Upper-case keys (``COVER_DEGREES``, ``WORKERS``, ``K11``,
            ``HNT_RULES``, ``ATLAS``, ``LOG_LEVEL`` and the limit keys of
            :class:`GraphLimits`). Environment variables are read when None.

        Returns
        -------
        KnotGraphConfig
            Configuration instance with values from settings or defaults.

        Examples
        --------
        From the shell::

            KNOTGRAPH_COVER_DEGREES=2,3,5,7,9 KNOTGRAPH_WORKERS=4 knotgraph ...
        """
        config_dict = _env_settings() if settings is None else settings

        config = cls(
            limits=GraphLimits.from_settings(config_dict),
            cover_degrees=_as_degrees(
                config_dict.get("COVER_DEGREES", DEFAULT_COVER_DEGREES)
            ),
            workers=_as_int(config_dict.get("WORKERS", 1)),
            k11_variant=config_dict.get("K11", "trefoil"),
            hnt_rules=config_dict.get("HNT_RULES", "sound"),
            atlas_path=config_dict.get("ATLAS") or None,
            log_level=str(config_dict.get("LOG_LEVEL", "WARNING")).upper(),
        )
        logger.debug(logs.CONFIG_LOADED, config)
        return config


# Global configuration instance
_config: KnotGraphConfig | None = None


def get_config() -> KnotGraphConfig:
    """Get the global configuration instance.

    This function returns a cached configuration instance. On first call,
    it loads configuration from the environment. Subsequent calls return
    the cached instance.

    Returns
    -------
    KnotGraphConfig
        The global configuration instance.

    Notes
    -----
    Changes to the environment after the first call are not reflected until
    :func:`reset_config` is called.
    """
    global _config  # noqa: PLW0603
    if _config is None:
        _config = KnotGraphConfig.from_settings()
    return _config


def set_config(config: KnotGraphConfig) -> None:
    """Install ``config`` as the global configuration (CLI overrides)."""
    global _config  # noqa: PLW0603
    _config = config


def reset_config() -> None:
    """Reset the global configuration cache.

    This function is primarily useful for testing, where you may want
    to reload configuration between tests.
    """
    global _config  # noqa: PLW0603
    _config = None
