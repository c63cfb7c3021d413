"""Runtime budgets for the exact computations.

Each test recomputes from cold caches and asserts the wall-clock time of
the batch. Tests are marked with @pytest.mark.performance and
@pytest.mark.slow to allow selective execution in CI/CD pipelines.
"""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from knotgraph import brieskorn
from knotgraph.abelian import FiniteAbelianGroup
from knotgraph.brieskorn import BrieskornWeights, cover_weights, homology
from knotgraph.knots import clear_cover_cache
from knotgraph.metricgraph import MetricGraph, delta_four_point
from knotgraph.quotient import quotient_model, quotient_two_invariant_model
from knotgraph.witness import (
    build_concordance_witness,
    build_h2_witness,
    build_hn_witness,
    certify,
    schedule_k_for_delta,
)
from tests.fixtures.seifert_oracle import torus_cover_homology

# ============================================================================
# Performance Test Configuration
# ============================================================================

BRIESKORN_THRESHOLD_SECONDS = 0.01
BRIESKORN_REPEATS = 3
ORACLE_THRESHOLD_SECONDS = 5.0
H2_CERTIFICATE_THRESHOLD_SECONDS = 10.0
HN_CERTIFICATE_THRESHOLD_SECONDS = 10.0
CONCORDANCE_THRESHOLD_SECONDS = 5.0
QUOTIENT_THRESHOLD_SECONDS = 5.0
SCAN_THRESHOLD_SECONDS = 5.0

BRIESKORN_SUITE = [
    *(((2, k, k), (2,) * (k - 1)) for k in range(3, 16, 2)),
    ((2, 15, 9), (2, 2)),
    ((2, 15, 5), (2, 2, 2, 2)),
    ((2, 9, 5), ()),
    ((2, 9, 2), (9,)),
]


def _clear_caches() -> None:
    homology.cache_clear()
    brieskorn._c_value.cache_clear()
    clear_cover_cache()


def _timed(func) -> float:
    start = time.perf_counter()
    func()
    return time.perf_counter() - start


# ============================================================================
# Homology
# ============================================================================


@pytest.mark.performance
@pytest.mark.slow
class TestHomologyBudgets:
    """Test Orlik's algorithm stays interactive."""

    def test_brieskorn_suite(self):
        """Should run the Brieskorn suite in under 10 ms (best of 3)."""

        def suite():
            for weights, torsion in BRIESKORN_SUITE:
                group = homology(BrieskornWeights(*weights))
                assert group == FiniteAbelianGroup(0, torsion)

        timings = []
        for _ in range(BRIESKORN_REPEATS):
            _clear_caches()
            timings.append(_timed(suite))
        assert min(timings) < BRIESKORN_THRESHOLD_SECONDS

    def test_oracle_equivalence(self):
        """Should match the Seifert-matrix oracle on 28 covers within 5 s."""
        _clear_caches()
        cases = [(q, m) for q in range(3, 16, 2) for m in (2, 3, 5, 9)]
        assert len(cases) == 28

        def compare():
            for q, m in cases:
                assert homology(cover_weights(2, q, m)) == torus_cover_homology(q, m)

        assert _timed(compare) < ORACLE_THRESHOLD_SECONDS


# ============================================================================
# Certificates
# ============================================================================


@pytest.mark.performance
@pytest.mark.slow
class TestCertificateBudgets:
    """Test witness certification for the documented ranges."""

    def test_h2_certificates(self):
        """Should certify k = 1..16 and the schedule within 10 s."""
        _clear_caches()

        def run():
            for k in range(1, 17):
                cert = certify(build_h2_witness(k))
                assert cert.all_geodesic
                assert [e.length for e in cert.edges] == [2 * k, 2 * k, 4 * k]
                assert cert.separation == Fraction(3 * k, 4)
            schedule = [schedule_k_for_delta("h2", d) for d in (0, 1, 5, 10)]
            assert schedule == [1, 2, 7, 14]

        assert _timed(run) < H2_CERTIFICATE_THRESHOLD_SECONDS

    def test_hn_certificates(self):
        """Should certify n = 3..5 and k = 1..8 within 10 s."""
        _clear_caches()

        def run():
            for n in (3, 4, 5):
                for k in range(1, 9):
                    cert = certify(build_hn_witness(n, k))
                    assert cert.all_geodesic
                    assert cert.separation >= Fraction(3 * k, 4)

        assert _timed(run) < HN_CERTIFICATE_THRESHOLD_SECONDS

    def test_concordance_certificates(self):
        """Should certify k = 1..12 and flag the mirror variant within 5 s."""
        _clear_caches()

        def run():
            for k in range(1, 13):
                cert = certify(build_concordance_witness(k, "trefoil"))
                assert cert.all_geodesic
                assert cert.separation >= (k + 1) // 2
            mirror = certify(build_concordance_witness(2, "mirror-trefoil"))
            assert not mirror.all_geodesic

        assert _timed(run) < CONCORDANCE_THRESHOLD_SECONDS


# ============================================================================
# Quotient Models and Graph Scans
# ============================================================================


@pytest.mark.performance
@pytest.mark.slow
class TestGraphBudgets:
    """Test quotient models and the four-point scan."""

    def test_quotient_models(self):
        """Should build the five path models and the lattice within 5 s."""
        _clear_caches()

        def run():
            for invariant in ("g4", "u", "gamma4"):
                assert quotient_model(invariant, 8).graph.diameter() == 8
            for invariant in ("tau", "shalf"):
                assert quotient_model(invariant, 8).graph.diameter() == 16
            lattice = quotient_two_invariant_model(5)
            assert len(lattice.points) == 21

        assert _timed(run) < QUOTIENT_THRESHOLD_SECONDS

    def test_four_point_scan(self):
        """Should scan a 64-cycle with two workers within 5 s."""
        graph = MetricGraph.cycle_graph(64)
        elapsed = _timed(lambda: delta_four_point(graph, workers=2))
        assert elapsed < SCAN_THRESHOLD_SECONDS
