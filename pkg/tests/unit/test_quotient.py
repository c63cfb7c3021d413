"""Tests for quotient knot graphs."""

from __future__ import annotations

import pytest

from knotgraph.catalog import CROSSING_CHANGE, H2, catalog_sample
from knotgraph.config import GraphLimits, KnotGraphConfig, set_config
from knotgraph.exceptions import (
    ErrorCode,
    InvalidArgumentError,
    LimitExceededError,
    NonComputableInvariantError,
    WitnessVerificationError,
)
from knotgraph.knots import UNKNOT, torus
from knotgraph.metricgraph import delta_four_point, embeds_in_real_line
from knotgraph.quotient import (
    check_compatibility,
    exact_value,
    model_witness,
    noncompatible_model,
    quotient_model,
    quotient_two_invariant_model,
    two_invariant_witness,
)

# ============================================================================
# Single Invariants
# ============================================================================


@pytest.mark.unit
class TestExactValue:
    """Test exact_value."""

    def test_integer_invariants(self, trefoil):
        """Should pass tau and s' through."""
        assert exact_value("tau", trefoil) == 1
        assert exact_value("shalf", torus(-2, 5)) == -2

    def test_exact_intervals(self):
        """Should unwrap a degenerate interval."""
        assert exact_value("g4", torus(2, 7)) == 3
        assert exact_value("gamma4", torus(6, 5)) == 2

    def test_non_computable(self, whitehead_double):
        """Should raise NonComputableInvariantError for gamma4(Wh)."""
        with pytest.raises(NonComputableInvariantError) as exc_info:
            exact_value("gamma4", whitehead_double)
        assert exc_info.value.data["interval"] == [1, 3]
        assert exc_info.value.code == ErrorCode.NON_COMPUTABLE

    def test_unknown_invariant(self, trefoil):
        """Should reject names outside the invariant table."""
        with pytest.raises(InvalidArgumentError):
            exact_value("alexander", trefoil)


@pytest.mark.unit
class TestQuotientModel:
    """Test quotient_model."""

    @pytest.mark.parametrize("invariant", ["g4", "u", "gamma4"])
    def test_unsigned_models(self, invariant):
        """Should give the path 0..N with singleton link of 0."""
        model = quotient_model(invariant, 8)
        assert model.graph.vertices == tuple(range(9))
        assert model.graph.diameter() == 8
        assert list(model.link_of_zero().vertices) == [1]
        assert delta_four_point(model.graph) == 0

    @pytest.mark.parametrize("invariant", ["tau", "shalf"])
    def test_signed_models(self, invariant):
        """Should give the path -N..N with link {-1, 1} at 0."""
        model = quotient_model(invariant, 8)
        assert model.graph.diameter() == 16
        assert sorted(model.link_of_zero().vertices) == [-1, 1]
        assert model.witness(-3) == torus(-2, 7)

    def test_gamma4_witnesses(self):
        """Should use the staircase torus knots under H(2)."""
        model = quotient_model("gamma4", 3)
        assert model.move == H2
        assert [str(knot) for _, knot in model.witnesses] == [
            "U",
            "T(3,4)",
            "T(5,6)",
            "T(7,8)",
        ]

    def test_as_dict(self):
        """Should report classes, witnesses and the link of 0."""
        assert quotient_model("g4", 2).as_dict() == {
            "invariant": "g4",
            "move": "crossing change",
            "classes": [0, 1, 2],
            "witnesses": {"0": "U", "1": "T(2,3)", "2": "T(2,5)"},
            "diameter": 2,
            "link_of_zero": {"vertices": [1], "connected": True},
        }

    def test_model_witness(self):
        """Should mirror the witness for negative classes."""
        assert model_witness("tau", -2) == torus(-2, 5)
        assert model_witness("u", 0) == UNKNOT

    def test_wrong_witness_value(self, monkeypatch):
        """Should raise WitnessVerificationError when a value is off."""
        monkeypatch.setattr(
            "knotgraph.quotient.model_witness", lambda invariant, n: torus(2, 3)
        )
        with pytest.raises(WitnessVerificationError):
            quotient_model("g4", 2)

    def test_witnesses_not_adjacent(self, mocker):
        """Should raise WitnessVerificationError without a catalog move."""
        mocker.patch("knotgraph.quotient.adjacent", return_value=None)
        with pytest.raises(WitnessVerificationError) as exc_info:
            quotient_model("u", 2)
        assert "classes 0 and 1" in exc_info.value.data["reason"]

    @pytest.mark.parametrize(
        "invariant,size", [("alexander", 3), ("g4", 0), ("tau", -1)]
    )
    def test_invalid_arguments(self, invariant, size):
        """Should reject unknown models and N < 1."""
        with pytest.raises(InvalidArgumentError):
            quotient_model(invariant, size)

    def test_size_limit(self):
        """Should refuse N above the configured ceiling."""
        set_config(KnotGraphConfig(limits=GraphLimits(max_quotient_size=4)))
        with pytest.raises(LimitExceededError):
            quotient_model("g4", 5)


# ============================================================================
# Two Invariants
# ============================================================================


@pytest.mark.unit
class TestTwoInvariantModel:
    """Test quotient_two_invariant_model."""

    def test_points(self):
        """Should cover 0 <= m <= n <= N."""
        model = quotient_two_invariant_model(5)
        assert len(model.points) == 21
        assert len(model.bounds) == 21 * 20 // 2
        assert all(m <= n for m, n in model.points)

    @pytest.mark.parametrize(
        "a,b,expected",
        [
            ((0, 0), (1, 2), (2, 3)),
            ((0, 3), (3, 3), (3, 3)),
            ((2, 2), (2, 5), (3, 3)),
            ((1, 4), (3, 3), (2, 3)),
        ],
    )
    def test_intervals(self, a, b, expected):
        """Should give [l_inf, l_1] of the lattice difference."""
        model = quotient_two_invariant_model(5)
        bound = model.bound(a, b)
        assert (bound.lower_integer, bound.upper) == expected

    def test_bound_is_symmetric(self):
        """Should find a pair in either order."""
        model = quotient_two_invariant_model(3)
        assert model.bound((1, 2), (0, 0)) == model.bound((0, 0), (1, 2))

    def test_bound_needs_distinct_points(self):
        """Should reject a point paired with itself."""
        with pytest.raises(InvalidArgumentError):
            quotient_two_invariant_model(2).bound((1, 1), (1, 1))

    def test_witness(self, trefoil, stevedore):
        """Should combine n-m stevedores with m trefoils."""
        assert two_invariant_witness(1, 3) == 2 * stevedore + trefoil

    def test_as_dict(self):
        """Should render points as 'm,n'."""
        data = quotient_two_invariant_model(1).as_dict()
        assert data["witnesses"] == {"0,0": "U", "0,1": "6_1", "1,1": "T(2,3)"}
        assert data["intervals"][0] == {
            "from": [0, 0],
            "to": [0, 1],
            "lower": 1,
            "upper": 1,
        }


# ============================================================================
# Non-Compatible Invariant
# ============================================================================


@pytest.mark.unit
class TestNoncompatibleModel:
    """Test noncompatible_model."""

    def test_distances(self):
        """Should keep every class within 2 of every other."""
        graph = noncompatible_model(12)
        assert graph.diameter() == 2
        assert graph.distance(1, 5) == 1
        assert graph.distance(1, 2) == 2

    def test_not_a_line(self):
        """Should not embed {0, 1, 5} in the real line."""
        graph = noncompatible_model(12)
        assert not embeds_in_real_line(graph, [0, 1, 5])
        assert embeds_in_real_line(graph, [1, 0, 2])

    def test_minimum_size(self):
        """Should need N >= 5."""
        with pytest.raises(InvalidArgumentError):
            noncompatible_model(4)


@pytest.mark.unit
class TestCheckCompatibility:
    """Test check_compatibility."""

    def test_g4_fails_under_h2(self):
        """Should find T(2,5) -> U changing g4 by 2."""
        check = check_compatibility("g4", H2)
        assert not check.compatible
        assert (str(check.violation.source), str(check.violation.target)) == (
            "T(2,5)",
            "U",
        )
        assert check.delta == 2

    def test_tau_under_crossing_changes(self):
        """Should pass every sampled crossing change."""
        check = check_compatibility("tau", CROSSING_CHANGE)
        assert check.compatible
        assert check.checked == 8

    def test_gamma4_under_h2(self):
        """Should pass every sampled H(2)-move."""
        check = check_compatibility("gamma4", H2)
        assert check.compatible
        assert check.checked == 12
        assert check.as_dict()["violation"] is None

    def test_gamma4_of_whitehead_double(self):
        """Should refuse to decide when a sampled value is not exact."""
        with pytest.raises(NonComputableInvariantError):
            check_compatibility("gamma4", CROSSING_CHANGE)

    def test_explicit_entries(self):
        """Should check only the given entries."""
        entries = catalog_sample(CROSSING_CHANGE, ["torus-twist"], limit=3)
        check = check_compatibility("shalf", CROSSING_CHANGE, entries)
        assert (check.compatible, check.checked) == (True, 3)
