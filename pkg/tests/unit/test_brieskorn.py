"""Tests for knotgraph.brieskorn (Orlik's algorithm)."""

from __future__ import annotations

import logging

import pytest

from knotgraph.abelian import FiniteAbelianGroup, cyclic, trivial
from knotgraph.brieskorn import (
    BrieskornWeights,
    c_value,
    cover_weights,
    homology,
    index_subset,
    kappa,
    kappa_prime,
    orlik_table,
)
from knotgraph.exceptions import (
    ErrorCode,
    InvalidArgumentError,
    InvalidWeightsError,
)
from tests.fixtures.seifert_oracle import torus_cover_homology

ODD_K = [3, 5, 7, 9, 11, 13, 15]


def z2(count: int) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(0, (2,) * count)


# ============================================================================
# Weights
# ============================================================================


@pytest.mark.unit
class TestBrieskornWeights:
    """Test weight validation."""

    @pytest.mark.parametrize("weights", [(1, 2, 3), (2, 0, 3), (2, 3, -5)])
    def test_rejects_weights_up_to_one(self, weights):
        """Should raise InvalidWeightsError when a weight is at most 1."""
        with pytest.raises(InvalidWeightsError) as exc_info:
            BrieskornWeights(*weights)
        assert exc_info.value.code == ErrorCode.INVALID_WEIGHTS
        assert exc_info.value.data["weights"] == list(weights)

    def test_str(self):
        """Should render as a triple."""
        assert str(BrieskornWeights(2, 15, 9)) == "(2,15,9)"

    def test_cover_weights_drop_signs(self):
        """Should use |p|, |q| and the cover degree."""
        assert cover_weights(-2, 9, 5) == BrieskornWeights(2, 9, 5)

    def test_index_subset_rejects_other_indices(self):
        """Should only accept subsets of {1, 2, 3}."""
        assert index_subset([3, 2, 3]) == (2, 3)
        with pytest.raises(InvalidArgumentError):
            index_subset({4})


# ============================================================================
# Intermediate Quantities
# ============================================================================


@pytest.mark.unit
class TestKappa:
    """Test kappa and kappa_prime."""

    @pytest.mark.parametrize(
        "indices,expected", [({2, 3}, 8), ((), 1), ({1, 2, 3}, 0)]
    )
    def test_kappa_2_9_9(self, indices, expected):
        """Should reproduce the (2,9,9) values."""
        assert kappa(BrieskornWeights(2, 9, 9), indices) == expected

    @pytest.mark.parametrize(
        "weights,expected", [((2, 15, 9), 2), ((2, 15, 5), 4)]
    )
    def test_kappa_prime_pair(self, weights, expected):
        """Should equal kappa on the even subset {2, 3}."""
        assert kappa_prime(BrieskornWeights(*weights), {2, 3}) == expected

    @pytest.mark.parametrize("index", [1, 2, 3])
    def test_kappa_prime_vanishes_on_singletons(self, index):
        """Should be 0 on odd-size subsets."""
        assert kappa_prime(BrieskornWeights(4, 6, 10), {index}) == 0

    def test_kappa_prime_vanishes_on_full_set(self):
        """Should be 0 on {1, 2, 3} even when the free rank is positive."""
        w = BrieskornWeights(2, 3, 6)
        assert kappa(w, {1, 2, 3}) == 2
        assert kappa_prime(w, {1, 2, 3}) == 0


@pytest.mark.unit
class TestCValue:
    """Test c_value."""

    @pytest.mark.parametrize("k", ODD_K)
    def test_pair_for_2_k_k(self, k):
        """Should give c({2,3}) = 2 for (2,k,k)."""
        assert c_value(BrieskornWeights(2, k, k), {2, 3}) == 2

    def test_empty_set(self):
        """Should give c({}) = 1."""
        assert c_value(BrieskornWeights(3, 5, 7), ()) == 1

    def test_singleton(self):
        """Should divide the gcd of the complement by c({})."""
        assert c_value(BrieskornWeights(2, 9, 9), {1}) == 9

    def test_full_set_is_rejected(self):
        """Should refuse c({1,2,3}), which needs the gcd of no weights."""
        with pytest.raises(InvalidArgumentError):
            c_value(BrieskornWeights(2, 9, 9), {1, 2, 3})


@pytest.mark.unit
class TestOrlikTable:
    """Test the intermediate table."""

    def test_table_for_2_9_9(self):
        """Should record r = 8 and eight factors of 2."""
        table = orlik_table(BrieskornWeights(2, 9, 9))
        assert table.r == 8
        assert table.d == (2,) * 8
        assert table.free_rank == 0
        assert table.c == {(): 1, (2, 3): 2}

    def test_as_dict_labels_subsets(self):
        """Should label subsets as {i,j}."""
        data = orlik_table(BrieskornWeights(2, 15, 9)).as_dict()
        assert data["weights"] == [2, 15, 9]
        assert data["kappa"]["{}"] == 1
        assert data["kappa_prime"]["{2,3}"] == 2
        assert data["c"] == {"{}": 1, "{2,3}": 2}
        assert data["d"] == [2, 2]

    def test_homology_sphere(self, caplog):
        """Should give d = (1,) for (2,9,5) without a rank warning."""
        with caplog.at_level(logging.WARNING, logger="knotgraph"):
            table = orlik_table(BrieskornWeights(2, 9, 5))
        assert table.r == 1
        assert table.d == (1,)
        assert not caplog.records


# ============================================================================
# Homology
# ============================================================================


@pytest.mark.unit
class TestHomology:
    """Test homology on the reference examples."""

    @pytest.mark.parametrize(
        "weights,expected",
        [
            ((2, 9, 9), z2(8)),
            ((2, 15, 9), z2(2)),
            ((2, 15, 5), z2(4)),
            ((2, 9, 5), trivial()),
            ((2, 9, 2), cyclic(9)),
            ((2, 3, 3), z2(2)),
            ((2, 3, 6), FiniteAbelianGroup(2)),
        ],
    )
    def test_examples(self, weights, expected):
        """Should reproduce the tabulated groups."""
        assert homology(BrieskornWeights(*weights)) == expected

    @pytest.mark.parametrize("k", ODD_K)
    def test_2_k_k_family(self, k):
        """Should give (Z_2)^(k-1) for odd k."""
        assert homology(BrieskornWeights(2, k, k)) == z2(k - 1)

    def test_rendering(self):
        """Should render (2,15,9) as (Z_2)^2."""
        assert str(homology(BrieskornWeights(2, 15, 9))) == "(Z_2)^2"

    @pytest.mark.parametrize("weights", [(2, 9, 5), (5, 2, 9), (9, 5, 2)])
    def test_symmetric_in_weights(self, weights):
        """Should not depend on the order of the weights."""
        assert homology(BrieskornWeights(*weights)).is_trivial


@pytest.mark.oracle
class TestSeifertOracle:
    """Compare Orlik's algorithm with Smith normal forms of Seifert data."""

    @pytest.mark.parametrize("m", range(2, 10))
    @pytest.mark.parametrize("q", ODD_K)
    def test_torus_covers(self, q, m):
        """Should match H_1 of the m-fold cover of T(2,q)."""
        assert homology(cover_weights(2, q, m)) == torus_cover_homology(q, m)
