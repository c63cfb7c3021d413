"""Tests for the knot expression parser."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotgraph.exceptions import (
    ErrorCode,
    InvalidTorusKnotError,
    KnotSyntaxError,
    UnknownKnotError,
)
from knotgraph.knots import UNKNOT, mirror, multiply, named, reverse, torus
from knotgraph.parser import parse_knot, tokenize


@pytest.mark.unit
class TestParseKnot:
    """Test well-formed expressions."""

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("U", UNKNOT),
            ("U + U", UNKNOT),
            ("T(2,3)", torus(2, 3)),
            ("3_1", torus(2, 3)),
            ("T(-2,3)", torus(-2, 3)),
            ("T(3, 2)", torus(2, 3)),
            ("m(T(2,3))", torus(-2, 3)),
            ("2*T(2,9) + T(2,15)", multiply(torus(2, 9), 2) + torus(2, 15)),
            ("T(2,3)+T(2,3)", multiply(torus(2, 3), 2)),
            ("6_1", named("6_1")),
            ("2*m(Wh)", multiply(mirror(named("Wh")), 2)),
            ("r(m(T(2,3)))", reverse(mirror(torus(2, 3)))),
            ("  Wh +\t6_1 ", named("Wh") + named("6_1")),
        ],
    )
    def test_values(self, text, expected):
        """Should build the normalized formal knot."""
        assert parse_knot(text) == expected

    @pytest.mark.parametrize(
        "text",
        ["2*T(2,9) + T(2,15)", "m(T(2,3)) + 6_1", "T(3,4) + 3*m(r(Wh))", "U"],
    )
    def test_pretty_printing_is_canonical(self, text):
        """Should print normalized knots back in the same grammar."""
        assert str(parse_knot(text)) == text


@pytest.mark.unit
class TestSyntaxErrors:
    """Test diagnostics for malformed expressions."""

    @pytest.mark.parametrize(
        "text,offset,expected",
        [
            ("T(2,3", 5, ["')'"]),
            ("T(2,3) T(2,5)", 7, ["'+'", "end of input"]),
            ("T(2 3)", 4, ["','"]),
            ("T(x,3)", 2, ["integer"]),
            ("0*T(2,3)", 0, ["positive count"]),
        ],
    )
    def test_offset_and_expected(self, text, offset, expected):
        """Should report the byte offset and the accepted tokens."""
        with pytest.raises(KnotSyntaxError) as exc_info:
            parse_knot(text)
        error = exc_info.value
        assert error.code == ErrorCode.KNOT_SYNTAX
        assert error.offset == offset
        assert error.expected == sorted(expected)

    def test_dangling_plus(self):
        """Should expect a knot after '+'."""
        with pytest.raises(KnotSyntaxError) as exc_info:
            parse_knot("T(2,3) +")
        assert exc_info.value.offset == 8
        assert "'T('" in exc_info.value.expected

    def test_empty_expression(self):
        """Should fail at offset 0."""
        with pytest.raises(KnotSyntaxError) as exc_info:
            parse_knot("")
        assert exc_info.value.offset == 0

    def test_unknown_character(self):
        """Should stop the tokenizer at the first stray character."""
        with pytest.raises(KnotSyntaxError) as exc_info:
            tokenize("T(2,3) $")
        assert exc_info.value.offset == 7

    def test_offsets_count_bytes(self):
        """Should count UTF-8 bytes, not characters."""
        with pytest.raises(KnotSyntaxError) as exc_info:
            parse_knot("T(2,3)\u3000$")
        assert exc_info.value.offset == 9

    def test_message_mentions_offset(self):
        """Should put the offset and expectations in the message."""
        with pytest.raises(KnotSyntaxError) as exc_info:
            parse_knot("T(2,3")
        assert exc_info.value.message.endswith("at byte 5: expected ')'")


@pytest.mark.unit
class TestSemanticErrors:
    """Test errors raised while building knots."""

    def test_unknown_name(self):
        """Should raise UnknownKnotError for names outside the atlas."""
        with pytest.raises(UnknownKnotError):
            parse_knot("T(2,3) + 8_20")

    def test_non_coprime_torus(self):
        """Should raise InvalidTorusKnotError."""
        with pytest.raises(InvalidTorusKnotError):
            parse_knot("T(4,6)")


@pytest.mark.property
class TestRoundTrip:
    """Printing then parsing returns the same knot."""

    atoms = st.sampled_from(
        [torus(2, 3), torus(-2, 5), torus(3, 4), named("6_1"), named("Wh")]
    )

    @settings(max_examples=60)
    @given(
        summands=st.lists(
            st.tuples(atoms, st.integers(1, 3), st.booleans(), st.booleans()),
            max_size=4,
        )
    )
    def test_parse_of_pretty(self, summands):
        """Should recover any decorated sum from its printed form."""
        knot = UNKNOT
        for atom, count, mirrored, reversed_ in summands:
            if mirrored:
                atom = mirror(atom)
            if reversed_:
                atom = reverse(atom)
            knot = knot + multiply(atom, count)
        assert parse_knot(str(knot)) == knot
