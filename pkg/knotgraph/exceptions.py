"""Exceptions for the knot-graphs package."""

import json
from enum import IntEnum
from typing import Any

from knotgraph.utils import create_error_payload


class ExitCode(IntEnum):
    """Process exit codes of the ``knotgraph`` command.

    Attributes
    ----------
    OK : int
        Computation finished and every requested check passed (0).
    VERIFICATION_FAILED : int
        A certificate or isometry check did not go through (1).
    USAGE_ERROR : int
        Bad arguments, unparsable knot expression or malformed input file (2).
    INTERNAL_ERROR : int
        An invariant of the library itself was violated (3).
    """

    OK = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2
    INTERNAL_ERROR = 3


class ErrorCode(IntEnum):
    """Error codes carried by :class:`KnotGraphError`.

    Codes below 100 are input errors (exit code 2), codes in the 100 range are
    failed verifications (exit code 1) and codes from 200 on are internal
    faults (exit code 3).
    """

    # Input errors
    INVALID_ARGUMENT = 1
    KNOT_SYNTAX = 2
    UNKNOWN_KNOT = 3
    INVALID_TORUS = 4
    INVALID_WEIGHTS = 5
    UNSUPPORTED_COVER = 6
    NOT_PRIME = 7
    DISCONNECTED_GRAPH = 8
    GRAPH_FORMAT = 9
    LIMIT_EXCEEDED = 10

    # Verification failures
    NOT_GEODESIC = 101
    TRIANGLE_NOT_CLOSED = 102
    NO_CATALOG_MOVE = 103
    WITNESS_FAILURE = 104
    NON_COMPUTABLE = 105

    # Internal faults
    NON_INTEGRAL = 201
    BOUND_CONFLICT = 202
    INVALID_REPORT = 203


ERROR_MESSAGES: dict[int, str] = {
    # Input errors
    ErrorCode.INVALID_ARGUMENT: "Invalid Argument",
    ErrorCode.KNOT_SYNTAX: "Knot Expression Syntax Error",
    ErrorCode.UNKNOWN_KNOT: "Unknown Knot",
    ErrorCode.INVALID_TORUS: "Invalid Torus Knot",
    ErrorCode.INVALID_WEIGHTS: "Invalid Brieskorn Weights",
    ErrorCode.UNSUPPORTED_COVER: "Unsupported Branched Cover",
    ErrorCode.NOT_PRIME: "Not A Prime",
    ErrorCode.DISCONNECTED_GRAPH: "Disconnected Graph",
    ErrorCode.GRAPH_FORMAT: "Malformed Graph File",
    ErrorCode.LIMIT_EXCEEDED: "Input Too Large",
    # Verification failures
    ErrorCode.NOT_GEODESIC: "Path Is Not Geodesic",
    ErrorCode.TRIANGLE_NOT_CLOSED: "Triangle Does Not Close",
    ErrorCode.NO_CATALOG_MOVE: "No Catalog Move",
    ErrorCode.WITNESS_FAILURE: "Witness Verification Failed",
    ErrorCode.NON_COMPUTABLE: "Invariant Not Computable",
    # Internal faults
    ErrorCode.NON_INTEGRAL: "Non-Integral Orlik Quotient",
    ErrorCode.BOUND_CONFLICT: "Conflicting Distance Bounds",
    ErrorCode.INVALID_REPORT: "Report Fails Schema Validation",
}


class KnotGraphError(Exception):
    """General knot-graphs exception class."""

    def __init__(self, code: int, data: Any = None):
        """Initialize a new :class:`KnotGraphError` instance.

        Parameters
        ----------
        code : int
            Error code, one of :class:`ErrorCode`.
        data : Any, optional
            Additional error context data, by default None
        """
        super().__init__(code, data)
        self.code = code
        self.data = data

    @property
    def exit_code(self) -> ExitCode:
        """Exit code the command line reports for this error."""
        if self.code >= 200:
            return ExitCode.INTERNAL_ERROR
        if self.code >= 100:
            return ExitCode.VERIFICATION_FAILED
        return ExitCode.USAGE_ERROR

    @property
    def message(self) -> str:
        """Human readable message, enhanced with context from ``data``."""
        message = ERROR_MESSAGES[self.code]
        if not isinstance(self.data, dict):
            return message

        if self.code == ErrorCode.KNOT_SYNTAX and "offset" in self.data:
            expected = ", ".join(self.data.get("expected", []))
            message = f"{message} at byte {self.data['offset']}: expected {expected}"
        elif self.code == ErrorCode.UNKNOWN_KNOT and "name" in self.data:
            message = f"{message}: '{self.data['name']}'"
        elif self.code == ErrorCode.UNSUPPORTED_COVER and "degree" in self.data:
            message = (
                f"{message}: {self.data.get('knot', '?')} "
                f"at degree {self.data['degree']}"
            )
        elif self.code == ErrorCode.LIMIT_EXCEEDED:
            limit_type = self.data.get("limit_type", "unknown")
            limit = self.data.get("limit", "unknown")
            message = f"{message}: {limit_type} exceeds limit of {limit}"
        elif self.code == ErrorCode.GRAPH_FORMAT and "line" in self.data:
            message = f"{message}: line {self.data['line']}"
        elif "reason" in self.data:
            message = f"{message}: {self.data['reason']}"

        return message

    def as_dict(self) -> dict[str, Any]:
        """Return an error payload dictionary.

        Returns
        -------
        dict[str, Any]
            Error payload with ``code``, ``message`` and optional ``data``.
        """
        return create_error_payload(
            code=self.code, message=self.message, data=self.data
        )

    def __str__(self) -> str:
        """Error payload dictionary as a string.

        Returns
        -------
        str
            Error payload.
        """
        return json.dumps(self.as_dict(), default=str)


class InvalidArgumentError(KnotGraphError):
    """Exception for out-of-range parameters (``k < 1``, ``n < 3`` ...)."""

    def __init__(self, argument: str, reason: str):
        super().__init__(
            ErrorCode.INVALID_ARGUMENT, {"argument": argument, "reason": reason}
        )


class KnotSyntaxError(KnotGraphError):
    """Exception for knot expressions that do not parse."""

    def __init__(self, text: str, offset: int, expected: list[str]):
        """Initialize KnotSyntaxError.

        Parameters
        ----------
        text : str
            The full expression being parsed.
        offset : int
            Byte offset of the offending token.
        expected : list[str]
            Tokens that would have been accepted at ``offset``.
        """
        super().__init__(
            ErrorCode.KNOT_SYNTAX,
            {"text": text, "offset": offset, "expected": sorted(set(expected))},
        )
        self.offset = offset
        self.expected = sorted(set(expected))


class UnknownKnotError(KnotGraphError):
    """Exception for named generators missing from the atlas."""

    def __init__(self, name: str):
        super().__init__(ErrorCode.UNKNOWN_KNOT, {"name": name})


class InvalidTorusKnotError(KnotGraphError):
    """Exception for torus parameters that are not coprime or too small."""

    def __init__(self, p: int, q: int):
        super().__init__(
            ErrorCode.INVALID_TORUS,
            {"p": p, "q": q, "reason": f"T({p},{q}) needs coprime |p|,|q| >= 2"},
        )


class InvalidWeightsError(KnotGraphError):
    """Exception for Brieskorn weights that are not all greater than one."""

    def __init__(self, weights: tuple[int, ...]):
        super().__init__(
            ErrorCode.INVALID_WEIGHTS,
            {"weights": list(weights), "reason": "every weight must exceed 1"},
        )


class UnsupportedCoverError(KnotGraphError):
    """Exception for a (generator, degree) pair with no known cover homology."""

    def __init__(self, knot: str, degree: int):
        super().__init__(ErrorCode.UNSUPPORTED_COVER, {"knot": knot, "degree": degree})


class NotPrimeError(KnotGraphError):
    """Exception for a coefficient characteristic that is not prime."""

    def __init__(self, p: int):
        super().__init__(ErrorCode.NOT_PRIME, {"p": p, "reason": f"{p} is not prime"})


class DisconnectedGraphError(KnotGraphError):
    """Exception for metric operations on a disconnected graph."""

    def __init__(self, components: int):
        super().__init__(
            ErrorCode.DISCONNECTED_GRAPH,
            {"components": components, "reason": f"{components} components"},
        )


class GraphFormatError(KnotGraphError):
    """Exception for malformed edge-list or vertex-map files."""

    def __init__(self, line: int, content: str):
        super().__init__(ErrorCode.GRAPH_FORMAT, {"line": line, "content": content})


class LimitExceededError(KnotGraphError):
    """Exception for inputs exceeding the configured size limits."""

    def __init__(self, limit_type: str, limit_value: int):
        """Initialize LimitExceededError.

        Parameters
        ----------
        limit_type : str
            Type of limit exceeded (e.g., "scan_vertices", "witness_k").
        limit_value : int
            The limit that was exceeded.
        """
        super().__init__(
            ErrorCode.LIMIT_EXCEEDED, {"limit_type": limit_type, "limit": limit_value}
        )


class NotGeodesicError(KnotGraphError):
    """Exception for a triangle side that is not a shortest path."""

    def __init__(self, side: int, length: int, distance: int):
        super().__init__(
            ErrorCode.NOT_GEODESIC,
            {
                "side": side,
                "length": length,
                "distance": distance,
                "reason": f"side {side} has length {length} > distance {distance}",
            },
        )


class TriangleNotClosedError(KnotGraphError):
    """Exception for three paths that do not form a closed triangle."""

    def __init__(self, reason: str):
        super().__init__(ErrorCode.TRIANGLE_NOT_CLOSED, {"reason": reason})


class NoCatalogMoveError(KnotGraphError):
    """Exception for a path step that matches no catalog move."""

    def __init__(self, step: int, source: str, target: str, move: str):
        super().__init__(
            ErrorCode.NO_CATALOG_MOVE,
            {
                "step": step,
                "source": source,
                "target": target,
                "move": move,
                "reason": f"no {move} move from {source} to {target}",
            },
        )


class WitnessVerificationError(KnotGraphError):
    """Exception for a quotient witness whose invariant does not match its class."""

    def __init__(self, reason: str):
        super().__init__(ErrorCode.WITNESS_FAILURE, {"reason": reason})


class NonComputableInvariantError(KnotGraphError):
    """Exception for an invariant known only up to a non-degenerate interval."""

    def __init__(self, invariant: str, knot: str, lower: int, upper: int):
        super().__init__(
            ErrorCode.NON_COMPUTABLE,
            {
                "invariant": invariant,
                "knot": knot,
                "interval": [lower, upper],
                "reason": f"{invariant}({knot}) only known in [{lower}, {upper}]",
            },
        )


class NonIntegralError(KnotGraphError):
    """Exception for an Orlik quotient c(I) that does not divide evenly."""

    def __init__(self, weights: tuple[int, ...], subset: tuple[int, ...]):
        super().__init__(
            ErrorCode.NON_INTEGRAL, {"weights": list(weights), "subset": list(subset)}
        )


class BoundConflictError(KnotGraphError):
    """Exception for a lower bound exceeding an upper bound."""

    def __init__(self, n: int | str, lower: str, upper: int):
        super().__init__(
            ErrorCode.BOUND_CONFLICT,
            {
                "index": n,
                "lower": lower,
                "upper": upper,
                "reason": f"d_{n}: lower {lower} > upper {upper}",
            },
        )


class InvalidReportError(KnotGraphError):
    """Exception for reports that fail schema validation."""

    def __init__(self, path: str, reason: str):
        super().__init__(ErrorCode.INVALID_REPORT, {"path": path, "reason": reason})
