"""Exception types shared across the solver.

Every structured failure the library can diagnose has its own class so
callers (and the command line front end) can map them to stable error
reports.  All of them derive from :class:`TropsolveError`.
"""

from __future__ import annotations


class TropsolveError(Exception):
    """Base class for all library errors."""

    def payload(self) -> dict:
        """Machine-readable description, used for JSON error reports."""
        return {"error": type(self).__name__, "message": str(self)}


class BalancedSum(TropsolveError):
    """Signed max-plus addition of opposite signs with equal magnitude."""


class DimensionMismatch(TropsolveError):
    """Operands have incompatible shapes."""


class NotGeneric(TropsolveError):
    """A square matrix has no unique optimal assignment of its magnitudes.

    Raised by determinant-like computations.  ``rows``/``cols`` name the
    offending minor when known (row labels may be constraint indices or
    the objective/co-objective markers ``"u"``/``"v"``).
    """

    def __init__(self, message: str, rows=None, cols=None, witness=None):
        super().__init__(message)
        self.rows = rows
        self.cols = cols
        self.witness = witness

    def payload(self) -> dict:
        out = super().payload()
        if self.rows is not None:
            out["minor_rows"] = [str(r) for r in self.rows]
        if self.cols is not None:
            out["minor_cols"] = list(self.cols)
        return out


class MultipleCandidates(TropsolveError):
    """More than one entering variable produced a feasible basis."""


class NoUniqueMin(TropsolveError):
    """The pairwise pivoting order did not yield a unique minimum."""


class CycleDetected(TropsolveError):
    """A pivoting phase exceeded the total number of bases."""


class InvariantViolation(TropsolveError):
    """An internal state that the algorithm's contract rules out."""


class SizeLimit(TropsolveError):
    """Input too large for an enumeration-based oracle."""


class IdenticallyZero(TropsolveError):
    """A lifted determinant cancelled to the zero series."""


class TiedPayoff(TropsolveError):
    """A game position pays both players the same amount."""

    def __init__(self, i: int, j: int):
        super().__init__(f"payments tie at square {i + 1}, circle {j + 1}")
        self.i = i
        self.j = j

    def payload(self) -> dict:
        out = super().payload()
        out["row"] = self.i
        out["col"] = self.j
        return out


class MissingArc(TropsolveError):
    """A game is missing an arc required by the strict solving mode."""

    def __init__(self, i: int, j: int, which: str):
        super().__init__(
            f"missing {which} arc between square {i + 1} and circle {j + 1}"
        )
        self.i = i
        self.j = j
        self.which = which

    def payload(self) -> dict:
        out = super().payload()
        out["row"] = self.i
        out["col"] = self.j
        out["matrix"] = self.which
        return out


class ParseError(TropsolveError):
    """Malformed input file or scalar encoding."""


class ArgError(TropsolveError):
    """Invalid command-line arguments."""
