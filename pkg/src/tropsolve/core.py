"""Exact signed max-plus scalars, vectors and matrices.

Scalars live in the max-plus (tropical) semiring, extended two ways:

* every nonzero element carries a formal sign, so "negated" quantities can
  appear on the right-hand side of inequalities and inside determinants;
* magnitudes are exact rationals plus an integer multiple of a symbolic
  infinitesimal ``eps``, a formal scalar below every rational.  Ordering is
  lexicographic (fewer ``eps`` factors wins), which realises "eps negative
  enough" uniformly, so no numeric value for it is ever chosen.

Addition of signed elements is partial: opposite signs with equal magnitude
have no well-defined sum and raise :class:`~tropsolve.errors.BalancedSum`.
The algorithms in this package only ever add where that cannot happen, so
the error doubles as an early degeneracy detector.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import BalancedSum, DimensionMismatch, ParseError

Rational = Union[int, Fraction]


@dataclass(frozen=True, slots=True)
class EpsVal:
    """Magnitude ``finite + eps_deg * eps``.

    ``(a1, c1) > (a2, c2)`` iff ``c1 < c2``, or ``c1 == c2`` and
    ``a1 > a2``.  Addition is componentwise and ``(0, 0)`` is neutral.
    """

    finite: Rational = 0
    eps_deg: int = 0

    @property
    def key(self) -> tuple:
        """Sort key realising the lexicographic order."""
        return (-self.eps_deg, self.finite)

    def __add__(self, other: "EpsVal") -> "EpsVal":
        return EpsVal(self.finite + other.finite, self.eps_deg + other.eps_deg)

    def __sub__(self, other: "EpsVal") -> "EpsVal":
        return EpsVal(self.finite - other.finite, self.eps_deg - other.eps_deg)

    def __neg__(self) -> "EpsVal":
        return EpsVal(-self.finite, -self.eps_deg)

    def __lt__(self, other: "EpsVal") -> bool:
        return self.key < other.key

    def __le__(self, other: "EpsVal") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "EpsVal") -> bool:
        return self.key > other.key

    def __ge__(self, other: "EpsVal") -> bool:
        return self.key >= other.key

    def __repr__(self) -> str:
        if self.eps_deg == 0:
            return f"{self.finite}"
        return f"{self.finite}{self.eps_deg:+d}eps"


@dataclass(frozen=True, slots=True)
class Trop:
    """Unsigned max-plus scalar: a magnitude or minus infinity (``None``)."""

    val: Optional[EpsVal] = None

    @classmethod
    def fin(cls, finite: Rational, eps_deg: int = 0) -> "Trop":
        return cls(EpsVal(finite, eps_deg))

    @property
    def is_neg_inf(self) -> bool:
        return self.val is None

    def oplus(self, other: "Trop") -> "Trop":
        """Max-plus addition (maximum)."""
        if self.val is None:
            return other
        if other.val is None:
            return self
        return self if self.val >= other.val else other

    def otimes(self, other: "Trop") -> "Trop":
        """Max-plus multiplication (ordinary addition); -inf is absorbing."""
        if self.val is None or other.val is None:
            return NEG_INF
        return Trop(self.val + other.val)

    def _cmp_key(self) -> tuple:
        # -inf below everything; eps keys are comparable across finite values
        if self.val is None:
            return (0,)
        return (1, self.val.key)

    def __lt__(self, other: "Trop") -> bool:
        return self._cmp_key() < other._cmp_key()

    def __le__(self, other: "Trop") -> bool:
        return self._cmp_key() <= other._cmp_key()

    def __gt__(self, other: "Trop") -> bool:
        return self._cmp_key() > other._cmp_key()

    def __ge__(self, other: "Trop") -> bool:
        return self._cmp_key() >= other._cmp_key()

    def __repr__(self) -> str:
        return "-inf" if self.val is None else repr(self.val)


NEG_INF = Trop(None)
ONE = Trop(EpsVal(0, 0))


@dataclass(frozen=True, slots=True)
class SignedTrop:
    """Max-plus scalar with a formal sign in ``{+1, -1, 0}``.

    The sign is ``0`` exactly when the modulus is minus infinity.
    """

    sign: int
    modulus: Trop

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if (self.sign == 0) != self.modulus.is_neg_inf:
            raise ValueError("sign is 0 iff the modulus is -inf")

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def pos_part(self) -> Trop:
        return self.modulus if self.sign > 0 else NEG_INF

    def neg_part(self) -> Trop:
        return self.modulus if self.sign < 0 else NEG_INF

    def __repr__(self) -> str:
        if self.sign == 0:
            return "-inf"
        return repr(self.modulus) if self.sign > 0 else f"~{self.modulus!r}"


SZERO = SignedTrop(0, NEG_INF)


def spos(finite: Rational, eps_deg: int = 0) -> SignedTrop:
    """Positive signed scalar with the given magnitude."""
    return SignedTrop(1, Trop.fin(finite, eps_deg))


def sneg(finite: Rational, eps_deg: int = 0) -> SignedTrop:
    """Negative signed scalar with the given magnitude."""
    return SignedTrop(-1, Trop.fin(finite, eps_deg))


def tneg(x: SignedTrop) -> SignedTrop:
    """Formal negation (sign flip)."""
    return SignedTrop(-x.sign, x.modulus)


def tmul(x: SignedTrop, y: SignedTrop) -> SignedTrop:
    """Signed max-plus multiplication: moduli add, signs multiply."""
    if x.sign == 0 or y.sign == 0:
        return SZERO
    return SignedTrop(x.sign * y.sign, x.modulus.otimes(y.modulus))


def tdiv(num: SignedTrop, den: SignedTrop) -> SignedTrop:
    """Signed max-plus division: moduli subtract, signs multiply.

    The denominator must be nonzero; a zero numerator stays zero.
    """
    if den.sign == 0:
        raise ZeroDivisionError("max-plus division by -inf")
    if num.sign == 0:
        return SZERO
    return SignedTrop(num.sign * den.sign, Trop(num.modulus.val - den.modulus.val))


def tadd_signed(x: SignedTrop, y: SignedTrop) -> SignedTrop:
    """Signed max-plus addition; partial.

    The argument of strictly larger modulus wins.  Equal moduli with equal
    signs return that value; opposite signs with equal nonzero moduli raise
    :class:`BalancedSum`.
    """
    if x.sign == 0:
        return y
    if y.sign == 0:
        return x
    if x.modulus.val > y.modulus.val:
        return x
    if y.modulus.val > x.modulus.val:
        return y
    if x.sign == y.sign:
        return x
    raise BalancedSum(f"balanced sum of {x!r} and {y!r}")


SignedVec = tuple  # tuple[SignedTrop, ...]
TropVec = tuple  # tuple[Trop, ...]


def svec(entries: Iterable[SignedTrop]) -> SignedVec:
    return tuple(entries)


@dataclass(frozen=True, slots=True)
class SignedMatrix:
    """Dense rectangular matrix of signed scalars (zero dimensions allowed)."""

    m: int
    n: int
    rows: tuple

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[SignedTrop]], n: Optional[int] = None) -> "SignedMatrix":
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
            if n is not None and n != width:
                raise DimensionMismatch(f"declared {n} columns, rows have {width}")
            n = width
        elif n is None:
            raise DimensionMismatch("empty matrix needs an explicit column count")
        return cls(len(rows), n, rows)

    def entry(self, i: int, j: int) -> SignedTrop:
        return self.rows[i][j]

    def row(self, i: int) -> SignedVec:
        return self.rows[i]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "SignedMatrix":
        rows = tuple(tuple(self.rows[i][j] for j in col_idx) for i in row_idx)
        return SignedMatrix(len(row_idx), len(col_idx), rows)

    def replace_col(self, k: int, column: Sequence[SignedTrop]) -> "SignedMatrix":
        if len(column) != self.m:
            raise DimensionMismatch("replacement column has wrong length")
        rows = tuple(
            tuple(column[i] if j == k else self.rows[i][j] for j in range(self.n))
            for i in range(self.m)
        )
        return SignedMatrix(self.m, self.n, rows)


def eval_row(a_row: Sequence[SignedTrop], b_entry: SignedTrop, x: TropVec) -> tuple:
    """Two sides of one affine max-plus inequality at the point ``x``.

    Returns ``(lhs, rhs)`` where ``lhs`` collects positive-part terms plus
    the positive part of the constant, and ``rhs`` the negative parts.
    """
    if len(a_row) != len(x):
        raise DimensionMismatch(f"row has {len(a_row)} entries, point has {len(x)}")
    lhs = b_entry.pos_part()
    rhs = b_entry.neg_part()
    for a, xj in zip(a_row, x):
        if a.sign > 0:
            lhs = lhs.oplus(a.modulus.otimes(xj))
        elif a.sign < 0:
            rhs = rhs.oplus(a.modulus.otimes(xj))
    return lhs, rhs


def eval_sides(a: SignedMatrix, b: SignedVec, x: TropVec) -> tuple:
    """Both sides of the system ``A+ x (+) b+  vs  A- x (+) b-`` at ``x``."""
    if len(b) != a.m:
        raise DimensionMismatch(f"{a.m} rows but {len(b)} constants")
    if len(x) != a.n:
        raise DimensionMismatch(f"{a.n} columns but point of length {len(x)}")
    lhs = []
    rhs = []
    for i in range(a.m):
        lo, hi = eval_row(a.rows[i], b[i], x)
        lhs.append(lo)
        rhs.append(hi)
    return tuple(lhs), tuple(rhs)


# Text encoding for signed scalars: "p/q" or an integer string for a
# positive element, "~" prefix for a negative one, "-inf" for zero.
# Symbolic eps degrees never appear in files.
_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"malformed rational {text!r}")
    return Fraction(text)


def parse_signed(text) -> SignedTrop:
    """Parse the file encoding of a signed scalar (ints accepted as-is)."""
    if isinstance(text, int) and not isinstance(text, bool):
        return spos(text)
    if not isinstance(text, str):
        raise ParseError(f"expected string or integer, got {text!r}")
    if text == "-inf":
        return SZERO
    if text.startswith("~"):
        return sneg(parse_rational(text[1:]))
    return spos(parse_rational(text))


def format_signed(x: SignedTrop) -> str:
    if x.sign == 0:
        return "-inf"
    if x.modulus.val.eps_deg != 0:
        raise ParseError("eps degrees have no file encoding")
    body = str(Fraction(x.modulus.val.finite))
    return body if x.sign > 0 else "~" + body


def parse_trop(text) -> Trop:
    """Parse an unsigned scalar ("-inf" or a rational string/integer)."""
    x = parse_signed(text)
    if x.sign < 0:
        raise ParseError(f"unsigned scalar cannot be negative-signed: {text!r}")
    return x.modulus


def format_trop(t: Trop) -> str:
    if t.is_neg_inf:
        return "-inf"
    if t.val.eps_deg != 0:
        raise ParseError("eps degrees have no file encoding")
    return str(Fraction(t.val.finite))
