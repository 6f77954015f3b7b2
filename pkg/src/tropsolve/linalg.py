"""Signed max-plus determinants and Cramer-style solving.

A square signed matrix is *generic* when the maximum assignment of its
entry magnitudes is finite and attained by a single permutation; its
determinant is then the signed value of that permutation's product.  A
matrix is *strongly non-degenerate* when every square submatrix is
generic.  Non-generic inputs raise :class:`NotGeneric` carrying a
:class:`GenericityReport`, so degeneracy is diagnosed rather than
silently perturbed away.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .assignment import max_assignment
from .core import (
    NEG_INF,
    SZERO,
    SignedMatrix,
    SignedTrop,
    SignedVec,
    Trop,
    TropVec,
    eval_sides,
    spos,
    tdiv,
    tneg,
)
from .errors import DimensionMismatch, NotGeneric


@dataclass(frozen=True, slots=True)
class GenericityReport:
    """Outcome of a genericity check.

    ``witness`` is either a pair of distinct optimal permutations, the
    string ``"all-neg-inf"`` when no finite assignment exists, or ``None``
    when generic.  ``exhaustive`` distinguishes a full submatrix sweep
    from a lazy report that defers detection to runtime errors.
    """

    generic: bool
    witness: object = None
    rows: Optional[tuple] = None
    cols: Optional[tuple] = None
    exhaustive: bool = True


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def _assignment_of(m: SignedMatrix):
    weights = [[m.rows[i][j].modulus for j in range(m.n)] for i in range(m.m)]
    return max_assignment(weights)


def _signed_value(m: SignedMatrix, perm: Sequence[int], weight: Trop) -> SignedTrop:
    sign = _perm_sign(perm)
    for i, j in enumerate(perm):
        sign *= m.rows[i][j].sign
    return SignedTrop(sign, weight)


def tdet(m: SignedMatrix, labels=None) -> SignedTrop:
    """Signed max-plus determinant of a generic square matrix.

    The 0 x 0 determinant is the positive unit.  ``labels`` optionally
    names the rows/columns for error reporting.
    """
    if m.m != m.n:
        raise DimensionMismatch(f"determinant of a {m.m} x {m.n} matrix")
    if m.m == 0:
        return spos(0)
    res = _assignment_of(m)
    if res.weight.is_neg_inf or not res.unique:
        rows, cols = labels if labels is not None else (None, None)
        witness = "all-neg-inf" if res.weight.is_neg_inf else (res.permutation, res.alt_permutation)
        report = GenericityReport(False, witness, rows, cols)
        raise NotGeneric(
            "matrix is not generic: "
            + ("no finite assignment" if res.weight.is_neg_inf else "optimal assignment ties"),
            rows=rows,
            cols=cols,
            witness=report,
        )
    return _signed_value(m, res.permutation, res.weight)


def _det_allow_zero(m: SignedMatrix, labels=None) -> SignedTrop:
    """Like :func:`tdet` but an all--inf assignment yields the zero scalar.

    Used for Cramer numerators, where a vanishing determinant encodes a
    ``-inf`` coordinate; a tied finite maximum is still an error.
    """
    if m.m == 0:
        return spos(0)
    res = _assignment_of(m)
    if res.weight.is_neg_inf:
        return SZERO
    if not res.unique:
        rows, cols = labels if labels is not None else (None, None)
        report = GenericityReport(False, (res.permutation, res.alt_permutation), rows, cols)
        raise NotGeneric("optimal assignment ties", rows=rows, cols=cols, witness=report)
    return _signed_value(m, res.permutation, res.weight)


def cramer_solve(a: SignedMatrix, b: SignedVec) -> Optional[TropVec]:
    """Unique candidate solution of ``A+ x (+) b+ = A- x (+) b-``, verified.

    Each coordinate is the signed quotient of the determinant with column
    k replaced by the negated constants over the determinant of ``a``.  A
    negative-signed coordinate proves there is no solution; otherwise the
    candidate's magnitudes (``-inf`` allowed) are checked by substitution,
    which is conclusive because such a system has at most one solution.
    """
    if a.m != a.n:
        raise DimensionMismatch(f"square system expected, got {a.m} x {a.n}")
    if len(b) != a.m:
        raise DimensionMismatch("constant vector length mismatch")
    den = tdet(a)
    neg_b = tuple(tneg(x) for x in b)
    point = []
    for k in range(a.n):
        num = _det_allow_zero(a.replace_col(k, neg_b))
        quot = tdiv(num, den)
        if quot.sign < 0:
            return None
        point.append(quot.modulus)
    point = tuple(point)
    lhs, rhs = eval_sides(a, b, point)
    for lo, hi in zip(lhs, rhs):
        if lo != hi:
            return None
    return point


def count_square_submatrices(m_rows: int, n_cols: int) -> int:
    return sum(comb(m_rows, r) * comb(n_cols, r) for r in range(1, min(m_rows, n_cols) + 1))


def strong_nondegeneracy_check(m: SignedMatrix, exhaustive_limit: int = 5000) -> GenericityReport:
    """Verify that every square submatrix of ``m`` is generic.

    When the number of square submatrices exceeds ``exhaustive_limit`` the
    check degrades to a lazy report (``exhaustive=False``); degeneracy is
    then still caught at runtime by :class:`NotGeneric` errors from the
    operations that hit the offending minor.
    """
    if count_square_submatrices(m.m, m.n) > exhaustive_limit:
        return GenericityReport(True, None, None, None, exhaustive=False)
    for r in range(1, min(m.m, m.n) + 1):
        for rows in combinations(range(m.m), r):
            for cols in combinations(range(m.n), r):
                try:
                    tdet(m.submatrix(rows, cols), labels=(rows, cols))
                except NotGeneric as err:
                    report = err.witness
                    return GenericityReport(False, report.witness, rows, cols)
    return GenericityReport(True)
