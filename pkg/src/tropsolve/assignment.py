"""Maximum-weight perfect assignment over exact ordered magnitudes.

This is the workhorse behind every determinant-like computation in the
package: magnitudes are :class:`~tropsolve.core.EpsVal` values (rational
plus symbolic-infinitesimal degree), missing arcs are ``-inf`` and are
represented directly rather than through a big-M constant.

The solver is the classical O(r^3) shortest-augmenting-path method with
potentials.  Internally magnitudes are unpacked into their comparison
keys (pairs ordered lexicographically), so the hot loops run on plain
tuples; ``None`` plays the role of +infinity for forbidden arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import NEG_INF, ONE, EpsVal, Trop
from .errors import SizeLimit

INFEASIBLE_KEY = None  # +infinity sentinel in the minimisation form


@dataclass(frozen=True, slots=True)
class AssignmentResult:
    """Outcome of a maximum-weight perfect assignment.

    ``permutation`` maps row k to its column (``None`` when no finite
    perfect assignment exists, in which case ``weight`` is ``-inf``).
    ``unique`` reports whether the optimal weight is attained exactly once;
    when it is not and a second optimum is known, ``alt_permutation``
    carries one.
    """

    permutation: Optional[tuple]
    weight: Trop
    unique: bool
    alt_permutation: Optional[tuple] = None


def _cost_keys(weights: Sequence[Sequence[Trop]]):
    """Negated comparison keys: maximising weight == minimising cost."""
    cost = []
    for row in weights:
        crow = []
        for w in row:
            if w.val is None:
                crow.append(None)
            else:
                k = w.val.key
                crow.append((-k[0], -k[1]))
        cost.append(crow)
    return cost


def _solve_min(cost):
    """Shortest-augmenting-path assignment on key tuples.

    Returns ``(match_row_to_col, u, v)`` with dual-feasible potentials
    (``cost[i][j] >= u[i] + v[j]`` on finite arcs, equality on matched
    ones), or ``None`` when no perfect matching over finite arcs exists.
    """
    r = len(cost)
    zero = (0, 0)
    u = [zero] * r
    v = [zero] * (r + 1)  # index r is the virtual start column
    owner = [-1] * (r + 1)  # owner[j] = row currently matched to column j
    for i in range(r):
        owner[r] = i
        j0 = r
        minv = [None] * r
        way = [-1] * r
        used = [False] * (r + 1)
        while True:
            used[j0] = True
            i0 = owner[j0]
            u0 = u[i0]
            delta = None
            j_next = -1
            row_cost = cost[i0]
            for j in range(r):
                if used[j]:
                    continue
                cij = row_cost[j]
                if cij is not None:
                    vj = v[j]
                    cur = (cij[0] - u0[0] - vj[0], cij[1] - u0[1] - vj[1])
                    mj = minv[j]
                    if mj is None or cur < mj:
                        minv[j] = cur
                        way[j] = j0
                mj = minv[j]
                if mj is not None and (delta is None or mj < delta):
                    delta = mj
                    j_next = j
            if delta is None:
                return None  # row i cannot reach any free column
            d0, d1 = delta
            for j in range(r + 1):
                if used[j]:
                    io = owner[j]
                    if io >= 0:
                        u[io] = (u[io][0] + d0, u[io][1] + d1)
                    v[j] = (v[j][0] - d0, v[j][1] - d1)
                else:
                    mj = minv[j]
                    if mj is not None:
                        minv[j] = (mj[0] - d0, mj[1] - d1)
            j0 = j_next
            if owner[j0] == -1:
                break
        while j0 != r:
            j1 = way[j0]
            owner[j0] = owner[j1]
            j0 = j1
    match = [-1] * r
    for j in range(r):
        match[owner[j]] = j
    return match, u, v


def _find_rotation(cost, match, u, v):
    """Second optimal permutation from the tight-arc digraph, if any.

    An arc of zero reduced cost joining row i to the column owned by row
    i' induces the edge i -> i'; a directed cycle rotates the matching
    into a distinct optimum (all arcs stay tight, so the weight is
    unchanged).  Returns the rotated permutation or ``None``.
    """
    r = len(match)
    col_owner = [-1] * r
    for i, j in enumerate(match):
        col_owner[j] = i
    succ = [[] for _ in range(r)]
    for i in range(r):
        ui = u[i]
        row_cost = cost[i]
        for j in range(r):
            if j == match[i]:
                continue
            cij = row_cost[j]
            if cij is not None and cij[0] == ui[0] + v[j][0] and cij[1] == ui[1] + v[j][1]:
                succ[i].append(col_owner[j])
    color = [0] * r  # 0 unseen, 1 on stack, 2 done
    parent = [-1] * r
    for start in range(r):
        if color[start]:
            continue
        stack = [(start, iter(succ[start]))]
        color[start] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == 0:
                    color[nxt] = 1
                    parent[nxt] = node
                    stack.append((nxt, iter(succ[nxt])))
                    advanced = True
                    break
                if color[nxt] == 1:
                    # parent walk lists the directed cycle backward: every
                    # consecutive pair (a, b) below is a tight arc b -> a
                    cycle = [node]
                    cur = node
                    while cur != nxt:
                        cur = parent[cur]
                        cycle.append(cur)
                    rotated = list(match)
                    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                        rotated[b] = match[a]
                    return tuple(rotated)
            if not advanced:
                color[node] = 2
                stack.pop()
        # loop ends with all reachable nodes marked done
    return None


def max_assignment(weights: Sequence[Sequence[Trop]]) -> AssignmentResult:
    """Maximum-weight perfect assignment of an r x r magnitude matrix.

    Infeasibility (every permutation hits a ``-inf`` arc) is reported as
    weight ``-inf`` with ``unique=False`` rather than an error.
    """
    r = len(weights)
    if r == 0:
        return AssignmentResult((), ONE, True)
    cost = _cost_keys(weights)
    solved = _solve_min(cost)
    if solved is None:
        return AssignmentResult(None, NEG_INF, False)
    match, u, v = solved
    total = EpsVal(0, 0)
    for i, j in enumerate(match):
        total = total + weights[i][j].val
    alt = _find_rotation(cost, match, u, v)
    return AssignmentResult(tuple(match), Trop(total), alt is None, alt)


def brute_force_assignment(weights: Sequence[Sequence[Trop]]) -> AssignmentResult:
    """Assignment by exhaustive permutation enumeration (test oracle, r <= 8)."""
    from itertools import permutations

    r = len(weights)
    if r > 8:
        raise SizeLimit(f"brute-force assignment limited to r <= 8, got {r}")
    if r == 0:
        return AssignmentResult((), ONE, True)
    best = None
    best_perm = None
    second = None
    count = 0
    for perm in permutations(range(r)):
        total = EpsVal(0, 0)
        dead = False
        for i, j in enumerate(perm):
            w = weights[i][j]
            if w.val is None:
                dead = True
                break
            total = total + w.val
        if dead:
            continue
        if best is None or total > best:
            best = total
            best_perm = perm
            second = None
            count = 1
        elif total == best:
            count += 1
            if second is None:
                second = perm
        # strictly smaller: ignore
    if best is None:
        return AssignmentResult(None, NEG_INF, False)
    return AssignmentResult(
        tuple(best_perm),
        Trop(best),
        count == 1,
        tuple(second) if second is not None else None,
    )
