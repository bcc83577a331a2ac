"""Exact linear algebra over the rationals for small dense systems.

Everything the state-sum oracle solves arrives as integer matrices whose
duplicate rows have already been collapsed, so plain fraction-pivot
Gaussian elimination is fast enough and, unlike floating point, settles
span membership and rank questions exactly.
"""

from __future__ import annotations

from fractions import Fraction


def _eliminate(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Row-reduce in place (forward elimination), return pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def matrix_rank(rows) -> int:
    """Rank of an integer matrix given as an iterable of equal-length rows."""
    work = [[Fraction(v) for v in row] for row in rows]
    if not work:
        return 0
    return len(_eliminate(work, len(work[0])))


def solve_membership(rows, targets) -> list[Fraction] | None:
    """Solve sum_j c_j * rows[i][j] = targets[i] for all i.

    Returns one solution (free variables set to 0), or None when the
    system is inconsistent, i.e. the target is outside the column span.
    """
    rows = list(rows)
    targets = list(targets)
    if not rows:
        return []
    ncols = len(rows[0])
    work = [[Fraction(v) for v in row] + [Fraction(t)]
            for row, t in zip(rows, targets)]
    pivots = _eliminate(work, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    solution = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        solution[c] = work[r][ncols]
    return solution


def best_effort_solution(rows, targets) -> list[Fraction]:
    """Solution of the maximal consistent subsystem (free variables 0).

    Used to produce a pointwise witness when membership fails: the returned
    coefficients fit every equation the system can satisfy at once, so some
    original row must disagree and can be reported with both side values.
    """
    rows = list(rows)
    targets = list(targets)
    if not rows:
        return []
    ncols = len(rows[0])
    solution = solve_membership(rows, targets)
    if solution is not None:
        return solution
    # Re-run elimination ignoring the target column for pivoting, then read
    # off the consistent part: rows that became 0 = nonzero are dropped.
    work = [[Fraction(v) for v in row] + [Fraction(t)]
            for row, t in zip(rows, targets)]
    pivots = _eliminate(work, ncols)
    solution = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        solution[c] = work[r][ncols]
    return solution
