"""Exact rational LP solver: dense two-phase simplex with Bland's rule.

Solves  min c.x  subject to  A x = b, x >= 0  over Fractions.  Callers
add their own slack variables for inequality rows.  Bland's rule makes
cycling impossible; everything is exact, so feasibility answers are
certificates, not approximations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: list | None = None
    objective: Fraction | None = None


def _pivot(tab, basis, row, col):
    piv = tab[row][col]
    inv = Fraction(1) / piv
    tab[row] = [v * inv for v in tab[row]]
    prow = tab[row]
    for r, vec in enumerate(tab):
        if r != row and vec[col] != 0:
            f = vec[col]
            tab[r] = [a - f * b for a, b in zip(vec, prow)]
    basis[row] = col


def _simplex_loop(tab, basis, nvars):
    """Optimize the tableau in place; last row is the objective (min)."""
    while True:
        obj = tab[-1]  # _pivot rebinds rows; re-read every iteration
        col = None
        for j in range(nvars):
            if obj[j] < 0:
                col = j  # Bland: first improving column
                break
        if col is None:
            return OPTIMAL
        row = None
        best = None
        for r in range(len(tab) - 1):
            a = tab[r][col]
            if a > 0:
                ratio = tab[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[row]):
                    best = ratio
                    row = r
        if row is None:
            return UNBOUNDED
        _pivot(tab, basis, row, col)


def solve_lp(c, a_rows, b, nvars) -> LPResult:
    """min c.x  s.t.  a_rows x = b, x >= 0.  All entries Fractions."""
    m = len(a_rows)
    c = [Fraction(v) for v in c]
    rows = [[Fraction(v) for v in row] for row in a_rows]
    b = [Fraction(v) for v in b]
    for i in range(m):
        if b[i] < 0:
            rows[i] = [-v for v in rows[i]]
            b[i] = -b[i]

    # Phase 1: artificial basis.
    total = nvars + m
    tab = []
    for i in range(m):
        row = rows[i] + [Fraction(0)] * m + [b[i]]
        row[nvars + i] = Fraction(1)
        tab.append(row)
    obj = [Fraction(0)] * (total + 1)
    for i in range(m):
        for j in range(total + 1):
            obj[j] -= tab[i][j]
    for i in range(m):
        obj[nvars + i] = Fraction(0)
    tab.append(obj)
    basis = [nvars + i for i in range(m)]
    status = _simplex_loop(tab, basis, total)
    assert status == OPTIMAL  # phase-1 objective is bounded below by 0
    if tab[-1][-1] < 0:
        return LPResult(INFEASIBLE)

    # Drive artificials out of the basis where possible.
    for r in range(m):
        if basis[r] >= nvars:
            piv = None
            for j in range(nvars):
                if tab[r][j] != 0:
                    piv = j
                    break
            if piv is not None:
                _pivot(tab, basis, r, piv)

    # Drop redundant rows still held by artificials, rebuild with real obj.
    keep = [r for r in range(m) if basis[r] < nvars]
    tab2 = [tab[r][:nvars] + [tab[r][-1]] for r in keep]
    basis2 = [basis[r] for r in keep]
    obj2 = c[:] + [Fraction(0)]
    for r, vec in enumerate(tab2):
        f = obj2[basis2[r]]
        if f != 0:
            obj2 = [a - f * bb for a, bb in zip(obj2, vec)]
    tab2.append(obj2)
    status = _simplex_loop(tab2, basis2, nvars)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * nvars
    for r, bcol in enumerate(basis2):
        x[bcol] = tab2[r][-1]
    return LPResult(OPTIMAL, x, sum(ci * xi for ci, xi in zip(c, x)))
