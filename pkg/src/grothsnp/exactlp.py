"""Exact linear feasibility over the rationals.

The only question asked here is whether a target vector is a convex
combination of finitely many given points. It is answered with a phase-1
simplex on Fraction arithmetic: no floats, no tolerances. Bland's least-index
rule makes the pivoting finite, and artificial columns are retired for good
the moment they leave the basis.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = Sequence


def convex_certificate(
    points: Sequence[Vector], target: Vector
) -> tuple[Fraction, ...] | None:
    """Convex weights writing target as a mix of the points, or None.

    The system solved is sum_j c_j * points[j] = target, sum_j c_j = 1,
    c_j >= 0. A returned tuple is an exact certificate and is re-verified
    against the system before being handed back.
    """
    if not points:
        return None
    pts = [tuple(Fraction(x) for x in p) for p in points]
    goal = tuple(Fraction(x) for x in target)
    dim = len(goal)
    if any(len(p) != dim for p in pts):
        raise ValueError("all points must share the target's dimension")
    m = len(pts)
    rows = dim + 1

    # Equality constraints with right-hand sides flipped nonnegative, then an
    # artificial identity block appended; column m + i is artificial i.
    tableau: list[list[Fraction]] = []
    for i in range(rows):
        if i < dim:
            body = [pts[j][i] for j in range(m)]
            rhs = goal[i]
        else:
            body = [Fraction(1)] * m
            rhs = Fraction(1)
        if rhs < 0:
            body = [-x for x in body]
            rhs = -rhs
        art = [Fraction(0)] * rows
        art[i] = Fraction(1)
        tableau.append(body + art + [rhs])

    basis = list(range(m, m + rows))
    retired = [False] * rows

    # Reduced-cost row for minimizing the sum of artificials: entry j holds
    # z_j - c_j, the last entry the current objective value.
    z = [sum(tableau[i][j] for i in range(rows)) for j in range(m + rows + 1)]
    for j in range(m, m + rows):
        z[j] -= 1

    while True:
        entering = None
        for j in range(m + rows):
            if j >= m and retired[j - m]:
                continue
            if z[j] > 0:
                entering = j
                break
        if entering is None:
            break
        pivot_row = None
        best = None
        for i in range(rows):
            coeff = tableau[i][entering]
            if coeff <= 0:
                continue
            ratio = tableau[i][-1] / coeff
            if best is None or ratio < best or (
                ratio == best and basis[i] < basis[pivot_row]
            ):
                best = ratio
                pivot_row = i
        if pivot_row is None:
            raise RuntimeError("phase-1 objective unbounded; inputs malformed")
        leaving = basis[pivot_row]
        if leaving >= m:
            retired[leaving - m] = True
        pivot = tableau[pivot_row][entering]
        tableau[pivot_row] = [x / pivot for x in tableau[pivot_row]]
        for i in range(rows):
            if i != pivot_row and tableau[i][entering] != 0:
                factor = tableau[i][entering]
                tableau[i] = [
                    a - factor * b for a, b in zip(tableau[i], tableau[pivot_row])
                ]
        if z[entering] != 0:
            factor = z[entering]
            z = [a - factor * b for a, b in zip(z, tableau[pivot_row])]
        basis[pivot_row] = entering

    if z[-1] != 0:
        return None

    weights = [Fraction(0)] * m
    for i, var in enumerate(basis):
        if var < m:
            weights[var] = tableau[i][-1]

    if any(w < 0 for w in weights) or sum(weights) != 1:
        raise RuntimeError("simplex returned an invalid certificate")
    for i in range(dim):
        if sum(w * p[i] for w, p in zip(weights, pts)) != goal[i]:
            raise RuntimeError("simplex returned an invalid certificate")
    return tuple(weights)
