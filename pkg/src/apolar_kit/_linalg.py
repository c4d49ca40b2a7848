"""Exact Gaussian elimination over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Pivots are
chosen by largest absolute numerator (ties broken by lowest row index), a
deterministic rule that keeps entry growth modest without leaving exact
arithmetic.  Nullspace bases come out of the reduced row echelon form with
free variables set one at a time, so downstream golden outputs are stable.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot column indices."""
    m = [list(row) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r >= len(m):
            break
        best = -1
        best_mag = -1
        for i in range(r, len(m)):
            entry = m[i][col]
            if entry:
                mag = abs(entry.numerator)
                if mag > best_mag:
                    best, best_mag = i, mag
        if best < 0:
            continue
        m[r], m[best] = m[best], m[r]
        inv = Fraction(1) / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return m, pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of the right kernel, one vector per free column, ascending."""
    if not rows:
        if ncols is None:
            return []
        return [[Fraction(i == j) for i in range(ncols)] for j in range(ncols)]
    ncols = len(rows[0]) if ncols is None else ncols
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, col in enumerate(pivots):
            vec[col] = -reduced[r][free]
        basis.append(vec)
    return basis


def solve(columns: list[Vector], target: Vector) -> Vector | None:
    """Coefficients expressing ``target`` in the span of ``columns``.

    Returns None when the target is outside the span; free coefficients are
    set to zero, so the answer is deterministic.
    """
    if not columns:
        return [] if not any(target) else None
    nrows = len(target)
    augmented = [[col[i] for col in columns] + [target[i]] for i in range(nrows)]
    reduced, pivots = rref(augmented)
    width = len(columns)
    if width in pivots:
        return None
    coeffs = [Fraction(0)] * width
    for r, col in enumerate(pivots):
        coeffs[col] = reduced[r][width]
    return coeffs


def in_span(columns: list[Vector], target: Vector) -> bool:
    return solve(columns, target) is not None
