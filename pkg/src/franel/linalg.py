"""Fraction-free exact linear algebra over polynomial entries.

The elimination is Bareiss-style: every update is
(pivot * entry - row_entry * pivot_row_entry) / previous_pivot with the
division exact by Sylvester's identity.  Entries only need mul, sub,
divexact and is_zero, so the same determinant routine runs over univariate
and bivariate polynomials.
"""

from __future__ import annotations

from .intpoly import IntPoly, poly_gcd_int


def fraction_free_nullspace(matrix):
    """Right-nullspace basis of a matrix of IntPoly entries over Q(n).

    Returns one content-stripped integer-polynomial vector per free column
    of the reduced form.  Columns are processed left to right, so the caller
    controls which unknowns become free by ordering the columns.
    """
    nrows = len(matrix)
    if nrows == 0:
        return []
    ncols = len(matrix[0])
    M = [list(row) for row in matrix]
    pivots = []
    pivot_rows = set()
    prev = IntPoly.const(1)
    for col in range(ncols):
        best = None
        for r in range(nrows):
            if r in pivot_rows:
                continue
            e = M[r][col]
            if e.is_zero:
                continue
            key = (e.degree, e.max_coeff_bits())
            if best is None or key < best[0]:
                best = (key, r)
        if best is None:
            continue
        prow = best[1]
        piv = M[prow][col]
        pivot_row = M[prow]
        for r in range(nrows):
            if r == prow:
                continue
            row = M[r]
            e = row[col]
            if e.is_zero:
                for j in range(ncols):
                    if not row[j].is_zero:
                        row[j] = (piv * row[j]).divexact(prev)
            else:
                for j in range(ncols):
                    if j == col:
                        continue
                    row[j] = (piv * row[j] - e * pivot_row[j]).divexact(prev)
                row[col] = IntPoly()
        pivots.append((prow, col))
        pivot_rows.add(prow)
        prev = piv

    pivot_cols = {c for _, c in pivots}
    basis = []
    for fc in range(ncols):
        if fc in pivot_cols:
            continue
        vec = [IntPoly() for _ in range(ncols)]
        vec[fc] = prev
        for prow, pcol in pivots:
            vec[pcol] = -M[prow][fc]
        g = IntPoly()
        for v in vec:
            g = poly_gcd_int(g, v)
        if not (g.degree == 0 and g.lc == 1):
            vec = [v.divexact(g) for v in vec]
        basis.append(vec)
    return basis


def bareiss_determinant(matrix, one, zero):
    """Determinant of a square matrix over a polynomial ring.

    ``one`` and ``zero`` are the ring constants; entries must support
    mul, sub, neg, divexact and is_zero.
    """
    size = len(matrix)
    if size == 0:
        return one
    M = [list(row) for row in matrix]
    sign = 1
    prev = one
    for t in range(size - 1):
        prow = None
        for r in range(t, size):
            if not M[r][t].is_zero:
                prow = r
                break
        if prow is None:
            return zero
        if prow != t:
            M[t], M[prow] = M[prow], M[t]
            sign = -sign
        piv = M[t][t]
        for r in range(t + 1, size):
            e = M[r][t]
            row = M[r]
            top = M[t]
            if e.is_zero:
                for j in range(t + 1, size):
                    if not row[j].is_zero:
                        row[j] = (piv * row[j]).divexact(prev)
            else:
                for j in range(t + 1, size):
                    row[j] = (piv * row[j] - e * top[j]).divexact(prev)
            row[t] = zero
        prev = piv
    det = M[size - 1][size - 1]
    return det if sign > 0 else -det
