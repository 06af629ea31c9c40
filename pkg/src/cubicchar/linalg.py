"""Small exact linear algebra over the rationals (row reduction only)."""

from __future__ import annotations

from fractions import Fraction


def _frac_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = _frac_matrix(rows)
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1]) if rows else 0


def independent_rows_cols(rows):
    """Greedy maximal sets of rows and columns giving an invertible minor."""
    if not rows or not rows[0]:
        return [], []
    chosen_rows = []
    for i in range(len(rows)):
        if rank([rows[j] for j in chosen_rows + [i]]) > len(chosen_rows):
            chosen_rows.append(i)
    _, cols = rref([rows[i] for i in chosen_rows])
    return chosen_rows, cols


def inverse(rows):
    n = len(rows)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    m, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in m]


def vec_mat(v, m):
    if not m:
        return []
    return [sum(Fraction(v[i]) * m[i][j] for i in range(len(v))) for j in range(len(m[0]))]


def solve(a, b):
    """Solve ``a x = b`` exactly; raises ValueError if inconsistent or underdetermined."""
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, piv = rref(aug)
    ncols = len(a[0])
    if ncols in piv:
        raise ValueError("inconsistent linear system")
    if len(piv) < ncols:
        raise ValueError("underdetermined linear system")
    x = [Fraction(0)] * ncols
    for row, c in zip(m, piv):
        x[c] = row[-1]
    return x
