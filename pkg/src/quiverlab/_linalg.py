"""Small exact linear algebra over the rationals.

Everything here runs on Fraction entries so wall membership, g-vector solves
and unimodularity checks are free of epsilon logic.  Matrices are lists of
lists; sizes stay at desk scale (n <= 8), so plain Gaussian elimination is
plenty.
"""

from fractions import Fraction


def _as_fraction_rows(m):
    return [[Fraction(x) for x in row] for row in m]


def det(m):
    """Determinant by fraction-free-ish elimination (exact)."""
    a = _as_fraction_rows(m)
    n = len(a)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        result *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                factor = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    return result


def solve(m, rhs):
    """Solve m x = rhs for square invertible m; returns Fractions.

    Raises ZeroDivisionError if m is singular.
    """
    n = len(m)
    a = _as_fraction_rows(m)
    b = [Fraction(x) for x in rhs]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        inv = Fraction(1) / a[col][col]
        for c in range(col, n):
            a[col][c] *= inv
        b[col] *= inv
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
                b[r] -= factor * b[col]
    return b


def solve_int(m, rhs):
    """Solve m x = rhs and assert the solution is integral."""
    x = solve(m, rhs)
    if any(v.denominator != 1 for v in x):
        raise ValueError(f"expected integer solution, got {x}")
    return [int(v) for v in x]


def inverse(m):
    """Exact inverse as Fraction rows."""
    n = len(m)
    cols = [solve(m, [1 if r == i else 0 for r in range(n)]) for i in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def inverse_int(m):
    """Inverse of a unimodular integer matrix, as integer rows."""
    inv = inverse(m)
    if any(v.denominator != 1 for row in inv for v in row):
        raise ValueError("matrix is not unimodular over the integers")
    return [[int(v) for v in row] for row in inv]


def rank(m):
    """Rank over the rationals."""
    a = _as_fraction_rows(m)
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = Fraction(1) / a[r][col]
        a[r] = [v * inv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [v - factor * w for v, w in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def mat_vec(m, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in m]


def transpose(m):
    return [list(col) for col in zip(*m)]
