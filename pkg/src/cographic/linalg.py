"""Exact linear algebra over the integers and rationals.

All inputs are sequences of equal-length rows with int (or Fraction)
entries.  Nothing here ever touches a float: ranks and solutions go
through Fraction elimination, determinants through the fraction-free
Bareiss scheme, and lattice questions through the Smith normal form.
"""

from fractions import Fraction
from math import gcd


def gcd_list(values):
    g = 0
    for v in values:
        g = gcd(g, abs(v))
    return g


def primitive_vector(vec):
    """Divide an integer vector by the (positive) gcd of its entries.

    The direction is preserved; the zero vector stays zero.
    """
    g = gcd_list(vec)
    if g == 0:
        return tuple(vec)
    return tuple(v // g for v in vec)


def det_int(matrix):
    """Determinant of a square integer matrix (Bareiss, exact)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(matrix):
    """Rank of a matrix with int/Fraction entries, by exact elimination."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        r += 1
        if r == len(rows):
            break
    return r


def solve_rational(matrix, rhs):
    """One exact solution of ``matrix @ x = rhs`` over Q, or None.

    Gauss-Jordan on the augmented matrix; free variables (if any) are set
    to zero.  Returns a list of Fractions.
    """
    rows = [[Fraction(x) for x in row] + [Fraction(b)]
            for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = [x / rows[r][col] for x in rows[r]]
        rows[r] = pr
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(col)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = rows[i][ncols]
    return x


def kernel_rational(matrix):
    """Basis of the right kernel of a matrix over Q (list of Fraction rows)."""
    if not matrix:
        return []
    rows = [[Fraction(x) for x in row] for row in matrix]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = [x / rows[r][col] for x in rows[r]]
        rows[r] = pr
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def smith_invariant_factors(matrix):
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Classic Smith reduction by row/column operations; fine at the sizes
    this package meets (a handful of rows and columns).
    """
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return []
    nrows, ncols = len(m), len(m[0])
    factors = []
    top = 0
    while top < min(nrows, ncols):
        # find a nonzero pivot in the remaining block
        pivot = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                if m[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        m[top], m[i] = m[i], m[top]
        for row in m:
            row[top], row[j] = row[j], row[top]
        while True:
            # clear the pivot column
            for i in range(top + 1, nrows):
                while m[i][top] != 0:
                    q = m[i][top] // m[top][top]
                    for j in range(top, ncols):
                        m[i][j] -= q * m[top][j]
                    if m[i][top] != 0:
                        m[top], m[i] = m[i], m[top]
            # clear the pivot row
            for j in range(top + 1, ncols):
                while m[top][j] != 0:
                    q = m[top][j] // m[top][top]
                    for i in range(top, nrows):
                        m[i][j] -= q * m[i][top]
                    if m[top][j] != 0:
                        for row in m:
                            row[top], row[j] = row[j], row[top]
            if all(m[i][top] == 0 for i in range(top + 1, nrows)):
                break
        factors.append(abs(m[top][top]))
        top += 1
    # enforce the divisibility chain
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            g = gcd(a, b)
            if g == 0:
                continue
            factors[i] = g
            factors[j] = a * b // g
    return [f for f in factors if f != 0]


def hyperplane_through(points):
    """Integer hyperplane (normal, offset) through the given points.

    Returns a primitive pair ``(normal, c)`` with ``normal . p = c`` for
    every input point, or None when the points are affinely dependent (the
    hyperplane would not be unique).
    """
    # kernel of [p | -1] rows determines (normal, c) up to scale
    rows = [list(p) + [-1] for p in points]
    ker = kernel_rational(rows)
    if len(ker) != 1:
        return None
    v = ker[0]
    denom = 1
    for x in v:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in v]
    ints = list(primitive_vector(ints))
    return tuple(ints[:-1]), ints[-1]
