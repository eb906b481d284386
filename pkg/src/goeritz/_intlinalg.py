"""Exact integer and rational matrix helpers.

Matrices are immutable tuples of row tuples.  Integer work uses plain Python
ints (arbitrary precision), rational work uses fractions.Fraction.  Everything
here is exact; no floating point appears anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction

IntMatrix = tuple[tuple[int, ...], ...]


def freeze(rows) -> IntMatrix:
    return tuple(tuple(r) for r in rows)


def shape(a) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> IntMatrix:
    return tuple((0,) * c for _ in range(r))


def transpose(a) -> IntMatrix:
    return tuple(zip(*a)) if a else ()


def matmul(a, b):
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def scale(s, a):
    return tuple(tuple(s * x for x in row) for row in a)


def is_symmetric(a) -> bool:
    n, m = shape(a)
    return n == m and all(a[i][j] == a[j][i] for i in range(n) for j in range(i))


def is_permutation_matrix(a) -> bool:
    n, m = shape(a)
    if n != m:
        return False
    return all(sorted(row) == [0] * (n - 1) + [1] for row in a) and all(
        sorted(col) == [0] * (n - 1) + [1] for col in zip(*a)
    )


def matrix_power_order(a, cap: int = 10_000) -> int:
    """Multiplicative order of an integer matrix, or 0 if it exceeds cap."""
    n, m = shape(a)
    if n != m:
        raise ValueError("order requires a square matrix")
    ident = identity(n)
    p = a
    for k in range(1, cap + 1):
        if p == ident:
            return k
        p = matmul(p, a)
    return 0


def det(a) -> int:
    """Determinant of an integer matrix via fraction-free Bareiss elimination."""
    n, m = shape(a)
    if n != m:
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    mat = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


def leading_principal_minors(a) -> list[int]:
    n, _ = shape(a)
    return [det(tuple(row[: k + 1] for row in a[: k + 1])) for k in range(n)]


def kernel_basis(a) -> IntMatrix:
    """Z-basis of the integer kernel {v : a @ v = 0}, as columns of a matrix.

    The returned lattice is automatically saturated in Z^n.  Computed by
    integer column reduction of `a` while tracking the unimodular column
    transform.
    """
    m, n = shape(a)
    cols = [[a[i][j] for i in range(m)] for j in range(n)]
    w = [[1 if i == j else 0 for i in range(n)] for j in range(n)]  # w[j] = col j
    lead = 0
    for row in range(m):
        # gcd-eliminate entries of this row across columns lead..n-1
        while True:
            piv = None
            for j in range(lead, n):
                if cols[j][row] != 0 and (
                    piv is None or abs(cols[j][row]) < abs(cols[piv][row])
                ):
                    piv = j
            if piv is None:
                break
            cols[lead], cols[piv] = cols[piv], cols[lead]
            w[lead], w[piv] = w[piv], w[lead]
            done = True
            for j in range(lead + 1, n):
                if cols[j][row] != 0:
                    q = cols[j][row] // cols[lead][row]
                    for i in range(m):
                        cols[j][i] -= q * cols[lead][i]
                    for i in range(n):
                        w[j][i] -= q * w[lead][i]
                    if cols[j][row] != 0:
                        done = False
            if done:
                lead += 1
                break
    kernel_cols = [w[j] for j in range(lead, n)]
    return tuple(tuple(col[i] for col in kernel_cols) for i in range(n))


def column_hnf(a) -> IntMatrix:
    """Column-style Hermite normal form of a full-column-rank integer matrix.

    Pivots appear in increasing row order, one per column, are positive, and
    entries in a pivot row to the left of the pivot are reduced into
    [0, pivot).  This is the frozen canonical basis used for saturations.
    """
    m, n = shape(a)
    cols = [[a[i][j] for i in range(m)] for j in range(n)]
    lead = 0
    pivots: list[tuple[int, int]] = []  # (row, col)
    for row in range(m):
        if lead >= n:
            break
        while True:
            piv = None
            for j in range(lead, n):
                if cols[j][row] != 0 and (
                    piv is None or abs(cols[j][row]) < abs(cols[piv][row])
                ):
                    piv = j
            if piv is None:
                break
            cols[lead], cols[piv] = cols[piv], cols[lead]
            done = True
            for j in range(lead + 1, n):
                if cols[j][row] != 0:
                    q = cols[j][row] // cols[lead][row]
                    for i in range(m):
                        cols[j][i] -= q * cols[lead][i]
                    if cols[j][row] != 0:
                        done = False
            if done:
                if cols[lead][row] < 0:
                    cols[lead] = [-x for x in cols[lead]]
                for j in range(lead):
                    q = cols[j][row] // cols[lead][row]
                    if q:
                        for i in range(m):
                            cols[j][i] -= q * cols[lead][i]
                pivots.append((row, lead))
                lead += 1
                break
    if lead != n:
        raise ValueError("column_hnf requires full column rank")
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(m))


def solve_exact(a, b):
    """Solve a @ x = b exactly over the rationals.

    `a` is m x n with full column rank, `b` is m x k; raises ValueError if the
    system is inconsistent.  Returns an n x k matrix of Fractions.
    """
    m, n = shape(a)
    _, k = shape(b)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(b[i][j]) for j in range(k)]
           for i in range(m)]
    piv_rows: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_rows.append(c)
        r += 1
    if r < n:
        raise ValueError("solve_exact requires full column rank")
    for i in range(r, m):
        if any(aug[i][n + j] != 0 for j in range(k)):
            raise ValueError("inconsistent linear system")
    return tuple(tuple(aug[i][n + j] for j in range(k)) for i in range(n))
