"""Dense exact linear algebra over any field whose elements support
``+ - * /`` and truthiness (Fraction, QuadGaussian).

Matrices are lists of rows. Nothing here is clever; sizes stay below a few
hundred.
"""
from __future__ import annotations

from fractions import Fraction


def zeros(n, m, zero=Fraction(0)):
    return [[zero for _ in range(m)] for _ in range(n)]


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a, b):
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([_dot(row, col) for col in bt])
    return out


def _dot(u, v):
    acc = None
    for x, y in zip(u, v):
        if not x or not y:
            continue
        t = x * y
        acc = t if acc is None else acc + t
    if acc is None:
        return u[0] * 0 if u else 0
    return acc


def transpose(a):
    return [list(r) for r in zip(*a)]


def vecmat(v, a):
    return [_dot(v, col) for col in zip(*a)]


def rref(rows):
    """Reduced row echelon form. Returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def row_space_basis(rows):
    return rref(rows)[0]


def nullspace(rows, ncols=None):
    """Basis of {x : A x = 0} as a list of vectors."""
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows)
    sample = next((x for r in rows for x in r), Fraction(0))
    zero, one = sample * 0, sample * 0 + 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def solve(a, b):
    """Solve a x = b for square invertible a (b a vector)."""
    n = len(a)
    aug = [list(a[i]) + [b[i]] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


def inverse(a):
    n = len(a)
    sample = a[0][0]
    one, zero = sample * 0 + 1, sample * 0
    aug = [list(a[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def det(a):
    """Determinant by elimination."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return Fraction(1)
    result = m[0][0] * 0 + 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return m[0][0] * 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result = result * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def coordinates(basis_rows, v):
    """Coordinates of v in the span of independent rows, or None."""
    k = len(basis_rows)
    n = len(v)
    # columns = basis vectors, last column = v
    aug = [[basis_rows[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    if len(pivots) < k:
        raise ValueError("basis rows are dependent")
    return [red[i][k] for i in range(k)]
