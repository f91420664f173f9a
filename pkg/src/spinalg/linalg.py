"""Exact Gaussian elimination over Q(i, sqrt2) and its real subfield.

Matrices are plain lists of rows.  Entries may be :class:`Scalar` or
:class:`RealScalar`; nothing here depends on which.
"""

from __future__ import annotations

from .errors import SingularMatrix
from .scalar import ONE, ZERO, as_scalar

__all__ = [
    "identity",
    "matmul",
    "transpose",
    "conj_transpose",
    "rref",
    "rank",
    "nullspace",
    "solve",
    "invert",
    "det",
    "inertia",
]


def identity(n, one=ONE, zero=ZERO):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def conj_transpose(m):
    return [[x.conj() for x in col] for col in zip(*m)]


def matmul(a, b):
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out_row = []
        for col in bt:
            acc = ZERO
            for k, x in nz:
                y = col[k]
                if y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def rref(m):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    rows = [list(r) for r in m]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv if x else x for x in rows[r]]
        piv = rows[r]
        nzc = [j for j in range(c, ncols) if piv[j]]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in nzc:
                        ri[j] = ri[j] - f * piv[j]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def nullspace(m, ncols=None):
    """Basis of ``{v : m v = 0}`` as a list of column vectors."""
    if not m:
        n = ncols or 0
        return identity(n)
    n = len(m[0])
    rows, pivots = rref(m)
    free = [c for c in range(n) if c not in pivots]
    zero = _zero_like(m)
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = zero + 1
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return basis


def _zero_like(m):
    for row in m:
        for x in row:
            return x * 0
    return ZERO


def solve(a, b):
    """Solve ``a x = b`` for vector ``b``; raises if inconsistent.

    Free variables are set to zero, so the result is the unique solution
    whenever ``a`` has full column rank.
    """
    n = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    rows, pivots = rref(aug)
    if n in pivots:
        raise SingularMatrix("inconsistent linear system")
    zero = _zero_like(a)
    x = [zero] * n
    for i, p in enumerate(pivots):
        x[p] = rows[i][n]
    return x


def invert(m):
    n = len(m)
    one = m[0][0] * 0 + 1 if n else ONE
    zero = one * 0
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(m)]
    rows, pivots = rref(aug)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in rows]


def det(m):
    rows = [list(r) for r in m]
    n = len(rows)
    d = rows[0][0] * 0 + 1 if n else ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return d * 0
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        piv = rows[c][c]
        d = d * piv
        for i in range(c + 1, n):
            f = rows[i][c] / piv
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return d


def inertia(h):
    """Sylvester inertia ``(n_plus, n_minus, n_zero)`` of a Hermitian matrix.

    Works by exact congruence: a nonzero diagonal pivot eliminates its row and
    column; if every remaining diagonal entry is zero but an off-diagonal one
    is not, a row/column combination manufactures a nonzero diagonal entry.
    """
    a = [[as_scalar(x) for x in row] for row in h]
    n = len(a)
    for i in range(n):
        for j in range(i, n):
            if a[i][j] != a[j][i].conj():
                raise ValueError("inertia needs a Hermitian matrix")
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if a[i][i]), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # row_i += c row_j, col_i += conj(c) col_j gives a_ii' = 2 Re(c a_ji)
            c = ONE if a[j][i].re else as_scalar(1j)
            for t in range(n):
                a[i][t] = a[i][t] + c * a[j][t]
            for t in range(n):
                a[t][i] = a[t][i] + c.conj() * a[t][j]
            k = i
        piv = a[k][k]
        sgn = piv.re.sign()
        if sgn > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = a[i][k] / piv
            if f:
                for t in active:
                    a[i][t] = a[i][t] - f * a[k][t]
    return pos, neg, n - pos - neg
