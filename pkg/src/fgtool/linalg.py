"""Exact integer and finite-field linear algebra.

Matrices are plain lists of row lists holding Python ints, so entries never
overflow. Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonPrimeCharacteristic

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        acc = out[i]
        for k in range(inner):
            x = row[k]
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
    return out


def transpose(m: Matrix, cols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def determinant(m: Matrix) -> int:
    """Bareiss fraction-free elimination; exact for integer matrices."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: Matrix, cols: int | None = None):
    """Smith normal form of an integer matrix.

    Returns ``(diagonal, left, right)`` with ``left @ m @ right`` equal to the
    rectangular diagonal matrix carrying ``diagonal`` (length min(rows, cols)),
    the nonzero entries dividing each other in order and all entries >= 0.
    ``left`` and ``right`` are unimodular. ``cols`` is needed only when ``m``
    has no rows.
    """
    rows = len(m)
    ncols = len(m[0]) if rows else (cols or 0)
    a = [list(r) for r in m]
    left = identity(rows)
    right = identity(ncols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):  # row dst -= q * row src
        if q:
            ra, rs = a[dst], a[src]
            for j in range(ncols):
                ra[j] -= q * rs[j]
            la, ls = left[dst], left[src]
            for j in range(rows):
                la[j] -= q * ls[j]

    def add_col(src, dst, q):  # col dst -= q * col src
        if q:
            for r in a:
                r[dst] -= q * r[src]
            for r in right:
                r[dst] -= q * r[src]

    t = 0
    while t < min(rows, ncols):
        # smallest nonzero entry of the remaining block as pivot
        best = None
        for i in range(t, rows):
            for j in range(t, ncols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, a[i][t] // p)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(t, j, a[t][j] // p)
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a remainder is smaller than the pivot; move it into place
                best = None
                for i in range(t, rows):
                    x = a[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t, ncols):
                    x = a[t][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), t, j)
                _, i, j = best
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # pivot must divide the whole remaining block
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, ncols):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        t += 1
    diagonal = [a[i][i] for i in range(min(rows, ncols))]
    return diagonal, left, right


# ---------------------------------------------------------------------------
# fields


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def check_characteristic(p: int) -> int:
    if p != 0 and not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is neither 0 nor prime")
    return p


class Field:
    """Exact arithmetic in Q (characteristic 0) or F_p."""

    def __init__(self, characteristic: int = 0):
        self.characteristic = check_characteristic(characteristic)

    def convert(self, x):
        p = self.characteristic
        return x % p if p else Fraction(x)

    def inverse(self, x):
        p = self.characteristic
        return pow(x, -1, p) if p else 1 / x

    def reduce(self, x):
        p = self.characteristic
        return x % p if p else x

    def __repr__(self):
        return f"Field({self.characteristic})"


def rank_over(m: Matrix, characteristic: int = 0) -> int:
    """Rank of an integer matrix over Q or F_p."""
    k = Field(characteristic)
    rows = [{j: k.convert(x) for j, x in enumerate(r) if k.convert(x)} for r in m]
    return sparse_rank(rows, characteristic)


def sparse_rank(rows, characteristic: int = 0) -> int:
    """Rank of a sparse matrix given as ``{column: value}`` dicts.

    Rows are reduced one at a time against the current echelon basis, which
    keeps memory proportional to the rank rather than the row count.
    """
    k = Field(characteristic)
    pivots: dict[int, dict] = {}
    for row in rows:
        r = {j: k.convert(x) for j, x in row.items()}
        r = {j: x for j, x in r.items() if x}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = k.inverse(r[c])
                pivots[c] = {j: k.reduce(x * inv) for j, x in r.items()}
                break
            f = r[c]
            for j, x in piv.items():
                v = k.reduce(r.get(j, 0) - f * x)
                if v:
                    r[j] = v
                else:
                    r.pop(j, None)
    return len(pivots)


def nullity(rows, ncols: int, characteristic: int = 0) -> int:
    return ncols - sparse_rank(rows, characteristic)
