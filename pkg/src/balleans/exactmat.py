"""Exact integer matrix kernel: Hermite and Smith normal forms, determinants,
and integer linear solving.

Everything here works on rectangular sequences of Python ints, so all results
are exact at arbitrary size. No floating point is used anywhere in this module;
index products like p1^m1 * ... * pn^mn overflow machine words quickly, which
is why arbitrary precision is mandatory.
"""

from __future__ import annotations

from typing import Optional, Sequence

Matrix = Sequence[Sequence[int]]


def _as_rows(m: Matrix) -> list[list[int]]:
    """Copy into a list of lists, rejecting ragged or non-integer input."""
    rows = [list(r) for r in m]
    if rows:
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged matrix")
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError("matrix entries must be integers")
    return rows


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _echelon_transform(
    m: Matrix,
) -> tuple[list[list[int]], list[list[int]], list[tuple[int, int]]]:
    """Row-echelon form by unimodular row operations.

    Returns (h, u, pivots) with u * m == h, u unimodular, h in echelon form
    with positive pivots, and pivots a list of (row, col) positions. Rows of h
    from len(pivots) on are zero; the matching rows of u span the left kernel.
    """
    h = _as_rows(m)
    n = len(h)
    ncols = len(h[0]) if h else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    pivots: list[tuple[int, int]] = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, n):
            if h[i][col]:
                piv = i
                break
        if piv is None:
            continue
        for i in range(piv + 1, n):
            if not h[i][col]:
                continue
            a, b = h[piv][col], h[i][col]
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            for rows in (h, u):
                rp, ri = rows[piv], rows[i]
                for j in range(len(rp)):
                    rp[j], ri[j] = x * rp[j] + y * ri[j], ag * ri[j] - bg * rp[j]
        if piv != rank:
            h[rank], h[piv] = h[piv], h[rank]
            u[rank], u[piv] = u[piv], u[rank]
        if h[rank][col] < 0:
            h[rank] = [-x for x in h[rank]]
            u[rank] = [-x for x in u[rank]]
        pivots.append((rank, col))
        rank += 1
    return h, u, pivots


def _reduce_above(h: list[list[int]], pivots: list[tuple[int, int]],
                  u: Optional[list[list[int]]] = None) -> None:
    """Reduce entries above each pivot into [0, pivot), in place."""
    for r, c in pivots:
        p = h[r][c]
        for i in range(r):
            q = h[i][c] // p
            if q:
                row = h[r]
                target = h[i]
                for j in range(c, len(target)):
                    target[j] -= q * row[j]
                if u is not None:
                    urow = u[r]
                    utarget = u[i]
                    for j in range(len(utarget)):
                        utarget[j] -= q * urow[j]


def row_hnf(m: Matrix) -> list[list[int]]:
    """Canonical row-style Hermite Normal Form of the row span of m.

    Zero rows removed, row echelon, pivots positive, entries above each pivot
    reduced into [0, pivot). Two matrices have the same row span over the
    integers iff their HNFs are identical, so lattice equality becomes
    bit-equality on the output.
    """
    h, _, pivots = _echelon_transform(m)
    _reduce_above(h, pivots)
    return h[: len(pivots)]


def left_kernel(m: Matrix) -> list[list[int]]:
    """Canonical basis of the integer left kernel {u : u * m = 0}.

    The transform rows paired with zero echelon rows span the full integer
    kernel because the transform is unimodular.
    """
    h, u, pivots = _echelon_transform(m)
    return row_hnf(u[len(pivots):])


def snf(m: Matrix) -> list[int]:
    """Smith Normal Form diagonal d1 | d2 | ... with trailing zeros.

    The returned list has length min(rows, cols); nonzero entries are positive
    and each divides the next.
    """
    a = _as_rows(m)
    nr = len(a)
    nc = len(a[0]) if a else 0
    size = min(nr, nc)
    diag: list[int] = []
    t = 0
    while t < size:
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i0, j0 = piv
        a[t], a[i0] = a[i0], a[t]
        if j0 != t:
            for row in a:
                row[t], row[j0] = row[j0], row[t]
        while True:
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        for j in range(t, nc):
                            a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for i in range(t, nr):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for i in range(t, nr):
                            a[i][t], a[i][j] = a[i][j], a[i][t]
                        dirty = True
            if dirty:
                continue
            # pivot now alone in its row and column; enforce divisibility
            fix = None
            d = a[t][t]
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % d:
                        fix = i
                        break
                if fix is not None:
                    break
            if fix is None:
                break
            for j in range(t, nc):
                a[t][j] += a[fix][j]
        diag.append(abs(a[t][t]))
        t += 1
    diag.extend([0] * (size - len(diag)))
    return diag


def abs_det(m: Matrix) -> int:
    """|det(m)| by fraction-free (Bareiss) elimination; exact for any size."""
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("not square")
    if n == 0:
        return 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return abs(a[n - 1][n - 1])


def solve_integer(m: Matrix, target: Sequence[int]) -> Optional[list[int]]:
    """Integer coefficients c with c * m == target, or None if there are none.

    Any valid witness is acceptable; the one returned comes from forward
    substitution against the echelon form, mapped back through the unimodular
    transform.
    """
    rows = _as_rows(m)
    t = list(target)
    if rows and len(t) != len(rows[0]):
        raise ValueError("dimension mismatch")
    if not rows:
        if any(t):
            return None
        return []
    h, u, pivots = _echelon_transform(rows)
    coeffs = [0] * len(rows)
    for r, c in pivots:
        q, rem = divmod(t[c], h[r][c])
        if rem:
            return None
        if q:
            hrow = h[r]
            for j in range(c, len(t)):
                t[j] -= q * hrow[j]
        for j, uj in enumerate(u[r]):
            coeffs[j] += q * uj
    if any(t):
        return None
    return coeffs
