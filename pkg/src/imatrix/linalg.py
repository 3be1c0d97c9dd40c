"""Exact linear algebra over Z and F_p on plain lists of Python ints."""
from __future__ import annotations


def _xgcd(a, b):
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def column_echelon(A, ncols):
    """Unimodular column reduction.

    Returns ``(H, U, pivots)`` with ``H = A U`` lower echelon: each pivot
    ``(row, col)`` has a positive entry and zeros to its right, pivot columns
    are ``0..rank-1`` and columns ``rank..`` of H vanish.
    """
    m = len(A)
    n = ncols
    H = [list(row) for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    pivots = []
    c = 0
    for r in range(m):
        if c >= n:
            break
        row = H[r]
        for j in range(c + 1, n):
            if row[j] == 0:
                continue
            a, b = row[c], row[j]
            g, s, t = _xgcd(a, b)
            p, q = -b // g, a // g
            for M in (H, U):
                for R in M:
                    x, y = R[c], R[j]
                    R[c], R[j] = s * x + t * y, p * x + q * y
        if row[c] != 0:
            if row[c] < 0:
                for M in (H, U):
                    for R in M:
                        R[c] = -R[c]
            # size-reduce earlier pivot columns against this one
            for cc in range(c):
                f = H[r][cc] // H[r][c]
                if f:
                    for M in (H, U):
                        for R in M:
                            R[cc] -= f * R[c]
            pivots.append((r, c))
            c += 1
    return H, U, pivots


def solve_integer(A, b, ncols=None):
    """One integer solution of ``A x = b`` or None."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    m = len(A)
    if ncols == 0:
        return [] if all(v == 0 for v in b) else None
    H, U, pivots = column_echelon(A, ncols)
    y = [0] * ncols
    pivot_of_row = {r: c for r, c in pivots}
    for r in range(m):
        acc = sum(H[r][j] * y[j] for j in range(len(pivots)) if H[r][j])
        rhs = b[r] - acc
        if r in pivot_of_row:
            c = pivot_of_row[r]
            q, rem = divmod(rhs, H[r][c])
            if rem:
                return None
            y[c] = q
        elif rhs != 0:
            return None
    return [sum(U[i][j] * y[j] for j in range(len(pivots))) for i in range(ncols)]


def integer_kernel(A, ncols):
    """A Z-basis of ``{x in Z^n : A x = 0}``."""
    _, U, pivots = column_echelon(A, ncols)
    rank = len(pivots)
    return [[U[i][j] for i in range(ncols)] for j in range(rank, ncols)]


def solve_mod_p(A, b, p, ncols=None):
    """One solution of ``A x = b`` over F_p, or None."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    M = [[v % p for v in row] + [bv % p] for row, bv in zip(A, b)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [v * inv % p for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(v - f * w) % p for v, w in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    for i in range(r, len(M)):
        if M[i][ncols]:
            return None
    x = [0] * ncols
    for i, c in enumerate(pivots):
        x[c] = M[i][ncols]
    return x
