"""Small square matrices over a UFD or a factor ring, and 2x2 centralizers over a UFD.

Matrices are tuples of row tuples whose entries are all Poly (one ring) or all
Residue (one factor ring).
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .ideals import Residue, TermIdeal
from .ufd import Poly, RingMismatchError, divide_exact, gcd_many

__all__ = ["mat", "mat_mul", "mat_add", "mat_sub", "mat_scale", "identity", "zeros",
           "reduce_matrix", "lift_matrix", "commutes", "cross_conditions",
           "ScalarCase", "ReducedTriple", "centralizer_generators",
           "integer_centralizer_basis", "format_matrix"]


def mat(rows, conv=None):
    if conv is not None:
        return tuple(tuple(conv(x) for x in row) for row in rows)
    return tuple(tuple(row) for row in rows)


def _check_shape(A, B):
    if len(A) != len(B) or any(len(r) != len(A) for r in A) or any(len(r) != len(B) for r in B):
        raise ValueError("matrices must be square of the same size")


def mat_mul(A, B):
    _check_shape(A, B)
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = A[i][0] * B[0][j]
            for t in range(1, n):
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(s, A):
    return tuple(tuple(s * a for a in row) for row in A)


def identity(n, one, zero):
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(n, zero):
    return tuple((zero,) * n for _ in range(n))


def reduce_matrix(A, ideal: TermIdeal):
    return mat(A, ideal.residue)


def lift_matrix(A):
    return mat(A, lambda r: r.rep)


def format_matrix(A):
    return [[str(x) for x in row] for row in A]


def _entries_ring(A):
    first = A[0][0]
    for row in A:
        for x in row:
            if type(x) is not type(first):
                raise RingMismatchError("mixed entry kinds")
            if isinstance(x, Residue):
                if x.ideal is not first.ideal and x.ideal != first.ideal:
                    raise RingMismatchError("entries from different factor rings")
            elif x.ring != first.ring:
                raise RingMismatchError("entries from different rings")
    return first


def cross_conditions(A, B):
    """The three 2x2 commutation conditions, each as ``lhs - rhs``.

    With X = (a-d, b, c) and Y = (e-h, f, g): X_i*Y_j - X_j*Y_i for
    (i, j) = (2, 3), (1, 2), (1, 3).
    """
    (a, b), (c, d) = A
    (e, f), (g, h) = B
    X = (a - d, b, c)
    Y = (e - h, f, g)
    return (X[1] * Y[2] - X[2] * Y[1],
            X[0] * Y[1] - X[1] * Y[0],
            X[0] * Y[2] - X[2] * Y[0])


def commutes(A, B) -> bool:
    _check_shape(A, B)
    _entries_ring(A)
    if _entries_ring(B).__class__ is not A[0][0].__class__:
        raise RingMismatchError("mixed entry kinds")
    direct = mat_mul(A, B) == mat_mul(B, A)
    if len(A) == 2:
        cross = all(not x for x in cross_conditions(A, B))
        assert cross == direct, "cross conditions disagree with direct multiplication"
    return direct


@dataclass(frozen=True)
class ScalarCase:
    """B is scalar: every matrix commutes with it."""

    B: tuple


@dataclass(frozen=True)
class ReducedTriple:
    """Cen(B) = {w*B'' + v*E} with B' = [[e-h, f], [g, 0]] = m_R * B''."""

    B: tuple
    u1: Poly
    u2: Poly
    u3: Poly
    B_prime: tuple
    m_R: Poly
    B_doubleprime: tuple

    def element(self, w, v):
        R = self.m_R.ring
        w, v = R(w), R(v)
        E = identity(2, R.one, R.zero)
        return mat_add(mat_scale(w, self.B_doubleprime), mat_scale(v, E))


def centralizer_generators(B):
    (e, f), (g, h) = B
    _entries_ring(B)
    R = e.ring
    u1 = e - h
    if not u1.terms and not f.terms and not g.terms:
        return ScalarCase(mat(B))
    Bp = ((u1, f), (g, R.zero))
    m = gcd_many([u1, f, g])
    Bpp = tuple(tuple(divide_exact(x, m) for x in row) for row in Bp)
    return ReducedTriple(mat(B), u1, f, g, Bp, m, Bpp)


def integer_centralizer_basis(B):
    """A Z-basis of the centralizer of an n x n integer matrix (kernel of X -> XB - BX)."""
    n = len(B)
    Bi = [[x if isinstance(x, int) else x.int_value() for x in row] for row in B]
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            # (XB - BX)_{ij} = sum_t X_{it} B_{tj} - B_{it} X_{tj}
            for t in range(n):
                row[i * n + t] += Bi[t][j]
                row[t * n + j] -= Bi[i][t]
            rows.append(row)
    basis = linalg.integer_kernel(rows, n * n)
    return [tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)) for v in basis]
