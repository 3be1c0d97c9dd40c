"""Brute-force ground truth over finite rings and seeded sampling elsewhere.

Finite test beds are Z_n and F_p[x]/<x^m>.  Their elements are indexed by
canonical representatives and arithmetic is done with numpy lookup tables.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from .ideals import AnnIdealView, Residue, TermIdeal
from .matrices import commutes, identity, integer_centralizer_basis, mat_add, mat_mul
from .theorem import (CentralizerDescription, DecompositionCertificate, NotMember,
                      decompose, prop_grid)
from .ufd import Poly, Ring

__all__ = ["FiniteRingSpec", "EnumerationReport", "GuardExceeded", "enumerate_centralizer",
           "described_set", "compare", "sample_commuting", "sample_block",
           "random_poly", "sample_prop_containment"]

MATRIX_GUARD = 2_000_000


class GuardExceeded(ValueError):
    pass


class FiniteRingSpec:
    """Z_n (``FiniteRingSpec.zn(n)``) or F_p[x]/<x^m> (``FiniteRingSpec.fpx_trunc(p, m)``)."""

    def __init__(self, ideal: TermIdeal, elements):
        self.ideal = ideal
        self.elements = list(elements)
        self.index = {e.rep: i for i, e in enumerate(self.elements)}
        N = len(self.elements)
        if N > 10 ** 5:
            raise GuardExceeded(f"ring of size {N}")
        self.size = N
        add = np.empty((N, N), dtype=np.int64)
        mul = np.empty((N, N), dtype=np.int64)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                add[i, j] = self.index[(a + b).rep]
                mul[i, j] = self.index[(a * b).rep]
        self.add, self.mul = add, mul
        self.neg = np.array([self.index[(-a).rep] for a in self.elements], dtype=np.int64)

    @classmethod
    def zn(cls, n):
        R = Ring.integers()
        I = TermIdeal(R, [n])
        return cls(I, [I.residue(i) for i in range(n)])

    @classmethod
    def fpx_trunc(cls, p, m):
        R = Ring.fp_x(p)
        I = TermIdeal(R, [R.monomial((m,))])
        els = [I.residue(Poly(R, {(d,): c for d, c in enumerate(cs)}))
               for cs in itertools.product(range(p), repeat=m)]
        return cls(I, els)

    @property
    def name(self):
        gens = ", ".join(str(g) for g in self.ideal.generators)
        return f"{self.ideal.ring}/<{gens}>"

    def idx(self, r: Residue) -> int:
        return self.index[r.rep]

    def matrix_code(self, A):
        N = self.size
        code = 0
        for row in A:
            for x in row:
                code = code * N + self.idx(x)
        return code

    def decode(self, code, n=2):
        N = self.size
        digits = []
        for _ in range(n * n):
            code, r = divmod(code, N)
            digits.append(self.elements[r])
        digits.reverse()
        return tuple(tuple(digits[i * n:(i + 1) * n]) for i in range(n))


@dataclass
class EnumerationReport:
    ring: str
    matrices_tested: int
    centralizer_size: int
    described_size: int
    decomposed: int
    mismatches: list = field(default_factory=list)
    seed: int | None = None

    @property
    def ok(self):
        return not self.mismatches

    def to_json(self):
        return {"ring": self.ring, "matrices_tested": self.matrices_tested,
                "centralizer_size": self.centralizer_size,
                "described_size": self.described_size, "decomposed": self.decomposed,
                "mismatches": [[[str(x) for x in row] for row in m[0]] + [m[1], m[2]]
                               for m in self.mismatches],
                "seed": self.seed}


def _codes(spec, a, b, c, d):
    N = spec.size
    return ((a * N + b) * N + c) * N + d


def enumerate_centralizer(Bhat, spec: FiniteRingSpec):
    """All 2x2 X with XB = BX, as a sorted numpy array of matrix codes."""
    N = spec.size
    if N ** 4 > MATRIX_GUARD:
        raise GuardExceeded(f"{N}^4 matrices exceed the enumeration guard")
    (e, f), (g, h) = [[spec.idx(x) for x in row] for row in Bhat]
    ar = np.arange(N, dtype=np.int64)
    a, b, c, d = (x.ravel() for x in np.meshgrid(ar, ar, ar, ar, indexing="ij"))
    M, S = spec.mul, spec.add
    # XB and BX entrywise
    xb = (S[M[a, e], M[b, g]], S[M[a, f], M[b, h]], S[M[c, e], M[d, g]], S[M[c, f], M[d, h]])
    bx = (S[M[e, a], M[f, c]], S[M[e, b], M[f, d]], S[M[g, a], M[h, c]], S[M[g, b], M[h, d]])
    ok = np.ones(a.shape, dtype=bool)
    for p, q in zip(xb, bx):
        ok &= p == q
    return np.sort(_codes(spec, a[ok], b[ok], c[ok], d[ok]))


def _block_members(view: AnnIdealView, spec: FiniteRingSpec):
    return np.array([i for i, r in enumerate(spec.elements) if view.contains(r)], dtype=np.int64)


def described_set(desc: CentralizerDescription, spec: FiniteRingSpec, variant=71):
    """All matrices w*B''^ + v*E^ + K^ of the description, as sorted unique codes."""
    N = spec.size
    grid = desc.grid(variant if desc.case != "ContainmentOnly" else 72)
    K = [_block_members(view, spec) for row in grid for view in row]
    gens = desc.gens
    ar = np.arange(N, dtype=np.int64)
    M, S = spec.mul, spec.add
    E = [[spec.idx(x) for x in row] for row in gens[-1]]
    if len(gens) == 2:
        G = [[spec.idx(x) for x in row] for row in gens[0]]
        w, v = (x.ravel() for x in np.meshgrid(ar, ar, indexing="ij"))
        base = [S[M[w, G[i][j]], M[v, E[i][j]]] for i in range(2) for j in range(2)]
    else:
        v = ar
        base = [M[v, E[i][j]] for i in range(2) for j in range(2)]
    # all combinations base x K11 x K12 x K21 x K22
    entries = []
    mesh = np.meshgrid(np.arange(len(base[0])), *[np.arange(len(k)) for k in K], indexing="ij")
    bi = mesh[0].ravel()
    for pos in range(4):
        entries.append(S[base[pos][bi], K[pos][mesh[pos + 1].ravel()]])
    return np.unique(_codes(spec, *entries))


def compare(desc: CentralizerDescription, spec: FiniteRingSpec, variant=71,
            full_sweep=False, seed=None) -> EnumerationReport:
    """Enumerated centralizer against the description, both as a set and via decompose."""
    enumerated = enumerate_centralizer(desc.B, spec)
    described = described_set(desc, spec, variant)
    mismatches = []
    for code in np.setdiff1d(enumerated, described):
        mismatches.append((spec.decode(int(code)), True, False))
    for code in np.setdiff1d(described, enumerated):
        mismatches.append((spec.decode(int(code)), False, True))
    decomposed = 0
    candidates = range(spec.size ** 4) if full_sweep else (int(c) for c in enumerated)
    members = set(int(c) for c in enumerated)
    for code in candidates:
        X = spec.decode(code)
        res = decompose(X, desc, variant)
        ok = isinstance(res, DecompositionCertificate)
        if ok:
            assert res.verify(), "decomposition certificate failed its audit"
            decomposed += 1
        if ok != (code in members):
            mismatches.append((X, code in members, ok))
    return EnumerationReport(spec.name, spec.size ** 4, len(enumerated), len(described),
                             decomposed, mismatches, seed)


# -- sampling ----------------------------------------------------------------------------

def random_poly(ring: Ring, rng: random.Random, degree=3, box=20) -> Poly:
    if ring.kind == "Z":
        return ring(rng.randint(-box, box))
    if ring.kind == "Fp_xy":
        terms = {(a, t - a): rng.randrange(ring.p) for t in range(degree + 1) for a in range(t + 1)
                 if rng.random() < 0.5}
        return Poly(ring, terms)
    lo = 0 if ring.p is not None else -box
    hi = ring.p - 1 if ring.p is not None else box
    return Poly(ring, {(d,): rng.randint(lo, hi) for d in range(degree + 1) if rng.random() < 0.6})


def sample_block(view: AnnIdealView, rng: random.Random, degree=3, box=20) -> Residue:
    """A random element of an annihilator block (zero when no closed form is known)."""
    I = view.ideal
    if view.closed_form is None:
        return I.zero
    out = I.ring.zero
    for gen in view.closed_form.generators:
        out = out + gen * random_poly(I.ring, rng, degree, box)
    r = I.residue(out)
    assert view.predicate(r), "block sample fails the annihilator predicate"
    return r


def sample_commuting(desc: CentralizerDescription, count: int, seed: int, variant=71,
                     degree=None):
    """Deterministic stream of elements w*B''^ + v*E^ + K^ of the description."""
    rng = random.Random(seed)
    I = desc.ideal
    R = I.ring
    deg = I.stable_degree + 2 if degree is None else degree
    grid = desc.grid(variant if desc.case != "ContainmentOnly" else 72)
    for _ in range(count):
        w = random_poly(R, rng, deg)
        v = random_poly(R, rng, deg)
        K = tuple(tuple(sample_block(view, rng, deg) for view in row) for row in grid)
        A = desc.element(w, v, K)
        assert commutes(A, desc.B), "sampled element does not commute"
        yield A


def sample_prop_containment(Bint, ideal: TermIdeal, count: int, seed: int, box=5):
    """Sample Theta(Cen(B)) + [A_ij] for an integer n x n matrix; return the samples."""
    rng = random.Random(seed)
    n = len(Bint)
    R = ideal.ring
    basis = integer_centralizer_basis(Bint)
    Bhat = tuple(tuple(ideal.residue(R(x)) for x in row) for row in Bint)
    grid = prop_grid(Bhat)
    out = []
    for _ in range(count):
        X = [[0] * n for _ in range(n)]
        for G in basis:
            c = rng.randint(-box, box)
            for i in range(n):
                for j in range(n):
                    X[i][j] += c * G[i][j]
        A = tuple(tuple(ideal.residue(R(X[i][j])) + sample_block(grid[i][j], rng, 0, box)
                        for j in range(n)) for i in range(n))
        out.append(A)
    return Bhat, grid, out
