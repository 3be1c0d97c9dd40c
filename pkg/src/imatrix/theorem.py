"""Centralizers of 2x2 matrices over R/I and the constructive membership test.

For an I-matrix B the centralizer is the image of Cen(B) (computed over R) plus
a 2x2 grid of annihilator intersections.  Three block layouts describe the same
set; they are keyed 70, 71 and 72:

    70: [[0,     upper], [lower, diag]]
    71: [[diag,  upper], [lower, 0   ]]
    72: [[diag,  upper], [lower, diag]]

with diag = ann(f) & ann(g), upper = ann(g) & ann(e-h), lower = ann(f) & ann(e-h).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .classify import BezoutCertificate, IMatrixVerdict, classify, triple_lifts
from .ideals import (AnnIdealView, Residue, TermIdeal, solve_congruences, whole_block,
                     zero_block)
from .lifting import annihilator
from .matrices import (ReducedTriple, ScalarCase, centralizer_generators, commutes,
                       identity, integer_centralizer_basis, lift_matrix, mat, mat_add,
                       mat_scale, reduce_matrix, zeros)
from .ufd import Poly, Ring, divide_exact, divides, gcd_many

__all__ = ["NotAnIMatrix", "NotMember", "UnknownMembership", "LAYOUTS",
           "CentralizerDescription", "DecompositionCertificate", "theorem41_description",
           "decompose", "prop_grid", "position_obstructions", "Fixture",
           "counterexample_44", "counterexample_45"]

LAYOUTS = {
    70: (("zero", "upper"), ("lower", "diag")),
    71: (("diag", "upper"), ("lower", "zero")),
    72: (("diag", "upper"), ("lower", "diag")),
}


class NotAnIMatrix(ValueError):
    pass


@dataclass
class NotMember:
    reason: str

    def __bool__(self):
        return False


@dataclass
class UnknownMembership:
    reason: str

    def __bool__(self):
        return False


@dataclass
class CentralizerDescription:
    """Cen(B^) = {w*B''^ + v*E^} + block grid (equality only for Structured/Full)."""

    B: tuple
    lift: tuple
    case: str  # "Full" | "Structured" | "ContainmentOnly"
    m_R: Poly | None
    B_doubleprime: tuple | None  # B'/m_R over R
    m_k: Poly | None
    B_doubleprime_k: tuple | None  # B'/m_k over R
    blocks: dict
    verdict: IMatrixVerdict | None = None

    @property
    def ideal(self) -> TermIdeal:
        return self.B[0][0].ideal

    @property
    def certificate(self) -> BezoutCertificate | None:
        return self.verdict.certificate if self.verdict is not None else None

    @property
    def gens(self):
        I = self.ideal
        E = identity(2, I.one, I.zero)
        if self.B_doubleprime is None:
            return (E,)
        return (reduce_matrix(self.B_doubleprime, I), E)

    def grid(self, variant=71):
        return tuple(tuple(self.blocks[name] for name in row) for row in LAYOUTS[variant])

    def element(self, w, v, K):
        """w*B''^ + v*E^ + K^ for lifts or residues w, v and a residue matrix K."""
        I = self.ideal
        gens = self.gens
        out = mat_scale(I.residue(v if not isinstance(v, Residue) else v.rep), gens[-1])
        if len(gens) == 2:
            w = w.rep if isinstance(w, Residue) else w
            out = mat_add(out, mat_scale(I.residue(w), gens[0]))
        return mat_add(out, K)


@dataclass
class DecompositionCertificate:
    """A^ = v^*B''^ + d^*E^ + K^ with every K^ entry in its block."""

    A: tuple
    v_hat: Residue
    d_hat: Residue
    K_hat: tuple
    B_doubleprime: tuple  # residue matrix actually used
    grid: tuple
    variant: int
    t: Poly | None = None
    w: Poly | None = None
    m_k: Poly | None = None

    def verify(self) -> bool:
        I = self.v_hat.ideal
        E = identity(2, I.one, I.zero)
        rhs = mat_add(mat_add(mat_scale(self.v_hat, self.B_doubleprime),
                              mat_scale(self.d_hat, E)), self.K_hat)
        if rhs != self.A:
            return False
        if self.t is not None:
            tt = I.residue(self.t)
            if any(not (tt * x).is_zero() for row in self.K_hat for x in row):
                return False
        return all(view.contains(x) for vrow, krow in zip(self.grid, self.K_hat)
                   for view, x in zip(vrow, krow))


def _as_lift(Bhat, lift):
    if lift is None:
        return lift_matrix(Bhat)
    triple_lifts(Bhat, lift)  # checks the lift
    return mat(lift)


def _is_scalar(Bhat):
    (e, f), (g, h) = Bhat
    return f.is_zero() and g.is_zero() and (e - h).is_zero()


def theorem41_description(Bhat, verdict: IMatrixVerdict | None = None, lift=None,
                          strict=False, budget=None) -> CentralizerDescription:
    """The centralizer description of a 2x2 matrix over R/I.

    Certified I-matrices give an exact (Structured) description.  Otherwise the
    description only bounds the centralizer from inside (ContainmentOnly), or
    NotAnIMatrix is raised when ``strict``.
    """
    I = Bhat[0][0].ideal
    L = _as_lift(Bhat, lift)
    if _is_scalar(Bhat):
        whole = whole_block(I)
        return CentralizerDescription(mat(Bhat), L, "Full", None, None, None, None,
                                      {"diag": whole, "upper": whole, "lower": whole,
                                       "zero": whole}, verdict)
    if verdict is None:
        verdict = classify(Bhat, L, budget)
    if verdict.status != "Certified" and strict:
        raise NotAnIMatrix(f"classifier verdict {verdict.status}: {verdict.reason}")
    trip = centralizer_generators(L)
    assert isinstance(trip, ReducedTriple)
    Y = (trip.u1, trip.u2, trip.u3)
    m_k = gcd_many(list(Y) + [I.k])
    Bk = tuple(tuple(divide_exact(x, m_k) for x in row) for row in trip.B_prime)
    ann_e, ann_f, ann_g = (annihilator(I.residue(y)) for y in Y)
    blocks = {
        "diag": ann_f.intersect(ann_g),
        "upper": ann_g.intersect(ann_e),
        "lower": ann_f.intersect(ann_e),
        "zero": zero_block(I),
    }
    case = "Structured" if verdict.status == "Certified" else "ContainmentOnly"
    return CentralizerDescription(mat(Bhat), L, case, trip.m_R, trip.B_doubleprime,
                                  m_k, Bk, blocks, verdict)


def _variant_split(K1, K2, K3, d, zero, variant):
    if variant == 70:
        return ((zero, K2), (K3, -K1)), d + K1
    return ((K1, K2), (K3, zero)), d


def decompose(Ahat, desc: CentralizerDescription, variant=71, budget=None):
    """Certificate that Ahat lies in the description, NotMember, or UnknownMembership."""
    I = desc.ideal
    if variant not in LAYOUTS:
        raise ValueError(f"unknown variant {variant}")
    if not commutes(Ahat, desc.B):
        return NotMember("does not commute with B")
    (a, b), (c, d) = lift_matrix(Ahat)
    X = (a - d, b, c)
    grid = desc.grid(variant if desc.case != "ContainmentOnly" else 72)
    if desc.case == "Full":
        E = identity(2, I.one, I.zero)
        K = ((I.residue(X[0]), I.residue(X[1])), (I.residue(X[2]), I.zero))
        cert = DecompositionCertificate(mat(Ahat), I.zero, I.residue(d), K, E, grid, variant)
        assert cert.verify()
        return cert
    if desc.case == "Structured":
        return _decompose_structured(Ahat, desc, X, d, variant, grid)
    return _decompose_containment(Ahat, desc, X, d, budget)


def _decompose_structured(Ahat, desc, X, d, variant, grid):
    I = desc.ideal
    cert = desc.certificate
    i, j = cert.pair
    t, m = cert.t, desc.m_k
    # divisibility guaranteed by the commutation conditions and t | k
    assert divides(t, X[i] * m) and divides(t, X[j] * m), "t does not divide X*m_k"
    w = cert.alpha.rep * X[i] + cert.beta.rep * X[j]
    v = divide_exact(w * m, t)
    Bk = desc.B_doubleprime_k
    Y2 = (Bk[0][0], Bk[0][1], Bk[1][0])
    K1, K2, K3 = (I.residue(x - v * y) for x, y in zip(X, Y2))
    K, dd = _variant_split(K1, K2, K3, I.residue(d), I.zero, variant)
    out = DecompositionCertificate(mat(Ahat), I.residue(v), dd, K,
                                   reduce_matrix(Bk, I), grid, variant, t, w, m)
    if not out.verify():
        return NotMember("remainder K lies outside the annihilator blocks")
    return out


def _decompose_containment(Ahat, desc, X, d, budget):
    I = desc.ideal
    grid = desc.grid(72)
    views = (desc.blocks["diag"], desc.blocks["upper"], desc.blocks["lower"])
    if any(vw.closed_form is None for vw in views):
        return UnknownMembership("an annihilator block has no closed form")
    J = [vw.closed_form for vw in views]
    Bpp = desc.B_doubleprime
    Y2 = (Bpp[0][0], Bpp[0][1], Bpp[1][0])
    rows = [([y], x, Jl) for x, y, Jl in zip(X, Y2, J)]
    D = None
    if not I.ring.is_pid:
        D = budget if budget is not None else max(x.total_degree() for x in X) + I.stable_degree + 4
    sol, exhaustive = solve_congruences(rows, 1, D)
    if sol is not None:
        h2 = sol[0]
        K1, K2, K3 = (I.residue(x - h2 * y) for x, y in zip(X, Y2))
        K = ((K1, K2), (K3, I.zero))
        cert = DecompositionCertificate(mat(Ahat), I.residue(h2), I.residue(d), K,
                                        reduce_matrix(Bpp, I), grid, 72)
        assert cert.verify()
        return cert
    if exhaustive:
        return NotMember("no multiplier of B'' reaches A modulo the blocks")
    for pos, (x, y, Jl) in enumerate(zip(X, Y2, J)):
        if y.is_term() or not y.terms:
            span = Jl.sum(TermIdeal(I.ring, [y])) if y.terms else Jl
            if not span.contains(x):
                name = ("a-d", "b", "c")[pos]
                return NotMember(f"{name} = {x} is not in <{y}> + {Jl}")
    return UnknownMembership("bounded search found no multiplier")


# -- n x n annihilator grid -----------------------------------------------------------------

def prop_grid(Bhat):
    """A_ij = (& ann b_jk, k != j) & (& ann b_ki, k != i) & ann(b_ii - b_jj)."""
    n = len(Bhat)
    I = Bhat[0][0].ideal
    cache = {}

    def ann(r):
        if r.rep not in cache:
            cache[r.rep] = annihilator(r)
        return cache[r.rep]

    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            view = ann(Bhat[i][i] - Bhat[j][j])
            for kk in range(n):
                if kk != j:
                    view = view.intersect(ann(Bhat[j][kk]))
                if kk != i:
                    view = view.intersect(ann(Bhat[kk][i]))
            view.label = f"A{i + 1}{j + 1}"
            row.append(view)
        grid.append(tuple(row))
    return tuple(grid)


def position_obstructions(gens, grid, A):
    """Positions where every generator and the block vanish but A does not."""
    out = []
    n = len(A)
    for i in range(n):
        for j in range(n):
            if A[i][j].is_zero():
                continue
            if all(G[i][j].is_zero() for G in gens) and grid[i][j].is_zero_ideal():
                out.append((i, j))
    return out


# -- fixtures ------------------------------------------------------------------------------

@dataclass
class Fixture:
    ring: Ring
    ideal: TermIdeal
    B: tuple
    witness: tuple
    cen_generators: tuple  # generators of Cen(B) over R (as lifts)
    grid: tuple | None = None
    description: CentralizerDescription | None = None
    decomposition: object = None
    verdict: IMatrixVerdict | None = None
    checks: dict = field(default_factory=dict)


def counterexample_44(p=2) -> Fixture:
    R = Ring.fp_xy(p)
    I = TermIdeal(R, ["x^2"])
    B = mat([["x+y", "y"], ["x", "x"]], R)
    Bhat = reduce_matrix(B, I)
    W = reduce_matrix(mat([["x", "x"], ["0", "0"]], R), I)
    verdict = classify(Bhat, B)
    desc = theorem41_description(Bhat, verdict, B)
    dec = decompose(W, desc)
    gens = centralizer_generators(B)
    fx = Fixture(R, I, Bhat, W, (gens.B_doubleprime, identity(2, R.one, R.zero)),
                 desc.grid(71), desc, dec, verdict)
    fx.checks = {
        "witness_commutes": commutes(W, Bhat),
        "not_member": isinstance(dec, NotMember),
        "not_certified": verdict.status != "Certified",
    }
    assert all(fx.checks.values()), fx.checks
    return fx


def _embed(M, n, zero):
    k = len(M)
    return tuple(tuple(M[i][j] if i < k and j < k else zero for j in range(n)) for i in range(n))


def counterexample_45(n=3, ring: Ring | None = None, ideal_gens=(4,), d=2, d_prime=2) -> Fixture:
    R = ring or Ring.integers()
    I = TermIdeal(R, list(ideal_gens))
    dh, dph = I.residue(R(d)), I.residue(R(d_prime))
    if dh.is_zero() or dph.is_zero() or not (dh * dph).is_zero():
        raise ValueError("need nonzero d, d' with d*d' = 0 in R/I")
    if n < 3:
        raise ValueError("n must be at least 3")
    z, o = R.zero, R.one
    dd = R(d)
    core = ((z, dd, o), (z, z, o), (z, z, z))
    E13 = ((z, z, o), (z, z, z), (z, z, z))
    E3 = identity(3, o, z)
    gens = [_embed(G, n, z) for G in (E13, core, E3)]
    # outside the leading 3x3 block the centralizer is unconstrained by this argument
    for i in range(n):
        for j in range(n):
            if i >= 3 or j >= 3:
                gens.append(tuple(tuple(o if (a, b) == (i, j) else z for b in range(n))
                                  for a in range(n)))
    B = _embed(core, n, z)
    Bhat = reduce_matrix(B, I)
    wcore = ((d_prime, 0, 0), (d_prime, 0, 0), (0, 0, d_prime))
    W = reduce_matrix(_embed(mat(wcore, R), n, z), I)
    grid = prop_grid(Bhat)
    gens_hat = [reduce_matrix(G, I) for G in gens]
    obstruction = position_obstructions(gens_hat, grid, W)
    fx = Fixture(R, I, Bhat, W, tuple(gens), grid)
    fx.checks = {
        "witness_commutes": commutes(W, Bhat),
        "obstruction_at_21": (1, 0) in obstruction,
    }
    if R.kind == "Z":
        # the hard-coded generators agree with the integer kernel at position (2,1)
        basis = integer_centralizer_basis(B)
        fx.checks["kernel_zero_at_21"] = all(Bz[1][0] == 0 for Bz in basis)
    assert all(fx.checks.values()), fx.checks
    return fx
