"""Finitely generated term ideals and the factor rings they define.

Supported ideals:

* Z and F_p[x]: any ideal, stored as the principal ideal of its gcd;
* Z[x]: ideals generated by terms ``c*x^d``.  Membership is degree-wise:
  ``e`` lies in the ideal iff ``g_n | coeff_n(e)`` for every n, where
  ``g_n = gcd{c_i : d_i <= n}`` (``g_n = 0`` forces the coefficient to vanish);
* F_p[x,y]: monomial ideals.

Ideals that are not term ideals would need strong Groebner bases over Z and
are rejected with :class:`UnsupportedIdealError`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

from . import linalg
from .ufd import (Poly, Ring, RingMismatchError, canonical, divide_exact, divides,
                  factor, fpx_divmod, gcd_many, lcm)

__all__ = ["TermIdeal", "Residue", "AnnIdealView", "UnsupportedIdealError",
           "UndecidableError", "build_ideal", "membership", "normal_form",
           "ideal_scale_down", "ideal_equals", "solve_congruences", "quotient_maps",
           "zero_block", "whole_block"]


class UnsupportedIdealError(ValueError):
    pass


class UndecidableError(ValueError):
    """Raised when an ideal comparison needs a closed form that is missing."""


def _lcm_int(a, b):
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // math.gcd(a, b)


def _minimal_monomials(exps):
    exps = sorted(set(exps), key=lambda e: (sum(e), e))
    out = []
    for e in exps:
        if not any(all(a <= b for a, b in zip(g, e)) for g in out):
            out.append(e)
    return tuple(out)


class TermIdeal:
    """A nonzero finitely generated ideal of one of the supported rings."""

    def __init__(self, ring: Ring, generators):
        gens = [ring(g) for g in generators]
        nonzero = [g for g in gens if g.terms]
        if not nonzero:
            raise ValueError("the zero ideal is not supported (k must be nonzero)")
        self.ring = ring
        self.k = gcd_many(nonzero)
        self._chain = None
        self._monos = None
        if ring.is_pid:
            self.generators = (self.k,)
        elif ring.kind == "Zx":
            for g in nonzero:
                if not g.is_term():
                    raise UnsupportedIdealError(f"{g} is not a term; Z[x] ideals must be term ideals")
            self.generators = tuple(nonzero)
            top = max(g.degree() for g in nonzero)
            chain = []
            for n in range(top + 1):
                cs = [c for g in nonzero for (d,), c in g.terms.items() if d <= n]
                chain.append(reduce(math.gcd, cs, 0))
            self._chain = tuple(chain)
        else:
            for g in nonzero:
                if not g.is_term():
                    raise UnsupportedIdealError(f"{g} is not a term; F_p[x,y] ideals must be monomial")
            self._monos = _minimal_monomials([next(iter(g.terms)) for g in nonzero])
            self.generators = tuple(ring.monomial(e) for e in self._monos)

    @classmethod
    def from_chain(cls, ring, chain):
        gens = []
        prev = 0
        for n, g in enumerate(chain):
            if g and g != prev:
                gens.append(ring.monomial((n,), g))
            prev = g
        return cls(ring, gens)

    # -- basic structure -------------------------------------------------------
    def chain(self, n: int) -> int:
        """g_n for Z[x] ideals."""
        ch = self._chain
        return ch[n] if n < len(ch) else ch[-1]

    @property
    def stable_degree(self) -> int:
        """n*: degree after which membership conditions stop changing."""
        if self.ring.kind == "Zx":
            return len(self._chain) - 1
        if self.ring.kind == "Fp_xy":
            return max(sum(e) for e in self._monos)
        return max(self.k.degree(), 0)

    @property
    def monomials(self):
        return self._monos

    def is_whole(self) -> bool:
        return self.contains(self.ring.one)

    def __eq__(self, other):
        if not isinstance(other, TermIdeal) or other.ring != self.ring:
            return NotImplemented
        if self.ring.is_pid:
            return self.k == other.k
        if self.ring.kind == "Zx":
            n = max(len(self._chain), len(other._chain))
            return all(self.chain(i) == other.chain(i) for i in range(n))
        return self._monos == other._monos

    def __hash__(self):
        if self.ring.is_pid:
            return hash((self.ring, self.k))
        if self.ring.kind == "Zx":
            ch = list(self._chain)
            while len(ch) > 1 and ch[-1] == ch[-2]:
                ch.pop()
            return hash((self.ring, tuple(ch)))
        return hash((self.ring, self._monos))

    def __repr__(self):
        return f"<{', '.join(map(str, self.generators))}> in {self.ring}"

    def _check(self, e: Poly):
        if e.ring != self.ring:
            raise RingMismatchError(f"{e.ring} vs {self.ring}")

    # -- membership and normal forms ------------------------------------------
    def contains(self, e: Poly) -> bool:
        self._check(e)
        if not e.terms:
            return True
        kind = self.ring.kind
        if kind == "Z":
            return e.int_value() % self.k.int_value() == 0
        if kind == "Fp_x":
            return not fpx_divmod(e, self.k)[1].terms
        if kind == "Zx":
            for (d,), c in e.terms.items():
                g = self.chain(d)
                if g == 0 or c % g:
                    return False
            return True
        return all(self._mono_in(ex) for ex in e.terms)

    def _mono_in(self, ex):
        return any(all(a <= b for a, b in zip(g, ex)) for g in self._monos)

    def normal_form(self, e: Poly) -> Poly:
        self._check(e)
        kind = self.ring.kind
        if not e.terms:
            return e
        if kind == "Z":
            return Poly._make(self.ring, _nz({(): e.int_value() % self.k.int_value()}))
        if kind == "Fp_x":
            return fpx_divmod(e, self.k)[1]
        if kind == "Zx":
            out = {}
            for (d,), c in e.terms.items():
                g = self.chain(d)
                if g:
                    c %= g
                if c:
                    out[(d,)] = c
            return Poly._make(self.ring, out)
        return Poly._make(self.ring, {ex: c for ex, c in e.terms.items() if not self._mono_in(ex)})

    def residue(self, e) -> "Residue":
        return Residue(self, self.normal_form(self.ring(e)))

    @property
    def zero(self) -> "Residue":
        return Residue(self, self.ring.zero)

    @property
    def one(self) -> "Residue":
        return self.residue(1)

    # -- ideal operations -------------------------------------------------------
    def sum(self, other: "TermIdeal") -> "TermIdeal":
        return TermIdeal(self.ring, list(self.generators) + list(other.generators))

    def intersect(self, other: "TermIdeal") -> "TermIdeal":
        R = self.ring
        if R.is_pid:
            return TermIdeal(R, [lcm(self.k, other.k)])
        if R.kind == "Zx":
            n = max(len(self._chain), len(other._chain))
            return TermIdeal.from_chain(R, [_lcm_int(self.chain(i), other.chain(i)) for i in range(n)])
        gens = [tuple(map(max, a, b)) for a in self._monos for b in other._monos]
        return TermIdeal(R, [R.monomial(e) for e in gens])

    def contains_ideal(self, other: "TermIdeal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def colon_term(self, t: Poly) -> "TermIdeal":
        """(I : t) for a term t (any element in the PID case)."""
        R = self.ring
        if not t.terms:
            return TermIdeal(R, [R.one])
        if R.is_pid:
            return TermIdeal(R, [divide_exact(self.k, gcd_many([t, self.k]))])
        (ex, c), = t.terms.items()
        if R.kind == "Zx":
            d = ex[0]
            chain = []
            for n in range(max(len(self._chain) - d, 1)):
                g = self.chain(n + d)
                chain.append(g // math.gcd(c, g) if g else 0)
            return TermIdeal.from_chain(R, chain)
        return TermIdeal(R, [R.monomial(tuple(max(a - b, 0) for a, b in zip(g, ex)))
                             for g in self._monos])


def _nz(d):
    return {e: c for e, c in d.items() if c}


def build_ideal(ring: Ring, gens) -> TermIdeal:
    gens = list(gens)
    if not gens:
        raise ValueError("an ideal needs at least one generator")
    return TermIdeal(ring, gens)


def membership(e: Poly, ideal: TermIdeal) -> bool:
    return ideal.contains(e)


def normal_form(e: Poly, ideal: TermIdeal) -> "Residue":
    return ideal.residue(e)


def ideal_scale_down(ideal: TermIdeal, delta: Poly) -> TermIdeal:
    """The ideal delta^{-1} I, generated by generator/delta."""
    if not delta.terms or not divides(delta, ideal.k):
        raise ValueError(f"{delta} does not divide k = {ideal.k}")
    return TermIdeal(ideal.ring, [divide_exact(g, delta) for g in ideal.generators])


class Residue:
    """An element of R/I held by its canonical representative."""

    __slots__ = ("ideal", "rep")

    def __init__(self, ideal: TermIdeal, rep: Poly):
        self.ideal = ideal
        self.rep = rep

    @property
    def ring(self):
        return self.ideal.ring

    def _other(self, other):
        if isinstance(other, Residue):
            if other.ideal is not self.ideal and other.ideal != self.ideal:
                raise RingMismatchError("residues of different factor rings")
            return other.rep
        if isinstance(other, (int, Poly)):
            return self.ring(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.ideal, self.ideal.normal_form(self.rep + o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.ideal, self.ideal.normal_form(self.rep - o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.ideal, self.ideal.normal_form(o - self.rep))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.ideal, self.ideal.normal_form(self.rep * o))

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(self.ideal, self.ideal.normal_form(-self.rep))

    def __pow__(self, n):
        out = self.ideal.one
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def is_zero(self):
        return not self.rep.terms

    def __bool__(self):
        return bool(self.rep.terms)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.rep == other.rep and (self.ideal is other.ideal or self.ideal == other.ideal)
        if isinstance(other, (int, Poly)):
            return self.rep == self.ideal.normal_form(self.ring(other))
        return NotImplemented

    def __hash__(self):
        return hash(self.rep)

    def __repr__(self):
        return f"[{self.rep}]"

    def __str__(self):
        return str(self.rep)


# -- annihilators -------------------------------------------------------------------

@dataclass
class AnnIdealView:
    """An intersection of annihilators inside R/I.

    ``annihilated`` lists the residues r with s*r = 0 required of members; an
    empty list means the whole ring.  ``closed_form`` is an ideal J of R
    containing I with J/I equal to the view, when one is known.
    """

    ideal: TermIdeal
    annihilated: tuple = ()
    closed_form: TermIdeal | None = None
    label: str = ""

    def contains(self, s) -> bool:
        if isinstance(s, Residue):
            s = s.rep
        s = self.ideal.ring(s)
        if self.closed_form is not None:
            return self.closed_form.contains(s)
        return all(self.ideal.contains(s * r.rep) for r in self.annihilated)

    def predicate(self, s) -> bool:
        if isinstance(s, Residue):
            s = s.rep
        return all(self.ideal.contains(self.ideal.ring(s) * r.rep) for r in self.annihilated)

    def intersect(self, other: "AnnIdealView") -> "AnnIdealView":
        cf = None
        if self.closed_form is not None and other.closed_form is not None:
            cf = self.closed_form.intersect(other.closed_form)
        label = " & ".join(x for x in (self.label, other.label) if x)
        return AnnIdealView(self.ideal, self.annihilated + other.annihilated, cf, label)

    def is_zero_ideal(self) -> bool:
        """True iff the view is the zero ideal of R/I (needs a closed form)."""
        if self.closed_form is None:
            raise UndecidableError("no closed form")
        return self.ideal.contains_ideal(self.closed_form)

    @property
    def generators(self):
        """Residue generators of the view as an ideal of R/I."""
        if self.closed_form is None:
            raise UndecidableError("no closed form")
        return [self.ideal.residue(g) for g in self.closed_form.generators]


def whole_block(ideal: TermIdeal) -> AnnIdealView:
    return AnnIdealView(ideal, (), TermIdeal(ideal.ring, [ideal.ring.one]), "R/I")


def zero_block(ideal: TermIdeal) -> AnnIdealView:
    return AnnIdealView(ideal, (ideal.one,), ideal, "0")


def ideal_equals(A, B, base: TermIdeal | None = None) -> bool:
    """Equality of two ideals of R/I given by closed forms.

    Arguments are AnnIdealView or TermIdeal (an ideal of R whose image in R/I
    is meant); ``base`` is I, taken from a view when omitted.
    """
    def as_ideal(X):
        nonlocal base
        if isinstance(X, AnnIdealView):
            if X.closed_form is None:
                raise UndecidableError(f"{X.label or 'view'} has no closed form")
            base = base or X.ideal
            return X.closed_form
        return X
    JA, JB = as_ideal(A), as_ideal(B)
    if base is None:
        raise ValueError("base ideal needed")
    JA, JB = JA.sum(base), JB.sum(base)
    return JA.contains_ideal(JB) and JB.contains_ideal(JA)


# -- bounded congruence solving ---------------------------------------------------

def solve_congruences(rows, nunknowns: int, degree: int | None = None):
    """Find s_1..s_u in R with ``sum_j coeffs[j]*s_j - rhs in J`` for every row.

    ``rows`` is a list of ``(coeffs, rhs, J)``.  Returns ``(solution, exhaustive)``
    where solution is a list of Poly or None.  ``exhaustive`` is True when a None
    answer proves that no solution exists (Z, and F_p[x] at the default degree).
    """
    if not rows:
        return [None] * nunknowns, True
    ring = rows[0][2].ring
    kind = ring.kind
    if kind == "Z":
        return _solve_z(rows, nunknowns, ring), True
    if kind == "Fp_x":
        L = reduce(lcm, [J.k for _, _, J in rows])
        full = max(L.degree(), 1) - 1
        d = full if degree is None else degree
        sol = _solve_fpx(rows, nunknowns, ring, d)
        return sol, sol is None and d >= full
    if degree is None:
        raise ValueError("degree bound required for non-PID rings")
    if kind == "Zx":
        return _solve_zx(rows, nunknowns, ring, degree), False
    return _solve_fpxy(rows, nunknowns, ring, degree), False


def _solve_z(rows, nu, ring):
    A, b = [], []
    ncols = nu + len(rows)
    for i, (coeffs, rhs, J) in enumerate(rows):
        row = [c.int_value() for c in coeffs] + [0] * len(rows)
        row[nu + i] = -J.k.int_value()
        A.append(row)
        b.append(rhs.int_value())
    x = linalg.solve_integer(A, b, ncols)
    if x is None:
        return None
    return [ring(v) for v in x[:nu]]


def _solve_zx(rows, nu, ring, D):
    A, b = [], []
    slack = []
    width = nu * (D + 1)
    eqs = []
    for coeffs, rhs, J in rows:
        top = max([c.degree() for c in coeffs if c.terms] + [0]) + D
        top = max(top, rhs.degree())
        for n in range(top + 1):
            row = [0] * width
            for u, c in enumerate(coeffs):
                for (dc,), cc in c.terms.items():
                    j = n - dc
                    if 0 <= j <= D:
                        row[u * (D + 1) + j] += cc
            g = J.chain(n)
            eqs.append((row, rhs.terms.get((n,), 0), g))
    ncols = width + sum(1 for _, _, g in eqs if g)
    for row, r, g in eqs:
        full = row + [0] * (ncols - width)
        if g:
            full[width + len(slack)] = -g
            slack.append(g)
        A.append(full)
        b.append(r)
    x = linalg.solve_integer(A, b, ncols)
    if x is None:
        return None
    return [Poly(ring, {(j,): x[u * (D + 1) + j] for j in range(D + 1)}) for u in range(nu)]


def _solve_fpx(rows, nu, ring, D):
    p = ring.p
    A, b = [], []
    for coeffs, rhs, J in rows:
        m = J.k
        dm = m.degree()
        if dm <= 0:
            continue
        cols = []
        for u, c in enumerate(coeffs):
            for j in range(D + 1):
                r = fpx_divmod(c.shift((j,)), m)[1]
                cols.append([r.terms.get((i,), 0) for i in range(dm)])
        rr = fpx_divmod(rhs, m)[1]
        for i in range(dm):
            A.append([col[i] for col in cols])
            b.append(rr.terms.get((i,), 0))
    width = nu * (D + 1)
    if not A:
        return [ring.zero] * nu
    x = linalg.solve_mod_p(A, b, p, width)
    if x is None:
        return None
    return [Poly(ring, {(j,): x[u * (D + 1) + j] for j in range(D + 1)}) for u in range(nu)]


def _solve_fpxy(rows, nu, ring, D):
    p = ring.p
    monos = [(a, t - a) for t in range(D + 1) for a in range(t, -1, -1)]
    width = nu * len(monos)
    A, b = [], []
    for coeffs, rhs, J in rows:
        eq = {}
        for u, c in enumerate(coeffs):
            for mi, mo in enumerate(monos):
                for ex, cc in c.terms.items():
                    tgt = (ex[0] + mo[0], ex[1] + mo[1])
                    if J._mono_in(tgt):
                        continue
                    eq.setdefault(tgt, [0] * width)[u * len(monos) + mi] += cc
        targets = set(eq) | {ex for ex in rhs.terms if not J._mono_in(ex)}
        for tgt in sorted(targets):
            A.append(eq.get(tgt, [0] * width))
            b.append(rhs.terms.get(tgt, 0))
    if not A:
        return [ring.zero] * nu
    x = linalg.solve_mod_p(A, b, p, width)
    if x is None:
        return None
    return [Poly(ring, {mo: x[u * len(monos) + i] for i, mo in enumerate(monos)}) for u in range(nu)]


# -- ring maps into integral domains ------------------------------------------------

@dataclass(frozen=True)
class QuotientMap:
    """A ring map R/I -> D into a PID domain D (Z or F_p[x]) killing I."""

    name: str
    target: Ring
    apply_fn: object = field(repr=False, compare=False)

    def __call__(self, e: Poly) -> Poly:
        return self.apply_fn(e)

    def is_unit(self, e: Poly) -> bool:
        return self(e).is_unit()

    def unit_reachable(self, r: Poly, ell: Poly) -> bool:
        """Does phi(r) + <ell> contain a unit of D?  (ell already in D.)"""
        v = self(r)
        D = self.target
        if not ell.terms:
            return v.is_unit()
        if D.kind == "Z":
            m = abs(ell.int_value())
            return (v.int_value() - 1) % m == 0 or (v.int_value() + 1) % m == 0
        if ell.degree() == 0:
            return True
        rem = fpx_divmod(v, ell)[1]
        return rem.terms != {} and rem.is_constant()

    def in_ideal(self, target: Poly, gens) -> bool:
        """Is phi(target) in the ideal of D generated by phi(gens)?"""
        g = gcd_many([self(x) for x in gens])
        t = self(target)
        if not g.terms:
            return not t.terms
        return divides(g, t)


def quotient_maps(ideal: TermIdeal):
    """Ring maps from R/I onto integral domains (used for refutations)."""
    R = ideal.ring
    out = []
    if R.kind == "Zx":
        Z = Ring.integers()
        g0 = ideal.chain(0)
        if g0 == 0:
            out.append(QuotientMap("x->0", Z, lambda e: Z(e.constant_coeff())))
        else:
            for q, _ in factor(Z(g0)).factors:
                qq = q.int_value()
                Fq = Ring.fp_x(qq)
                out.append(QuotientMap(f"x->0 mod {qq}", Fq, lambda e, F=Fq: F(e.constant_coeff())))
        content = ideal.chain(ideal.stable_degree)
        for q, _ in factor(Z(content)).factors if content > 1 else []:
            qq = q.int_value()
            Fq = Ring.fp_x(qq)
            out.append(QuotientMap(f"mod {qq}", Fq,
                                   lambda e, F=Fq: Poly(F, dict(e.terms))))
    elif R.kind == "Fp_xy":
        F = Ring.fp_x(R.p)
        monos = ideal.monomials
        if all(m[0] > 0 for m in monos):
            out.append(QuotientMap("x->0", F, lambda e: Poly(
                F, {(b,): c for (a, b), c in e.terms.items() if a == 0})))
        if all(m[1] > 0 for m in monos):
            out.append(QuotientMap("y->0", F, lambda e: Poly(
                F, {(a,): c for (a, b), c in e.terms.items() if b == 0})))
        if all(sum(m) > 0 for m in monos):
            out.append(QuotientMap("x,y->0", F, lambda e: F(e.constant_coeff())))
    return out


def canonical_rep(e: Poly) -> Poly:
    return canonical(e)
