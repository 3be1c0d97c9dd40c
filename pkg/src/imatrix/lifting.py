"""Pre-images, divisor parts and invertibility in R/I.

An I-pre-image of a residue b is a factorization ``b = r*delta (mod I)`` with
gcd(r, k) = 1 and delta | k, where k = gcd(I).  ``b`` is I-invertible when the
relative prime part r can be chosen invertible modulo I.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ideals import (AnnIdealView, Residue, TermIdeal, ideal_scale_down, quotient_maps,
                     solve_congruences, whole_block)
from .ufd import (Poly, canonical, divide_exact, divides, factor, gcd_many, gcdex,
                  multiplicity)

__all__ = ["InverseCertificate", "InverseResult", "IPreImage", "PrincipalityReport",
           "SemiDivisorResult", "IInvertibility", "try_inverse", "geometric_inverse",
           "i_preimage", "divisor_part", "classify_principality", "is_i_invertible",
           "semi_divisor_solve", "lift_of", "annihilator"]

GEOMETRIC_CAP = 32

# proof tags of try_inverse
TRIVIAL = "Trivial"
EUCLID = "EuclidCertificate"
GEOMETRIC = "GeometricCertificate"
LINEAR = "LinearSolve"
REFUTED_GCD = "RefutedByGcd"
REFUTED_QUOTIENT = "RefutedByQuotient"
UNKNOWN = "Unknown"


def lift_of(b: Residue, lift=None) -> Poly:
    """A representative of b: the given lift (checked) or the normal form."""
    if lift is None:
        return b.rep
    lift = b.ring(lift)
    if b.ideal.normal_form(lift) != b.rep:
        raise ValueError(f"{lift} is not a lift of {b}")
    return lift


@dataclass
class InverseCertificate:
    """``unit^-1 * prod(factors)`` inverts ``base``; product telescopes to ``1 - residual``."""

    base: Residue
    inverse: Residue
    l: int
    unit: Poly
    factors: tuple
    residual: Poly
    lift: Poly | None = None

    def verify(self) -> bool:
        I = self.base.ideal
        b = self.lift if self.lift is not None else self.base.rep
        prod = self.unit.unit_inverse() * b
        for f in self.factors:
            prod = prod * f
        ok = prod == 1 - self.residual and I.contains(self.residual)
        return ok and (self.base * self.inverse) == I.one


@dataclass
class InverseResult:
    residue: Residue
    inverse: Residue | None
    tag: str
    certificate: InverseCertificate | None = None
    detail: str = ""

    @property
    def found(self):
        return self.inverse is not None

    @property
    def refuted(self):
        return self.tag in (REFUTED_GCD, REFUTED_QUOTIENT)


def _unit_candidates(lift: Poly):
    R = lift.ring
    if R.p is None:
        return [R.one, -R.one]
    c = lift.constant_coeff() % R.p
    return [R(c)] if c else []


def geometric_inverse(b: Residue, lift=None, unit=None) -> InverseCertificate | None:
    """Invert ``u + b'`` via the truncated series (1-M)(1+M^2)...(1+M^(2^(l-1))).

    Requires b' q-principal with b'k in I (M = b'/u).  Returns None when no unit
    split satisfies the preconditions or the doubling cap is hit.
    """
    I = b.ideal
    rep = lift_of(b, lift)
    units = [b.ring(unit)] if unit is not None else _unit_candidates(rep)
    for u in units:
        bp = rep - u
        uinv = u.unit_inverse()
        if I.contains(bp):
            inv = I.residue(uinv)
            cert = InverseCertificate(b, inv, 0, u, (), -bp * uinv, rep)
            assert cert.verify()
            return cert
        rep_bp = classify_principality(I.residue(bp))
        if not rep_bp.q_principal or not I.contains(bp * I.k):
            continue
        bound = 0
        top = max((m for _, m in rep_bp.k_exponents), default=0)
        while 2 ** bound <= top:
            bound += 1
        M = bp * uinv
        factors = [1 - M]
        power = M * M
        l = 1
        while not I.contains(power):
            if l >= GEOMETRIC_CAP:
                return None
            factors.append(1 + power)
            power = power * power
            l += 1
        assert l <= max(bound, 1), "geometric bound violated"
        inv = I.residue(uinv)
        for f in factors:
            inv = inv * f
        cert = InverseCertificate(b, inv, l, u, tuple(factors), power, rep)
        assert cert.verify()
        return cert
    return None


def _linear_inverse(b: Residue, budget):
    I = b.ideal
    D = budget if budget is not None else max(b.rep.total_degree(), 0) + I.stable_degree + 8
    for d in (D, 2 * D):
        sol, _ = solve_congruences([([b.rep], b.ring.one, I)], 1, d)
        if sol is not None:
            return I.residue(sol[0])
    return None


def _quotient_refutation(b: Residue):
    for phi in quotient_maps(b.ideal):
        if not phi.is_unit(b.rep):
            return phi.name
    return None


def try_inverse(b: Residue, budget=None) -> InverseResult:
    """Search for an inverse of b with a proof tag; refute when provably none."""
    I = b.ideal
    if I.is_whole():
        return InverseResult(b, I.zero, TRIVIAL)
    g = gcd_many([b.rep, I.k])
    if not g.is_unit():
        return InverseResult(b, None, REFUTED_GCD, detail=f"gcd(rep, k) = {g}")
    if b.ring.is_pid:
        s, _, g = gcdex(b.rep, I.k)
        inv = I.residue(s * g.unit_inverse())
        assert b * inv == I.one
        return InverseResult(b, inv, EUCLID)
    cert = geometric_inverse(b)
    if cert is not None:
        return InverseResult(b, cert.inverse, GEOMETRIC, cert)
    name = _quotient_refutation(b)
    if name is not None:
        return InverseResult(b, None, REFUTED_QUOTIENT, detail=f"image under {name} is not a unit")
    inv = _linear_inverse(b, budget)
    if inv is not None:
        assert b * inv == I.one
        return InverseResult(b, inv, LINEAR)
    return InverseResult(b, None, UNKNOWN)


# -- pre-images ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PreImageStep:
    prime: Poly
    q: int
    m: int
    generator: Poly | None = None
    cofactor: Poly | None = None


@dataclass
class IPreImage:
    residue: Residue
    r: Poly
    delta: Poly
    trace: tuple = ()

    def check(self):
        I = self.residue.ideal
        k = I.k
        assert gcd_many([self.r, k]).is_unit(), "relative prime part shares a factor with k"
        if self.residue.is_zero():
            assert not self.delta.terms
        else:
            assert self.delta.terms and divides(self.delta, k)
        assert I.normal_form(self.r * self.delta) == self.residue.rep
        return True


def i_preimage(b: Residue, lift=None) -> IPreImage:
    I = b.ideal
    R = b.ring
    if b.is_zero():
        return IPreImage(b, R.one, R.zero)
    rep = lift_of(b, lift)
    k = I.k
    if k.is_unit():
        return IPreImage(b, rep, R.one)
    fk = factor(k)
    cofactors = [divide_exact(t, k) for t in I.generators]
    r = rep
    delta = R.one
    new_r = R.one
    trace = []
    for p, m in fk.factors:
        q = multiplicity(p, rep)
        r = divide_exact(r, p ** q)
        if q > m:
            j = next(j for j, a in enumerate(cofactors) if not divides(p, a))
            ri = p ** (q - m) + cofactors[j] * divide_exact(k, p ** m)
            new_r = new_r * ri
            delta = delta * p ** m
            trace.append(PreImageStep(p, q, m, I.generators[j], cofactors[j]))
        else:
            delta = delta * p ** q
            trace.append(PreImageStep(p, q, m))
    pre = IPreImage(b, r * new_r, delta, tuple(trace))
    pre.check()
    return pre


def divisor_part(b: Residue) -> Poly:
    if b.is_zero():
        return b.ring.zero
    return gcd_many([b.rep, b.ideal.k])


@dataclass
class PrincipalityReport:
    delta_exponents: tuple
    k_exponents: tuple
    principal: bool
    q_principal: bool
    unit_modulus: bool = False


def classify_principality(b: Residue) -> PrincipalityReport:
    if b.is_zero():
        raise ValueError("principality is defined for nonzero residues")
    k = b.ideal.k
    if k.is_unit():
        return PrincipalityReport((), (), True, True, unit_modulus=True)
    delta = divisor_part(b)
    kf = factor(k).factors
    dexp = tuple((p, multiplicity(p, delta)) for p, _ in kf)
    principal = all(q < m for (_, q), (_, m) in zip(dexp, kf))
    q_principal = all(q >= 1 for _, q in dexp)
    return PrincipalityReport(dexp, tuple(kf), principal, q_principal)


# -- I-invertibility ----------------------------------------------------------------------

@dataclass
class IInvertibility:
    verdict: str  # "Yes" | "No" | "Unknown"
    preimage: IPreImage
    inverse: InverseResult | None = None
    reason: str = ""
    tried: list = field(default_factory=list)

    def __bool__(self):
        return self.verdict == "Yes"


def _relative_parts_refutation(pre: IPreImage):
    """Refute invertibility of every relative prime part r + (k/delta)*(I:k)."""
    I = pre.residue.ideal
    kd = divide_exact(I.k, pre.delta)
    J = I.colon_term(I.k) if not I.ring.is_pid else TermIdeal(I.ring, [I.ring.one])
    for phi in quotient_maps(I):
        ell = gcd_many([phi(kd * j) for j in J.generators])
        if not phi.unit_reachable(pre.r, ell):
            return f"image under {phi.name} avoids units modulo {ell}"
    return None


def is_i_invertible(b: Residue, lift=None, budget=None) -> IInvertibility:
    I = b.ideal
    pre = i_preimage(b, lift)
    if b.is_zero():
        return IInvertibility("Yes", pre, try_inverse(I.one), "zero residue: r = 1")
    res = try_inverse(I.residue(pre.r), budget)
    if res.found:
        return IInvertibility("Yes", pre, res, res.tag)
    if pre.delta.is_unit() or I.k.is_unit():
        verdict = "No" if res.refuted else "Unknown"
        return IInvertibility(verdict, pre, res, "gcd(b, k) = 1: plain invertibility " + res.tag)
    report = classify_principality(b)
    if report.principal:
        verdict = "No" if res.refuted else "Unknown"
        return IInvertibility(verdict, pre, res, "principal element: one pre-image decides")
    # not principal: other pre-images may behave differently
    kd = divide_exact(I.k, pre.delta)
    J = I.colon_term(I.k)
    tried = [pre.r]
    for j in J.generators:
        for c in (1, -1, 2, -2):
            r2 = pre.r + kd * j * c
            if not gcd_many([r2, I.k]).is_unit():
                continue
            tried.append(r2)
            res2 = try_inverse(I.residue(r2), budget)
            if res2.found:
                alt = IPreImage(b, r2, pre.delta, pre.trace)
                alt.check()
                return IInvertibility("Yes", alt, res2, "alternative pre-image", tried)
    why = _relative_parts_refutation(pre)
    if why is not None:
        return IInvertibility("No", pre, res, why, tried)
    return IInvertibility("Unknown", pre, res, "no witness and no refutation", tried)


@dataclass
class SemiDivisorResult:
    residue: Residue
    c: Residue | None
    delta: Poly
    certainty: str  # "Found" | "Refuted" | "Unknown"
    inverse: InverseResult | None = None

    @property
    def found(self):
        return self.c is not None


def semi_divisor_solve(b: Residue, lift=None, budget=None) -> SemiDivisorResult:
    """Find c with c*b = delta (mod I), delta = gcd(b, k)."""
    I = b.ideal
    R = b.ring
    if b.is_zero():
        return SemiDivisorResult(b, I.one, R.zero, "Found")
    rep = lift_of(b, lift)
    delta = divisor_part(b)
    scaled = ideal_scale_down(I, delta)
    res = try_inverse(scaled.residue(divide_exact(rep, delta)), budget)
    if not res.found:
        return SemiDivisorResult(b, None, delta, "Refuted" if res.refuted else "Unknown", res)
    c = res.inverse.rep
    if R.kind == "Z" and not delta.is_unit():
        # prefer a lift that is itself a unit modulo k
        step = scaled.k.int_value()
        k = I.k.int_value()
        for j in range(delta.int_value()):
            cand = c.int_value() + j * step
            if gcd_many([R(cand), I.k]).is_unit():
                c = R(cand % k)
                break
    cr = I.residue(c)
    assert cr * rep == I.residue(delta), "semi-divisor lift failed"
    return SemiDivisorResult(b, cr, delta, "Found", res)


def annihilator(r: Residue) -> AnnIdealView:
    """ann(r) in R/I; a closed form (as an ideal of R containing I) when one is derivable."""
    I = r.ideal
    if r.is_zero():
        return whole_block(I)
    rep = r.rep
    label = f"ann({rep})"
    if I.ring.is_pid or rep.is_term():
        return AnnIdealView(I, (r,), I.colon_term(rep), label)
    # rep = u * delta with u invertible: ann(r) = ann(delta)
    pre = i_preimage(r)
    if try_inverse(I.residue(pre.r)).found and pre.delta.is_term():
        return AnnIdealView(I, (r,), I.colon_term(pre.delta), label)
    return AnnIdealView(I, (r,), None, label)
