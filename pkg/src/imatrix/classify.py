"""Decide whether a 2x2 matrix over R/I is an I-matrix.

B = [[e, f], [g, h]] is an I-matrix when two of (e-h, f, g) generate a
principal ideal <t> of R/I with t | k.  The search follows a two-stage test:
find c with c*alpha = delta (delta the divisor part of alpha), then solve
d*beta = t modulo <delta>.  Negative answers are only given when every pair is
decisively excluded.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ideals import Residue, TermIdeal, quotient_maps, solve_congruences
from .lifting import semi_divisor_solve
from .ufd import Poly, divide_exact, divides, gcd_many

__all__ = ["PAIR_ORDER", "COORD_NAMES", "BezoutCertificate", "IMatrixVerdict",
           "classify", "bezout_certificate", "triple_lifts"]

PAIR_ORDER = ((1, 2), (0, 1), (0, 2))
COORD_NAMES = ("e-h", "f", "g")


def triple_lifts(Bhat, lift=None):
    """Lifts of (e-h, f, g): from an explicit lift matrix when given."""
    if lift is not None:
        (e, f), (g, h) = lift
        I = Bhat[0][0].ideal
        for row, lrow in zip(Bhat, lift):
            for x, y in zip(row, lrow):
                if I.normal_form(y) != x.rep:
                    raise ValueError(f"{y} is not a lift of {x}")
    else:
        (e, f), (g, h) = [[x.rep for x in row] for row in Bhat]
    return (e - h, f, g)


@dataclass
class BezoutCertificate:
    """alpha*first + beta*second = t in R/I, with t | k and t | both lifts."""

    pair: tuple
    t: Poly
    alpha: Residue
    beta: Residue
    first: Poly
    second: Poly

    @property
    def pair_names(self):
        return tuple(COORD_NAMES[i] for i in self.pair)

    def verify(self) -> bool:
        I = self.alpha.ideal
        lhs = self.alpha * self.first + self.beta * self.second
        return (lhs == I.residue(self.t) and divides(self.t, I.k)
                and divides(self.t, self.first) and divides(self.t, self.second))


@dataclass
class IMatrixVerdict:
    status: str  # "Certified" | "Refuted" | "Unknown"
    certificate: BezoutCertificate | None = None
    audit: list = field(default_factory=list)
    reason: str = ""

    def __bool__(self):
        return self.status == "Certified"


def _stage_two(alpha_l, beta_l, I, budget, audit, label):
    """Returns ("cert", t, coeffs) | ("refuted",) | ("unknown",) for ordered (alpha, beta)."""
    s1 = semi_divisor_solve(I.residue(alpha_l), alpha_l, budget)
    if not s1.found:
        audit.append(f"{label}: stage (i) {s1.certainty.lower()} (delta = {s1.delta})")
        return ("stage1-" + s1.certainty.lower(),)
    c, delta = s1.c, s1.delta
    R = I.ring
    if delta.is_unit():
        audit.append(f"{label}: stage (i) gives a unit divisor part")
        return ("cert", R.one, (c * delta.unit_inverse(), I.zero))
    Id = TermIdeal(R, [delta])
    bd = Id.residue(beta_l)
    if bd.is_zero():
        audit.append(f"{label}: second entry vanishes modulo <{delta}>, t = delta")
        return ("cert", delta, (c, I.zero))
    s2 = semi_divisor_solve(bd, beta_l, budget)
    if not s2.found:
        audit.append(f"{label}: stage (ii) {s2.certainty.lower()} modulo <{delta}>")
        return ("refuted",) if s2.certainty == "Refuted" else ("unknown",)
    t = s2.delta
    d = s2.c.rep
    e = divide_exact(d * beta_l - t, delta)
    audit.append(f"{label}: delta = {delta}, t = {t}")
    return ("cert", t, (-(I.residue(e) * c), I.residue(d)))


def _quotient_excludes_gcd(P, Q, I):
    t0 = gcd_many([P, Q, I.k])
    for phi in quotient_maps(I):
        if not phi.in_ideal(t0, [P, Q]):
            return phi.name
    return None


def classify(Bhat, lift=None, budget=None) -> IMatrixVerdict:
    if len(Bhat) != 2 or any(len(r) != 2 for r in Bhat):
        raise ValueError("I-matrices are 2x2")
    I = Bhat[0][0].ideal
    Y = triple_lifts(Bhat, lift)
    Yhat = [I.residue(y) for y in Y]
    audit = []
    decisive = True
    zero_pairs = []
    for i, j in PAIR_ORDER:
        label = f"({COORD_NAMES[i]}, {COORD_NAMES[j]})"
        if Yhat[i].is_zero() and Yhat[j].is_zero():
            zero_pairs.append((i, j))
            continue
        pair_refuted = False
        stage1_ok = False
        for a, b in ((i, j), (j, i)):
            if Yhat[a].is_zero():
                audit.append(f"{label}: zero entry {COORD_NAMES[a]} skipped in stage (i)")
                continue
            out = _stage_two(Y[a], Y[b], I, budget, audit, label)
            if out[0] == "cert":
                _, t, (ca, cb) = out
                alpha, beta = (ca, cb) if a == i else (cb, ca)
                cert = BezoutCertificate((i, j), t, alpha, beta, Y[i], Y[j])
                assert cert.verify(), "Bezout certificate failed verification"
                return IMatrixVerdict("Certified", cert, audit)
            if out[0] in ("refuted", "unknown"):
                stage1_ok = True
                if out[0] == "refuted":
                    pair_refuted = True
                    break
        if pair_refuted:
            continue
        # direct route: t = gcd(P, Q, k) must be an R/I-combination of P and Q
        t0 = gcd_many([Y[i], Y[j], I.k])
        why = _quotient_excludes_gcd(Y[i], Y[j], I)
        if why is not None:
            audit.append(f"{label}: {t0} not in the pair ideal under {why}")
            continue
        D = max(t0.total_degree(), 0) + I.stable_degree + 4
        sol, exhaustive = solve_congruences([([Y[i], Y[j]], t0, I)], 2,
                                            None if I.ring.is_pid else D)
        if sol is not None:
            cert = BezoutCertificate((i, j), t0, I.residue(sol[0]), I.residue(sol[1]), Y[i], Y[j])
            assert cert.verify()
            audit.append(f"{label}: direct Bezout solve, t = {t0}")
            return IMatrixVerdict("Certified", cert, audit)
        if exhaustive:
            audit.append(f"{label}: no Bezout combination exists")
            continue
        audit.append(f"{label}: undecided" + (" after stage (i)" if stage1_ok else ""))
        decisive = False
    for i, j in zero_pairs:
        label = f"({COORD_NAMES[i]}, {COORD_NAMES[j]})"
        # <0> = <t> with t | k forces t in I, hence t ~ k
        if I.contains(I.k):
            cert = BezoutCertificate((i, j), I.k, I.zero, I.zero, Y[i], Y[j])
            assert cert.verify()
            audit.append(f"{label}: both entries zero and k in I, t = k")
            return IMatrixVerdict("Certified", cert, audit)
        audit.append(f"{label}: both entries zero and k not in I")
    if decisive:
        return IMatrixVerdict("Refuted", None, audit, "every pair excluded")
    return IMatrixVerdict("Unknown", None, audit, "some pair undecided")


def bezout_certificate(verdict: IMatrixVerdict) -> BezoutCertificate:
    if verdict.status != "Certified":
        raise ValueError(f"no certificate for a {verdict.status} verdict")
    assert verdict.certificate.verify()
    return verdict.certificate
