import random

import pytest

from conftest import F2XY, F3X, F3XY, RINGS, ZX, Z, rand_ideal, rand_poly
from imatrix import (FiniteRingSpec, TermIdeal, classify_principality, divides, divisor_part,
                     gcd_many, geometric_inverse, i_preimage, is_i_invertible,
                     semi_divisor_solve, try_inverse)
from imatrix.ufd import canonical

I40 = TermIdeal(ZX, ["40x^3", "16x^4"])
I12 = TermIdeal(Z, [12])


def associates(a, b):
    return canonical(a) == canonical(b)


# -- pre-images ------------------------------------------------------------------------

def test_preimage_examples():
    pre = i_preimage(I12.residue(9))
    assert (pre.r, pre.delta) == (Z(7), Z(3))
    b = ZX("24x^5+8x^4+4x^2")
    pre = i_preimage(I40.residue(b), b)
    assert pre.r == ZX("6x^3+2x^2+1") and pre.delta == ZX("4x^2")
    pre = i_preimage(I12.zero)
    assert (pre.r, pre.delta) == (Z(1), Z(0))


def test_preimage_trace_uses_first_usable_generator():
    # 16x^3 over k = 8x^3: the prime 2 appears to power 4 > 3
    b = ZX("16x^3")
    pre = i_preimage(I40.residue(b), b)
    step = next(s for s in pre.trace if s.prime == ZX(2))
    assert step.q == 4 and step.m == 3
    assert step.generator == ZX("40x^3")  # cofactor 5 avoids 2, and it comes first


@pytest.mark.parametrize("ring", RINGS)
def test_preimage_invariants_random(ring):
    rng = random.Random(ring.kind)
    for _ in range(500):
        I = rand_ideal(ring, rng)
        # mix in multiples of k so large divisor parts occur
        e = rand_poly(ring, rng, 4, 40)
        if rng.random() < 0.4:
            e = e * I.k * rand_poly(ring, rng, 1, 3)
        b = I.residue(e)
        pre = i_preimage(b)
        pre.check()
        assert gcd_many([pre.r, I.k]).is_unit()
        if not b.is_zero():
            assert divides(pre.delta, I.k)
            assert associates(divisor_part(b), pre.delta)


def test_divisor_part_examples():
    assert divisor_part(I12.residue(9)) == Z(3)
    assert divisor_part(TermIdeal(ZX, ["2x"]).residue("x")) == ZX("x")
    assert divisor_part(I12.residue(5)).is_unit()


# -- principality ----------------------------------------------------------------------

def test_principality_examples():
    Iy = TermIdeal(F3XY, ["y^5"])
    rng = random.Random(0)
    for _ in range(30):
        b = Iy.residue(rand_poly(F3XY, rng, 6))
        if not b.is_zero():
            assert classify_principality(b).principal
    assert not classify_principality(TermIdeal(ZX, ["2x"]).residue("x")).principal
    rep = classify_principality(I40.residue(ZX("3x+1") * ZX("2x^2")))
    assert rep.q_principal and rep.principal
    assert [q for _, q in rep.delta_exponents] == [1, 2]
    with pytest.raises(ValueError):
        classify_principality(I40.zero)


def test_principality_unit_modulus_flagged():
    I = TermIdeal(ZX, ["3", "x"])  # k = 1 but I is proper
    rep = classify_principality(I.residue(2))
    assert rep.unit_modulus and rep.principal and rep.delta_exponents == ()


# -- inverses ---------------------------------------------------------------------------

def test_geometric_inverse_examples():
    I8 = TermIdeal(Z, [8])
    cert = geometric_inverse(I8.residue(3))
    assert cert.l == 2 and cert.residual == Z(16) and cert.inverse.rep == Z(3)
    assert cert.verify()
    b = ZX("3x+1") * ZX("2x^2") + 1
    cert = geometric_inverse(I40.residue(b), b)
    assert cert is not None and cert.verify()
    assert (cert.inverse * I40.residue(b)) == I40.one
    cert = geometric_inverse(I40.one)
    assert cert.l == 0 and cert.inverse == I40.one


def test_geometric_inverse_is_only_sufficient():
    # 3 = 2 + 1 is invertible mod 5, yet 2 shares no prime with 5
    I5 = TermIdeal(Z, [5])
    assert geometric_inverse(I5.residue(3), unit=Z(1)) is None
    assert try_inverse(I5.residue(3)).found


def _brute_unit(b, spec):
    return any((b * s) == spec.ideal.one for s in spec.elements)


@pytest.mark.parametrize("n", [8, 12, 30, 49])
def test_try_inverse_against_exhaustive_zn(n):
    spec = FiniteRingSpec.zn(n)
    for b in spec.elements:
        res = try_inverse(b)
        assert res.found == _brute_unit(b, spec)
        assert res.found or res.refuted
        if res.found:
            assert res.inverse * b == spec.ideal.one


def test_try_inverse_against_exhaustive_truncated():
    spec = FiniteRingSpec.fpx_trunc(3, 3)
    for b in spec.elements:
        res = try_inverse(b)
        assert res.found == _brute_unit(b, spec)
        if res.certificate is not None:
            assert res.certificate.verify()


def test_try_inverse_quotient_refutation():
    I = TermIdeal(ZX, ["2x"])
    res = try_inverse(I.residue(3))
    assert res.refuted and res.tag == "RefutedByQuotient"
    assert try_inverse(I.residue(1)).found


@pytest.mark.parametrize("ring", [ZX, F3XY, F2XY])
def test_inverse_certificates_verify(ring):
    rng = random.Random(3)
    found = 0
    for _ in range(150):
        I = rand_ideal(ring, rng)
        b = I.residue(rand_poly(ring, rng, 3, 9) * I.k + rng.choice([1, -1]))
        res = try_inverse(b)
        if res.found:
            found += 1
            assert res.inverse * b == I.one
            if res.certificate is not None:
                assert res.certificate.verify()
    assert found > 100


# -- I-invertibility -------------------------------------------------------------------

def test_i_invertibility_examples():
    assert is_i_invertible(I12.residue(9)).verdict == "Yes"
    v = is_i_invertible(TermIdeal(ZX, ["5x^2"]).residue("3x^2"))
    assert v.verdict == "No"
    v = is_i_invertible(TermIdeal(F3XY, ["y^5"]).residue("x^5"))
    assert v.verdict == "No"
    b = ZX("24x^5+8x^4+4x^2")
    v = is_i_invertible(I40.residue(b), b)
    assert v.verdict == "Yes" and v.preimage.delta == ZX("4x^2")
    v = is_i_invertible(TermIdeal(ZX, ["2x"]).residue("x"))
    assert v.verdict == "Yes" and v.preimage.r == ZX(1)


def test_preimage_choice_matters_when_not_principal():
    # x = 1*x = 3*x mod <2x>; 1 is invertible, 3 is not
    I = TermIdeal(ZX, ["2x"])
    assert I.residue("3x") == I.residue("x")
    assert try_inverse(I.residue(1)).found
    assert try_inverse(I.residue(3)).refuted


def _other_preimages(b, pre, rng, count):
    """r + a with a*delta in I, keeping gcd(r + a, k) a unit."""
    I = b.ideal
    colon = I.colon_term(pre.delta)
    out = []
    for _ in range(50 * count):
        a = sum((g * rand_poly(I.ring, rng, 2, 6) for g in colon.generators), I.ring.zero)
        r2 = pre.r + a
        if gcd_many([r2, I.k]).is_unit() and I.residue(r2) != I.residue(pre.r):
            assert I.residue(r2 * pre.delta) == b
            out.append(r2)
        if len(out) == count:
            break
    return out


@pytest.mark.parametrize("ring", [Z, F3X, ZX, F3XY])
def test_all_or_none_for_principal_elements(ring):
    rng = random.Random(17)
    compared = 0
    for _ in range(120):
        I = rand_ideal(ring, rng)
        b = I.residue(rand_poly(ring, rng, 3, 20))
        if b.is_zero() or I.k.is_unit() or not classify_principality(b).principal:
            continue
        pre = i_preimage(b)
        base = try_inverse(I.residue(pre.r))
        if not (base.found or base.refuted):
            continue
        for r2 in _other_preimages(b, pre, rng, 5):
            other = try_inverse(I.residue(r2))
            if other.found or other.refuted:
                assert other.found == base.found, (b, pre.r, r2)
                compared += 1
    assert compared > 30


@pytest.mark.parametrize("ring", RINGS)
def test_yes_implies_semi_divisor(ring):
    rng = random.Random(23)
    yes = 0
    for _ in range(150):
        I = rand_ideal(ring, rng)
        b = I.residue(rand_poly(ring, rng, 3, 20))
        v = is_i_invertible(b)
        if v.verdict == "Yes":
            yes += 1
            assert v.inverse.inverse * I.residue(v.preimage.r) == I.one
            if not b.is_zero():
                sd = semi_divisor_solve(b)
                assert sd.found
                assert sd.c * b == I.residue(sd.delta)
    assert yes > 20


def test_i_invertible_exhaustive_z12():
    """Over Z_n every element is I-invertible."""
    for n in (4, 6, 9, 12, 36):
        I = TermIdeal(Z, [n])
        for e in range(n):
            assert is_i_invertible(I.residue(e)).verdict == "Yes"


# -- semi-divisors -----------------------------------------------------------------------

def test_semi_divisor_examples():
    sd = semi_divisor_solve(TermIdeal(ZX, ["5x^2"]).residue("3x^2"))
    assert sd.c.rep == ZX(2) and sd.delta == ZX("x^2")
    sd = semi_divisor_solve(I12.residue(9))
    assert sd.c.rep == Z(7) and sd.c * I12.residue(9) == I12.residue(3)
    I7 = TermIdeal(Z, [7])
    sd = semi_divisor_solve(I7.residue(3))
    assert sd.delta == Z(1) and sd.c == I7.residue(5)
