import itertools
import random

import pytest

from conftest import F2XY, ZX, Z, rand_poly
from imatrix import (DecompositionCertificate, FiniteRingSpec, NotAnIMatrix, NotMember,
                     TermIdeal, classify, commutes, compare, counterexample_44,
                     counterexample_45, decompose, ideal_equals, mat, prop_grid, reduce_matrix,
                     sample_commuting, theorem41_description)
from imatrix.ideals import zero_block
from imatrix.linalg import solve_integer
from imatrix.matrices import identity

I40 = TermIdeal(ZX, ["40x^3", "16x^4"])
LIFT_A = mat([["7x^2", "24x^5+8x^4+4x^2"], ["14x", "0"]], ZX)
LIFT_B = mat([["3", "24x^5+8x^4+4x^2"], ["14x", "0"]], ZX)
I12 = TermIdeal(Z, [12])


@pytest.fixture(scope="module")
def worked():
    return theorem41_description(reduce_matrix(LIFT_A, I40), lift=LIFT_A)


def test_worked_generators(worked):
    assert worked.case == "Structured"
    assert worked.m_R == ZX("x") and worked.m_k == ZX("x")
    assert worked.B_doubleprime == mat([["7x", "24x^4+8x^3+4x"], ["14", "0"]], ZX)
    # h1*E + h2*B'': diagonal h1 + 7x*h2, corner h1
    h1, h2 = ZX("3"), ZX("x+2")
    A = worked.element(h2, h1, ((I40.zero,) * 2,) * 2)
    assert A[0][0] == I40.residue(h1 + ZX("7x") * h2) and A[1][1] == I40.residue(h1)


def test_worked_blocks(worked):
    assert ideal_equals(worked.blocks["upper"], TermIdeal(ZX, ["40x^2", "16x^3"]))
    assert ideal_equals(worked.blocks["diag"], TermIdeal(ZX, ["20x^2", "4x^3"]))
    assert ideal_equals(worked.blocks["lower"], TermIdeal(ZX, ["40x", "8x^2"]))


def test_lower_block_follows_the_general_statement(worked):
    """40x annihilates f and e-h = 7x^2, so [[0,0],[40x,0]] commutes with B."""
    K = ((I40.zero, I40.zero), (I40.residue("40x"), I40.zero))
    assert commutes(K, worked.B)
    assert not TermIdeal(ZX, ["40x^2", "16x^3"]).contains(ZX("40x"))
    assert isinstance(decompose(K, worked), DecompositionCertificate)


def test_decompose_b_itself(worked):
    cert = decompose(worked.B, worked)
    assert cert.verify()
    assert cert.v_hat.rep == worked.m_k and cert.d_hat == worked.B[1][1]
    assert all(x.is_zero() for row in cert.K_hat for x in row)


def _theta_member_mod_x3(K, desc):
    """Is K = w*B'' + v*E modulo <x^3> (an ideal containing I)?  Integer linear algebra."""
    Bpp = desc.B_doubleprime
    cols = []
    for unknown in ("w", "v"):
        for dgr in range(3):
            mono = ZX.monomial((dgr,))
            G = [[x * mono for x in row] for row in Bpp] if unknown == "w" else \
                [[mono if i == j else ZX.zero for j in range(2)] for i in range(2)]
            cols.append([G[i][j].terms.get((e,), 0)
                         for i in range(2) for j in range(2) for e in range(3)])
    A = [list(r) for r in zip(*cols)]
    b = [K[i][j].rep.terms.get((e,), 0) for i in range(2) for j in range(2) for e in range(3)]
    return solve_integer(A, b, len(cols)) is not None


def test_non_containment_remark(worked):
    assert all(I40.contains(g) for g in [ZX("x^3") * ZX("40"), ZX("16x^4")])
    # a grid element outside the image of Cen(B): bounded search over block generators
    lower, upper, diag = (worked.blocks[n].closed_form.generators
                          for n in ("lower", "upper", "diag"))
    z = I40.zero
    witness = None
    for a, b, c in itertools.product(diag + (ZX.zero,), upper + (ZX.zero,), lower + (ZX.zero,)):
        K = ((I40.residue(a), I40.residue(b)), (I40.residue(c), z))
        if any(x.rep.terms for row in K for x in row) and not _theta_member_mod_x3(K, worked):
            witness = K
            break
    assert witness is not None
    assert commutes(witness, worked.B)
    # and an image element outside the grid: the identity
    E = identity(2, I40.one, I40.zero)
    for variant in (70, 71, 72):
        grid = worked.grid(variant)
        assert not all(v.contains(x) for vrow, row in zip(grid, E) for v, x in zip(vrow, row))


def test_z12_description():
    B = reduce_matrix(mat([[8, 3], [6, 2]], Z), I12)
    desc = theorem41_description(B)
    elems = [I12.residue(i) for i in range(12)]

    def members(view):
        return {e.rep.int_value() for e in elems if view.contains(e)}
    # brute force annihilators in Z_12
    ann = {r: {s for s in range(12) if r * s % 12 == 0} for r in range(12)}
    assert members(desc.blocks["upper"]) == ann[6] & ann[6] == {0, 2, 4, 6, 8, 10}
    assert members(desc.blocks["lower"]) == ann[3] & ann[6] == {0, 4, 8}
    assert members(desc.blocks["diag"]) == ann[3] & ann[6]
    assert desc.gens[0] == reduce_matrix(mat([[2, 1], [2, 0]], Z), I12)


def test_scalar_is_full():
    B = reduce_matrix(mat([[5, 0], [0, 5]], Z), I12)
    desc = theorem41_description(B)
    assert desc.case == "Full"
    A = reduce_matrix(mat([[1, 2], [3, 4]], Z), I12)
    assert decompose(A, desc).verify()


def test_refuted_matrix_gets_containment_only():
    Bb = reduce_matrix(LIFT_B, I40)
    desc = theorem41_description(Bb, lift=LIFT_B)
    assert desc.case == "ContainmentOnly"
    with pytest.raises(NotAnIMatrix):
        theorem41_description(Bb, lift=LIFT_B, strict=True)
    for A in sample_commuting(desc, 30, seed=4):
        res = decompose(A, desc)
        assert isinstance(res, DecompositionCertificate) and res.verify()


def test_decompose_rejects_non_commuting(worked):
    A = reduce_matrix(mat([["1", "0"], ["0", "0"]], ZX), I40)
    assert isinstance(decompose(A, worked), NotMember)


def test_round_trip_all_variants(worked):
    for variant in (70, 71, 72):
        for A in sample_commuting(worked, 150, seed=variant, variant=variant):
            for v2 in (70, 71, 72):
                res = decompose(A, worked, v2)
                assert isinstance(res, DecompositionCertificate)
                assert res.verify()
                tt = I40.residue(res.t)
                assert all((tt * x).is_zero() for row in res.K_hat for x in row)


def test_round_trip_random_non_pid():
    rng = random.Random(31)
    done = 0
    for ring, gens in [(ZX, ["12x^2", "18x^3"]), (F2XY, ["x^2", "y^3"]), (F2XY, ["x^3", "xy"])]:
        I = TermIdeal(ring, gens)
        for _ in range(30):
            L = mat([[rand_poly(ring, rng, 3, 9) for _ in range(2)] for _ in range(2)])
            B = reduce_matrix(L, I)
            desc = theorem41_description(B)
            if desc.case != "Structured":
                continue
            for A in sample_commuting(desc, 10, seed=done):
                res = decompose(A, desc)
                assert isinstance(res, DecompositionCertificate) and res.verify()
            done += 1
    assert done > 20


def test_corrupted_description_is_caught():
    spec = FiniteRingSpec.zn(12)
    B = reduce_matrix(mat([[8, 3], [6, 2]], Z), spec.ideal)
    desc = theorem41_description(B)
    assert compare(desc, spec).ok
    # the upper block is redundant here (its elements are reachable through w);
    # dropping the lower one loses matrices
    desc.blocks["lower"] = zero_block(spec.ideal)
    rep = compare(desc, spec)
    assert len(rep.mismatches) == 864
    assert all(enumerated and not described for _, enumerated, described in rep.mismatches)


def test_counterexample_44():
    fx = counterexample_44()
    assert fx.checks == {"witness_commutes": True, "not_member": True, "not_certified": True}
    assert isinstance(fx.decomposition, NotMember)
    assert fx.verdict.status != "Certified"
    assert classify(fx.B).status == fx.verdict.status


@pytest.mark.parametrize("n", [3, 4, 5])
def test_counterexample_45(n):
    fx = counterexample_45(n)
    assert all(fx.checks.values())
    assert fx.witness[1][0] == fx.ideal.residue(2)
    with pytest.raises(ValueError):
        counterexample_45(n, d=1)


def test_prop_grid_example():
    I4 = TermIdeal(Z, [4])
    B = reduce_matrix(mat([[0, 2, 1], [0, 0, 1], [0, 0, 0]], Z), I4)
    grid = prop_grid(B)
    elems = [I4.residue(i) for i in range(4)]
    sets = [[{e.rep.int_value() for e in elems if v.contains(e)} for v in row] for row in grid]
    assert sets == [[{0}, {0}, {0, 1, 2, 3}], [{0}, {0}, {0, 2}], [{0}, {0}, {0}]]


def test_prop_grid_scalar_and_two_by_two():
    B3 = reduce_matrix(mat([[5, 0, 0], [0, 5, 0], [0, 0, 5]], Z), I12)
    assert all(v.contains(I12.one) for row in prop_grid(B3) for v in row)
    rng = random.Random(2)
    elems = [I12.residue(i) for i in range(12)]
    for _ in range(40):
        B = reduce_matrix(mat([[rng.randrange(12) for _ in range(2)] for _ in range(2)], Z), I12)
        desc = theorem41_description(B)
        if desc.case == "Full":
            continue
        for pv, dv in zip(itertools.chain(*prop_grid(B)), itertools.chain(*desc.grid(72))):
            assert [pv.contains(e) for e in elems] == [dv.contains(e) for e in elems]
