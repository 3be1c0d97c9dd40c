import random

import pytest

from conftest import F2XY, F3X, F3XY, RINGS, ZX, Z, rand_ideal, rand_poly
from imatrix import (ReducedTriple, RingMismatchError, ScalarCase, TermIdeal,
                     centralizer_generators, commutes, mat, reduce_matrix)
from imatrix.matrices import (cross_conditions, identity, integer_centralizer_basis, mat_add,
                              mat_mul, mat_scale)


def rand_mat(ring, rng, n=2, degree=2, box=6):
    return mat([[rand_poly(ring, rng, degree, box) for _ in range(n)] for _ in range(n)])


def test_commutes_examples():
    B = mat([[8, 3], [6, 2]], Z)
    assert commutes(B, B)
    assert commutes(mat([[5, 1], [2, 3]], Z), B)  # 2w+v = 5, w = 1, v = 3
    assert not commutes(mat([[1, 0], [0, 0]], Z), B)
    I = TermIdeal(F2XY, ["x^2"])
    Bh = reduce_matrix(mat([["x+y", "y"], ["x", "x"]], F2XY), I)
    W = reduce_matrix(mat([["x", "x"], ["0", "0"]], F2XY), I)
    assert commutes(W, Bh)


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatchError):
        commutes(mat([[1, 0], [0, 1]], Z), mat([["x", "0"], ["0", "x"]], ZX))


@pytest.mark.parametrize("ring", RINGS)
def test_cross_conditions_match_multiplication(ring):
    """commutes() asserts the agreement internally; count both outcomes too."""
    rng = random.Random(5)
    seen = set()
    for i in range(1000):
        B = rand_mat(ring, rng)
        if i % 3 == 0:
            # force commuting pairs as well
            w, v = rand_poly(ring, rng, 1, 3), rand_poly(ring, rng, 1, 3)
            A = mat_add(mat_scale(w, B), mat_scale(v, identity(2, ring.one, ring.zero)))
        else:
            A = rand_mat(ring, rng)
        direct = mat_mul(A, B) == mat_mul(B, A)
        cross = all(not c.terms for c in cross_conditions(A, B))
        assert direct == cross == commutes(A, B)
        seen.add(direct)
    assert seen == {True, False}


def test_cross_conditions_in_quotients():
    rng = random.Random(8)
    for ring in RINGS:
        for _ in range(200):
            I = rand_ideal(ring, rng)
            A = reduce_matrix(rand_mat(ring, rng), I)
            B = reduce_matrix(rand_mat(ring, rng), I)
            commutes(A, B)


@pytest.mark.parametrize("ring", RINGS)
def test_shift_invariance(ring):
    rng = random.Random(9)
    E = identity(2, ring.one, ring.zero)
    for _ in range(200):
        A, B = rand_mat(ring, rng), rand_mat(ring, rng)
        s = rand_poly(ring, rng, 1, 5)
        base = commutes(A, B)
        assert commutes(mat_add(A, mat_scale(s, E)), B) == base
        assert commutes(A, mat_add(B, mat_scale(s, E))) == base


def test_generators_integer_example():
    gens = centralizer_generators(mat([[8, 3], [6, 2]], Z))
    assert isinstance(gens, ReducedTriple)
    assert gens.m_R == Z(3)
    assert gens.B_doubleprime == mat([[2, 1], [2, 0]], Z)
    assert gens.element(1, 3) == mat([[5, 1], [2, 3]], Z)


def test_generators_scalar_and_zx():
    assert isinstance(centralizer_generators(mat([[4, 0], [0, 4]], Z)), ScalarCase)
    B = mat([["7x^2", "24x^5+8x^4+4x^2"], ["14x", "0"]], ZX)
    gens = centralizer_generators(B)
    assert gens.m_R == ZX("x")
    assert gens.B_doubleprime == mat([["7x", "24x^4+8x^3+4x"], ["14", "0"]], ZX)


@pytest.mark.parametrize("ring", RINGS)
def test_generated_elements_commute(ring):
    rng = random.Random(10)
    for _ in range(200):
        B = rand_mat(ring, rng)
        gens = centralizer_generators(B)
        if isinstance(gens, ScalarCase):
            continue
        A = gens.element(rand_poly(ring, rng, 2, 5), rand_poly(ring, rng, 2, 5))
        assert commutes(A, B)


def _brute_centralizer(B, box):
    rng = range(-box, box + 1)
    return {(a, b, c, d) for a in rng for b in rng for c in rng for d in rng
            if commutes(mat([[a, b], [c, d]], Z), B)}


@pytest.mark.parametrize("entries", [[[8, 3], [6, 2]], [[1, 2], [4, 3]], [[0, 2], [0, 0]],
                                     [[2, 4], [6, 8]]])
def test_integer_centralizer_is_exactly_generated(entries):
    """Bounded brute force: every commuting matrix is w*B'' + v*E, nothing else commutes."""
    B = mat(entries, Z)
    gens = centralizer_generators(B)
    (p, q), (r, _) = [[x.int_value() for x in row] for row in gens.B_doubleprime]
    box = 4
    found = _brute_centralizer(B, box)
    expected = set()
    for w in range(-2 * box, 2 * box + 1):
        for v in range(-2 * box, 2 * box + 1):
            m = (w * p + v, w * q, w * r, v)
            if all(abs(x) <= box for x in m):
                expected.add(m)
    assert found == expected


def test_integer_centralizer_basis():
    basis = integer_centralizer_basis([[8, 3], [6, 2]])
    assert len(basis) == 2
    B = mat([[8, 3], [6, 2]], Z)
    for G in basis:
        assert commutes(mat(G, Z), B)
    B3 = [[0, 2, 1], [0, 0, 1], [0, 0, 0]]
    for G in integer_centralizer_basis(B3):
        assert commutes(mat(G, Z), mat(B3, Z))
