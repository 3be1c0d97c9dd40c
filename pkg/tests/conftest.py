import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from imatrix import Poly, Ring, TermIdeal

settings.register_profile("repo", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

Z = Ring.integers()
ZX = Ring.z_x()
F2X = Ring.fp_x(2)
F3X = Ring.fp_x(3)
F2XY = Ring.fp_xy(2)
F3XY = Ring.fp_xy(3)
RINGS = [Z, F3X, ZX, F3XY]


def polys(ring, max_degree=4, box=30):
    """Hypothesis strategy for elements of a ring."""
    if ring.kind == "Z":
        return st.integers(-box, box).map(ring)
    if ring.nvars == 1:
        keys = st.integers(0, max_degree).map(lambda d: (d,))
    else:
        keys = st.tuples(st.integers(0, max_degree), st.integers(0, max_degree))
    coeff = st.integers(-box, box) if ring.p is None else st.integers(0, ring.p - 1)
    return st.dictionaries(keys, coeff, max_size=5).map(lambda d: Poly(ring, d))


def rand_poly(ring, rng, degree=4, box=30, density=0.6):
    if ring.kind == "Z":
        return ring(rng.randint(-box, box))
    lo, hi = (-box, box) if ring.p is None else (0, ring.p - 1)
    if ring.nvars == 1:
        return Poly(ring, {(d,): rng.randint(lo, hi) for d in range(degree + 1)
                           if rng.random() < density})
    return Poly(ring, {(a, b): rng.randint(lo, hi) for a in range(degree + 1)
                       for b in range(degree + 1 - a) if rng.random() < density / 2})


def rand_term(ring, rng, degree=4, box=12):
    if ring.kind == "Z":
        return ring(rng.randint(1, box))
    c = rng.randint(1, box) if ring.p is None else rng.randint(1, ring.p - 1)
    exps = tuple(rng.randint(0, degree) for _ in range(ring.nvars))
    return ring.monomial(exps, c)


def rand_ideal(ring, rng):
    """A small random ideal of the supported class."""
    if ring.kind == "Z":
        return TermIdeal(ring, [rng.randint(2, 60)])
    if ring.kind == "Fp_x":
        while True:
            k = rand_poly(ring, rng, rng.randint(1, 4), density=0.7)
            if k.degree() >= 1:
                return TermIdeal(ring, [k])
    gens = [rand_term(ring, rng) for _ in range(rng.randint(1, 3))]
    return TermIdeal(ring, gens)


@pytest.fixture
def rng():
    return random.Random(20240)


@pytest.fixture
def report(capsys):
    """Print one line straight to the terminal, bypassing capture."""
    def emit(line):
        with capsys.disabled():
            print("\n" + line)
    return emit
