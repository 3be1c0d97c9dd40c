"""
Which matrices are I-matrices?
==============================

B is an I-matrix when two of e-h, f, g generate the same ideal as a single
divisor t of k.  Over Z_n every matrix qualifies; over Z[x] some do not.
"""
import random

from imatrix import Ring, TermIdeal, classify, mat, reduce_matrix

ZX = Ring.z_x()
I = TermIdeal(ZX, ["40x^3", "16x^4"])
for first in ("7x^2", "3"):
    L = mat([[first, "24x^5+8x^4+4x^2"], ["14x", "0"]], ZX)
    v = classify(reduce_matrix(L, I), L)
    print(f"e = {first}: {v.status}")
    if v.certificate is not None:
        c = v.certificate
        print(f"   pair {c.pair_names}, t = {c.t}, alpha = {c.alpha}, beta = {c.beta}")
    for line in v.audit:
        print("   .", line)

# every matrix over Z_n
rng = random.Random(0)
Z = Ring.integers()
tally = {}
for n in (4, 6, 9, 12):
    In = TermIdeal(Z, [n])
    for _ in range(100):
        B = reduce_matrix(mat([[rng.randrange(n) for _ in range(2)] for _ in range(2)], Z), In)
        s = classify(B).status
        tally[s] = tally.get(s, 0) + 1
print("400 random matrices over Z_4, Z_6, Z_9, Z_12:", tally)
