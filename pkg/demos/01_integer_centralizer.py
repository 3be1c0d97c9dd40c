"""
Centralizer of a 2x2 integer matrix
===================================

Over a UFD every matrix commuting with B = [[e, f], [g, h]] has the form
w*B'' + v*E, where B'' is [[e-h, f], [g, 0]] divided by gcd(e-h, f, g).
"""
import itertools

from imatrix import Ring, centralizer_generators, commutes, mat

Z = Ring.integers()
B = mat([[8, 3], [6, 2]], Z)
gens = centralizer_generators(B)
print("m   =", gens.m_R)
print("B'' =", [[str(x) for x in row] for row in gens.B_doubleprime])

# w = 1, v = 3 gives [[5, 1], [2, 3]]
A = gens.element(1, 3)
print("w=1, v=3 ->", [[str(x) for x in row] for row in A], "commutes:", commutes(A, B))

# brute force over a small box: everything that commutes is of the form [[2w+v, w], [2w, v]]
box = range(-4, 5)
found = [(a, b, c, d) for a, b, c, d in itertools.product(box, repeat=4)
         if commutes(mat([[a, b], [c, d]], Z), B)]
print(len(found), "commuting matrices with entries in [-4, 4]")
print("all of shape [[2w+v, w], [2w, v]]:",
      all(c == 2 * b and a == 2 * b + d for a, b, c, d in found))
